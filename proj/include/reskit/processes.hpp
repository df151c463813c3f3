#ifndef RESKIT_PROCESSES_HPP
#define RESKIT_PROCESSES_HPP

#include <ostream>
#include <utility>
#include <vector>

#include "reskit/events.hpp"

namespace reskit {

enum class ProcessKind { Outage, Restore, Performance };

// Right-continuous step function of time. Times are minutes relative to the
// first outage; simultaneous jumps coalesce into one breakpoint. Outage and
// restore processes count up from 0 to n; the performance curve stays in
// [-n, 0].
struct StepProcess {
  ProcessKind kind = ProcessKind::Outage;
  int n = 0;
  std::vector<std::pair<double, int>> breakpoints;  // (minutes since o_1, value)

  // Value at time t (minutes since o_1).
  int value_at(double t_minutes) const;

  // CSV rows "time_hours,value"; hours appear only at this boundary.
  void write_plot_csv(std::ostream& out) const;
};

StepProcess outage_process(const ResilienceEvent& event);
StepProcess restore_process(const ResilienceEvent& event);
StepProcess performance_curve(const ResilienceEvent& event);

}  // namespace reskit

#endif

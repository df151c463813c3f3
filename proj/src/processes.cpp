#include "reskit/processes.hpp"

#include <algorithm>
#include <cstdio>

#include "reskit/errors.hpp"

namespace reskit {

namespace {

StepProcess counting_process(const ResilienceEvent& event, const std::vector<double>& times,
                             ProcessKind kind) {
  if (event.n() < 1) throw OutOfDomain("counting process requires n >= 1");
  StepProcess p;
  p.kind = kind;
  p.n = event.n();
  const double origin = event.outage_times.front();
  int count = 0;
  for (std::size_t i = 0; i < times.size();) {
    std::size_t j = i;
    while (j < times.size() && times[j] == times[i]) ++j;
    count += static_cast<int>(j - i);
    p.breakpoints.emplace_back(times[i] - origin, count);
    i = j;
  }
  return p;
}

}  // namespace

int StepProcess::value_at(double t_minutes) const {
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t_minutes,
                             [](double t, const std::pair<double, int>& bp) { return t < bp.first; });
  if (it == breakpoints.begin()) return 0;
  return std::prev(it)->second;
}

void StepProcess::write_plot_csv(std::ostream& out) const {
  out << "time_hours,value\n";
  char buf[64];
  for (const auto& [t, v] : breakpoints) {
    std::snprintf(buf, sizeof buf, "%.4f,%d\n", t / 60.0, v);
    out << buf;
  }
}

StepProcess outage_process(const ResilienceEvent& event) {
  return counting_process(event, event.outage_times, ProcessKind::Outage);
}

StepProcess restore_process(const ResilienceEvent& event) {
  return counting_process(event, event.restore_times, ProcessKind::Restore);
}

StepProcess performance_curve(const ResilienceEvent& event) {
  if (event.n() < 1) throw OutOfDomain("performance curve requires n >= 1");
  const StepProcess o = outage_process(event);
  const StepProcess r = restore_process(event);

  StepProcess p;
  p.kind = ProcessKind::Performance;
  p.n = event.n();
  std::vector<double> times;
  times.reserve(o.breakpoints.size() + r.breakpoints.size());
  for (const auto& bp : o.breakpoints) times.push_back(bp.first);
  for (const auto& bp : r.breakpoints) times.push_back(bp.first);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  for (double t : times) p.breakpoints.emplace_back(t, r.value_at(t) - o.value_at(t));
  return p;
}

}  // namespace reskit

#ifndef RESKIT_FITTING_HPP
#define RESKIT_FITTING_HPP

#include <optional>
#include <vector>

#include "reskit/events.hpp"

namespace reskit {

enum class RestoreModel { Lognormal, Exponential };

// Per-event model parameters. lambda_o is the constant outage rate per hour;
// (mu, sigma) are the lognormal restore parameters over the positive restore
// offsets in hours; tau is the exponential time constant in hours; z counts
// the restores coincident with the first restore.
struct FittedModels {
  int n = 0;
  int z = 0;
  std::optional<double> lambda_o;
  std::optional<double> mu;
  std::optional<double> sigma;
  std::optional<double> tau;
};

// Restore offsets r_k - r_1 in hours, k = 1..n (the first z are zero).
std::vector<double> restore_offsets(EventView event);

// #{k : r_k = r_1}.
int compute_z(EventView event);

// (n-1)/(o_n - o_1) per hour. Throws DegenerateOutageWindow when o_n == o_1.
double fit_outage_rate(EventView event);

struct LognormalFit {
  double mu = 0.0;
  std::optional<double> sigma;  // absent when only one positive offset
};

// Mean and sample standard deviation of the log positive offsets. Throws
// NoPositiveRestores when all restores coincide with r_1.
LognormalFit fit_lognormal_restore(EventView event);

// Arithmetic mean of the positive offsets. Throws NoPositiveRestores.
double fit_exponential_restore(EventView event);

// Aggregate fit; undefined parameters stay empty instead of throwing.
FittedModels fit_models(EventView event);

// 1 + lambda_o * (t - o_1) on [o_1, o_n]; t in hours on the event axis.
double mean_outage_curve(const FittedModels& fit, EventView event, double t_hours);

// z + (n-z) * F(t - r_1) for the chosen restore model; t >= r_1.
double mean_restore_curve(const FittedModels& fit, EventView event, double t_hours,
                          RestoreModel model);

}  // namespace reskit

#endif

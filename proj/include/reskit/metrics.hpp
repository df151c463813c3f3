#ifndef RESKIT_METRICS_HPP
#define RESKIT_METRICS_HPP

#include "reskit/events.hpp"
#include "reskit/fitting.hpp"

namespace reskit {

// All values in hours.
struct StraightforwardMetrics {
  double d_o = 0.0;   // outage duration o_n - o_1
  double d_r1 = 0.0;  // time to first restore r_1 - o_1
  double d_n = 0.0;   // restore duration r_n - r_1
  double d_e = 0.0;   // event duration r_n - o_1 = d_r1 + d_n
};

StraightforwardMetrics straightforward_metrics(EventView event);

// D_k = r_k - r_1, 1-based k.
double restore_time_k(EventView event, int k);

// First restore offset reaching at least x% restoration: r_ceil(nx/100) - r_1.
double quantile_ge(EventView event, double x);

// Interpolating restore quantile with index u = min(1/3 + (n + 1/3) x/100, n),
// clamped below at 1. Continuous in x; reduces to the usual median at x = 50.
double quantile_interp(EventView event, double x);

// The index u itself, exposed for the variability interpolation.
double quantile_interp_index(int n, double x);

// D_GM = exp(mu); geometric mean of the positive restore offsets.
double geometric_mean_restore(const FittedModels& fit);

// Which restores the model quantiles address: all n of them (the default) or
// only the n-z positive offsets.
enum class QuantileBasis { AllRestores, PositiveRestores };

// exp(mu + sigma * Phi^-1((n x/100 - z)/(n - z))) under the lognormal model.
double quantile_lognormal(const FittedModels& fit, double x,
                          QuantileBasis basis = QuantileBasis::AllRestores);

// tau * ln((n - z)/(n (1 - x/100))) under the exponential model.
double quantile_exponential(const FittedModels& fit, double x,
                            QuantileBasis basis = QuantileBasis::AllRestores);

}  // namespace reskit

#endif

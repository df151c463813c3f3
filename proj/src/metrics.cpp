#include "reskit/metrics.hpp"

#include <cmath>

#include "reskit/errors.hpp"
#include "reskit/special.hpp"

namespace reskit {

StraightforwardMetrics straightforward_metrics(EventView event) {
  if (event.n() < 1) throw OutOfDomain("metrics require n >= 1");
  StraightforwardMetrics m;
  const double o1 = event.outages.front();
  const double r1 = event.restores.front();
  const double rn = event.restores.back();
  m.d_o = event.outages.back() - o1;
  m.d_r1 = r1 - o1;
  m.d_n = rn - r1;
  m.d_e = rn - o1;
  return m;
}

double restore_time_k(EventView event, int k) {
  if (k < 1 || k > static_cast<int>(event.restores.size()))
    throw IndexOutOfRange("restore index k outside 1..n");
  return event.restores[k - 1] - event.restores.front();
}

double quantile_ge(EventView event, double x) {
  const int n = static_cast<int>(event.restores.size());
  if (n < 1) throw OutOfDomain("quantile_ge requires n >= 1");
  if (!(x > 0.0 && x <= 100.0)) throw OutOfQuantileRange("quantile_ge needs 0 < x <= 100");
  const int k = static_cast<int>(std::ceil(n * x / 100.0));
  return restore_time_k(event, std::max(1, k));
}

double quantile_interp_index(int n, double x) {
  // (1 + (3n + 1) x/100) / 3 is algebraically 1/3 + (n + 1/3) x/100 but is
  // exact in floating point at x = 50, where u must equal (n + 1)/2.
  const double u = (1.0 + (3.0 * n + 1.0) * (x / 100.0)) / 3.0;
  return std::min(std::max(u, 1.0), static_cast<double>(n));
}

double quantile_interp(EventView event, double x) {
  const int n = static_cast<int>(event.restores.size());
  if (n < 1) throw OutOfDomain("quantile_interp requires n >= 1");
  if (!(x >= 0.0 && x <= 100.0)) throw OutOfQuantileRange("quantile_interp needs 0 <= x <= 100");
  const double u = quantile_interp_index(n, x);
  const int lo = static_cast<int>(std::floor(u));
  const double frac = u - lo;
  const double d_lo = restore_time_k(event, lo);
  if (frac == 0.0) return d_lo;
  const double d_hi = restore_time_k(event, lo + 1);
  return (1.0 - frac) * d_lo + frac * d_hi;
}

double geometric_mean_restore(const FittedModels& fit) {
  if (!fit.mu) throw NoPositiveRestores("geometric mean undefined: no positive restore offsets");
  return std::exp(*fit.mu);
}

double quantile_lognormal(const FittedModels& fit, double x, QuantileBasis basis) {
  if (!fit.mu) throw NoPositiveRestores("lognormal quantile needs mu");
  if (!fit.sigma) throw SigmaUndefined("lognormal quantile needs sigma");
  double p;
  if (basis == QuantileBasis::AllRestores) {
    const double n = fit.n, z = fit.z;
    p = (n * x / 100.0 - z) / (n - z);
  } else {
    p = x / 100.0;
  }
  if (!(p > 0.0 && p < 1.0))
    throw OutOfQuantileRange("lognormal quantile argument outside (0,1)");
  return std::exp(*fit.mu + *fit.sigma * special::normal_quantile(p));
}

double quantile_exponential(const FittedModels& fit, double x, QuantileBasis basis) {
  if (!fit.tau) throw NoPositiveRestores("exponential quantile needs tau");
  if (basis == QuantileBasis::PositiveRestores) {
    if (!(x >= 0.0 && x < 100.0)) throw OutOfQuantileRange("x outside [0, 100)");
    return *fit.tau * -std::log1p(-x / 100.0);
  }
  const double n = fit.n, z = fit.z;
  if (!(x >= 100.0 * z / n && x < 100.0))
    throw OutOfQuantileRange("exponential quantile needs 100 z/n <= x < 100");
  return *fit.tau * std::log((n - z) / (n * (1.0 - x / 100.0)));
}

}  // namespace reskit

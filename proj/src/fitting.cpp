#include "reskit/fitting.hpp"

#include <cmath>

#include "reskit/errors.hpp"
#include "reskit/special.hpp"

namespace reskit {

std::vector<double> restore_offsets(EventView event) {
  std::vector<double> offsets;
  offsets.reserve(event.restores.size());
  const double r1 = event.restores.empty() ? 0.0 : event.restores.front();
  for (double r : event.restores) offsets.push_back(r - r1);
  return offsets;
}

int compute_z(EventView event) {
  if (event.restores.empty()) throw OutOfDomain("compute_z requires n >= 1");
  const double r1 = event.restores.front();
  int z = 0;
  for (double r : event.restores) {
    if (r != r1) break;
    ++z;
  }
  return z;
}

double fit_outage_rate(EventView event) {
  const int n = static_cast<int>(event.outages.size());
  if (n < 2 || event.outages.back() == event.outages.front())
    throw DegenerateOutageWindow("outage rate undefined: o_n == o_1 (simultaneous outages)");
  return (n - 1) / (event.outages.back() - event.outages.front());
}

LognormalFit fit_lognormal_restore(EventView event) {
  const int n = static_cast<int>(event.restores.size());
  const int z = compute_z(event);
  if (z == n) throw NoPositiveRestores("all restores coincide with r_1");

  const double r1 = event.restores.front();
  const int m = n - z;
  double sum = 0.0;
  for (int k = z; k < n; ++k) sum += std::log(event.restores[k] - r1);
  LognormalFit fit;
  fit.mu = sum / m;
  if (m >= 2) {
    double ss = 0.0;
    for (int k = z; k < n; ++k) {
      const double d = std::log(event.restores[k] - r1) - fit.mu;
      ss += d * d;
    }
    fit.sigma = std::sqrt(ss / (m - 1));
  }
  return fit;
}

double fit_exponential_restore(EventView event) {
  const int n = static_cast<int>(event.restores.size());
  const int z = compute_z(event);
  if (z == n) throw NoPositiveRestores("all restores coincide with r_1");
  const double r1 = event.restores.front();
  double sum = 0.0;
  for (int k = z; k < n; ++k) sum += event.restores[k] - r1;
  return sum / (n - z);
}

FittedModels fit_models(EventView event) {
  FittedModels fit;
  fit.n = static_cast<int>(event.restores.size());
  if (fit.n == 0) return fit;
  fit.z = compute_z(event);
  try {
    fit.lambda_o = fit_outage_rate(event);
  } catch (const DegenerateOutageWindow&) {
  }
  if (fit.z < fit.n) {
    const LognormalFit ln = fit_lognormal_restore(event);
    fit.mu = ln.mu;
    fit.sigma = ln.sigma;
    fit.tau = fit_exponential_restore(event);
  }
  return fit;
}

double mean_outage_curve(const FittedModels& fit, EventView event, double t_hours) {
  if (!fit.lambda_o) throw DegenerateOutageWindow("mean outage curve needs lambda_o");
  const double o1 = event.outages.front();
  const double on = event.outages.back();
  if (t_hours < o1 || t_hours > on) throw OutOfDomain("mean outage curve defined on [o_1, o_n]");
  return 1.0 + *fit.lambda_o * (t_hours - o1);
}

double mean_restore_curve(const FittedModels& fit, EventView event, double t_hours,
                          RestoreModel model) {
  const double r1 = event.restores.front();
  if (t_hours < r1) throw OutOfDomain("mean restore curve defined for t >= r_1");
  const double z = fit.z;
  const double n = fit.n;
  if (t_hours == r1) return z;
  if (model == RestoreModel::Lognormal) {
    if (!fit.mu) throw NoPositiveRestores("lognormal restore curve needs mu");
    if (!fit.sigma) throw SigmaUndefined("lognormal restore curve needs sigma");
    return z + (n - z) * special::lognormal_cdf(t_hours - r1, *fit.mu, *fit.sigma);
  }
  if (!fit.tau) throw NoPositiveRestores("exponential restore curve needs tau");
  return z + (n - z) * -std::expm1(-(t_hours - r1) / *fit.tau);
}

}  // namespace reskit

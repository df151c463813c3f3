#ifndef RESKIT_VARIABILITY_HPP
#define RESKIT_VARIABILITY_HPP

#include <string>

namespace reskit {

// Inputs for the confidence-interval machinery. Everything here assumes the
// lognormal restore model with z = 1, so mu and sigma are estimated from the
// n-1 positive restore offsets.
struct VariabilityQuery {
  int n = 0;
  double mu = 0.0;
  double sigma = 0.0;
  double confidence = 0.10;  // c; the interval covers 100(1-c)%
};

struct VariabilityResult {
  std::string metric;
  double lower = 0.0;      // hours
  double upper = 0.0;      // hours
  double half_width = 1.0; // sqrt(upper/lower)
};

// Geometric mean D_GM: endpoints exp(mu -+ sigma z_c / sqrt(n-1)).
VariabilityResult ci_dgm(const VariabilityQuery& q);

// Arithmetic mean tau under the lognormal model, by Cox's approximate method:
// half-width exp(z_c sigma sqrt(1/(n-1) + sigma^2/(2n-4))).
VariabilityResult ci_tau(const VariabilityQuery& q);

// Lognormal-model quantile D_x%^ln: ln D = mu_hat + phi_{x,n} sigma_hat, so
// its CDF is the convolution of a normal density with a scaled-chi CDF,
// integrated numerically and inverted by bisection.
VariabilityResult ci_dx_ln(const VariabilityQuery& q, double x);

// D_k as the (k-1)th order statistic of n-1 lognormal samples; quantiles via
// the inverse regularized incomplete beta. Requires 2 <= k <= n.
VariabilityResult ci_order_statistic(const VariabilityQuery& q, int k);

// Interpolating quantile D_x%: endpoints interpolate the inverse CDFs of the
// two bracketing order statistics at index u.
VariabilityResult ci_dx_interp(const VariabilityQuery& q, double x);

}  // namespace reskit

#endif

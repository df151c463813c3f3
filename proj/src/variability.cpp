#include "reskit/variability.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "reskit/errors.hpp"
#include "reskit/metrics.hpp"
#include "reskit/special.hpp"

namespace reskit {

namespace {

double z_crit(double c) { return special::normal_quantile(1.0 - c / 2.0); }

void check_query(const VariabilityQuery& q, int min_n) {
  if (q.n < min_n) throw OutOfDomain("variability query needs n >= " + std::to_string(min_n));
  if (!(q.confidence > 0.0 && q.confidence < 1.0))
    throw OutOfDomain("confidence must lie in (0,1)");
  if (q.sigma < 0.0) throw OutOfDomain("sigma must be nonnegative");
}

// Adaptive Simpson quadrature to absolute tolerance.
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Solves cdf(y) = p by expanding a bracket around `guess` and bisecting to a
// relative tolerance of 1e-9 on y.
double invert_cdf(const std::function<double(double)>& cdf, double p, double guess, double scale) {
  double lo = guess, hi = guess;
  double step = std::max(scale, 1e-3);
  for (int i = 0; i < 200 && cdf(lo) > p; ++i) {
    lo -= step;
    step *= 2.0;
  }
  step = std::max(scale, 1e-3);
  for (int i = 0; i < 200 && cdf(hi) < p; ++i) {
    hi += step;
    step *= 2.0;
  }
  if (cdf(lo) > p || cdf(hi) < p) throw NumericalFailure("CDF inversion failed to bracket");
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-9 * std::max(1.0, std::fabs(mid))) return mid;
    (cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

VariabilityResult ci_dgm(const VariabilityQuery& q) {
  check_query(q, 2);
  const double hw = std::exp(q.sigma * z_crit(q.confidence) / std::sqrt(q.n - 1.0));
  VariabilityResult r;
  r.metric = "D_GM";
  r.half_width = hw;
  r.lower = std::exp(q.mu) / hw;
  r.upper = std::exp(q.mu) * hw;
  return r;
}

VariabilityResult ci_tau(const VariabilityQuery& q) {
  check_query(q, 3);
  const double s2 = q.sigma * q.sigma;
  const double hw = std::exp(z_crit(q.confidence) * q.sigma *
                             std::sqrt(1.0 / (q.n - 1.0) + s2 / (2.0 * q.n - 4.0)));
  const double center = std::exp(q.mu + s2 / 2.0);  // implied lognormal mean
  VariabilityResult r;
  r.metric = "tau";
  r.half_width = hw;
  r.lower = center / hw;
  r.upper = center * hw;
  return r;
}

VariabilityResult ci_dx_ln(const VariabilityQuery& q, double x) {
  check_query(q, 3);
  const double n = q.n;
  const double arg = (n * x / 100.0 - 1.0) / (n - 1.0);
  if (!(arg > 0.0 && arg < 1.0))
    throw OutOfQuantileRange("ci_dx_ln needs 100/n < x < 100");
  const double phi = special::normal_quantile(arg);
  char name[32];
  std::snprintf(name, sizeof name, "D_%g%%_ln", x);

  if (phi == 0.0) {
    // The chi term vanishes and ln D collapses to mu_hat: exactly ci_dgm.
    VariabilityResult r = ci_dgm(q);
    r.metric = name;
    return r;
  }

  const double s_mu = q.sigma / std::sqrt(n - 1.0);
  const double nu = n - 2.0;
  const double chi_scale = phi * q.sigma / std::sqrt(nu);  // signed

  // CDF of W = phi * sigma_hat; reflected when phi < 0.
  auto cdf_w = [&](double w) {
    if (chi_scale > 0.0) return w <= 0.0 ? 0.0 : special::chi_cdf(w / chi_scale, nu);
    return w >= 0.0 ? 1.0 : 1.0 - special::chi_cdf(w / chi_scale, nu);
  };
  auto cdf_lnd = [&](double y) {
    auto integrand = [&](double m) {
      return special::normal_pdf((m - q.mu) / s_mu) / s_mu * cdf_w(y - m);
    };
    return integrate(integrand, q.mu - 8.0 * s_mu, q.mu + 8.0 * s_mu, 1e-10);
  };

  // E[chi_nu] ~ sqrt(nu); center and spread guide the bracket search.
  const double center = q.mu + phi * q.sigma;
  const double spread = s_mu + std::fabs(chi_scale);
  const double c = q.confidence;
  const double y_lo = invert_cdf(cdf_lnd, c / 2.0, center, spread);
  const double y_hi = invert_cdf(cdf_lnd, 1.0 - c / 2.0, center, spread);

  VariabilityResult r;
  r.metric = name;
  r.lower = std::exp(y_lo);
  r.upper = std::exp(y_hi);
  r.half_width = std::exp((y_hi - y_lo) / 2.0);
  return r;
}

namespace {

// p-quantile of D_k, the (k-1)th order statistic of n-1 lognormal samples.
double order_stat_quantile(const VariabilityQuery& q, int k, double p) {
  const int m = q.n - 1;
  const int j = k - 1;
  const double qs = special::beta_i_inv(j, m - j + 1, p);
  return special::lognormal_quantile(qs, q.mu, q.sigma);
}

}  // namespace

VariabilityResult ci_order_statistic(const VariabilityQuery& q, int k) {
  check_query(q, 2);
  if (k < 2 || k > q.n) throw IndexOutOfRange("ci_order_statistic needs 2 <= k <= n");
  const double c = q.confidence;
  VariabilityResult r;
  char name[32];
  std::snprintf(name, sizeof name, "D_%d", k);
  r.metric = name;
  r.lower = order_stat_quantile(q, k, c / 2.0);
  r.upper = order_stat_quantile(q, k, 1.0 - c / 2.0);
  r.half_width = std::sqrt(r.upper / r.lower);
  return r;
}

VariabilityResult ci_dx_interp(const VariabilityQuery& q, double x) {
  check_query(q, 2);
  const double u = quantile_interp_index(q.n, x);
  const int lo = static_cast<int>(std::floor(u));
  const double frac = u - lo;
  if (lo < 2) throw IndexOutOfRange("ci_dx_interp needs u >= 2 (D_1 is identically zero)");

  const double c = q.confidence;
  auto endpoint = [&](double p) {
    const double v = order_stat_quantile(q, lo, p);
    if (frac == 0.0) return v;
    return (1.0 - frac) * v + frac * order_stat_quantile(q, lo + 1, p);
  };
  VariabilityResult r;
  char name[32];
  std::snprintf(name, sizeof name, "D_%g%%", x);
  r.metric = name;
  r.lower = endpoint(c / 2.0);
  r.upper = endpoint(1.0 - c / 2.0);
  r.half_width = std::sqrt(r.upper / r.lower);
  return r;
}

}  // namespace reskit

#ifndef RESKIT_SPECIAL_HPP
#define RESKIT_SPECIAL_HPP

namespace reskit::special {

double normal_pdf(double x);
double normal_cdf(double x);

// Inverse standard normal CDF, accurate to machine precision for
// p in (1e-300, 1 - 1e-16).
double normal_quantile(double p);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

// CDF of the chi distribution with k degrees of freedom.
double chi_cdf(double t, double k);

// Regularized incomplete beta I_x(a, b).
double beta_i(double a, double b, double x);

// Inverse of I_x(a, b) in x for p in [0, 1].
double beta_i_inv(double a, double b, double p);

// Lognormal(mu, sigma) CDF and quantile (sigma >= 0; sigma == 0 degenerates
// to a step at exp(mu)).
double lognormal_cdf(double t, double mu, double sigma);
double lognormal_quantile(double p, double mu, double sigma);

// Limiting null distributions of the classical EDF statistics, used by the
// asymptotic p-value mode. All are for a fully specified hypothesis.
double kolmogorov_limit_sf(double x);          // P(sup statistic > x)
double anderson_darling_limit_cdf(double z);   // Marsaglia & Marsaglia fit
double cramer_von_mises_limit_cdf(double x);   // Csorgo & Faraway series

}  // namespace reskit::special

#endif

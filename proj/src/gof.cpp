#include "reskit/gof.hpp"

#include <algorithm>
#include <cmath>

#include "reskit/errors.hpp"
#include "reskit/rng.hpp"
#include "reskit/special.hpp"

namespace reskit {

std::string_view to_string(GofModel model) {
  switch (model) {
    case GofModel::UniformOutage: return "UNIFORM_OUTAGE";
    case GofModel::LognormalRestore: return "LOGNORMAL_RESTORE";
    case GofModel::ExponentialRestore: return "EXPONENTIAL_RESTORE";
  }
  return "?";
}

std::string_view to_string(GofTest test) {
  switch (test) {
    case GofTest::KS: return "KS";
    case GofTest::CVM: return "CVM";
    case GofTest::AD: return "AD";
  }
  return "?";
}

std::string_view to_string(PValueMethod method) {
  return method == PValueMethod::Bootstrap ? "BOOTSTRAP" : "ASYMPTOTIC";
}

double ks_statistic(const std::vector<double>& u) {
  const double m = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double hi = (i + 1) / m - u[i];
    const double lo = u[i] - i / m;
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

double cvm_statistic(const std::vector<double>& u) {
  const double m = static_cast<double>(u.size());
  double w2 = 1.0 / (12.0 * m);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - (2.0 * i + 1.0) / (2.0 * m);
    w2 += d * d;
  }
  return w2;
}

double ad_statistic(const std::vector<double>& u) {
  const std::size_t m = u.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sum += (2.0 * i + 1.0) * (std::log(u[i]) + std::log1p(-u[m - 1 - i]));
  }
  return -static_cast<double>(m) - sum / static_cast<double>(m);
}

namespace {

double statistic_of(GofTest test, const std::vector<double>& u_sorted) {
  switch (test) {
    case GofTest::KS: return ks_statistic(u_sorted);
    case GofTest::CVM: return cvm_statistic(u_sorted);
    case GofTest::AD: return ad_statistic(u_sorted);
  }
  return 0.0;
}

// Asymptotic p-values of the classical limiting null distributions with
// Stephens' small-sample modifications for KS and CvM. These assume a fully
// specified hypothesis; with estimated parameters they are conservative
// (the reported p-value is too large).
double asymptotic_p(GofTest test, double statistic, std::size_t m) {
  const double md = static_cast<double>(m);
  switch (test) {
    case GofTest::KS: {
      const double lambda = (std::sqrt(md) + 0.12 + 0.11 / std::sqrt(md)) * statistic;
      return special::kolmogorov_limit_sf(lambda);
    }
    case GofTest::CVM: {
      const double w2 = (statistic - 0.4 / md + 0.6 / (md * md)) * (1.0 + 1.0 / md);
      return 1.0 - special::cramer_von_mises_limit_cdf(w2);
    }
    case GofTest::AD:
      return 1.0 - special::anderson_darling_limit_cdf(statistic);
  }
  return 1.0;
}

// Parametric bootstrap p-value. `replicate` fills a sorted PIT sample under
// the null with parameters re-estimated from the replicate draw.
template <typename Replicate>
GofResult run_test(GofModel model, const GofOptions& opts, std::vector<double> u_sorted,
                   Replicate replicate) {
  GofResult res;
  res.model = model;
  res.test = opts.test;
  res.method = opts.method;
  res.statistic = statistic_of(opts.test, u_sorted);
  const std::size_t m = u_sorted.size();

  if (opts.method == PValueMethod::Asymptotic) {
    res.p_value = asymptotic_p(opts.test, res.statistic, m);
  } else {
    int exceed = 0;
    std::vector<double> u(m);
    for (int b = 0; b < opts.bootstrap_reps; ++b) {
      SplitMix64 rng = SplitMix64::stream(opts.seed, static_cast<std::uint64_t>(b));
      replicate(rng, u);
      std::sort(u.begin(), u.end());
      if (statistic_of(opts.test, u) >= res.statistic) ++exceed;
    }
    res.p_value = (1.0 + exceed) / (opts.bootstrap_reps + 1.0);
  }
  res.satisfied = res.p_value >= 0.05;
  return res;
}

}  // namespace

GofResult test_uniform_outages(EventView event, const GofOptions& opts) {
  const int n = static_cast<int>(event.outages.size());
  if (n < 4) throw TooFewPoints("uniform outage test needs n >= 4");
  const double o1 = event.outages.front();
  const double on = event.outages.back();
  if (on == o1) throw DegenerateOutageWindow("uniform outage test needs o_n > o_1");

  std::vector<double> u;
  u.reserve(n - 2);
  for (int k = 1; k + 1 < n; ++k) u.push_back((event.outages[k] - o1) / (on - o1));
  std::sort(u.begin(), u.end());

  auto replicate = [](SplitMix64& rng, std::vector<double>& out) {
    for (double& v : out) v = rng.uniform01();
  };
  return run_test(GofModel::UniformOutage, opts, std::move(u), replicate);
}

GofResult test_lognormal_restores(EventView event, const FittedModels& fit,
                                  const GofOptions& opts) {
  const int m = fit.n - fit.z;
  if (m < 4) throw TooFewPoints("lognormal restore test needs n - z >= 4");
  if (!fit.mu || !fit.sigma) throw SigmaUndefined("lognormal restore test needs mu and sigma");

  const double r1 = event.restores.front();
  std::vector<double> logs;
  logs.reserve(m);
  for (int k = fit.z; k < fit.n; ++k) logs.push_back(std::log(event.restores[k] - r1));
  std::sort(logs.begin(), logs.end());

  std::vector<double> u;
  u.reserve(m);
  const double mu = *fit.mu;
  const double sigma = *fit.sigma;
  for (double w : logs)
    u.push_back(sigma > 0.0 ? special::normal_cdf((w - mu) / sigma) : (w < mu ? 0.0 : 1.0));

  auto replicate = [mu, sigma](SplitMix64& rng, std::vector<double>& out) {
    const std::size_t k = out.size();
    std::vector<double> w(k);
    double mean = 0.0;
    for (double& v : w) {
      v = mu + sigma * rng.normal();
      mean += v;
    }
    mean /= k;
    double ss = 0.0;
    for (double v : w) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (k - 1));
    for (std::size_t i = 0; i < k; ++i)
      out[i] = sd > 0.0 ? special::normal_cdf((w[i] - mean) / sd) : 0.5;
  };
  return run_test(GofModel::LognormalRestore, opts, std::move(u), replicate);
}

GofResult test_exponential_restores(EventView event, const FittedModels& fit,
                                    const GofOptions& opts) {
  const int m = fit.n - fit.z;
  if (m < 4) throw TooFewPoints("exponential restore test needs n - z >= 4");
  if (!fit.tau || *fit.tau <= 0.0) throw NoPositiveRestores("exponential restore test needs tau");

  const double r1 = event.restores.front();
  std::vector<double> offs;
  offs.reserve(m);
  for (int k = fit.z; k < fit.n; ++k) offs.push_back(event.restores[k] - r1);
  std::sort(offs.begin(), offs.end());

  std::vector<double> u;
  u.reserve(m);
  for (double x : offs) u.push_back(-std::expm1(-x / *fit.tau));

  const double tau = *fit.tau;
  auto replicate = [tau](SplitMix64& rng, std::vector<double>& out) {
    const std::size_t k = out.size();
    std::vector<double> x(k);
    double mean = 0.0;
    for (double& v : x) {
      v = rng.exponential(tau);
      mean += v;
    }
    mean /= k;
    for (std::size_t i = 0; i < k; ++i) out[i] = -std::expm1(-x[i] / mean);
  };
  return run_test(GofModel::ExponentialRestore, opts, std::move(u), replicate);
}

std::vector<double> pooled_normalized_samples(const std::vector<ResilienceEvent>& events,
                                              const std::vector<FittedModels>& fits,
                                              PooledKind kind,
                                              std::vector<std::string>* warnings) {
  std::vector<double> pooled;
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };
  for (std::size_t i = 0; i < events.size(); ++i) {
    const ResilienceEvent& ev = events[i];
    const FittedModels& fit = fits[i];
    const EventHours hours = to_hours(ev);
    const EventView view(hours);
    switch (kind) {
      case PooledKind::OutageUniform: {
        const int n = static_cast<int>(view.outages.size());
        if (n < 3 || view.outages.back() == view.outages.front()) {
          warn(ev.event_id + ": skipped, no interior outage samples");
          continue;
        }
        const double o1 = view.outages.front();
        const double w = view.outages.back() - o1;
        for (int k = 1; k + 1 < n; ++k) pooled.push_back((view.outages[k] - o1) / w);
        break;
      }
      case PooledKind::RestoreLognormal: {
        if (!fit.mu || !fit.sigma || *fit.sigma <= 0.0) {
          warn(ev.event_id + ": skipped, lognormal fit undefined");
          continue;
        }
        const double r1 = view.restores.front();
        for (int k = fit.z; k < fit.n; ++k)
          pooled.push_back((std::log(view.restores[k] - r1) - *fit.mu) / *fit.sigma);
        break;
      }
      case PooledKind::RestoreExponential: {
        if (!fit.tau || *fit.tau <= 0.0) {
          warn(ev.event_id + ": skipped, exponential fit undefined");
          continue;
        }
        const double r1 = view.restores.front();
        for (int k = fit.z; k < fit.n; ++k)
          pooled.push_back((view.restores[k] - r1) / *fit.tau);
        break;
      }
    }
  }
  return pooled;
}

}  // namespace reskit

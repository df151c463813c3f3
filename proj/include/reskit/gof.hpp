#ifndef RESKIT_GOF_HPP
#define RESKIT_GOF_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "reskit/events.hpp"
#include "reskit/fitting.hpp"

namespace reskit {

enum class GofModel { UniformOutage, LognormalRestore, ExponentialRestore };
enum class GofTest { KS, CVM, AD };
enum class PValueMethod { Bootstrap, Asymptotic };

std::string_view to_string(GofModel model);
std::string_view to_string(GofTest test);
std::string_view to_string(PValueMethod method);

struct GofResult {
  std::string event_id;
  GofModel model = GofModel::UniformOutage;
  GofTest test = GofTest::AD;
  double statistic = 0.0;
  double p_value = 0.0;
  PValueMethod method = PValueMethod::Bootstrap;
  bool satisfied = false;  // p_value >= 0.05
};

struct GofOptions {
  GofTest test = GofTest::AD;
  PValueMethod method = PValueMethod::Bootstrap;
  int bootstrap_reps = 999;
  std::uint64_t seed = 0;
};

// EDF statistics over probability-integral-transformed samples, sorted
// ascending in [0, 1]. Ties are kept as ties; samples hitting exactly 0 or 1
// push the Anderson-Darling statistic to +infinity.
double ks_statistic(const std::vector<double>& u_sorted);
double cvm_statistic(const std::vector<double>& u_sorted);
double ad_statistic(const std::vector<double>& u_sorted);

// Tests the n-2 interior outage times, normalized to (0,1) by the window
// endpoints, against the standard uniform distribution.
GofResult test_uniform_outages(EventView event, const GofOptions& opts);

// Tests the log positive restore offsets against normal(mu, sigma); the
// bootstrap re-estimates both parameters in each replicate.
GofResult test_lognormal_restores(EventView event, const FittedModels& fit,
                                  const GofOptions& opts);

// Tests the positive restore offsets against exponential(tau), tau
// re-estimated per replicate.
GofResult test_exponential_restores(EventView event, const FittedModels& fit,
                                    const GofOptions& opts);

enum class PooledKind { OutageUniform, RestoreLognormal, RestoreExponential };

// Concatenates per-event normalized samples for QQ/CDF export. Events whose
// fit lacks the needed parameters are skipped with a warning.
std::vector<double> pooled_normalized_samples(const std::vector<ResilienceEvent>& events,
                                              const std::vector<FittedModels>& fits,
                                              PooledKind kind,
                                              std::vector<std::string>* warnings = nullptr);

}  // namespace reskit

#endif

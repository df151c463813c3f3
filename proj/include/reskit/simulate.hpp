#ifndef RESKIT_SIMULATE_HPP
#define RESKIT_SIMULATE_HPP

#include <cstdint>
#include <string>

#include "reskit/events.hpp"
#include "reskit/fitting.hpp"

namespace reskit {

// Generative model for one synthetic event: o_1 = 0 and o_n = window with
// n-2 interior outage times uniform on (0, window); r_1 = r1_offset carries
// z simultaneous restores; the remaining n-z restore offsets are lognormal
// or exponential. Continuous time by default; quantize_minutes rounds to the
// data resolution for parser/extraction fixtures.
struct SimSpec {
  int n = 2;
  int z = 1;
  double outage_window_hours = 1.0;
  double mu = 0.0;
  double sigma = 1.0;
  double tau = 1.0;
  RestoreModel restore_model = RestoreModel::Lognormal;
  std::uint64_t seed = 0;
  double r1_offset_hours = 0.0;
  bool quantize_minutes = false;
};

void validate(const SimSpec& spec);

// One replicate on the hour axis; deterministic in (spec.seed, replicate).
EventHours generate_series(const SimSpec& spec, std::uint64_t replicate);

// Materialized event with ids and timestamps (replicate 0); paired records
// via to_dataset ascend jointly, regenerating until the pairing is valid.
ResilienceEvent generate_event(const SimSpec& spec);
std::vector<ResilienceEvent> generate_events(const SimSpec& spec, int count);
Dataset to_dataset(const std::vector<ResilienceEvent>& events);

enum class McMetric {
  DO, DR1, DN, DE, DGm, Tau, LambdaO, Mu, Sigma,
  DNMinus1, DK, DxInterp, DxGe, DxLn, DxExp,
};

// Parses names like "D_GM", "tau", "D_n", "D_n-1", "D_x", "D_x_ln",
// "D_x_exp", "D_x_ge", "D_k", "lambda_O", "mu", "sigma", "D_O", "D_r1", "D_E".
McMetric metric_from_name(const std::string& name);

struct McQuery {
  McMetric metric = McMetric::DGm;
  double x = 0.0;       // percent, for the D_x families
  int k = 0;            // index, for D_k
  long replicates = 200000;
  double confidence = 0.10;
};

struct McResult {
  double half_width = 1.0;
  double lower = 0.0;
  double upper = 0.0;
  long regenerated = 0;  // replicates whose metric was undefined and redrawn
};

// Empirical (c/2, 1-c/2) quantile ratio of the metric over simulated events.
McResult monte_carlo_half_width(const SimSpec& spec, const McQuery& query);

}  // namespace reskit

#endif

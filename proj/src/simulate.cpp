#include "reskit/simulate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "reskit/errors.hpp"
#include "reskit/metrics.hpp"
#include "reskit/rng.hpp"
#include "reskit/time.hpp"

namespace reskit {

namespace {

// Simulated timestamps hang off a fixed epoch so exports look like data.
const Minutes kSimEpoch = days_from_civil(2020, 1, 1) * 1440;

double quantize_to_minutes(double hours) { return std::round(hours * 60.0) / 60.0; }

}  // namespace

void validate(const SimSpec& spec) {
  if (spec.n < 2) throw InvalidSpec("simulation needs n >= 2");
  if (spec.z < 1 || spec.z > spec.n) throw InvalidSpec("z must lie in 1..n");
  if (!(spec.outage_window_hours > 0.0)) throw InvalidSpec("outage window must be positive");
  if (spec.sigma < 0.0) throw InvalidSpec("sigma must be nonnegative");
  if (spec.restore_model == RestoreModel::Exponential && !(spec.tau > 0.0))
    throw InvalidSpec("tau must be positive");
  if (spec.r1_offset_hours < 0.0) throw InvalidSpec("r1 offset must be nonnegative");
}

EventHours generate_series(const SimSpec& spec, std::uint64_t replicate) {
  validate(spec);
  SplitMix64 rng = SplitMix64::stream(spec.seed, replicate);

  EventHours ev;
  ev.outages.resize(spec.n);
  ev.outages.front() = 0.0;
  for (int i = 1; i + 1 < spec.n; ++i) ev.outages[i] = rng.uniform01() * spec.outage_window_hours;
  ev.outages.back() = spec.outage_window_hours;
  std::sort(ev.outages.begin(), ev.outages.end());

  const double r1 = spec.r1_offset_hours;
  ev.restores.assign(spec.z, r1);
  for (int i = spec.z; i < spec.n; ++i) {
    const double offset = spec.restore_model == RestoreModel::Lognormal
                              ? rng.lognormal(spec.mu, spec.sigma)
                              : rng.exponential(spec.tau);
    ev.restores.push_back(r1 + offset);
  }
  std::sort(ev.restores.begin(), ev.restores.end());

  if (spec.quantize_minutes) {
    for (double& t : ev.outages) t = quantize_to_minutes(t);
    for (double& t : ev.restores) t = quantize_to_minutes(t);
  }
  return ev;
}

namespace {

bool pairable(const EventHours& ev) {
  for (std::size_t i = 0; i < ev.outages.size(); ++i)
    if (ev.restores[i] < ev.outages[i]) return false;
  return true;
}

ResilienceEvent materialize(const SimSpec& spec, const EventHours& hours, int index) {
  ResilienceEvent ev;
  char id[32];
  std::snprintf(id, sizeof id, "SIM-%04d", index);
  ev.event_id = id;
  ev.interconnection = "Simulated";
  // Successive events start a week apart so extraction never merges them.
  const double epoch = static_cast<double>(kSimEpoch + static_cast<Minutes>(index) * 7 * 1440);
  for (double t : hours.outages) ev.outage_times.push_back(epoch + t * 60.0);
  for (double t : hours.restores) ev.restore_times.push_back(epoch + t * 60.0);
  for (int i = 0; i < spec.n; ++i) {
    char rid[48];
    std::snprintf(rid, sizeof rid, "SIM-%04d-R%03d", index, i);
    ev.member_record_ids.push_back(rid);
  }
  return ev;
}

}  // namespace

ResilienceEvent generate_event(const SimSpec& spec) { return generate_events(spec, 1).front(); }

std::vector<ResilienceEvent> generate_events(const SimSpec& spec, int count) {
  std::vector<ResilienceEvent> events;
  std::uint64_t replicate = 0;
  for (int i = 0; i < count; ++i) {
    // Sorted pairing needs r_(k) >= o_(k); redraw the rare violating series
    // so the event can round-trip through outage records.
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 10000)
        throw InvalidSpec("generated restores cannot be paired with outages; "
                          "increase r1_offset_hours or the restore scale");
      const EventHours hours = generate_series(spec, replicate++);
      if (!pairable(hours)) continue;
      events.push_back(materialize(spec, hours, i));
      break;
    }
  }
  return events;
}

Dataset to_dataset(const std::vector<ResilienceEvent>& events) {
  Dataset ds;
  ds.source_path = "<simulated>";
  for (const auto& ev : events) {
    for (int i = 0; i < ev.n(); ++i) {
      OutageRecord rec;
      rec.record_id = ev.member_record_ids[i];
      rec.element_id = "EL-" + std::to_string(i);
      rec.element_type = ElementType::AcCircuit;
      rec.interconnection = ev.interconnection;
      rec.outage_start = static_cast<Minutes>(std::llround(ev.outage_times[i]));
      rec.restore_time = static_cast<Minutes>(std::llround(ev.restore_times[i]));
      rec.initiating_cause = "Lightning";
      ds.records.push_back(std::move(rec));
    }
  }
  return ds;
}

McMetric metric_from_name(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "d_o") return McMetric::DO;
  if (s == "d_r1") return McMetric::DR1;
  if (s == "d_n") return McMetric::DN;
  if (s == "d_e") return McMetric::DE;
  if (s == "d_gm") return McMetric::DGm;
  if (s == "tau") return McMetric::Tau;
  if (s == "lambda_o") return McMetric::LambdaO;
  if (s == "mu") return McMetric::Mu;
  if (s == "sigma") return McMetric::Sigma;
  if (s == "d_n-1") return McMetric::DNMinus1;
  if (s == "d_k") return McMetric::DK;
  if (s == "d_x") return McMetric::DxInterp;
  if (s == "d_x_ge") return McMetric::DxGe;
  if (s == "d_x_ln") return McMetric::DxLn;
  if (s == "d_x_exp") return McMetric::DxExp;
  throw MetricUndefined("unknown metric name '" + name + "'");
}

namespace {

double eval_metric(const McQuery& q, EventView view) {
  switch (q.metric) {
    case McMetric::DO: return straightforward_metrics(view).d_o;
    case McMetric::DR1: return straightforward_metrics(view).d_r1;
    case McMetric::DN: return straightforward_metrics(view).d_n;
    case McMetric::DE: return straightforward_metrics(view).d_e;
    case McMetric::LambdaO: return fit_outage_rate(view);
    case McMetric::DNMinus1: return restore_time_k(view, view.n() - 1);
    case McMetric::DK: return restore_time_k(view, q.k);
    case McMetric::DxInterp: return quantile_interp(view, q.x);
    case McMetric::DxGe: return quantile_ge(view, q.x);
    default: break;
  }
  const FittedModels fit = fit_models(view);
  switch (q.metric) {
    case McMetric::DGm: return geometric_mean_restore(fit);
    case McMetric::Tau:
      if (!fit.tau) throw NoPositiveRestores("tau undefined");
      return *fit.tau;
    case McMetric::Mu:
      if (!fit.mu) throw NoPositiveRestores("mu undefined");
      return *fit.mu;
    case McMetric::Sigma:
      if (!fit.sigma) throw SigmaUndefined("sigma undefined");
      return *fit.sigma;
    case McMetric::DxLn: return quantile_lognormal(fit, q.x);
    case McMetric::DxExp: return quantile_exponential(fit, q.x);
    default: break;
  }
  throw MetricUndefined("metric not handled");
}

// Interpolating empirical quantile over a sorted sample, same index rule as
// quantile_interp.
double empirical_quantile(const std::vector<double>& sorted, double p) {
  const int n = static_cast<int>(sorted.size());
  const double u = quantile_interp_index(n, p * 100.0);
  const int lo = static_cast<int>(std::floor(u));
  const double frac = u - lo;
  if (frac == 0.0) return sorted[lo - 1];
  return (1.0 - frac) * sorted[lo - 1] + frac * sorted[lo];
}

}  // namespace

McResult monte_carlo_half_width(const SimSpec& spec, const McQuery& query) {
  validate(spec);
  if (query.replicates < 1000) throw InvalidSpec("monte carlo needs at least 1000 replicates");

  std::vector<double> values;
  values.reserve(query.replicates);
  McResult res;
  std::uint64_t replicate = 0;
  while (static_cast<long>(values.size()) < query.replicates) {
    const EventHours ev = generate_series(spec, replicate++);
    try {
      values.push_back(eval_metric(query, EventView(ev)));
    } catch (const Error&) {
      ++res.regenerated;
      if (res.regenerated > 100 * query.replicates)
        throw MetricUndefined("metric undefined for nearly all simulated events");
    }
  }
  std::sort(values.begin(), values.end());
  res.lower = empirical_quantile(values, query.confidence / 2.0);
  res.upper = empirical_quantile(values, 1.0 - query.confidence / 2.0);
  res.half_width = std::sqrt(res.upper / res.lower);
  return res;
}

}  // namespace reskit

#include <cmath>

#include "doctest.h"
#include "reskit/errors.hpp"
#include "reskit/fitting.hpp"
#include "reskit/gof.hpp"
#include "reskit/metrics.hpp"
#include "reskit/simulate.hpp"

using namespace reskit;

TEST_CASE("n = 2 pins the window endpoints") {
  SimSpec spec;
  spec.n = 2;
  spec.outage_window_hours = 3.5;
  spec.seed = 1;
  const EventHours ev = generate_series(spec, 0);
  REQUIRE(ev.outages.size() == 2);
  CHECK(ev.outages[0] == 0.0);
  CHECK(ev.outages[1] == 3.5);
}

TEST_CASE("generation is deterministic in (seed, replicate)") {
  SimSpec spec;
  spec.n = 25;
  spec.outage_window_hours = 2.0;
  spec.mu = 1.5;
  spec.sigma = 1.2;
  spec.seed = 42;
  const EventHours a = generate_series(spec, 7);
  const EventHours b = generate_series(spec, 7);
  CHECK(a.outages == b.outages);
  CHECK(a.restores == b.restores);
  const EventHours c = generate_series(spec, 8);
  CHECK(a.restores != c.restores);
  spec.seed = 43;
  const EventHours d = generate_series(spec, 7);
  CHECK(a.restores != d.restores);
}

TEST_CASE("z simultaneous restores sit at r_1") {
  SimSpec spec;
  spec.n = 12;
  spec.z = 3;
  spec.outage_window_hours = 1.0;
  spec.r1_offset_hours = 0.5;
  spec.seed = 9;
  const EventHours ev = generate_series(spec, 0);
  const EventView view(ev);
  CHECK(compute_z(view) == 3);
  CHECK(ev.restores.front() == 0.5);
  CHECK(straightforward_metrics(view).d_r1 == 0.5);
}

TEST_CASE("quantization rounds to whole minutes") {
  SimSpec spec;
  spec.n = 20;
  spec.outage_window_hours = 2.0;
  spec.quantize_minutes = true;
  spec.seed = 3;
  const EventHours ev = generate_series(spec, 0);
  for (double t : ev.outages) CHECK(std::round(t * 60.0) == doctest::Approx(t * 60.0));
  for (double t : ev.restores) CHECK(std::round(t * 60.0) == doctest::Approx(t * 60.0));
}

TEST_CASE("invalid specs are rejected") {
  SimSpec spec;
  spec.n = 1;
  CHECK_THROWS_AS(generate_series(spec, 0), InvalidSpec);
  spec.n = 5;
  spec.z = 6;
  CHECK_THROWS_AS(generate_series(spec, 0), InvalidSpec);
  spec.z = 1;
  spec.outage_window_hours = 0.0;
  CHECK_THROWS_AS(generate_series(spec, 0), InvalidSpec);
}

TEST_CASE("materialized events survive extraction and dataset round trip") {
  SimSpec spec;
  spec.n = 12;
  spec.outage_window_hours = 2.0;
  spec.mu = 1.6;
  spec.sigma = 1.5;
  spec.r1_offset_hours = 0.5;
  spec.quantize_minutes = true;
  spec.seed = 77;
  const auto events = generate_events(spec, 4);
  REQUIRE(events.size() == 4);
  for (const auto& ev : events) {
    CHECK(ev.n() == 12);
    CHECK(std::is_sorted(ev.outage_times.begin(), ev.outage_times.end()));
    CHECK(std::is_sorted(ev.restore_times.begin(), ev.restore_times.end()));
    for (int i = 0; i < ev.n(); ++i) CHECK(ev.restore_times[i] >= ev.outage_times[i]);
  }
  const Dataset ds = to_dataset(events);
  CHECK(ds.records.size() == 48);
}

TEST_CASE("mu recovery across 10000 moderate events") {
  SimSpec spec;
  spec.n = 50;
  spec.outage_window_hours = 2.0;
  spec.mu = 1.64;
  spec.sigma = 1.56;
  spec.seed = 1001;
  double sum = 0.0;
  const int events = 10000;
  for (int i = 0; i < events; ++i) {
    const EventHours ev = generate_series(spec, i);
    sum += fit_lognormal_restore(EventView(ev)).mu;
  }
  const double mean = sum / events;
  const double tol = 3.0 * (1.56 / std::sqrt(49.0)) / std::sqrt(static_cast<double>(events));
  CHECK(std::fabs(mean - 1.64) <= tol);
}

TEST_CASE("mean restore count at r_1 + exp(mu) matches the model") {
  SimSpec spec;
  spec.n = 100;
  spec.outage_window_hours = 1.0;
  spec.mu = 1.2;
  spec.sigma = 1.4;
  spec.r1_offset_hours = 0.25;
  spec.seed = 314;
  const double t = 0.25 + std::exp(1.2);
  double sum = 0.0;
  const int events = 5000;
  for (int i = 0; i < events; ++i) {
    const EventHours ev = generate_series(spec, i);
    int count = 0;
    for (double r : ev.restores) count += r <= t;
    sum += count;
  }
  const double mean = sum / events;
  const double expected = 1.0 + 99.0 / 2.0;  // z + (n-z)/2
  const double se = std::sqrt(99.0 * 0.25) / std::sqrt(static_cast<double>(events));
  CHECK(std::fabs(mean - expected) <= 3.0 * se);
}

TEST_CASE("generated events satisfy their own gof test at the nominal rate") {
  SimSpec spec;
  spec.n = 40;
  spec.outage_window_hours = 2.0;
  spec.mu = 1.6;
  spec.sigma = 1.5;
  spec.seed = 2718;
  int satisfied = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    const EventHours ev = generate_series(spec, t);
    GofOptions opts;
    opts.test = GofTest::AD;
    opts.bootstrap_reps = 199;
    opts.seed = 9000 + t;
    satisfied += test_lognormal_restores(EventView(ev), fit_models(EventView(ev)), opts).satisfied;
  }
  CHECK(satisfied >= 88);  // ~95% nominal
}

TEST_CASE("metric names parse") {
  CHECK(metric_from_name("D_GM") == McMetric::DGm);
  CHECK(metric_from_name("tau") == McMetric::Tau);
  CHECK(metric_from_name("D_n") == McMetric::DN);
  CHECK(metric_from_name("D_n-1") == McMetric::DNMinus1);
  CHECK(metric_from_name("D_x") == McMetric::DxInterp);
  CHECK(metric_from_name("d_x_ln") == McMetric::DxLn);
  CHECK_THROWS_AS(metric_from_name("bogus"), MetricUndefined);
}

TEST_CASE("monte carlo half width") {
  SimSpec spec;
  spec.n = 20;
  spec.outage_window_hours = 1.0;
  spec.mu = 1.6;
  spec.sigma = 0.0;  // degenerate: every event identical
  spec.seed = 5;
  McQuery q;
  q.metric = McMetric::DGm;
  q.replicates = 1000;
  const McResult r = monte_carlo_half_width(spec, q);
  CHECK(r.half_width == doctest::Approx(1.0));
  CHECK(r.regenerated == 0);

  q.replicates = 999;
  CHECK_THROWS_AS(monte_carlo_half_width(spec, q), InvalidSpec);

  // small smoke against the closed form: D_GM at n=20, sigma=1.58
  spec.sigma = 1.58;
  q.replicates = 20000;
  const McResult mc = monte_carlo_half_width(spec, q);
  CHECK(mc.half_width == doctest::Approx(1.8152).epsilon(0.03));
}

#include <cmath>

#include "doctest.h"
#include "reskit/errors.hpp"
#include "reskit/metrics.hpp"
#include "reskit/rng.hpp"

using namespace reskit;

namespace {

EventHours hours(std::vector<double> outages, std::vector<double> restores) {
  EventHours h;
  h.outages = std::move(outages);
  h.restores = std::move(restores);
  std::sort(h.outages.begin(), h.outages.end());
  std::sort(h.restores.begin(), h.restores.end());
  return h;
}

// Fixture with integral-minute restores: n restores at minute offsets, first
// restore at r1_min; exercises the exact-arithmetic path of real data.
EventHours minute_fixture(SplitMix64& rng, int n) {
  std::vector<double> restores;
  const long r1 = 30 + static_cast<long>(rng.next() % 100);
  restores.push_back(r1 / 60.0);
  for (int i = 1; i < n; ++i) {
    const long m = r1 + static_cast<long>(rng.next() % 6000);  // ties likely
    restores.push_back(m / 60.0);
  }
  return hours({0.0, 0.25}, restores);
}

}  // namespace

TEST_CASE("straightforward metrics") {
  const auto h = hours({0, 1}, {2, 5});
  const auto m = straightforward_metrics(EventView(h));
  CHECK(m.d_o == 1.0);
  CHECK(m.d_r1 == 2.0);
  CHECK(m.d_n == 3.0);
  CHECK(m.d_e == 5.0);
  CHECK(m.d_e - m.d_r1 - m.d_n == 0.0);

  const auto single = straightforward_metrics(EventView(hours({3}, {4})));
  CHECK(single.d_o == 0.0);
  CHECK(single.d_n == 0.0);
}

TEST_CASE("restore_time_k") {
  const auto h = hours({0}, {1, 2, 4});
  CHECK(restore_time_k(EventView(h), 1) == 0.0);
  CHECK(restore_time_k(EventView(h), 3) == 3.0);
  CHECK_THROWS_AS(restore_time_k(EventView(h), 0), IndexOutOfRange);
  CHECK_THROWS_AS(restore_time_k(EventView(h), 4), IndexOutOfRange);
}

TEST_CASE("quantile_ge index rule") {
  SplitMix64 rng(5);
  for (int n = 10; n < 40; ++n) {
    const auto h = minute_fixture(rng, n);
    const EventView view(h);
    const double expected =
        n < 20 ? restore_time_k(view, n) : restore_time_k(view, n - 1);
    CHECK(quantile_ge(view, 95.0) == expected);
    CHECK(quantile_ge(view, 100.0) == restore_time_k(view, n));
  }
  // n=16: ceil(15.2) = 16
  const auto h = minute_fixture(rng, 16);
  CHECK(quantile_ge(EventView(h), 95.0) == restore_time_k(EventView(h), 16));
  CHECK_THROWS_AS(quantile_ge(EventView(h), 0.0), OutOfQuantileRange);
}

TEST_CASE("quantile_interp hand trace") {
  const auto h = hours({0}, {1, 2, 3, 4, 5});  // offsets 0,1,2,3,4
  const EventView view(h);
  CHECK(quantile_interp(view, 50.0) == 2.0);  // u = 3 exactly
  CHECK(quantile_interp(view, 90.0) == 4.0);  // u clamps at n = 5
  CHECK(quantile_interp(view, 100.0) == 4.0);
  CHECK(quantile_interp(view, 0.0) == 0.0);   // lower clamp at 1
}

TEST_CASE("quantile_interp equals the median formula exactly") {
  SplitMix64 rng(314159);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next() % 30);
    const auto h = minute_fixture(rng, n);
    const EventView view(h);
    const int ell = (n + 1) / 2;
    const double median = n % 2 == 1
                              ? restore_time_k(view, ell)
                              : (restore_time_k(view, ell) + restore_time_k(view, ell + 1)) / 2.0;
    CHECK(quantile_interp(view, 50.0) == median);  // bitwise
  }
}

TEST_CASE("quantile_interp is continuous and monotone in x") {
  SplitMix64 rng(99);
  const auto h = minute_fixture(rng, 23);
  const EventView view(h);
  double prev = quantile_interp(view, 0.0);
  double prev_x = 0.0;
  for (double x = 0.05; x <= 100.0; x += 0.05) {
    const double v = quantile_interp(view, x);
    CHECK(v >= prev - 1e-12);
    // piecewise linear: steps this small move the value only a little
    CHECK(std::fabs(v - prev) <= (x - prev_x) / 100.0 * (23 + 1) *
                                      (restore_time_k(view, 23) + 1.0));
    prev = v;
    prev_x = x;
  }
  CHECK(quantile_interp(view, 100.0) == restore_time_k(view, 23));
}

TEST_CASE("geometric mean restore") {
  const auto h = hours({0, 1}, {0.0, 1.0, 4.0});
  const FittedModels fit = fit_models(EventView(h));
  CHECK(geometric_mean_restore(fit) == doctest::Approx(2.0).epsilon(1e-12));

  FittedModels empty;
  CHECK_THROWS_AS(geometric_mean_restore(empty), NoPositiveRestores);
}

TEST_CASE("lognormal quantile") {
  FittedModels fit;
  fit.n = 21;
  fit.z = 1;
  fit.mu = 0.0;
  fit.sigma = 1.0;
  // frozen reference: exp(Phi^-1(0.9475))
  CHECK(quantile_lognormal(fit, 95.0) == doctest::Approx(5.058561988192842).epsilon(1e-12));

  // x = 50 + 50 z/n lands exactly on the geometric mean
  fit.mu = 1.7;
  const double x_mid = 50.0 + 50.0 * fit.z / fit.n;
  CHECK(quantile_lognormal(fit, x_mid) ==
        doctest::Approx(std::exp(1.7)).epsilon(1e-13));

  CHECK_THROWS_AS(quantile_lognormal(fit, 100.0), OutOfQuantileRange);
  CHECK_THROWS_AS(quantile_lognormal(fit, 100.0 / fit.n), OutOfQuantileRange);

  FittedModels no_sigma;
  no_sigma.n = 3;
  no_sigma.z = 2;
  no_sigma.mu = 1.0;
  CHECK_THROWS_AS(quantile_lognormal(no_sigma, 90.0), SigmaUndefined);

  // positive-restores variant
  fit.mu = 0.0;
  fit.sigma = 1.0;
  CHECK(quantile_lognormal(fit, 50.0, QuantileBasis::PositiveRestores) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("exponential quantile") {
  FittedModels fit;
  fit.n = 20;
  fit.z = 1;
  fit.tau = 10.0;
  CHECK(quantile_exponential(fit, 95.0) == doctest::Approx(10.0 * std::log(19.0)).epsilon(1e-13));
  CHECK(quantile_exponential(fit, 100.0 * fit.z / fit.n) == doctest::Approx(0.0));
  // average restoring half life at x = 50
  CHECK(quantile_exponential(fit, 50.0) ==
        doctest::Approx(10.0 * std::log(2.0 * 19.0 / 20.0)).epsilon(1e-13));
  CHECK_THROWS_AS(quantile_exponential(fit, 100.0), OutOfQuantileRange);
  CHECK_THROWS_AS(quantile_exponential(fit, 1.0), OutOfQuantileRange);

  // variant over positive restores only
  CHECK(quantile_exponential(fit, 50.0, QuantileBasis::PositiveRestores) ==
        doctest::Approx(10.0 * std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("geometric mean is bracketed by the positive offsets") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> restores = {0.0};
    const int m = 1 + static_cast<int>(rng.next() % 12);
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i < m; ++i) {
      const double off = 0.01 + 50.0 * rng.uniform01();
      restores.push_back(off);
      lo = std::min(lo, off);
      hi = std::max(hi, off);
    }
    const FittedModels fit = fit_models(EventView(hours({0, 0.5}, restores)));
    const double gm = geometric_mean_restore(fit);
    CHECK(gm >= lo - 1e-12);
    CHECK(gm <= hi + 1e-12);
  }
}

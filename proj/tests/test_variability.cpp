#include <cmath>

#include "doctest.h"
#include "reskit/errors.hpp"
#include "reskit/variability.hpp"

using namespace reskit;

namespace {
constexpr double kZc90 = 1.6448536269514722;  // Phi^-1(0.95), frozen
}

TEST_CASE("ci_dgm closed form") {
  VariabilityQuery q{50, 2.20, 1.35, 0.10};
  const VariabilityResult r = ci_dgm(q);
  CHECK(r.half_width == doctest::Approx(std::exp(kZc90 * 1.35 / 7.0)).epsilon(1e-12));
  CHECK(r.lower == doctest::Approx(std::exp(2.20) / r.half_width).epsilon(1e-12));
  CHECK(r.upper == doctest::Approx(std::exp(2.20) * r.half_width).epsilon(1e-12));
  CHECK(r.half_width == doctest::Approx(std::sqrt(r.upper / r.lower)).epsilon(1e-12));

  q.sigma = 0.0;
  CHECK(ci_dgm(q).half_width == doctest::Approx(1.0));

  q.n = 10;
  q.sigma = 1.72;
  CHECK(ci_dgm(q).half_width == doctest::Approx(2.57).epsilon(0.02));
}

TEST_CASE("ci_tau closed form") {
  VariabilityQuery q{50, 2.20, 1.35, 0.10};
  const double expected = std::exp(kZc90 * 1.35 * std::sqrt(1.0 / 49.0 + 1.35 * 1.35 / 96.0));
  CHECK(ci_tau(q).half_width == doctest::Approx(expected).epsilon(1e-12));
  CHECK(ci_tau(q).half_width == doctest::Approx(1.554).epsilon(0.001));

  q.n = 10;
  q.sigma = 1.72;
  CHECK(ci_tau(q).half_width == doctest::Approx(4.68).epsilon(0.01));

  q.sigma = 0.0;
  CHECK(ci_tau(q).half_width == doctest::Approx(1.0));

  q.n = 2;
  CHECK_THROWS_AS(ci_tau(q), OutOfDomain);
}

TEST_CASE("ci_dx_ln reproduces table cells") {
  CHECK(ci_dx_ln({50, 2.20, 1.35, 0.10}, 95.0).half_width == doctest::Approx(1.63).epsilon(0.02));
  CHECK(ci_dx_ln({20, 1.60, 1.58, 0.10}, 90.0).half_width == doctest::Approx(2.24).epsilon(0.02));
}

TEST_CASE("ci_dx_ln degenerates to ci_dgm when phi vanishes") {
  const VariabilityQuery q{25, 1.9, 1.4, 0.10};
  const double x = 50.0 + 50.0 / q.n;  // phi_{x,n} = 0
  const VariabilityResult a = ci_dx_ln(q, x);
  const VariabilityResult b = ci_dgm(q);
  CHECK(a.half_width == b.half_width);
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
}

TEST_CASE("ci_dx_ln below the geometric-mean quantile uses the reflected form") {
  const VariabilityQuery q{50, 2.20, 1.35, 0.10};
  const double x_mid = 50.0 + 50.0 / q.n;
  const VariabilityResult below = ci_dx_ln(q, 30.0);
  CHECK(below.half_width > 1.0);
  // widths grow moving away from the degenerate point in either direction
  CHECK(below.half_width > ci_dx_ln(q, x_mid - 5.0).half_width);
  CHECK(ci_dx_ln(q, 95.0).half_width > ci_dx_ln(q, x_mid + 5.0).half_width);
}

TEST_CASE("ci_dx_ln rejects x outside the quantile range") {
  const VariabilityQuery q{50, 2.20, 1.35, 0.10};
  CHECK_THROWS_AS(ci_dx_ln(q, 2.0), OutOfQuantileRange);   // x = 100/n boundary
  CHECK_THROWS_AS(ci_dx_ln(q, 100.0), OutOfQuantileRange);
}

TEST_CASE("ci_order_statistic reproduces table cells") {
  CHECK(ci_order_statistic({50, 2.20, 1.35, 0.10}, 50).half_width ==
        doctest::Approx(2.79).epsilon(0.01));
  CHECK(ci_order_statistic({20, 1.60, 1.58, 0.10}, 19).half_width ==
        doctest::Approx(2.85).epsilon(0.01));
}

TEST_CASE("single order statistic equals the plain lognormal interval") {
  // n = 2: D_2 is the lone positive offset itself
  const VariabilityResult r = ci_order_statistic({2, 2.20, 1.35, 0.10}, 2);
  CHECK(r.lower == doctest::Approx(0.9796573646257842).epsilon(1e-9));
  CHECK(r.upper == doctest::Approx(83.14220012634846).epsilon(1e-9));
}

TEST_CASE("ci_order_statistic bounds k") {
  const VariabilityQuery q{10, 1.0, 1.0, 0.10};
  CHECK_THROWS_AS(ci_order_statistic(q, 1), IndexOutOfRange);
  CHECK_THROWS_AS(ci_order_statistic(q, 11), IndexOutOfRange);
}

TEST_CASE("ci_dx_interp reproduces table cells and collapses on integers") {
  CHECK(ci_dx_interp({50, 2.20, 1.35, 0.10}, 95.0).half_width ==
        doctest::Approx(1.96).epsilon(0.01));
  CHECK(ci_dx_interp({10, 1.18, 1.72, 0.10}, 90.0).half_width ==
        doctest::Approx(5.09).epsilon(0.01));

  // x = 50 with odd n gives integer u = (n+1)/2; equals the order statistic
  const VariabilityQuery q{9, 1.5, 1.2, 0.10};
  const VariabilityResult interp = ci_dx_interp(q, 50.0);
  const VariabilityResult order = ci_order_statistic(q, 5);
  CHECK(interp.lower == order.lower);
  CHECK(interp.upper == order.upper);

  // u clamps to n at high x: equals the top order statistic
  const VariabilityResult top = ci_dx_interp(q, 99.0);
  const VariabilityResult dn = ci_order_statistic(q, 9);
  CHECK(top.lower == dn.lower);
  CHECK(top.upper == dn.upper);
}

TEST_CASE("half widths shrink with n and grow with x") {
  for (const char* metric : {"dgm", "tau", "ln90", "d90", "dn"}) {
    double prev = 1e18;
    for (int n : {10, 20, 50, 100, 200}) {
      const VariabilityQuery q{n, 2.0, 1.5, 0.10};
      double hw = 0.0;
      if (std::string(metric) == "dgm") hw = ci_dgm(q).half_width;
      else if (std::string(metric) == "tau") hw = ci_tau(q).half_width;
      else if (std::string(metric) == "ln90") hw = ci_dx_ln(q, 90.0).half_width;
      else if (std::string(metric) == "d90") hw = ci_dx_interp(q, 90.0).half_width;
      else hw = ci_order_statistic(q, n).half_width;
      CHECK(hw >= 1.0);
      CHECK(hw < prev);
      prev = hw;
    }
  }
  // monotone in x on [50, 99]
  for (int n : {10, 20, 50}) {
    const VariabilityQuery q{n, 1.6, 1.58, 0.10};
    double prev_ln = 0.0, prev_interp = 0.0;
    for (double x = 50.0; x <= 99.0; x += 7.0) {
      const double hw_ln = ci_dx_ln(q, x).half_width;
      const double hw_interp = ci_dx_interp(q, x).half_width;
      CHECK(hw_ln >= prev_ln - 1e-9);
      CHECK(hw_interp >= prev_interp - 1e-9);
      prev_ln = hw_ln;
      prev_interp = hw_interp;
    }
  }
}

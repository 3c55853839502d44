#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qlcm/classical.hpp"
#include "qlcm/inequalities.hpp"
#include "qlcm/qgamma.hpp"

using namespace qlcm;

namespace {
const double kLog2Pi = std::log(2.0 * std::numbers::pi);

bool strictly_inside(const BoundReport& r) {
  return (!r.slack_low || *r.slack_low > 0.0) && (!r.slack_high || *r.slack_high > 0.0);
}
}  // namespace

TEST_CASE("weighted points") {
  CHECK_NOTHROW((WeightedPoints{{1.0, 2.0}, {0.5, 0.5}}.validate()));
  CHECK((WeightedPoints{{1.0, 3.0}, {0.25, 0.75}}.mean()) == 2.5);
  CHECK_THROWS_AS((WeightedPoints{{1.0}, {0.5, 0.5}}.validate()), ArgumentError);
  CHECK_THROWS_AS((WeightedPoints{{}, {}}.validate()), ArgumentError);
  CHECK_THROWS_AS((WeightedPoints{{1.0, 2.0}, {1.5, -0.5}}.validate()), ArgumentError);
  CHECK_THROWS_AS((WeightedPoints{{0.0, 2.0}, {0.5, 0.5}}.validate()), ArgumentError);
  CHECK_THROWS_AS((WeightedPoints{{1.0, 2.0}, {0.5, 0.6}}.validate()), ArgumentError);
}

TEST_CASE("make_report verdicts") {
  CHECK(make_report(0.0, 1.0, 2.0, "").satisfied);
  CHECK(make_report(std::nullopt, 1.0, 1.0 - 5e-11, "").satisfied);
  CHECK_FALSE(make_report(std::nullopt, 1.0, 1.0 - 2e-10, "").satisfied);
  CHECK_FALSE(make_report(1.1, 1.0, std::nullopt, "").satisfied);
  const auto r = make_report(0.25, 1.0, 3.0, "ctx");
  CHECK(*r.slack_low == 0.75);
  CHECK(*r.slack_high == 2.0);
  CHECK(r.context == "ctx");
}

TEST_CASE("jensen upper bound") {
  const QContext h(0.5);
  const LcmParams p{0.5, 1.0};
  SUBCASE("single point collapses") {
    const auto r = jensen_upper({{2.0}, {1.0}}, p, h);
    CHECK(r.satisfied);
    CHECK(std::abs(*r.slack_high) <= 1e-14);
  }
  SUBCASE("coincident points collapse") {
    const auto r = jensen_upper({{1.0, 1.0}, {0.5, 0.5}}, p, h);
    CHECK(std::abs(*r.slack_high) <= 1e-14);
  }
  SUBCASE("two distinct points leave slack") {
    const auto r = jensen_upper({{1.0, 2.0}, {0.5, 0.5}}, p, h);
    CHECK(r.satisfied);
    CHECK(*r.slack_high > 0.0);
  }
  SUBCASE("hypothesis enforced") {
    CHECK_THROWS_AS(jensen_upper({{1.0}, {1.0}}, {0.75, 1.0}, h), PreconditionError);
    CHECK_THROWS_AS(jensen_upper({{1.0}, {1.0}}, {0.5, 0.5}, h), PreconditionError);
  }
}

TEST_CASE("convex sandwich") {
  for (double q : {0.1, 0.5, 0.9, 0.99}) {
    const QContext ctx(q);
    const auto r = convex_sandwich({{0.5, 2.0, 7.0}, {0.2, 0.3, 0.5}}, ctx);
    CHECK(r.satisfied);
    const auto eq = convex_sandwich({{3.0}, {1.0}}, ctx);
    CHECK(std::abs(*eq.slack_low) <= 1e-13);
    CHECK(std::abs(*eq.slack_high) <= 1e-13);
  }
}

TEST_CASE("ratio bounds") {
  const QContext h(0.5);
  const auto r = ratio_bounds(1.0, 2.0, h);
  CHECK(r.satisfied);
  CHECK(std::abs(r.middle) <= 1e-14);
  CHECK(*r.lower < 0.0);
  CHECK(*r.upper > 0.0);
  CHECK_THROWS_AS(ratio_bounds(2.0, 1.0, h), ArgumentError);
  CHECK_THROWS_AS(ratio_bounds(2.0, 2.0, h), ArgumentError);

  SUBCASE("slack vanishes as a -> b") {
    double prev = HUGE_VAL;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
      const auto s = ratio_bounds(2.0 - eps, 2.0, h);
      const double width = *s.upper - *s.lower;
      CHECK(width < prev);
      prev = width;
    }
    CHECK(prev < 1e-3);
  }
  SUBCASE("classical limit") {
    const QContext near(0.999);
    const auto qr = ratio_bounds(1.0, 3.0, near);
    CHECK(std::abs(qr.middle - std::log(2.0)) <= 2e-2);
    const auto cr = classical_ratio_bounds(1.0, 3.0);
    CHECK(cr.satisfied);
    CHECK(std::abs(*qr.lower - *cr.lower) <= 2e-2);
    CHECK(std::abs(*qr.upper - *cr.upper) <= 2e-2);
  }
}

TEST_CASE("qgamma bounds") {
  for (double q : {0.1, 0.5, 0.9}) {
    const QContext ctx(q);
    const auto eq = qgamma_bounds(1.0, ctx);
    CHECK(std::abs(*eq.slack_low) <= 1e-12);
    CHECK(std::abs(*eq.slack_high) <= 1e-12);
    for (double x : {1.5, 2.0, 4.0}) {
      const auto r = qgamma_bounds(x, ctx);
      CHECK(r.satisfied);
      CHECK(strictly_inside(r));
    }
  }
  CHECK(qgamma_bounds(5.0, QContext(0.5)).satisfied);
  CHECK(qgamma_bounds(2.0, QContext(0.1)).satisfied);
  CHECK_THROWS_AS(qgamma_bounds(0.5, QContext(0.5)), PreconditionError);
}

TEST_CASE("factorial bounds") {
  const auto one = factorial_bounds(1);
  CHECK(*one.lower == 0.0);
  CHECK(one.middle == 0.0);
  CHECK(*one.upper == 0.0);
  CHECK(*one.slack_low == 0.0);
  CHECK(*one.slack_high == 0.0);

  const auto five = factorial_bounds(5);
  CHECK(std::exp(*five.lower) == doctest::Approx(57.24).epsilon(1e-3));
  CHECK(std::exp(five.middle) == doctest::Approx(120.0).epsilon(1e-14));
  CHECK(std::exp(*five.upper) == doctest::Approx(127.99).epsilon(1e-3));
  CHECK(strictly_inside(factorial_bounds(2)));
  CHECK_THROWS_AS(factorial_bounds(0), DomainError);
}

TEST_CASE("log factorial") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(20) == doctest::Approx(std::log(2432902008176640000.0)).epsilon(1e-16));
  CHECK(log_factorial(21) == doctest::Approx(std::lgamma(22.0)).epsilon(1e-15));
}

TEST_CASE("stirling remainder") {
  const auto r1 = stirling_remainder(1);
  CHECK(std::abs(r1.r_n - (1.0 - 0.5 * kLog2Pi)) <= 1e-15);
  CHECK(r1.band_ok);
  CHECK(r1.robbins_ok);

  const auto r2 = stirling_remainder(2);
  CHECK(r2.r_n == doctest::Approx(0.0413406).epsilon(1e-6));
  CHECK(r2.r_n > 1.0 / 25.0);
  CHECK(r2.r_n < 1.0 / 24.0);

  const auto r100 = stirling_remainder(100);
  CHECK(std::abs(r100.r_n - 1.0 / 1200.0) <= 1e-5);
  CHECK(r100.band_lower < 0.0);

  for (int n = 1; n <= 1000; ++n) {
    const auto r = stirling_remainder(n);
    CHECK(r.robbins_ok);
    CHECK(r.band_ok);
    CHECK(r.r_n > 0.0);
  }
  CHECK_THROWS_AS(stirling_remainder(0), DomainError);
}

TEST_CASE("stirling correction matches log-gamma") {
  for (double x : {10.0, 25.0, 300.0}) {
    const double full = (x - 0.5) * std::log(x) - x + 0.5 * kLog2Pi + classical::stirling_correction(x);
    CHECK(full == doctest::Approx(std::lgamma(x)).epsilon(1e-15));
  }
}

TEST_CASE("gurland bounds") {
  for (double q : {0.1, 0.5, 0.9}) {
    const QContext ctx(q);
    const auto eq = gurland_bounds(2.0, 2.0, ctx);
    CHECK(std::abs(*eq.lower) <= 1e-13);
    CHECK(std::abs(eq.middle) <= 1e-13);
    CHECK(std::abs(*eq.upper) <= 1e-13);
  }
  CHECK(gurland_bounds(1.0, 3.0, QContext(0.5)).satisfied);

  const auto near = gurland_bounds(1.0, 2.0, QContext(0.999));
  const auto cl = classical_gurland(1.0, 2.0);
  CHECK(std::abs(near.middle - cl.middle) <= 2e-2);
  CHECK(std::abs(*near.lower - *cl.lower) <= 2e-2);
}

TEST_CASE("classical gurland") {
  const auto eq = classical_gurland(1.0, 1.0);
  CHECK(std::abs(*eq.lower) <= 1e-15);
  CHECK(std::abs(eq.middle) <= 1e-14);
  CHECK(std::abs(*eq.upper) <= 1e-15);

  const auto r = classical_gurland(1.0, 3.0);
  CHECK(r.satisfied);
  CHECK(std::exp(*r.lower) == doctest::Approx(16.0 / 27.0).epsilon(1e-14));
  CHECK(std::exp(r.middle) == doctest::Approx(4.0 / 6.0).epsilon(1e-13));
  CHECK(std::exp(*r.upper) == doctest::Approx(32.0 / std::pow(3.0, 3.5)).epsilon(1e-14));
  CHECK(classical_gurland(0.5, 2.5).satisfied);
}

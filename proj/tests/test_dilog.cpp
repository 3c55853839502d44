#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qlcm/dilog.hpp"

using namespace qlcm;

namespace {
const double kPi2over6 = std::numbers::pi * std::numbers::pi / 6.0;
}

TEST_CASE("li2 reference values") {
  CHECK(li2(0.0) == 0.0);
  CHECK(std::abs(li2(1.0) - kPi2over6) <= 1e-15);
  CHECK(std::abs(li2(0.5) - 0.58224052646501250) <= 1e-14);
  // Li2(-1) = -pi^2/12
  CHECK(std::abs(li2(-1.0) + kPi2over6 / 2.0) <= 1e-14);
  // Li2(-x) for x > 1 via inversion: Li2(-2) = -1.4367463668836809
  CHECK(std::abs(li2(-2.0) + 1.4367463668836809) <= 1e-14);
  CHECK(std::abs(li2(0.9) - 1.2997147230049588) <= 1e-14);
  CHECK(std::abs(li2(-0.75) + 0.64276126883997888) <= 1e-14);
}

TEST_CASE("li2 domain") {
  CHECK_THROWS_AS(li2(1.0000001), DomainError);
  CHECK_THROWS_AS(li2(std::nan("")), DomainError);
}

TEST_CASE("reflection identity on 200 points") {
  for (int i = 1; i <= 200; ++i) {
    const double z = i / 201.0;
    const double res = li2(z) + li2(1.0 - z) - (kPi2over6 - std::log(z) * std::log1p(-z));
    CHECK(std::abs(res) <= 1e-12);
  }
}

TEST_CASE("li2 is strictly increasing on (0,1)") {
  double prev = li2(1e-6);
  for (int i = 1; i <= 1000; ++i) {
    const double cur = li2(i / 1001.0);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("li2_one_minus_qpow") {
  SUBCASE("matches li2 at moderate arguments") {
    const QContext ctx(0.5);
    CHECK(std::abs(li2_one_minus_qpow(ctx, 1.0) - 0.58224052646501250) <= 1e-14);
    CHECK(li2_one_minus_qpow(ctx, 2.0) == doctest::Approx(li2(0.75)).epsilon(1e-14));
  }
  SUBCASE("tiny x") {
    const QContext ctx(0.5);
    CHECK(li2_one_minus_qpow(ctx, 1e-16) == doctest::Approx(1e-16 * std::log(2.0)).epsilon(1e-10));
  }
  SUBCASE("large x saturates at pi^2/6") {
    const QContext ctx(0.5);
    CHECK(std::abs(li2_one_minus_qpow(ctx, 200.0) - kPi2over6) <= 1e-15);
  }
  SUBCASE("q > 1 gives a negative argument") {
    const QContext ctx(2.0);
    CHECK(li2_one_minus_qpow(ctx, 1.0) == doctest::Approx(li2(-1.0)).epsilon(1e-14));
    CHECK(li2_one_minus_qpow(ctx, 3.0) == doctest::Approx(li2(-7.0)).epsilon(1e-13));
  }
  SUBCASE("domain") { CHECK_THROWS_AS(li2_one_minus_qpow(QContext(0.5), 0.0), DomainError); }
}

TEST_CASE("Li2(1-q^x)/log q tends to -x as q -> 1") {
  for (double x : {0.5, 1.0, 2.0, 5.0}) {
    double prev = HUGE_VAL;
    for (double q : {0.9, 0.99, 0.999}) {
      const QContext ctx(q);
      const double err = std::abs(li2_one_minus_qpow(ctx, x) / ctx.log_q() + x);
      CHECK(err < prev);
      prev = err;
    }
  }
}

#include "qlcm/dilog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qlcm {
namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

// Sum z^k / k^2 for |z| <= 1/2.
double li2_series(double z, const EvalConfig& cfg) {
  if (z == 0.0) return 0.0;
  double power = 1.0;
  std::int64_t last = 0;
  return sum_series_or_throw(
      [&](std::int64_t k) {
        // terms are requested in order, so the power is carried forward
        for (; last < k; ++last) power *= z;
        const double kk = static_cast<double>(k);
        return power / (kk * kk);
      },
      cfg, "li2 power series");
}

}  // namespace

double li2(double z, const EvalConfig& cfg) {
  if (std::isnan(z) || z > 1.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "li2 requires z <= 1 (got z = " << z << ")";
    throw DomainError(msg.str());
  }
  if (z == 1.0) return kZeta2;
  if (std::abs(z) <= 0.5) return li2_series(z, cfg);
  if (z > 0.5) {
    return kZeta2 - std::log(z) * std::log1p(-z) - li2_series(1.0 - z, cfg);
  }
  if (z >= -1.0) {
    // Landen: Li2(z) = -Li2(z/(z-1)) - log^2(1-z)/2, with z/(z-1) in (1/3, 1/2].
    const double l = std::log1p(-z);
    return -li2_series(z / (z - 1.0), cfg) - 0.5 * l * l;
  }
  if (std::isinf(z)) {
    throw DomainError("li2 argument is -infinity");
  }
  const double l = std::log(-z);
  return -kZeta2 - 0.5 * l * l - li2(1.0 / z, cfg);
}

double li2_one_minus_qpow(const QContext& ctx, double x, const EvalConfig& cfg) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "li2_one_minus_qpow requires x > 0 (got x = " << x << ")";
    throw DomainError(msg.str());
  }
  const double t = x * ctx.log_q();
  if (t < 0.0) {
    const double z = -std::expm1(t);  // 1 - q^x in (0, 1)
    if (z <= 0.5) return li2_series(z, cfg);
    // log(1 - z) = t exactly; log z = log(1 - q^x).
    return kZeta2 - log1mexp(t) * t - li2_series(std::exp(t), cfg);
  }
  // q > 1: argument 1 - q^x is negative.
  const double em1 = std::expm1(t);  // q^x - 1 > 0
  if (em1 <= 1.0) return li2(-em1, cfg);
  // Inversion with log(q^x - 1) = t + log(1 - q^-x), valid past overflow of q^x.
  const double l = t + log1mexp(-t);
  const double inv = std::isinf(em1) ? -0.0 : -1.0 / em1;
  return -kZeta2 - 0.5 * l * l - li2(inv, cfg);
}

}  // namespace qlcm

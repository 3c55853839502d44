#include "qlcm/classical.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qlcm/core.hpp"

namespace qlcm::classical {
namespace {

constexpr double kShift = 10.0;

// B_2k for k = 1..8
constexpr std::array<double, 8> kB2k = {1.0 / 6,       -1.0 / 30,     1.0 / 42,
                                        -1.0 / 30,     5.0 / 66,      -691.0 / 2730,
                                        7.0 / 6,       -3617.0 / 510};

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(what) + " requires finite x > 0");
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  double prod = 1.0;
  while (x < kShift) {
    prod *= x;
    x += 1.0;
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + stirling_correction(x) -
         std::log(prod);
}

double stirling_correction(double x) {
  if (!(x >= kShift)) throw DomainError("stirling_correction requires x >= 10");
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double corr = 0.0;
  double p = inv;
  for (std::size_t k = 0; k < kB2k.size(); ++k) {
    const double twok = 2.0 * (k + 1);
    corr += kB2k[k] / (twok * (twok - 1.0)) * p;
    p *= inv2;
  }
  return corr;
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  while (x < kShift) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double corr = 0.0;
  double p = inv2;
  for (std::size_t k = 0; k < kB2k.size(); ++k) {
    corr += kB2k[k] / (2.0 * (k + 1)) * p;
    p *= inv2;
  }
  return std::log(x) - 0.5 / x - corr - shift;
}

}  // namespace qlcm::classical

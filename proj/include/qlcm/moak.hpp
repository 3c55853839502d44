#ifndef QLCM_MOAK_HPP
#define QLCM_MOAK_HPP

#include <cstdint>
#include <vector>

#include "qlcm/core.hpp"

namespace qlcm {

/// Polynomial P_k of the q-Stirling correction terms, generated by
///   P_k(z) = (z - z^2) P'_{k-1}(z) + (k z + 1) P_{k-1}(z),  P_0 = P_{-1} = 1.
/// Coefficients are exact integers, constant term first.
struct PkPolynomial {
  int degree = 0;
  std::vector<std::int64_t> coeffs{1};

  double operator()(double z) const;
};

/// [P_0, ..., P_kmax]. Coefficients are kept exact; kmax above 19 would
/// overflow 64-bit coefficients and throws ArgumentError.
std::vector<PkPolynomial> pk_polynomials(int kmax);

/// Bernoulli numbers B_0..B_n with the B_1 = -1/2 convention.
struct BernoulliTable {
  std::vector<double> values;
  /// Set when n > 60, where the rational values are no longer needed by any
  /// caller and their double rendering is past the tested range.
  bool precision_warning = false;

  double operator[](std::size_t i) const { return values.at(i); }
  std::size_t size() const { return values.size(); }
};

/// Computed with exact rational arithmetic (Akiyama-Tanigawa) and rounded
/// once to double. `max_index` >= 2.
BernoulliTable bernoulli(int max_index);

/// Moak's constant C_{hat q}:
///   1/2 log(2 pi) + 1/2 log((q-1)/log q) - (log q)/24
///     + log sum_{m in Z} [r^{m(6m+1)} - r^{(2m+1)(3m+1)}],  r = exp(4 pi^2 / log q),
/// evaluated at hat_q so that 0 < r < 1. Tends to 1/2 log(2 pi) as q -> 1.
double cq_constant(const QContext& ctx, const EvalConfig& cfg = {});

/// K-term truncation of Moak's asymptotic expansion of log Gamma_q(x).
/// 1 <= K <= 10.
double moak_expansion(const QContext& ctx, double x, int terms = 3, const EvalConfig& cfg = {});

}  // namespace qlcm

#endif  // QLCM_MOAK_HPP

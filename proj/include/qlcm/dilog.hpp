#ifndef QLCM_DILOG_HPP
#define QLCM_DILOG_HPP

#include "qlcm/core.hpp"

namespace qlcm {

/// Real dilogarithm Li2(z) = -int_0^z log(1-t)/t dt on (-inf, 1].
///
/// Power series on |z| <= 1/2, reflection Li2(z) + Li2(1-z) = pi^2/6 -
/// log(z) log(1-z) on (1/2, 1), Landen's identity on [-1, -1/2) and the
/// inversion identity below -1. Throws DomainError for z > 1 or NaN.
double li2(double z, const EvalConfig& cfg = {});

/// Li2(1 - q^x) for x > 0.
///
/// 1 - q^x is never formed directly: the argument enters only through
/// t = x log q, with expm1/log1p forms on each side of the reflection point.
/// Works on both branches (for q > 1 the argument is negative).
/// Throws DomainError for x <= 0.
double li2_one_minus_qpow(const QContext& ctx, double x, const EvalConfig& cfg = {});

}  // namespace qlcm

#endif  // QLCM_DILOG_HPP

#ifndef QLCM_QGAMMA_HPP
#define QLCM_QGAMMA_HPP

#include "qlcm/core.hpp"

namespace qlcm {

/// Raised when no witness a in [0, 1] brackets the q-digamma identity.
/// That would be a numerical counterexample to the lemma, so it is never
/// masked by clamping.
class LemmaViolationError : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

struct SalemWitness {
  double a = 0.0;
  double residual = 0.0;
};

/// log [x]_q = log((1 - q^x) / (1 - q)), either branch.
double log_qnumber(const QContext& ctx, double x);

/// log(q) q^x / (1 - q^x), either branch. This is the shift
/// psi_q(x) - psi_q(x + 1).
double qshift(const QContext& ctx, double x);

/// log Gamma_q(x) for x > 0, summed in log space. q > 1 goes through
/// Gamma_q(x) = q^((x-1)(x-2)/2) Gamma_{1/q}(x).
double log_qgamma(const QContext& ctx, double x, const EvalConfig& cfg = {});
SeriesResult log_qgamma_result(const QContext& ctx, double x, const EvalConfig& cfg = {});

/// q-digamma psi_q(x) for x > 0. q > 1 goes through
/// psi_q(x) = (2x - 3)/2 log q + psi_{1/q}(x).
double qdigamma(const QContext& ctx, double x, const EvalConfig& cfg = {});
SeriesResult qdigamma_result(const QContext& ctx, double x, const EvalConfig& cfg = {});

/// psi_q(x) + log(1 - q) = log q * sum_{k>=1} q^{kx} / (1 - q^k), for q < 1.
///
/// This is the part of psi_q that tends to zero as x grows; callers that
/// subtract log [x]_q use it to avoid cancelling the -log(1 - q) constant.
SeriesResult qdigamma_tail(const QContext& ctx, double x, const EvalConfig& cfg = {});

/// m-th derivative of psi_q at x (m >= 1, q < 1):
/// (log q)^(m+1) * sum_k k^m q^{kx} / (1 - q^k).
double qdigamma_deriv(const QContext& ctx, double x, int m, const EvalConfig& cfg = {});
SeriesResult qdigamma_deriv_result(const QContext& ctx, double x, int m,
                                   const EvalConfig& cfg = {});

/// Moak's closed-form approximation I(x; q) = log [x]_q + log(q) q^x / (2 (1 - q^x)).
double moak_I(const QContext& ctx, double x);

/// Finds a in [0, 1] with
///   psi_q(x) = log((1 - q^(x+a)) / (1 - q)) + log(q) q^x / (1 - q^x)
///              - (1/2 - a) H(q - 1) log q
/// by bisection (at most 100 halvings). The residual is |lhs - rhs| at the
/// returned a and is at most 1e-12 on success.
SalemWitness solve_salem_witness(const QContext& ctx, double x, const EvalConfig& cfg = {});

}  // namespace qlcm

#endif  // QLCM_QGAMMA_HPP

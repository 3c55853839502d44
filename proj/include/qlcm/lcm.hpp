#ifndef QLCM_LCM_HPP
#define QLCM_LCM_HPP

#include <vector>

#include "qlcm/core.hpp"

namespace qlcm {

/// (alpha, beta) of
///   f_{alpha,beta}(x; q) = Gamma_q(x + beta) exp(-Li2(1 - q^x) / log q)
///                          / [x]_q^(x + beta - alpha).
struct LcmParams {
  double alpha = 0.5;
  double beta = 1.0;

  /// Throws DomainError unless beta >= 0 and both values are finite.
  void validate() const;
};

enum class LcmDirection {
  f_is_lcm,        ///< (-1)^n (log f)^(n) >= 0
  inverse_is_lcm,  ///< (-1)^n (log 1/f)^(n) >= 0
};

/// A derivative value with the magnitude of the pieces that produced it.
/// `scale` sets the rounding floor for sign decisions.
struct ScaledValue {
  double value = 0.0;
  double scale = 0.0;
};

struct CertificatePoint {
  double q = 0.0;
  double x = 0.0;
  int order = 0;
  double value = 0.0;         ///< (log f)^(n)(x)
  double signed_value = 0.0;  ///< value with the sign that must be >= 0
  double tolerance = 0.0;     ///< effective tolerance at this point
  bool ok = true;
};

struct MonotonicityCertificate {
  LcmParams params;
  std::vector<double> q_grid;
  std::vector<double> x_grid;
  int max_order = 0;
  LcmDirection direction = LcmDirection::f_is_lcm;
  double sign_tolerance = 0.0;
  /// Every check, ordered by (q, x, n) index.
  std::vector<CertificatePoint> points;
  /// Failed checks, same order.
  std::vector<CertificatePoint> violations;
  bool passed = true;
};

/// log f_{alpha,beta}(x; q) for 0 < q < 1.
double log_f(const LcmParams& params, const QContext& ctx, double x, const EvalConfig& cfg = {});

/// Phi_{alpha,beta}(y) = y^beta log y + (beta - alpha)(1 - y) log y + (1 - y), 0 < y < 1.
double phi(double y, const LcmParams& params);

/// Phi evaluated from t = log y < 0, avoiding the rounding of y = exp(t) near 1.
double phi_from_log(double log_y, const LcmParams& params);

/// (log f)'(x) = psi_q(x + beta) - log [x]_q + (beta - alpha) log(q) q^x / (1 - q^x).
double dlogf(const LcmParams& params, const QContext& ctx, double x, const EvalConfig& cfg = {});
ScaledValue dlogf_scaled(const LcmParams& params, const QContext& ctx, double x,
                         const EvalConfig& cfg = {});

/// (log f)^(n)(x) for n >= 2 from the termwise-differentiated series
///   sum_k (k log q)^(n-2) log(q) q^{kx} / (1 - q^k) Phi(q^k).
double dnlogf_series(const LcmParams& params, const QContext& ctx, double x, int n,
                     const EvalConfig& cfg = {});
ScaledValue dnlogf_scaled(const LcmParams& params, const QContext& ctx, double x, int n,
                          const EvalConfig& cfg = {});

inline constexpr double kDefaultSignTolerance = 1e-12;
inline constexpr int kDefaultMaxOrder = 6;

/// {0.1, 0.2, ..., 0.9, 0.99}
std::vector<double> default_certificate_q_grid();
/// 25 log-spaced points on [0.1, 50].
std::vector<double> default_certificate_x_grid();

/// Checks the sign pattern of (log f)^(n) for n = 1..max_order at every grid
/// point: n = 1 through dlogf, n >= 2 through the series. A point fails when
/// its signed value is below -sign_tolerance * (1 + scale).
///
/// A failed certificate is a result, not an error. Throws ArgumentError for
/// empty grids, max_order < 1 or negative tolerance, and UnsupportedBranchError
/// for q outside (0, 1).
MonotonicityCertificate certify(const LcmParams& params, LcmDirection direction,
                                const std::vector<double>& q_grid,
                                const std::vector<double>& x_grid,
                                int max_order = kDefaultMaxOrder,
                                double sign_tolerance = kDefaultSignTolerance,
                                const EvalConfig& cfg = {});

}  // namespace qlcm

#endif  // QLCM_LCM_HPP

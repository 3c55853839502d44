#ifndef QLCM_INEQUALITIES_HPP
#define QLCM_INEQUALITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "qlcm/core.hpp"
#include "qlcm/lcm.hpp"

namespace qlcm {

/// Containment tolerance for every bound, absolute, in log space.
inline constexpr double kBoundTolerance = 1e-10;

/// Points x_k > 0 with weights p_k >= 0 summing to one.
struct WeightedPoints {
  std::vector<double> points;
  std::vector<double> weights;

  /// Throws ArgumentError on length mismatch, empty input, negative weight,
  /// non-positive point or |sum p - 1| > 1e-12.
  void validate() const;
  double mean() const;
};

/// lower <= middle <= upper, all in log space. One-sided bounds leave the
/// missing side empty.
struct BoundReport {
  std::optional<double> lower;
  double middle = 0.0;
  std::optional<double> upper;
  std::optional<double> slack_low;   ///< middle - lower
  std::optional<double> slack_high;  ///< upper - middle
  double tolerance = kBoundTolerance;
  bool satisfied = false;
  std::string context;
};

/// Fills slacks and the verdict from lower/middle/upper.
BoundReport make_report(std::optional<double> lower, double middle, std::optional<double> upper,
                        std::string context, double tolerance = kBoundTolerance);

struct StirlingRemainder {
  int n = 1;
  double r_n = 0.0;
  double robbins_lower = 0.0;  ///< 1 / (12n + 1)
  double robbins_upper = 0.0;  ///< 1 / (12n)
  double band_lower = 0.0;     ///< 1 - log(2 pi n) / 2
  double band_upper = 0.0;     ///< 1 - log(2 pi) / 2
  bool robbins_ok = false;     ///< strict on both sides
  bool band_ok = false;        ///< within kBoundTolerance
};

/// Jensen bound from log-convexity of f_{alpha,beta}: upper bound on
///   log Gamma_q(sum p x + beta) - sum p log Gamma_q(x + beta).
/// Requires 2 alpha <= 1 <= beta (PreconditionError otherwise) and 0 < q < 1.
BoundReport jensen_upper(const WeightedPoints& wp, const LcmParams& params, const QContext& ctx,
                         const EvalConfig& cfg = {});

/// Two-sided bound on log Gamma_q(sum p x + 1) - sum p log Gamma_q(x + 1).
BoundReport convex_sandwich(const WeightedPoints& wp, const QContext& ctx, const EvalConfig& cfg = {});

/// Bounds on log(Gamma_q(b) / Gamma_q(a)) for 0 < a < b.
BoundReport ratio_bounds(double a, double b, const QContext& ctx, const EvalConfig& cfg = {});

/// q -> 1 limit of ratio_bounds: (b-1) log b - (a-1) log a + a - b <= log(Gamma(b)/Gamma(a))
/// <= (b-1/2) log b - (a-1/2) log a + a - b.
BoundReport classical_ratio_bounds(double a, double b);

/// Bounds on log Gamma_q(x + 1) for x >= 1; all three coincide at x = 1.
BoundReport qgamma_bounds(double x, const QContext& ctx, const EvalConfig& cfg = {});

/// 1 + n (log n - 1) <= log n! <= 1 + n (log n - 1) + log(n)/2, equality iff n = 1.
BoundReport factorial_bounds(int n);

/// r_n = log n! - log(2 pi n)/2 - n (log n - 1) and its two bound families.
StirlingRemainder stirling_remainder(int n);

/// Two-sided bound on the q-Gurland ratio, in log space:
///   middle = 2 log Gamma_q((x+y)/2 + 1) - log Gamma_q(x+1) - log Gamma_q(y+1)
///            + (Li2(1-q^x) + Li2(1-q^y) - 2 Li2(1-q^((x+y)/2))) / log q.
BoundReport gurland_bounds(double x, double y, const QContext& ctx, const EvalConfig& cfg = {});

/// Classical Gurland-ratio bounds.
BoundReport classical_gurland(double x, double y);

/// log n!, exact product for n <= 20 and the classical log-gamma above.
double log_factorial(int n);

}  // namespace qlcm

#endif  // QLCM_INEQUALITIES_HPP

#include "qlcm/inequalities.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qlcm/classical.hpp"
#include "qlcm/dilog.hpp"
#include "qlcm/qgamma.hpp"

namespace qlcm {
namespace {

void require_q_below_one(const QContext& ctx, const char* what) {
  if (!ctx.below_one()) {
    throw UnsupportedBranchError(std::string(what) + " is only stated for 0 < q < 1");
  }
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << name << " must be finite and > 0 (got " << v << ")";
    throw DomainError(msg.str());
  }
}

// Li2(1 - q^x) / log q
double dilog_term(const QContext& ctx, double x, const EvalConfig& cfg) {
  return li2_one_minus_qpow(ctx, x, cfg) / ctx.log_q();
}

std::string describe(const char* name, const QContext& ctx, const std::vector<double>& args) {
  std::ostringstream s;
  s.precision(17);
  s << name << "(q=" << ctx.q();
  for (double a : args) s << ", " << a;
  s << ")";
  return s.str();
}

// Shared pieces of the weighted-point bounds: the gamma ratio at shift `beta`,
// the dilog difference, and sum p_k w(x_k) log[x_k]_q for a weight function.
struct WeightedTerms {
  double mean;
  double log_num_mean;
  double dilog_diff;  // (Li2(1-q^mean) - sum p Li2(1-q^x)) / log q
};

WeightedTerms weighted_terms(const WeightedPoints& wp, const QContext& ctx, const EvalConfig& cfg) {
  WeightedTerms t{};
  t.mean = wp.mean();
  t.log_num_mean = log_qnumber(ctx, t.mean);
  t.dilog_diff = dilog_term(ctx, t.mean, cfg);
  for (std::size_t k = 0; k < wp.points.size(); ++k) {
    t.dilog_diff -= wp.weights[k] * dilog_term(ctx, wp.points[k], cfg);
  }
  return t;
}

double gamma_ratio(const WeightedPoints& wp, double mean, double beta, const QContext& ctx,
                   const EvalConfig& cfg) {
  double v = log_qgamma(ctx, mean + beta, cfg);
  for (std::size_t k = 0; k < wp.points.size(); ++k) {
    v -= wp.weights[k] * log_qgamma(ctx, wp.points[k] + beta, cfg);
  }
  return v;
}

// (mean + c) log[mean]_q - sum p (x_k + c) log[x_k]_q
double exponent_terms(const WeightedPoints& wp, const WeightedTerms& t, double c,
                      const QContext& ctx) {
  double v = (t.mean + c) * t.log_num_mean;
  for (std::size_t k = 0; k < wp.points.size(); ++k) {
    v -= wp.weights[k] * (wp.points[k] + c) * log_qnumber(ctx, wp.points[k]);
  }
  return v;
}

}  // namespace

void WeightedPoints::validate() const {
  if (points.empty() || points.size() != weights.size()) {
    throw ArgumentError("WeightedPoints requires equal, non-zero numbers of points and weights");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!(points[k] > 0.0) || !std::isfinite(points[k])) throw ArgumentError("WeightedPoints: points must be > 0");
    if (!(weights[k] >= 0.0)) throw ArgumentError("WeightedPoints: weights must be >= 0");
    total += weights[k];
  }
  if (std::abs(total - 1.0) > 1e-12) throw ArgumentError("WeightedPoints: weights must sum to 1");
}

double WeightedPoints::mean() const {
  return std::inner_product(points.begin(), points.end(), weights.begin(), 0.0);
}

BoundReport make_report(std::optional<double> lower, double middle, std::optional<double> upper,
                        std::string context, double tolerance) {
  BoundReport r;
  r.lower = lower;
  r.middle = middle;
  r.upper = upper;
  r.tolerance = tolerance;
  r.context = std::move(context);
  bool ok = std::isfinite(middle);
  if (lower) {
    r.slack_low = middle - *lower;
    ok = ok && *r.slack_low >= -tolerance;
  }
  if (upper) {
    r.slack_high = *upper - middle;
    ok = ok && *r.slack_high >= -tolerance;
  }
  r.satisfied = ok;
  return r;
}

BoundReport jensen_upper(const WeightedPoints& wp, const LcmParams& params, const QContext& ctx,
                         const EvalConfig& cfg) {
  params.validate();
  if (!(2.0 * params.alpha <= 1.0 && 1.0 <= params.beta)) {
    throw PreconditionError("jensen_upper requires 2 alpha <= 1 <= beta");
  }
  require_q_below_one(ctx, "jensen_upper");
  wp.validate();
  const WeightedTerms t = weighted_terms(wp, ctx, cfg);
  const double middle = gamma_ratio(wp, t.mean, params.beta, ctx, cfg);
  const double upper =
      exponent_terms(wp, t, params.beta - params.alpha, ctx) + t.dilog_diff;
  return make_report(std::nullopt, middle, upper,
                     describe("jensen_upper", ctx, {params.alpha, params.beta, t.mean}));
}

BoundReport convex_sandwich(const WeightedPoints& wp, const QContext& ctx, const EvalConfig& cfg) {
  require_q_below_one(ctx, "convex_sandwich");
  wp.validate();
  const WeightedTerms t = weighted_terms(wp, ctx, cfg);
  const double middle = gamma_ratio(wp, t.mean, 1.0, ctx, cfg);
  const double lower = exponent_terms(wp, t, 0.0, ctx) + t.dilog_diff;
  const double upper = exponent_terms(wp, t, 0.5, ctx) + t.dilog_diff;
  return make_report(lower, middle, upper, describe("convex_sandwich", ctx, {t.mean}));
}

BoundReport ratio_bounds(double a, double b, const QContext& ctx, const EvalConfig& cfg) {
  require_positive(a, "a");
  if (!(b > a) || !std::isfinite(b)) throw ArgumentError("ratio_bounds requires 0 < a < b");
  require_q_below_one(ctx, "ratio_bounds");
  const double la = log_qnumber(ctx, a), lb = log_qnumber(ctx, b);
  const double d = dilog_term(ctx, b, cfg) - dilog_term(ctx, a, cfg);
  const double middle = log_qgamma(ctx, b, cfg) - log_qgamma(ctx, a, cfg);
  const double lower = (b - 1.0) * lb - (a - 1.0) * la + d;
  const double upper = (b - 0.5) * lb - (a - 0.5) * la + d;
  return make_report(lower, middle, upper, describe("ratio_bounds", ctx, {a, b}));
}

BoundReport classical_ratio_bounds(double a, double b) {
  require_positive(a, "a");
  if (!(b > a) || !std::isfinite(b)) throw ArgumentError("classical_ratio_bounds requires 0 < a < b");
  const double la = std::log(a), lb = std::log(b);
  const double middle = classical::log_gamma(b) - classical::log_gamma(a);
  const double lower = (b - 1.0) * lb - (a - 1.0) * la + a - b;
  const double upper = (b - 0.5) * lb - (a - 0.5) * la + a - b;
  std::ostringstream s;
  s.precision(17);
  s << "classical_ratio_bounds(" << a << ", " << b << ")";
  return make_report(lower, middle, upper, s.str());
}

BoundReport qgamma_bounds(double x, const QContext& ctx, const EvalConfig& cfg) {
  if (!(x >= 1.0) || !std::isfinite(x)) throw PreconditionError("qgamma_bounds requires x >= 1");
  require_q_below_one(ctx, "qgamma_bounds");
  const double lx = log_qnumber(ctx, x);
  const double d = dilog_term(ctx, x, cfg) - dilog_term(ctx, 1.0, cfg);
  const double middle = log_qgamma(ctx, x + 1.0, cfg);
  return make_report(x * lx + d, middle, (x + 0.5) * lx + d, describe("qgamma_bounds", ctx, {x}));
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial requires n >= 0");
  if (n <= 20) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return std::log(static_cast<double>(f));
  }
  return classical::log_gamma(n + 1.0);
}

BoundReport factorial_bounds(int n) {
  if (n < 1) throw DomainError("factorial_bounds requires n >= 1");
  const double ln = std::log(static_cast<double>(n));
  const double lower = 1.0 + n * (ln - 1.0);
  std::ostringstream s;
  s << "factorial_bounds(" << n << ")";
  return make_report(lower, log_factorial(n), lower + 0.5 * ln, s.str());
}

StirlingRemainder stirling_remainder(int n) {
  if (n < 1) throw DomainError("stirling_remainder requires n >= 1");
  const double dn = n;
  const double log2pi = std::log(2.0 * std::numbers::pi);
  StirlingRemainder r;
  r.n = n;
  if (n <= 20) {
    r.r_n = log_factorial(n) - 0.5 * (log2pi + std::log(dn)) - dn * (std::log(dn) - 1.0);
  } else {
    // log n! = log Gamma(n+1) expanded at n+1; the n log n and log(2 pi) terms cancel exactly.
    r.r_n = (dn + 0.5) * std::log1p(1.0 / dn) - 1.0 + classical::stirling_correction(dn + 1.0);
  }
  r.robbins_lower = 1.0 / (12.0 * dn + 1.0);
  r.robbins_upper = 1.0 / (12.0 * dn);
  r.band_lower = 1.0 - 0.5 * (log2pi + std::log(dn));
  r.band_upper = 1.0 - 0.5 * log2pi;
  r.robbins_ok = r.robbins_lower < r.r_n && r.r_n < r.robbins_upper;
  r.band_ok = r.r_n - r.band_lower >= -kBoundTolerance && r.band_upper - r.r_n >= -kBoundTolerance;
  return r;
}

BoundReport gurland_bounds(double x, double y, const QContext& ctx, const EvalConfig& cfg) {
  require_positive(x, "x");
  require_positive(y, "y");
  require_q_below_one(ctx, "gurland_bounds");
  const double m = 0.5 * (x + y);
  const double lx = log_qnumber(ctx, x), ly = log_qnumber(ctx, y), lm = log_qnumber(ctx, m);
  const double middle = 2.0 * log_qgamma(ctx, m + 1.0, cfg) - log_qgamma(ctx, x + 1.0, cfg) -
                        log_qgamma(ctx, y + 1.0, cfg) + dilog_term(ctx, x, cfg) +
                        dilog_term(ctx, y, cfg) - 2.0 * dilog_term(ctx, m, cfg);
  const double lower = (x + y) * lm - x * lx - y * ly;
  const double upper = (x + y + 1.0) * lm - (x + 0.5) * lx - (y + 0.5) * ly;
  return make_report(lower, middle, upper, describe("gurland_bounds", ctx, {x, y}));
}

BoundReport classical_gurland(double x, double y) {
  require_positive(x, "x");
  require_positive(y, "y");
  const double m = 0.5 * (x + y);
  const double lx = std::log(x), ly = std::log(y), lm = std::log(m);
  const double middle = 2.0 * classical::log_gamma(m + 1.0) - classical::log_gamma(x + 1.0) -
                        classical::log_gamma(y + 1.0);
  std::ostringstream s;
  s.precision(17);
  s << "classical_gurland(" << x << ", " << y << ")";
  return make_report((x + y) * lm - x * lx - y * ly, middle,
                     (x + y + 1.0) * lm - (x + 0.5) * lx - (y + 0.5) * ly, s.str());
}

}  // namespace qlcm

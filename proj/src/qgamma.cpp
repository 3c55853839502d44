#include "qlcm/qgamma.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace qlcm {
namespace {

void require_positive_x(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " requires finite x > 0 (got x = " << x << ")";
    throw DomainError(msg.str());
  }
}

// log(exp(t) - 1) for t > 0.
double log_expm1(double t) {
  return t < std::numbers::ln2 ? std::log(std::expm1(t)) : t + log1mexp(-t);
}

constexpr double kWitnessTol = 1e-12;

}  // namespace

double log_qnumber(const QContext& ctx, double x) {
  const double lq = ctx.log_q();
  if (ctx.below_one()) return log1mexp(x * lq) - log1mexp(lq);
  return log_expm1(x * lq) - log_expm1(lq);
}

double qshift(const QContext& ctx, double x) {
  const double lq = ctx.log_q();
  return lq / std::expm1(-x * lq);
}

SeriesResult log_qgamma_result(const QContext& ctx, double x, const EvalConfig& cfg) {
  require_positive_x(x, "log_qgamma");
  if (!ctx.below_one()) {
    SeriesResult r = log_qgamma_result(ctx.inverse(), x, cfg);
    r.value += 0.5 * (x - 1.0) * (x - 2.0) * ctx.log_q();
    return r;
  }
  const double lq = ctx.log_q();
  SeriesResult r = sum_series(
      [&](std::int64_t k) {
        const double kk = static_cast<double>(k);
        return log1mexp(kk * lq) - log1mexp((kk - 1.0 + x) * lq);
      },
      cfg);
  r.value += (1.0 - x) * std::log1p(-ctx.q());
  return r;
}

double log_qgamma(const QContext& ctx, double x, const EvalConfig& cfg) {
  const SeriesResult r = log_qgamma_result(ctx, x, cfg);
  if (!r.converged) throw EvaluationError("log_qgamma: product did not converge");
  return r.value;
}

SeriesResult qdigamma_tail(const QContext& ctx, double x, const EvalConfig& cfg) {
  require_positive_x(x, "qdigamma");
  if (!ctx.below_one()) {
    throw UnsupportedBranchError("qdigamma series form requires 0 < q < 1");
  }
  const double lq = ctx.log_q();
  SeriesResult r = sum_series(
      [&](std::int64_t k) {
        const double kk = static_cast<double>(k);
        return std::exp(kk * x * lq) / -std::expm1(kk * lq);
      },
      cfg);
  r.value *= lq;
  r.tail_bound *= -lq;
  return r;
}

SeriesResult qdigamma_result(const QContext& ctx, double x, const EvalConfig& cfg) {
  require_positive_x(x, "qdigamma");
  if (!ctx.below_one()) {
    SeriesResult r = qdigamma_result(ctx.inverse(), x, cfg);
    r.value += 0.5 * (2.0 * x - 3.0) * ctx.log_q();
    return r;
  }
  SeriesResult r = qdigamma_tail(ctx, x, cfg);
  r.value -= std::log1p(-ctx.q());
  return r;
}

double qdigamma(const QContext& ctx, double x, const EvalConfig& cfg) {
  const SeriesResult r = qdigamma_result(ctx, x, cfg);
  if (!r.converged) throw EvaluationError("qdigamma: series did not converge");
  return r.value;
}

SeriesResult qdigamma_deriv_result(const QContext& ctx, double x, int m,
                                   const EvalConfig& cfg) {
  if (m < 1) throw ArgumentError("qdigamma_deriv requires derivative order m >= 1");
  require_positive_x(x, "qdigamma_deriv");
  if (!ctx.below_one()) {
    throw UnsupportedBranchError("qdigamma_deriv is only available for 0 < q < 1");
  }
  const double lq = ctx.log_q();
  SeriesResult r = sum_series(
      [&](std::int64_t k) {
        const double kk = static_cast<double>(k);
        return std::pow(kk, m) * std::exp(kk * x * lq) / -std::expm1(kk * lq);
      },
      cfg);
  const double scale = std::pow(lq, m + 1);
  r.value *= scale;
  r.tail_bound *= std::abs(scale);
  return r;
}

double qdigamma_deriv(const QContext& ctx, double x, int m, const EvalConfig& cfg) {
  const SeriesResult r = qdigamma_deriv_result(ctx, x, m, cfg);
  if (!r.converged) throw EvaluationError("qdigamma_deriv: series did not converge");
  return r.value;
}

double moak_I(const QContext& ctx, double x) {
  require_positive_x(x, "moak_I");
  if (!ctx.below_one()) throw UnsupportedBranchError("moak_I requires 0 < q < 1");
  return log_qnumber(ctx, x) + 0.5 * qshift(ctx, x);
}

SalemWitness solve_salem_witness(const QContext& ctx, double x, const EvalConfig& cfg) {
  require_positive_x(x, "solve_salem_witness");

  std::function<double(double)> g;
  if (ctx.below_one()) {
    // psi_q(x) - log((1-q^{x+a})/(1-q)) - shift with the log(1-q) constants cancelled.
    const double lq = ctx.log_q();
    const double base = qdigamma_tail(ctx, x, cfg).value - qshift(ctx, x);
    g = [=](double a) { return base - log1mexp((x + a) * lq); };
  } else {
    const double lq = ctx.log_q();
    const double base = qdigamma(ctx, x, cfg) - qshift(ctx, x) + 0.5 * lq;
    g = [=, &ctx](double a) { return base - log_qnumber(ctx, x + a) - a * lq; };
  }

  double lo = 0.0, hi = 1.0;
  double g_lo = g(lo), g_hi = g(hi);
  if (g_lo == 0.0) return {lo, 0.0};
  if (g_hi == 0.0) return {hi, 0.0};
  if ((g_lo > 0.0) == (g_hi > 0.0)) {
    // No sign change: accept an endpoint only if it already satisfies the identity.
    if (std::min(std::abs(g_lo), std::abs(g_hi)) <= kWitnessTol) {
      return std::abs(g_lo) <= std::abs(g_hi) ? SalemWitness{lo, std::abs(g_lo)}
                                              : SalemWitness{hi, std::abs(g_hi)};
    }
    std::ostringstream msg;
    msg.precision(17);
    msg << "no witness a in [0,1] at q = " << ctx.q() << ", x = " << x << ": g(0) = " << g_lo
        << ", g(1) = " << g_hi;
    throw LemmaViolationError(msg.str());
  }

  SalemWitness best{std::abs(g_lo) < std::abs(g_hi) ? lo : hi,
                    std::min(std::abs(g_lo), std::abs(g_hi))};
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = g(mid);
    if (std::abs(g_mid) < best.residual) best = {mid, std::abs(g_mid)};
    if (g_mid == 0.0) break;
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  if (best.residual > kWitnessTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "witness bisection stalled at q = " << ctx.q() << ", x = " << x
        << " with residual " << best.residual;
    throw EvaluationError(msg.str());
  }
  return best;
}

}  // namespace qlcm

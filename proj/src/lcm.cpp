#include "qlcm/lcm.hpp"

#include <cmath>
#include <sstream>

#include "qlcm/dilog.hpp"
#include "qlcm/qgamma.hpp"

namespace qlcm {
namespace {

void require_q_below_one(const QContext& ctx, const char* what) {
  if (!ctx.below_one()) {
    std::ostringstream msg;
    msg << what << " is only defined here for 0 < q < 1";
    throw UnsupportedBranchError(msg.str());
  }
}

void require_positive_x(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " requires finite x > 0 (got x = " << x << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

void LcmParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || beta < 0.0) {
    throw DomainError("LcmParams requires finite alpha and beta >= 0");
  }
}

double log_f(const LcmParams& params, const QContext& ctx, double x, const EvalConfig& cfg) {
  params.validate();
  require_q_below_one(ctx, "log_f");
  require_positive_x(x, "log_f");
  return log_qgamma(ctx, x + params.beta, cfg) -
         (x + params.beta - params.alpha) * log_qnumber(ctx, x) -
         li2_one_minus_qpow(ctx, x, cfg) / ctx.log_q();
}

double phi_from_log(double t, const LcmParams& params) {
  const double one_minus_y = -std::expm1(t);
  return std::exp(params.beta * t) * t + (params.beta - params.alpha) * one_minus_y * t + one_minus_y;
}

double phi(double y, const LcmParams& params) {
  if (!(y > 0.0 && y < 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "phi requires 0 < y < 1 (got y = " << y << ")";
    throw DomainError(msg.str());
  }
  return phi_from_log(std::log(y), params);
}

ScaledValue dlogf_scaled(const LcmParams& params, const QContext& ctx, double x,
                         const EvalConfig& cfg) {
  params.validate();
  require_q_below_one(ctx, "dlogf");
  require_positive_x(x, "dlogf");
  // psi_q(x+beta) - log[x]_q with both -log(1-q) constants removed.
  const SeriesResult tail = qdigamma_tail(ctx, x + params.beta, cfg);
  if (!tail.converged) throw EvaluationError("dlogf: q-digamma series did not converge");
  const double log_num = log1mexp(x * ctx.log_q());
  const double shift = (params.beta - params.alpha) * qshift(ctx, x);
  return {tail.value - log_num + shift, std::abs(tail.value) + std::abs(log_num) + std::abs(shift)};
}

double dlogf(const LcmParams& params, const QContext& ctx, double x, const EvalConfig& cfg) {
  return dlogf_scaled(params, ctx, x, cfg).value;
}

ScaledValue dnlogf_scaled(const LcmParams& params, const QContext& ctx, double x, int n,
                          const EvalConfig& cfg) {
  params.validate();
  if (n < 2) throw ArgumentError("dnlogf_series requires n >= 2");
  require_q_below_one(ctx, "dnlogf_series");
  require_positive_x(x, "dnlogf_series");
  const double lq = ctx.log_q();
  double abs_sum = 0.0;
  const SeriesResult r = sum_series(
      [&](std::int64_t k) {
        const double t = static_cast<double>(k) * lq;  // log q^k
        const double term = std::pow(t, n - 2) * lq * std::exp(t * x) / -std::expm1(t) *
                            phi_from_log(t, params);
        abs_sum += std::abs(term);
        return term;
      },
      cfg);
  if (!r.converged) throw EvaluationError("dnlogf_series: series did not converge");
  return {r.value, abs_sum};
}

double dnlogf_series(const LcmParams& params, const QContext& ctx, double x, int n,
                     const EvalConfig& cfg) {
  return dnlogf_scaled(params, ctx, x, n, cfg).value;
}

std::vector<double> default_certificate_q_grid() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
}

std::vector<double> default_certificate_x_grid() {
  constexpr int kCount = 25;
  const double lo = std::log(0.1), hi = std::log(50.0);
  std::vector<double> xs(kCount);
  for (int i = 0; i < kCount; ++i) xs[i] = std::exp(lo + (hi - lo) * i / (kCount - 1));
  xs.front() = 0.1;
  xs.back() = 50.0;
  return xs;
}

MonotonicityCertificate certify(const LcmParams& params, LcmDirection direction,
                                const std::vector<double>& q_grid,
                                const std::vector<double>& x_grid, int max_order,
                                double sign_tolerance, const EvalConfig& cfg) {
  params.validate();
  if (q_grid.empty() || x_grid.empty()) throw ArgumentError("certify requires non-empty grids");
  if (max_order < 1) throw ArgumentError("certify requires max_order >= 1");
  if (!(sign_tolerance >= 0.0)) throw ArgumentError("certify requires sign_tolerance >= 0");

  MonotonicityCertificate cert;
  cert.params = params;
  cert.q_grid = q_grid;
  cert.x_grid = x_grid;
  cert.max_order = max_order;
  cert.direction = direction;
  cert.sign_tolerance = sign_tolerance;

  for (double q : q_grid) {
    const QContext ctx(q);
    require_q_below_one(ctx, "certify");
    for (double x : x_grid) {
      for (int n = 1; n <= max_order; ++n) {
        const ScaledValue d = n == 1 ? dlogf_scaled(params, ctx, x, cfg)
                                     : dnlogf_scaled(params, ctx, x, n, cfg);
        // f LCM: (-1)^n D^n log f >= 0.  1/f LCM: (-1)^(n+1) D^n log f >= 0.
        const bool odd = n % 2 == 1;
        const bool negate = direction == LcmDirection::f_is_lcm ? odd : !odd;
        CertificatePoint pt;
        pt.q = q;
        pt.x = x;
        pt.order = n;
        pt.value = d.value;
        pt.signed_value = negate ? -d.value : d.value;
        pt.tolerance = sign_tolerance * (1.0 + d.scale);
        pt.ok = pt.signed_value >= -pt.tolerance;
        cert.points.push_back(pt);
        if (!pt.ok) cert.violations.push_back(pt);
      }
    }
  }
  cert.passed = cert.violations.empty();
  return cert;
}

}  // namespace qlcm

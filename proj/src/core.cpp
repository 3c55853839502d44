#include "qlcm/core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qlcm {

QContext::QContext(double q) {
  if (!std::isfinite(q) || q <= 0.0 || q == 1.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "q must satisfy q > 0 and q != 1 (got q = " << q << ")";
    throw DomainError(msg.str());
  }
  q_ = q;
  heaviside_ = q > 1.0 ? 1 : 0;
  hat_q_ = heaviside_ ? 1.0 / q : q;
  log_q_ = std::log(q);
}

void EvalConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_terms < 1) {
    throw ArgumentError("EvalConfig requires rel_tol > 0, abs_tol >= 0 and max_terms >= 1");
  }
}

SeriesResult sum_series(const SeriesTerm& term, const EvalConfig& cfg) {
  cfg.validate();
  SeriesResult out;
  double sum = 0.0;
  double carry = 0.0;  // Neumaier compensation
  double prev_abs = 0.0;

  for (std::int64_t k = 1; k <= cfg.max_terms; ++k) {
    const double t = term(k);
    if (!std::isfinite(t)) {
      std::ostringstream msg;
      msg << "series term at index " << k << " is not finite";
      throw EvaluationError(msg.str());
    }
    const double s = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      carry += (sum - s) + t;
    } else {
      carry += (t - s) + sum;
    }
    sum = s;
    out.terms_used = k;

    const double cur_abs = std::abs(t);
    double tail;
    if (cur_abs == 0.0) {
      tail = 0.0;
    } else if (k == 1 || prev_abs == 0.0) {
      tail = HUGE_VAL;
    } else {
      const double rho = cur_abs / prev_abs;
      tail = rho < 1.0 ? cur_abs * rho / (1.0 - rho) : HUGE_VAL;
    }
    prev_abs = cur_abs;

    const double value = sum + carry;
    if (tail <= std::max(cfg.rel_tol * std::abs(value), cfg.abs_tol)) {
      out.value = value;
      out.converged = true;
      out.tail_bound = tail;
      return out;
    }
    out.tail_bound = tail;
  }
  out.value = sum + carry;
  out.converged = false;
  return out;
}

double sum_series_or_throw(const SeriesTerm& term, const EvalConfig& cfg,
                           const std::string& what) {
  const SeriesResult r = sum_series(term, cfg);
  if (!r.converged) {
    std::ostringstream msg;
    msg << what << ": series did not converge within " << cfg.max_terms << " terms";
    throw EvaluationError(msg.str());
  }
  return r.value;
}

double log1mexp(double t) {
  // Maechler's split: expm1 near zero, log1p in the far tail.
  return t > -std::numbers::ln2 ? std::log(-std::expm1(t)) : std::log1p(-std::exp(t));
}

}  // namespace qlcm

#ifndef QLCM_CORE_HPP
#define QLCM_CORE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace qlcm {

// Error hierarchy. Evaluators throw; certificates and bound reports never do
// for a failed check (a failed check is a result).

/// Argument outside the mathematical domain of the function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument is in range but malformed (wrong order, bad count, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A hypothesis required by an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested branch (e.g. q > 1) is not supported by this operation.
class UnsupportedBranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Non-finite intermediate, failed convergence or numeric degeneracy.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deformation parameter q with its branch data. Immutable once built.
///
/// For q > 1 every evaluator works with hat_q = 1/q and applies the
/// transformation identities; heaviside records which branch the caller is on.
class QContext {
 public:
  /// Throws DomainError for q <= 0, q == 1 or non-finite q.
  explicit QContext(double q);

  double q() const noexcept { return q_; }
  double hat_q() const noexcept { return hat_q_; }
  int heaviside() const noexcept { return heaviside_; }
  double log_q() const noexcept { return log_q_; }
  double log_hat_q() const noexcept { return heaviside_ ? -log_q_ : log_q_; }
  bool below_one() const noexcept { return heaviside_ == 0; }

  /// Context for 1/q (same hat_q, opposite branch).
  QContext inverse() const { return QContext(1.0 / q_); }

 private:
  double q_;
  double hat_q_;
  int heaviside_;
  double log_q_;
};

inline QContext make_qcontext(double q) { return QContext(q); }

struct EvalConfig {
  double rel_tol = 1e-14;
  double abs_tol = 1e-300;
  std::int64_t max_terms = 1'000'000;

  /// Throws ArgumentError unless rel_tol > 0, abs_tol >= 0, max_terms >= 1.
  void validate() const;
};

struct SeriesResult {
  double value = 0.0;
  std::int64_t terms_used = 0;
  bool converged = false;
  double tail_bound = 0.0;
};

using SeriesTerm = std::function<double(std::int64_t)>;

/// Sums term(1) + term(2) + ... with compensated (Neumaier) accumulation.
///
/// After each term the tail is majorised by |term(k)| * rho / (1 - rho), rho
/// being the last observed ratio |term(k) / term(k-1)|. Summation stops once
/// that bound is at most max(rel_tol * |sum|, abs_tol). A ratio >= 1 means the
/// terms are not yet decaying and summation continues. A term that is exactly
/// zero ends the summation (finite support, or underflow of a decaying series). If max_terms is reached
/// the result carries converged = false.
///
/// Throws EvaluationError naming the index of the first non-finite term.
SeriesResult sum_series(const SeriesTerm& term, const EvalConfig& cfg = {});

/// Same as sum_series but throws EvaluationError if the series did not converge.
double sum_series_or_throw(const SeriesTerm& term, const EvalConfig& cfg,
                           const std::string& what);

/// log(1 - exp(t)) for t < 0, accurate both for t -> 0- and t -> -inf.
double log1mexp(double t);

}  // namespace qlcm

#endif  // QLCM_CORE_HPP

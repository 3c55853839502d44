#ifndef QLCM_CLASSICAL_HPP
#define QLCM_CLASSICAL_HPP

namespace qlcm::classical {

// Reference values for the q -> 1 limits. Both shift the argument past 10
// with the recurrence and finish with the Stirling / asymptotic series.

/// log Gamma(x), x > 0, accurate to about 1e-14 relative.
double log_gamma(double x);

/// log Gamma(x) - [(x - 1/2) log x - x + log(2 pi)/2] for x >= 10, the
/// Bernoulli tail of the Stirling series.
double stirling_correction(double x);

/// digamma psi(x), x > 0.
double digamma(double x);

}  // namespace qlcm::classical

#endif  // QLCM_CLASSICAL_HPP

#include "qlcm/moak.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qlcm/dilog.hpp"
#include "qlcm/qgamma.hpp"

namespace qlcm {
namespace {

constexpr int kMaxPk = 19;
constexpr int kMaxTerms = 10;

using boost::multiprecision::cpp_int;

std::int64_t checked(const cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw EvaluationError("P_k coefficient overflow");
  }
  return static_cast<std::int64_t>(v);
}

const std::vector<PkPolynomial>& pk_table() {
  static const std::vector<PkPolynomial> table = pk_polynomials(2 * kMaxTerms - 3);
  return table;
}

const BernoulliTable& bernoulli_table() {
  static const BernoulliTable table = bernoulli(2 * kMaxTerms);
  return table;
}

}  // namespace

double PkPolynomial::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + static_cast<double>(*it);
  return acc;
}

std::vector<PkPolynomial> pk_polynomials(int kmax) {
  if (kmax < 0) throw ArgumentError("pk_polynomials requires kmax >= 0");
  if (kmax > kMaxPk) throw ArgumentError("pk_polynomials: kmax > 19 overflows 64-bit coefficients");

  std::vector<PkPolynomial> out;
  out.reserve(kmax + 1);
  out.push_back(PkPolynomial{});
  for (int k = 1; k <= kmax; ++k) {
    const auto& prev = out.back().coeffs;
    const std::size_t n = prev.size();
    std::vector<cpp_int> next(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const cpp_int c = prev[i];
      // (k z + 1) c z^i
      next[i] += c;
      next[i + 1] += k * c;
      // (z - z^2) * i c z^{i-1}
      if (i > 0) {
        next[i] += i * c;
        next[i + 1] -= i * c;
      }
    }
    PkPolynomial p;
    p.coeffs.clear();
    for (const auto& c : next) p.coeffs.push_back(checked(c));
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    p.degree = static_cast<int>(p.coeffs.size()) - 1;
    out.push_back(std::move(p));
  }
  return out;
}

BernoulliTable bernoulli(int max_index) {
  using boost::multiprecision::cpp_rational;
  if (max_index < 2) throw ArgumentError("bernoulli requires a table of at least B_0..B_2");

  BernoulliTable table;
  table.values.resize(max_index + 1);
  table.precision_warning = max_index > 60;

  // Akiyama-Tanigawa yields B_n with B_1 = +1/2.
  std::vector<cpp_rational> row(max_index + 1);
  for (int m = 0; m <= max_index; ++m) {
    row[m] = cpp_rational(1, m + 1);
    for (int j = m; j >= 1; --j) row[j - 1] = j * (row[j - 1] - row[j]);
    table.values[m] = static_cast<double>(row[0]);
  }
  table.values[1] = -0.5;
  return table;
}

double cq_constant(const QContext& ctx, const EvalConfig& cfg) {
  cfg.validate();
  const double lq = ctx.log_hat_q();
  const double log_r = 4.0 * std::numbers::pi * std::numbers::pi / lq;

  auto r_pow = [&](double e) { return e == 0.0 ? 1.0 : std::exp(e * log_r); };
  auto pair = [&](double m) { return r_pow(m * (6.0 * m + 1.0)) - r_pow((2.0 * m + 1.0) * (3.0 * m + 1.0)); };

  double theta = pair(0.0);
  for (int m = 1; m < 10000; ++m) {
    const double dm = m;
    const double largest = std::max({r_pow(dm * (6.0 * dm + 1.0)), r_pow((2.0 * dm + 1.0) * (3.0 * dm + 1.0)),
                                     r_pow(-dm * (-6.0 * dm + 1.0)),
                                     r_pow((-2.0 * dm + 1.0) * (-3.0 * dm + 1.0))});
    if (largest < cfg.abs_tol || largest == 0.0) break;
    theta += pair(dm) + pair(-dm);
  }
  if (!(theta > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "C_q theta sum is not positive (" << theta << ") at q = " << ctx.q();
    throw EvaluationError(msg.str());
  }
  const double ratio = std::expm1(lq) / lq;  // (q - 1) / log q > 0
  return 0.5 * std::log(2.0 * std::numbers::pi) + 0.5 * std::log(ratio) - lq / 24.0 + std::log(theta);
}

double moak_expansion(const QContext& ctx, double x, int terms, const EvalConfig& cfg) {
  if (!(x > 0.0)) throw DomainError("moak_expansion requires x > 0");
  if (terms < 1 || terms > kMaxTerms) throw ArgumentError("moak_expansion requires 1 <= K <= 10");

  double value = (x - 0.5) * log_qnumber(ctx, x) + li2_one_minus_qpow(ctx, x, cfg) / ctx.log_q() +
                 0.5 * ctx.heaviside() * ctx.log_q() + cq_constant(ctx, cfg);

  const double lh = ctx.log_hat_q();
  const double hx = std::exp(x * lh);
  const double base = lh / std::expm1(x * lh);  // log hat_q / (hat_q^x - 1)
  const auto& pk = pk_table();
  const auto& bern = bernoulli_table();
  double factorial = 1.0;
  for (int k = 1; k <= terms; ++k) {
    factorial *= (2.0 * k - 1.0) * (2.0 * k);
    const int idx = 2 * k - 3;
    const double poly = idx < 0 ? 1.0 : pk[idx](hx);
    value += bern[2 * k] / factorial * std::pow(base, 2 * k - 1) * hx * poly;
  }
  return value;
}

}  // namespace qlcm

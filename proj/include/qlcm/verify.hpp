#ifndef QLCM_VERIFY_HPP
#define QLCM_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlcm/core.hpp"
#include "qlcm/lcm.hpp"

namespace qlcm {

/// One check of a verification suite, flattened for tabular output.
/// A check passes when lower <= value <= upper (missing sides are open)
/// and, where present, residual <= tolerance.
struct CheckRecord {
  std::string suite;
  std::string check;
  std::optional<double> q;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> x;
  std::optional<double> y;
  std::optional<int> n;
  std::optional<double> lower;
  double value = 0.0;
  std::optional<double> upper;
  std::optional<double> residual;
  double tolerance = 0.0;
  bool passed = false;
  std::string context;

  /// How far outside the allowed region the check landed (0 when passed).
  double excess() const;
};

struct SuiteOptions {
  std::optional<std::vector<double>> q_grid;
  std::optional<std::vector<double>> x_grid;
  std::optional<double> alpha;
  std::optional<double> beta;
  int max_order = kDefaultMaxOrder;
  double sign_tolerance = kDefaultSignTolerance;
  EvalConfig cfg;
};

/// thm-2.1, thm-2.2, thm-2.3, lemma-2.1, cor-3.1 .. cor-3.5, stirling, gurland.
const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite in suite_names() order). Records
/// come back in a fixed order that depends only on the inputs.
/// Throws ArgumentError for an unknown suite name.
std::vector<CheckRecord> run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace qlcm

#endif  // QLCM_VERIFY_HPP

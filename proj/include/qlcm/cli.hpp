#ifndef QLCM_CLI_HPP
#define QLCM_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace qlcm::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct GridSpec {
  enum class Scale { linear, log };
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  Scale scale = Scale::linear;

  std::vector<double> points() const;
};

/// Parses "start:stop:count[:log|:linear]". Throws qlcm::ArgumentError.
GridSpec parse_grid(const std::string& text);

/// Parses a comma-separated list of reals. Throws qlcm::ArgumentError.
std::vector<double> parse_list(const std::string& text);

using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

/// Flat table of records; rows follow input order.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// CSV with a header row. Reals use 17 significant digits; empty cells are
/// missing values; strings are quoted when they contain , " or newlines.
void write_csv(std::ostream& os, const Table& table);

/// JSON array of flat objects, one per row, keys in column order.
void write_json(std::ostream& os, const Table& table);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Records go to `out` (or --out FILE); diagnostics, the
/// command echo and the run summary go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlcm::cli

#endif  // QLCM_CLI_HPP

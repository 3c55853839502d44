#include "qlcm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "qlcm/classical.hpp"
#include "qlcm/core.hpp"
#include "qlcm/dilog.hpp"
#include "qlcm/lcm.hpp"
#include "qlcm/moak.hpp"
#include "qlcm/qgamma.hpp"
#include "qlcm/verify.hpp"

namespace qlcm::cli {
namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
  };
  return std::visit(Visitor{}, c);
}

template <typename T>
Cell opt(const std::optional<T>& v) {
  if (!v) return std::monostate{};
  if constexpr (std::is_integral_v<T>) {
    return static_cast<std::int64_t>(*v);
  } else {
    return static_cast<double>(*v);
  }
}

// Every flag the subcommands share; unused ones are ignored per command.
struct Flags {
  std::optional<std::string> q;
  std::optional<double> x, y, a, b, z, alpha, beta, tol;
  std::optional<int> n, order, terms;
  std::optional<std::int64_t> max_terms;
  std::optional<std::string> grid;
  std::string format = "csv";
  std::optional<std::string> out;
  bool violations_only = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--q", f.q, "q value (eval) or comma-separated q list (verify, limit)");
  sub->add_option("--x", f.x, "x argument");
  sub->add_option("--y", f.y, "y argument (phi)");
  sub->add_option("--a", f.a, "a argument");
  sub->add_option("--b", f.b, "b argument");
  sub->add_option("--n", f.n, "integer argument");
  sub->add_option("--z", f.z, "dilogarithm argument");
  sub->add_option("--alpha", f.alpha, "alpha parameter of f_{alpha,beta}");
  sub->add_option("--beta", f.beta, "beta parameter of f_{alpha,beta}");
  sub->add_option("--order", f.order, "derivative order (eval) or highest order N (verify)");
  sub->add_option("--terms", f.terms, "number of expansion terms K (moak-expansion)");
  sub->add_option("--tol", f.tol, "sign tolerance (verify) or series rel_tol (eval, limit)");
  sub->add_option("--max-terms", f.max_terms, "series term cap");
  sub->add_option("--grid", f.grid, "start:stop:count[:log] sweep of the primary variable");
  sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", f.out, "write records to FILE instead of stdout");
}

EvalConfig eval_config(const Flags& f, bool tol_is_rel) {
  EvalConfig cfg;
  if (tol_is_rel && f.tol) cfg.rel_tol = *f.tol;
  if (f.max_terms) cfg.max_terms = *f.max_terms;
  cfg.validate();
  return cfg;
}

template <typename T>
T need(const std::optional<T>& v, const char* flag, const std::string& fn) {
  if (!v) throw ArgumentError(fn + " requires " + flag);
  return *v;
}

double single_q(const Flags& f, const std::string& fn) {
  const std::vector<double> qs = parse_list(need(f.q, "--q", fn));
  if (qs.size() != 1) throw ArgumentError(fn + " takes a single --q value");
  return qs.front();
}

std::string point_label(const std::vector<std::pair<std::string, double>>& inputs) {
  std::ostringstream s;
  s.precision(17);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    s << (i ? ", " : "") << inputs[i].first << "=" << inputs[i].second;
  }
  return s.str();
}

// ---- eval ----------------------------------------------------------------

struct EvalSpec {
  std::vector<std::string> inputs;  // column names, primary variable first
  // Returns (value, terms_used or -1) for the given input values.
  std::function<std::pair<double, std::int64_t>(const std::vector<double>&)> fn;
};

std::map<std::string, EvalSpec> eval_functions(const Flags& f, const EvalConfig& cfg) {
  auto series = [](const SeriesResult& r, const char* what) {
    if (!r.converged) throw EvaluationError(std::string(what) + ": series did not converge");
    return std::pair<double, std::int64_t>{r.value, r.terms_used};
  };
  auto closed = [](double v) { return std::pair<double, std::int64_t>{v, -1}; };
  const int order = f.order.value_or(1);
  const int terms = f.terms.value_or(3);

  std::map<std::string, EvalSpec> fns;
  fns["log-qgamma"] = {{"x", "q"}, [=](const std::vector<double>& v) {
                         return series(log_qgamma_result(QContext(v[1]), v[0], cfg), "log_qgamma");
                       }};
  fns["qdigamma"] = {{"x", "q"}, [=](const std::vector<double>& v) {
                       return series(qdigamma_result(QContext(v[1]), v[0], cfg), "qdigamma");
                     }};
  fns["qdigamma-deriv"] = {{"x", "q", "order"}, [=](const std::vector<double>& v) {
                             return series(qdigamma_deriv_result(QContext(v[1]), v[0], order, cfg),
                                           "qdigamma_deriv");
                           }};
  fns["li2"] = {{"z"}, [=](const std::vector<double>& v) { return closed(li2(v[0], cfg)); }};
  fns["moak-I"] = {{"x", "q"},
                   [=](const std::vector<double>& v) { return closed(moak_I(QContext(v[1]), v[0])); }};
  fns["moak-expansion"] = {{"x", "q", "terms"}, [=](const std::vector<double>& v) {
                             return closed(moak_expansion(QContext(v[1]), v[0], terms, cfg));
                           }};
  fns["cq"] = {{"q"}, [=](const std::vector<double>& v) { return closed(cq_constant(QContext(v[0]), cfg)); }};
  fns["log-f"] = {{"x", "q", "alpha", "beta"}, [=](const std::vector<double>& v) {
                    return closed(log_f({v[2], v[3]}, QContext(v[1]), v[0], cfg));
                  }};
  fns["phi"] = {{"y", "alpha", "beta"},
                [=](const std::vector<double>& v) { return closed(phi(v[0], {v[1], v[2]})); }};
  fns["dlogf"] = {{"x", "q", "alpha", "beta"}, [=](const std::vector<double>& v) {
                    return closed(dlogf({v[2], v[3]}, QContext(v[1]), v[0], cfg));
                  }};
  return fns;
}

std::optional<double> flag_value(const Flags& f, const std::string& name, const std::string& fn) {
  if (name == "x") return f.x;
  if (name == "y") return f.y;
  if (name == "z") return f.z;
  if (name == "q") return f.q ? std::optional<double>(single_q(f, fn)) : std::nullopt;
  if (name == "alpha") return f.alpha;
  if (name == "beta") return f.beta;
  if (name == "order") return f.order ? std::optional<double>(*f.order) : std::optional<double>(1.0);
  if (name == "terms") return f.terms ? std::optional<double>(*f.terms) : std::optional<double>(3.0);
  return std::nullopt;
}

Table cmd_eval(const std::string& fn, const Flags& f, int& exit_code) {
  const EvalConfig cfg = eval_config(f, true);
  auto fns = eval_functions(f, cfg);
  auto it = fns.find(fn);
  if (it == fns.end()) {
    std::string known;
    for (const auto& [name, spec] : fns) known += (known.empty() ? "" : ", ") + name;
    throw ArgumentError("unknown function '" + fn + "' (known: " + known + ")");
  }
  const EvalSpec& spec = it->second;

  std::vector<double> fixed(spec.inputs.size());
  for (std::size_t i = 1; i < spec.inputs.size(); ++i) {
    fixed[i] = need(flag_value(f, spec.inputs[i], fn), ("--" + spec.inputs[i]).c_str(), fn);
  }
  std::vector<double> primary;
  if (f.grid) {
    primary = parse_grid(*f.grid).points();
  } else {
    primary.push_back(need(flag_value(f, spec.inputs[0], fn), ("--" + spec.inputs[0]).c_str(), fn));
  }

  Table table;
  table.columns.push_back("function");
  for (const auto& name : spec.inputs) table.columns.push_back(name);
  table.columns.push_back("value");
  table.columns.push_back("terms_used");
  for (double p : primary) {
    std::vector<double> in = fixed;
    in[0] = p;
    std::pair<double, std::int64_t> res;
    try {
      res = spec.fn(in);
    } catch (const std::exception& e) {
      std::vector<std::pair<std::string, double>> labelled;
      for (std::size_t i = 0; i < in.size(); ++i) labelled.emplace_back(spec.inputs[i], in[i]);
      throw ArgumentError(fn + " failed at " + point_label(labelled) + ": " + e.what());
    }
    std::vector<Cell> row{fn};
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (spec.inputs[i] == "order" || spec.inputs[i] == "terms") {
        row.emplace_back(static_cast<std::int64_t>(in[i]));
      } else {
        row.emplace_back(in[i]);
      }
    }
    row.emplace_back(res.first);
    row.emplace_back(res.second < 0 ? Cell{std::monostate{}} : Cell{res.second});
    table.rows.push_back(std::move(row));
  }
  exit_code = kOk;
  return table;
}

// ---- verify --------------------------------------------------------------

struct Summary {
  std::size_t records = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double max_violation = 0.0;
};

Table cmd_verify(const std::string& suite, const Flags& f, Summary& summary) {
  SuiteOptions o;
  o.cfg = eval_config(f, false);
  if (f.q) o.q_grid = parse_list(*f.q);
  if (f.grid) o.x_grid = parse_grid(*f.grid).points();
  o.alpha = f.alpha;
  o.beta = f.beta;
  if (f.order) {
    if (*f.order < 1) throw ArgumentError("--order must be >= 1");
    o.max_order = *f.order;
  }
  if (f.tol) {
    if (!(*f.tol >= 0.0)) throw ArgumentError("--tol must be >= 0");
    o.sign_tolerance = *f.tol;
  }
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw ArgumentError("unknown suite '" + suite + "'");
  }

  const std::vector<CheckRecord> records = run_suite(suite, o);
  Table table;
  table.columns = {"suite", "check", "q",     "alpha",    "beta",      "x",      "y",      "n",
                   "lower", "value", "upper", "residual", "tolerance", "passed", "context"};
  for (const CheckRecord& r : records) {
    ++summary.records;
    if (r.passed) {
      ++summary.passed;
    } else {
      ++summary.failed;
      summary.max_violation = std::max(summary.max_violation, r.excess());
    }
    if (f.violations_only && r.passed) continue;
    table.rows.push_back({r.suite, r.check, opt(r.q), opt(r.alpha), opt(r.beta), opt(r.x), opt(r.y),
                          opt(r.n), opt(r.lower), r.value, opt(r.upper), opt(r.residual), r.tolerance,
                          r.passed, r.context});
  }
  return table;
}

// ---- limit ---------------------------------------------------------------

Table cmd_limit(const std::string& fn, const Flags& f, Summary& summary) {
  const EvalConfig cfg = eval_config(f, true);
  const std::vector<double> qs = parse_list(need(f.q, "--q", fn));
  for (double q : qs) {
    if (q == 1.0) throw ArgumentError("limit q-sequence must not contain 1");
    if (!(q > 0.0)) throw ArgumentError("limit q-sequence must be positive");
  }
  const bool from_below = qs.front() < 1.0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if ((qs[i] < 1.0) != from_below) throw ArgumentError("limit q-sequence must stay on one side of 1");
    if (i > 0 && (from_below ? qs[i] <= qs[i - 1] : qs[i] >= qs[i - 1])) {
      throw ArgumentError("limit q-sequence must move strictly toward 1");
    }
  }

  std::function<double(const QContext&)> value;
  double target = 0.0;
  double x = 0.0;
  if (fn == "cq") {
    value = [&](const QContext& c) { return cq_constant(c, cfg); };
    target = 0.5 * std::log(2.0 * std::numbers::pi);
  } else if (fn == "log-qgamma" || fn == "qdigamma" || fn == "li2-over-logq") {
    x = need(f.x, "--x", fn);
    if (!(x > 0.0)) throw ArgumentError(fn + " requires --x > 0");
    if (fn == "log-qgamma") {
      value = [&](const QContext& c) { return log_qgamma(c, x, cfg); };
      target = classical::log_gamma(x);
    } else if (fn == "qdigamma") {
      value = [&](const QContext& c) { return qdigamma(c, x, cfg); };
      target = classical::digamma(x);
    } else {
      value = [&](const QContext& c) { return li2_one_minus_qpow(c, x, cfg) / c.log_q(); };
      target = -x;
    }
  } else {
    throw ArgumentError("unknown limit function '" + fn + "' (known: cq, li2-over-logq, log-qgamma, qdigamma)");
  }

  Table table;
  table.columns = {"function", "x", "q", "value", "target", "error", "decreasing"};
  double prev_err = HUGE_VAL;
  for (double q : qs) {
    const double v = value(QContext(q));
    const double err = std::abs(v - target);
    const bool decreasing = err < prev_err;
    prev_err = err;
    ++summary.records;
    if (decreasing) {
      ++summary.passed;
    } else {
      ++summary.failed;
    }
    table.rows.push_back({fn, fn == "cq" ? Cell{std::monostate{}} : Cell{x}, q, v, target, err, decreasing});
  }
  return table;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "qlcm";
  for (const auto& a : args) s += " " + a;
  return s;
}

}  // namespace

std::vector<double> GridSpec::points() const {
  if (count < 1) throw ArgumentError("grid count must be >= 1");
  if (count > 1 && !(start < stop)) throw ArgumentError("grid requires start < stop");
  if (scale == Scale::log && !(start > 0.0)) throw ArgumentError("log grid requires start > 0");
  std::vector<double> pts(count);
  if (count == 1) {
    pts[0] = start;
    return pts;
  }
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    pts[i] = scale == Scale::log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                                 : start + t * (stop - start);
  }
  pts.front() = start;
  pts.back() = stop;
  return pts;
}

GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4) {
    throw ArgumentError("grid must look like start:stop:count[:log] (got '" + text + "')");
  }
  GridSpec g;
  try {
    std::size_t used = 0;
    g.start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    g.stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    g.count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::logic_error&) {
    throw ArgumentError("grid must look like start:stop:count[:log] (got '" + text + "')");
  }
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.scale = GridSpec::Scale::log;
    } else if (parts[3] != "linear") {
      throw ArgumentError("grid scale must be 'log' or 'linear'");
    }
  }
  g.points();  // validates
  return g;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ArgumentError("not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw ArgumentError("empty list");
  return out;
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_escape(table.columns[i]);
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render_csv(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[table.columns[i]] = nullptr;
            } else {
              obj[table.columns[i]] = v;
            }
          },
          row[i]);
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(1) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-gamma function family, LCM certificates and inequality sweeps", "qlcm"};
  app.require_subcommand(1);
  Flags flags;

  std::string eval_fn, suite, limit_fn;
  auto* eval = app.add_subcommand("eval", "evaluate one function at a point or over --grid");
  eval->add_option("function", eval_fn,
                   "log-qgamma | qdigamma | qdigamma-deriv | li2 | moak-I | moak-expansion | cq | "
                   "log-f | phi | dlogf")
      ->required();
  add_common(eval, flags);

  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 0 pass, 1 violation, 2 input error");
  verify->add_option("suite", suite,
                     "thm-2.1 | thm-2.2 | thm-2.3 | lemma-2.1 | cor-3.1 | cor-3.2 | cor-3.3 | cor-3.4 | "
                     "cor-3.5 | stirling | gurland | all")
      ->required();
  add_common(verify, flags);
  verify->add_flag("--violations-only", flags.violations_only, "print failing records only");

  auto* limit = app.add_subcommand("limit", "tabulate a function along q -> 1 against its classical limit");
  limit->add_option("function", limit_fn, "log-qgamma | qdigamma | cq | li2-over-logq")->required();
  add_common(limit, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = kOk;
  Table table;
  Summary summary;
  try {
    if (eval->parsed()) {
      table = cmd_eval(eval_fn, flags, code);
      summary.records = summary.passed = table.rows.size();
    } else if (verify->parsed()) {
      table = cmd_verify(suite, flags, summary);
      code = summary.failed == 0 ? kOk : kCheckFailed;
    } else {
      table = cmd_limit(limit_fn, flags, summary);
      code = summary.failed == 0 ? kOk : kCheckFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (flags.out) {
    file.open(*flags.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *flags.out << " for writing\n";
      return kUsage;
    }
    sink = &file;
  }
  if (flags.format == "json") {
    write_json(*sink, table);
  } else {
    write_csv(*sink, table);
  }
  sink->flush();

  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  err << "# command: " << join_args(args) << '\n';
  err << "# config: format=" << flags.format
      << " tol=" << (flags.tol ? format_real(*flags.tol) : std::string("default"))
      << " max_terms=" << (flags.max_terms ? std::to_string(*flags.max_terms) : std::string("default"))
      << " order=" << (flags.order ? std::to_string(*flags.order) : std::string("default")) << '\n';
  err << "# summary: records=" << summary.records << " passed=" << summary.passed
      << " failed=" << summary.failed << " max_violation=" << format_real(summary.max_violation) << '\n';
  err << "# wall_time_s: " << elapsed << '\n';
  return code;
}

}  // namespace qlcm::cli

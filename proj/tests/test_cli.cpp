#include "doctest.h"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include "qlcm/cli.hpp"
#include "qlcm/core.hpp"
#include "qlcm/verify.hpp"

using namespace qlcm;
using qlcm::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

// Value column of the first data row.
double first_value(const std::string& csv) {
  const auto ls = lines(csv);
  REQUIRE(ls.size() >= 2);
  const auto head = split(ls[0], ',');
  const auto row = split(ls[1], ',');
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head[i] == "value") return std::strtod(row.at(i).c_str(), nullptr);
  }
  FAIL("no value column");
  return 0.0;
}

}  // namespace

TEST_CASE("grid parsing") {
  auto g = cli::parse_grid("0:1:5");
  CHECK(g.points() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  g = cli::parse_grid("1:100:3:log");
  const auto p = g.points();
  REQUIRE(p.size() == 3);
  CHECK(p[1] == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(p[2] == 100.0);
  CHECK(cli::parse_grid("2:2:1").points() == std::vector<double>{2.0});
  CHECK_THROWS_AS(cli::parse_grid("1:0:3"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_grid("0:1:3:log"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_grid("0:1:0"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_grid("0:1"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_grid("a:1:2"), ArgumentError);
}

TEST_CASE("list parsing") {
  CHECK(cli::parse_list("0.9,0.99,0.999") == std::vector<double>{0.9, 0.99, 0.999});
  CHECK_THROWS_AS(cli::parse_list(""), ArgumentError);
  CHECK_THROWS_AS(cli::parse_list("0.5,,0.6"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_list("0.5x"), ArgumentError);
}

TEST_CASE("CSV round-trips doubles bit for bit") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  cli::Table t;
  t.columns = {"v"};
  std::vector<double> vals;
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(mant(rng), expo(rng));
    vals.push_back(v);
    t.rows.push_back({v});
  }
  vals.push_back(0.1);
  t.rows.push_back({0.1});
  std::ostringstream os;
  cli::write_csv(os, t);
  const auto ls = lines(os.str());
  REQUIRE(ls.size() == vals.size() + 1);
  CHECK(ls[0] == "v");
  for (std::size_t i = 0; i < vals.size(); ++i) {
    CHECK(std::strtod(ls[i + 1].c_str(), nullptr) == vals[i]);
  }
}

TEST_CASE("CSV and JSON cell rendering") {
  cli::Table t;
  t.columns = {"s", "d", "i", "b", "e"};
  t.rows.push_back({std::string("a,\"b\""), 0.5, std::int64_t{7}, true, std::monostate{}});
  std::ostringstream csv;
  cli::write_csv(csv, t);
  CHECK(csv.str() == "s,d,i,b,e\n\"a,\"\"b\"\"\",0.5,7,true,\n");

  std::ostringstream js;
  cli::write_json(js, t);
  const auto j = nlohmann::json::parse(js.str());
  REQUIRE(j.is_array());
  CHECK(j[0]["s"] == "a,\"b\"");
  CHECK(j[0]["d"] == 0.5);
  CHECK(j[0]["i"] == 7);
  CHECK(j[0]["b"] == true);
  CHECK(j[0]["e"].is_null());
}

TEST_CASE("eval") {
  auto r = call({"eval", "log-qgamma", "--q", "0.5", "--x", "3"});
  CHECK(r.code == 0);
  CHECK(std::abs(first_value(r.out) - std::log(1.5)) <= 1e-14);
  CHECK(r.err.find("# command:") != std::string::npos);

  r = call({"eval", "li2", "--z", "1"});
  CHECK(r.code == 0);
  CHECK(std::abs(first_value(r.out) - 1.6449340668482264) <= 1e-15);

  r = call({"eval", "phi", "--alpha", "0.5", "--beta", "1", "--y", "0.25"});
  CHECK(r.code == 0);
  CHECK(std::abs(first_value(r.out) + 0.1164339757) <= 1e-9);

  r = call({"eval", "qdigamma", "--q", "0.5", "--grid", "1:5:5", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 5);
  CHECK(j[0]["terms_used"].get<std::int64_t>() > 0);
}

TEST_CASE("eval exit codes") {
  CHECK(call({"eval", "no-such-function", "--q", "0.5", "--x", "1"}).code == cli::kUsage);
  const auto r = call({"eval", "log-qgamma", "--q", "1", "--x", "1"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("q") != std::string::npos);
  const auto d = call({"eval", "log-qgamma", "--q", "0.5", "--x", "-1"});
  CHECK(d.code == cli::kUsage);
  CHECK(d.err.find("-1") != std::string::npos);
  CHECK(call({"eval", "log-qgamma", "--q", "0.5", "--x", "1", "--format", "xml"}).code == cli::kUsage);
  CHECK(call({"bogus"}).code == cli::kUsage);
  CHECK(call({}).code == cli::kUsage);
}

TEST_CASE("verify exit codes") {
  CHECK(call({"verify", "thm-2.1"}).code == cli::kOk);
  const auto bad = call({"verify", "thm-2.1", "--alpha", "0.75", "--violations-only"});
  CHECK(bad.code == cli::kCheckFailed);
  CHECK(lines(bad.out).size() >= 2);
  CHECK(bad.err.find("failed=0") == std::string::npos);
  CHECK(call({"verify", "no-such-suite"}).code == cli::kUsage);
}

TEST_CASE("limit") {
  auto r = call({"limit", "cq", "--q", "0.9,0.99,0.999"});
  CHECK(r.code == 0);
  r = call({"limit", "li2-over-logq", "--x", "2", "--q", "0.9,0.99,0.999"});
  CHECK(r.code == 0);
  r = call({"limit", "log-qgamma", "--x", "0.5", "--q", "1.1,1.01,1.001"});
  CHECK(r.code == 0);
  CHECK(call({"limit", "cq", "--q", "0.9,1,0.999"}).code == cli::kUsage);
  CHECK(call({"limit", "cq", "--q", "0.99,0.9"}).code == cli::kUsage);
  CHECK(call({"limit", "cq", "--q", "0.9,1.1"}).code == cli::kUsage);
}

TEST_CASE("identical commands give identical bytes") {
  const std::vector<std::string> args = {"verify", "cor-3.3", "--format", "json"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("verification suites") {
  const auto& names = suite_names();
  CHECK(names.size() == 11);
  CHECK_THROWS_AS(run_suite("nope"), ArgumentError);
  std::size_t total = 0;
  for (const auto& n : names) {
    const auto recs = run_suite(n);
    CHECK_MESSAGE(!recs.empty(), n);
    for (const auto& r : recs) {
      CHECK_MESSAGE(r.passed, n << " " << r.check << " " << r.context);
      CHECK(r.excess() == 0.0);
      CHECK(r.suite == n);
    }
    total += recs.size();
  }
  CHECK(run_suite("all").size() == total);
}

TEST_CASE("suite options reach the checks") {
  SuiteOptions o;
  o.alpha = 0.75;
  const auto recs = run_suite("thm-2.1", o);
  std::size_t failed = 0;
  for (const auto& r : recs) {
    if (!r.passed) {
      ++failed;
      CHECK(r.excess() > 0.0);
      CHECK(r.q.has_value());
      CHECK(r.x.has_value());
      CHECK(r.n.has_value());
    }
  }
  CHECK(failed > 0);
}

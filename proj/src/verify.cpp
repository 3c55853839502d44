#include "qlcm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qlcm/inequalities.hpp"
#include "qlcm/qgamma.hpp"

namespace qlcm {
namespace {

constexpr double kWitnessTolerance = 1e-12;

const std::vector<std::pair<double, double>> kLcmRegionParams = {
    {0.5, 1.0}, {0.5, 2.0}, {0.0, 1.5}, {-1.0, 3.0}};

std::vector<double> q_grid(const SuiteOptions& o) {
  return o.q_grid.value_or(default_certificate_q_grid());
}

std::vector<double> x_grid(const SuiteOptions& o, std::vector<double> fallback) {
  return o.x_grid.value_or(std::move(fallback));
}

std::vector<WeightedPoints> default_point_sets() {
  return {
      {{2.0}, {1.0}},
      {{3.0, 3.0}, {0.5, 0.5}},
      {{1.0, 2.0}, {0.5, 0.5}},
      {{1.0, 4.0}, {0.5, 0.5}},
      {{0.5, 2.0, 7.0}, {0.2, 0.3, 0.5}},
      {{0.1, 10.0}, {0.9, 0.1}},
      {{0.2, 1.0, 5.0, 20.0}, {0.25, 0.25, 0.25, 0.25}},
  };
}

std::string describe_points(const WeightedPoints& wp) {
  std::ostringstream s;
  s.precision(17);
  s << "x=[";
  for (std::size_t k = 0; k < wp.points.size(); ++k) s << (k ? " " : "") << wp.points[k];
  s << "] p=[";
  for (std::size_t k = 0; k < wp.weights.size(); ++k) s << (k ? " " : "") << wp.weights[k];
  s << "]";
  return s.str();
}

CheckRecord from_bound(std::string suite, std::string check, const BoundReport& r) {
  CheckRecord rec;
  rec.suite = std::move(suite);
  rec.check = std::move(check);
  rec.lower = r.lower;
  rec.value = r.middle;
  rec.upper = r.upper;
  rec.tolerance = r.tolerance;
  rec.passed = r.satisfied;
  rec.context = r.context;
  return rec;
}

void append_certificate(std::vector<CheckRecord>& out, const std::string& suite,
                        const LcmParams& params, LcmDirection direction, const SuiteOptions& o) {
  const MonotonicityCertificate cert =
      certify(params, direction, q_grid(o), x_grid(o, default_certificate_x_grid()), o.max_order,
              o.sign_tolerance, o.cfg);
  for (const CertificatePoint& pt : cert.points) {
    CheckRecord rec;
    rec.suite = suite;
    rec.check = direction == LcmDirection::f_is_lcm ? "f_is_lcm" : "inverse_is_lcm";
    rec.q = pt.q;
    rec.alpha = params.alpha;
    rec.beta = params.beta;
    rec.x = pt.x;
    rec.n = pt.order;
    rec.value = pt.value;
    // signed_value = +/-value must be >= -tolerance
    if (pt.signed_value == pt.value) {
      rec.lower = 0.0;
    } else {
      rec.upper = 0.0;
    }
    rec.tolerance = pt.tolerance;
    rec.passed = pt.ok;
    out.push_back(std::move(rec));
  }
}

void certificate_suite(std::vector<CheckRecord>& out, const std::string& suite, double alpha, double beta,
             LcmDirection direction, const SuiteOptions& o) {
  append_certificate(out, suite, {o.alpha.value_or(alpha), o.beta.value_or(beta)}, direction, o);
}

void lcm_region(std::vector<CheckRecord>& out, const SuiteOptions& o) {
  if (o.alpha || o.beta) {
    append_certificate(out, "thm-2.3", {o.alpha.value_or(0.5), o.beta.value_or(1.0)},
                       LcmDirection::f_is_lcm, o);
    return;
  }
  for (auto [a, b] : kLcmRegionParams) append_certificate(out, "thm-2.3", {a, b}, LcmDirection::f_is_lcm, o);
}

void witness_suite(std::vector<CheckRecord>& out, const SuiteOptions& o) {
  std::vector<double> qs = q_grid(o);
  if (!o.q_grid) {
    for (double q : {1.01, 1.5, 2.0, 5.0, 10.0}) qs.push_back(q);
  }
  for (double q : qs) {
    const QContext ctx(q);
    for (double x : x_grid(o, default_certificate_x_grid())) {
      CheckRecord rec;
      rec.suite = "lemma-2.1";
      rec.check = "witness";
      rec.q = q;
      rec.x = x;
      rec.lower = 0.0;
      rec.upper = 1.0;
      rec.tolerance = kWitnessTolerance;
      try {
        const SalemWitness w = solve_salem_witness(ctx, x, o.cfg);
        rec.value = w.a;
        rec.residual = w.residual;
        rec.passed = w.a >= 0.0 && w.a <= 1.0 && w.residual <= kWitnessTolerance;
      } catch (const LemmaViolationError& e) {
        rec.value = std::nan("");
        rec.passed = false;
        rec.context = e.what();
      }
      out.push_back(std::move(rec));
    }
  }
}

void jensen_suite(std::vector<CheckRecord>& out, const SuiteOptions& o) {
  std::vector<std::pair<double, double>> params = kLcmRegionParams;
  if (o.alpha || o.beta) params = {{o.alpha.value_or(0.5), o.beta.value_or(1.0)}};
  for (double q : q_grid(o)) {
    const QContext ctx(q);
    for (auto [a, b] : params) {
      for (const WeightedPoints& wp : default_point_sets()) {
        CheckRecord rec = from_bound("cor-3.1", "jensen_upper", jensen_upper(wp, {a, b}, ctx, o.cfg));
        rec.q = q;
        rec.alpha = a;
        rec.beta = b;
        rec.x = wp.mean();
        rec.context = describe_points(wp);
        out.push_back(std::move(rec));
      }
    }
  }
}

void sandwich_suite(std::vector<CheckRecord>& out, const SuiteOptions& o) {
  for (double q : q_grid(o)) {
    const QContext ctx(q);
    for (const WeightedPoints& wp : default_point_sets()) {
      CheckRecord rec = from_bound("cor-3.2", "convex_sandwich", convex_sandwich(wp, ctx, o.cfg));
      rec.q = q;
      rec.x = wp.mean();
      rec.context = describe_points(wp);
      out.push_back(std::move(rec));
    }
  }
}

void ratio_suite(std::vector<CheckRecord>& out, const SuiteOptions& o) {
  const std::vector<double> pts = {0.1, 0.5, 1.0, 2.0, 3.5, 5.0, 10.0, 20.0, 50.0};
  for (double q : q_grid(o)) {
    const QContext ctx(q);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        CheckRecord rec = from_bound("cor-3.3", "ratio_bounds", ratio_bounds(pts[i], pts[j], ctx, o.cfg));
        rec.q = q;
        rec.x = pts[i];
        rec.y = pts[j];
        out.push_back(std::move(rec));
      }
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      CheckRecord rec = from_bound("cor-3.3", "classical_ratio_bounds", classical_ratio_bounds(pts[i], pts[j]));
      rec.x = pts[i];
      rec.y = pts[j];
      out.push_back(std::move(rec));
    }
  }
}

void qgamma_bound_suite(std::vector<CheckRecord>& out, const SuiteOptions& o) {
  const std::vector<double> xs =
      x_grid(o, {1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 5.0, 7.5, 10.0, 20.0, 50.0});
  for (double q : q_grid(o)) {
    const QContext ctx(q);
    for (double x : xs) {
      if (x < 1.0) continue;  // the bound is only claimed on [1, inf)
      CheckRecord rec = from_bound("cor-3.4", "qgamma_bounds", qgamma_bounds(x, ctx, o.cfg));
      rec.q = q;
      rec.x = x;
      out.push_back(std::move(rec));
    }
  }
}

void factorial_suite(std::vector<CheckRecord>& out) {
  for (int n = 1; n <= 1000; ++n) {
    CheckRecord rec = from_bound("cor-3.5", "factorial_bounds", factorial_bounds(n));
    rec.n = n;
    out.push_back(std::move(rec));
  }
}

void stirling(std::vector<CheckRecord>& out) {
  for (int n = 1; n <= 1000; ++n) {
    const StirlingRemainder r = stirling_remainder(n);
    CheckRecord robbins;
    robbins.suite = "stirling";
    robbins.check = "robbins";
    robbins.n = n;
    robbins.lower = r.robbins_lower;
    robbins.value = r.r_n;
    robbins.upper = r.robbins_upper;
    robbins.tolerance = 0.0;
    robbins.passed = r.robbins_ok;
    robbins.context = "strict";
    out.push_back(robbins);

    CheckRecord band;
    band.suite = "stirling";
    band.check = "remainder_band";
    band.n = n;
    band.lower = r.band_lower;
    band.value = r.r_n;
    band.upper = r.band_upper;
    band.tolerance = kBoundTolerance;
    band.passed = r.band_ok;
    out.push_back(band);
  }
}

void gurland(std::vector<CheckRecord>& out, const SuiteOptions& o) {
  const std::vector<double> pts = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  for (double q : q_grid(o)) {
    const QContext ctx(q);
    for (double x : pts) {
      for (double y : pts) {
        CheckRecord rec = from_bound("gurland", "gurland_bounds", gurland_bounds(x, y, ctx, o.cfg));
        rec.q = q;
        rec.x = x;
        rec.y = y;
        out.push_back(std::move(rec));
      }
    }
  }
  for (double x : pts) {
    for (double y : pts) {
      CheckRecord rec = from_bound("gurland", "classical_gurland", classical_gurland(x, y));
      rec.x = x;
      rec.y = y;
      out.push_back(std::move(rec));
    }
  }
}

}  // namespace

double CheckRecord::excess() const {
  if (passed) return 0.0;
  if (std::isnan(value)) return HUGE_VAL;
  double e = 0.0;
  if (lower) e = std::max(e, *lower - value);
  if (upper) e = std::max(e, value - *upper);
  if (residual) e = std::max(e, *residual - tolerance);
  return e;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "thm-2.1", "thm-2.2", "thm-2.3", "lemma-2.1", "cor-3.1", "cor-3.2",
      "cor-3.3", "cor-3.4", "cor-3.5", "stirling",  "gurland"};
  return names;
}

std::vector<CheckRecord> run_suite(std::string_view name, const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  if (name == "all") {
    for (const std::string& s : suite_names()) {
      auto part = run_suite(s, o);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  } else if (name == "thm-2.1") {
    certificate_suite(out, "thm-2.1", 0.5, 1.0, LcmDirection::f_is_lcm, o);
  } else if (name == "thm-2.2") {
    certificate_suite(out, "thm-2.2", 1.0, 1.0, LcmDirection::inverse_is_lcm, o);
  } else if (name == "thm-2.3") {
    lcm_region(out, o);
  } else if (name == "lemma-2.1") {
    witness_suite(out, o);
  } else if (name == "cor-3.1") {
    jensen_suite(out, o);
  } else if (name == "cor-3.2") {
    sandwich_suite(out, o);
  } else if (name == "cor-3.3") {
    ratio_suite(out, o);
  } else if (name == "cor-3.4") {
    qgamma_bound_suite(out, o);
  } else if (name == "cor-3.5") {
    factorial_suite(out);
  } else if (name == "stirling") {
    stirling(out);
  } else if (name == "gurland") {
    gurland(out, o);
  } else {
    throw ArgumentError("unknown verification suite '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace qlcm

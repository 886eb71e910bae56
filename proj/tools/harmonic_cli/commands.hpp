#pragma once

// Subcommand implementations for the harmonic CLI. Each command writes CSV to
// a stream and returns an exit code: 0 when every internal check passes, 1
// when a check fails (with a "FAIL ..." line on the error stream), 2 on a
// domain error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "harmonic/harmonic.hpp"

namespace harmonic::cli {

struct RunConfig {
  std::string subcommand;
  std::string spec;
  std::string input;
  std::string output;
  std::string kind;
  std::string group;
  Tolerances tol;
  std::size_t n = 256;
  std::int64_t J = 8;
  std::size_t points = 16;
  std::vector<double> r{0.5};
  std::vector<double> y{1.0};
  std::vector<double> xi{0.0};
  std::vector<double> T{10.0, 100.0, 1000.0};
  double x = 2.0;
  double rate = 1.0;
  std::optional<double> half_width;
  double step = 1e-3;

  void validate() const {
    tol.validate();
    if (n == 0) throw domain_error("--n must be positive");
    if (J < 0) throw domain_error("--J must be nonnegative");
    if (points == 0) throw domain_error("--points must be positive");
  }
};

/// %.17g with negative zero printed as 0.
inline std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Values below eps in magnitude are written as exact zeros.
inline double chop(double v, double eps) { return std::abs(v) < eps ? 0.0 : v; }

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  template <class... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
    out_ << '\n';
  }

 private:
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  static std::string cell(double v) { return format_number(v); }
  static std::string cell(std::int64_t v) { return std::to_string(v); }
  static std::string cell(std::size_t v) { return std::to_string(v); }
  static std::string cell(int v) { return std::to_string(v); }

  std::ostream& out_;
};

struct CheckFailure {
  std::string check;
  double value;
  double limit;
};

inline int report(const std::vector<CheckFailure>& failures, std::ostream& err) {
  for (const auto& f : failures) {
    err << "FAIL check=" << f.check << " value=" << format_number(f.value)
        << " limit=" << format_number(f.limit) << '\n';
  }
  return failures.empty() ? 0 : 1;
}

/// Circle catalog: const:c, cos, sin, exp:j, expcos, file:path ("j, re, im" lines).
inline circle::SampledCircleFunction circle_function(const std::string& spec, std::size_t n) {
  using circle::SampledCircleFunction;
  auto param = [&](const std::string& prefix) -> std::optional<std::string> {
    if (spec.rfind(prefix, 0) == 0) return spec.substr(prefix.size());
    return std::nullopt;
  };
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw domain_error("bad number in function spec '" + spec + "'");
    return v;
  };
  if (spec == "cos") return SampledCircleFunction::sample([](double t) { return std::cos(t); }, n);
  if (spec == "sin") return SampledCircleFunction::sample([](double t) { return std::sin(t); }, n);
  if (spec == "expcos") return SampledCircleFunction::sample([](double t) { return std::exp(std::cos(t)); }, n);
  if (auto c = param("const:")) {
    const double v = number(*c);
    return SampledCircleFunction::sample([v](double) { return v; }, n);
  }
  if (auto j = param("exp:")) {
    const double freq = number(*j);
    if (freq != std::round(freq)) throw domain_error("circle frequency must be an integer");
    return SampledCircleFunction::sample([freq](double t) { return std::polar(1.0, freq * t); }, n);
  }
  if (auto path = param("file:")) {
    const ap::TrigPolynomial p = ap::load_trig_polynomial(*path);
    circle::SpectralSeries F;
    for (const auto& [t, c] : p.terms()) {
      if (t != std::round(t)) throw domain_error("circle frequencies must be integers");
      F.add(static_cast<std::int64_t>(std::llround(t)), c);
    }
    return F.synthesize(n);
  }
  throw domain_error("unknown circle function '" + spec + "'");
}

/// AP catalog: exp:t, const:c, file:path.
inline ap::TrigPolynomial ap_function(const std::string& spec) {
  if (spec.rfind("exp:", 0) == 0) return ap::TrigPolynomial::exponential(std::stod(spec.substr(4)));
  if (spec.rfind("const:", 0) == 0) return ap::TrigPolynomial::constant(std::stod(spec.substr(6)));
  if (spec.rfind("file:", 0) == 0) return ap::load_trig_polynomial(spec.substr(5));
  throw domain_error("unknown trig polynomial '" + spec + "'");
}

inline line::AnalyticFunction analytic_function(const std::string& name) {
  using line::AnalyticFunction;
  for (auto g : {AnalyticFunction::inverse_linear, AnalyticFunction::inverse_square,
                 AnalyticFunction::oscillating}) {
    if (line::to_string(g) == name) return g;
  }
  throw domain_error("unknown analytic catalog function '" + name + "'");
}

inline int cmd_circle_coeffs(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (2 * cfg.J >= static_cast<std::int64_t>(cfg.n)) throw aliasing_error("need J < n/2");
  const auto f = circle_function(cfg.spec, cfg.n);
  CsvWriter csv(out);
  csv.row("j", "re", "im");
  for (std::int64_t j = -cfg.J; j <= cfg.J; ++j) {
    const complex c = circle::fourier_coefficient(f, j);
    csv.row(j, chop(c.real(), cfg.tol.exact_eps), chop(c.imag(), cfg.tol.exact_eps));
  }
  return 0;
}

inline int cmd_abel_mean(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto f = circle_function(cfg.spec, cfg.n);
  const auto F = circle::coefficient_window(f, static_cast<std::int64_t>((cfg.n - 1) / 2), 0.0);
  const double r = cfg.r.front();
  CsvWriter csv(out);
  csv.row("theta", "series_re", "series_im", "integral_re", "integral_im", "abs_diff");
  double worst = 0.0;
  const CircleGrid probe(cfg.points);
  for (std::size_t k = 0; k < probe.size(); ++k) {
    const complex z = probe.point(k);
    const complex s = circle::abel_mean_series(F, r, z, cfg.tol);
    const complex q = circle::abel_mean_integral(f, r, z, cfg.tol);
    worst = std::max(worst, std::abs(s - q));
    csv.row(probe.angle(k), s.real(), s.imag(), q.real(), q.imag(), std::abs(s - q));
  }
  std::vector<CheckFailure> failures;
  if (worst > cfg.tol.quad_eps) failures.push_back({"abel_dual_route", worst, cfg.tol.quad_eps});
  return report(failures, err);
}

inline int cmd_poisson_kernel(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const double r = cfg.r.front();
  const CircleGrid grid(cfg.n);
  std::vector<complex> values(grid.size());
  CsvWriter csv(out);
  csv.row("theta", "kernel");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double p = circle::poisson_kernel(r, grid.point(k), 1.0, cfg.tol);
    values[k] = p;
    csv.row(grid.angle(k), p);
  }
  const double mean = circle_mean(values).real();
  csv.row("mean", mean);
  std::vector<CheckFailure> failures;
  if (std::abs(mean - 1.0) > cfg.tol.quad_eps) {
    failures.push_back({"poisson_normalization", std::abs(mean - 1.0), cfg.tol.quad_eps});
  }
  return report(failures, err);
}

inline int cmd_line_transform(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  line::LineFunction f = cfg.kind == "a"   ? line::LineFunction::decay_left(cfg.rate)
                         : cfg.kind == "b" ? line::LineFunction::decay_right(cfg.rate)
                         : cfg.kind == "c" ? line::LineFunction::two_sided(cfg.rate)
                                           : throw domain_error("--kind must be a, b or c");
  line::LineOptions opts{.step = cfg.step, .half_width = cfg.half_width, .tol = cfg.tol};
  CsvWriter csv(out);
  csv.row("xi", "closed_re", "closed_im", "quad_re", "quad_im", "error_budget");
  std::vector<CheckFailure> failures;
  for (double xi : cfg.xi) {
    const complex exact = line::fourier_transform(f, xi);
    const auto q = line::fourier_transform_quadrature(f, xi, opts);
    csv.row(xi, exact.real(), exact.imag(), q.value.real(), q.value.imag(), q.error_budget());
    if (std::abs(exact - q.value) > cfg.tol.quad_eps) {
      failures.push_back({"closed_form_vs_quadrature", std::abs(exact - q.value), cfg.tol.quad_eps});
    }
  }
  return report(failures, err);
}

/// One value per line: "re" or "re,im"; a non-numeric first line is a header.
inline std::vector<complex> read_values_csv(std::istream& in) {
  std::vector<complex> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double re = 0, im = 0;
    if (!(fields >> re)) {
      if (lineno == 1) continue;
      throw domain_error("function CSV line " + std::to_string(lineno) + ": expected 're[,im]'");
    }
    if (!(fields >> im)) im = 0.0;
    values.emplace_back(re, im);
  }
  return values;
}

inline int cmd_group_dft(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto A = groups::FiniteAbelianGroup::parse(cfg.group);
  std::ifstream in(cfg.input);
  if (!in) throw domain_error("cannot open function CSV '" + cfg.input + "'");
  const groups::GroupFunction f(A, read_values_csv(in));
  CsvWriter csv(out);
  csv.row("freq", "re", "im");
  double spectral = 0.0;
  for (const auto& chi : groups::dual_group(A)) {
    const complex c = groups::fourier_transform(f, chi);
    spectral += std::norm(c);
    csv.row(groups::format_tuple(chi.frequency()), chop(c.real(), cfg.tol.exact_eps),
            chop(c.imag(), cfg.tol.exact_eps));
  }
  double spatial = 0.0;
  for (complex v : f.values()) spatial += std::norm(v);
  spatial /= static_cast<double>(f.size());
  csv.row("parseval", spectral, spatial);
  std::vector<CheckFailure> failures;
  if (!close(spectral, spatial, cfg.tol.exact_eps)) {
    failures.push_back({"parseval", std::abs(spectral - spatial), cfg.tol.exact_eps});
  }
  return report(failures, err);
}

inline int cmd_ap_mean(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto f = ap_function(cfg.spec.empty() ? "file:" + cfg.input : cfg.spec);
  const complex exact = ap::mean_exact(f);
  CsvWriter csv(out);
  csv.row("T", "re", "im", "exact_re", "exact_im", "bound");
  std::vector<CheckFailure> failures;
  for (double T : cfg.T) {
    const auto avg = ap::mean_interval(f, -T, T);
    const double bound = ap::mean_interval_bound(f, -T, T);
    csv.row(T, avg.value.real(), avg.value.imag(), exact.real(), exact.imag(), bound);
    const double gap = std::abs(avg.value - exact);
    if (gap > bound + cfg.tol.exact_eps) failures.push_back({"ap_mean_rate", gap, bound});
  }
  return report(failures, err);
}

inline int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<double, double>> rows;
  if (cfg.kind == "abel_circle") {
    const auto f = circle_function(cfg.spec, cfg.n);
    const auto F = circle::coefficient_window(f, static_cast<std::int64_t>((cfg.n - 1) / 2), 0.0);
    for (double r : cfg.r) {
      double e = 0.0;
      for (std::size_t k = 0; k < f.size(); ++k) {
        e = std::max(e, std::abs(circle::abel_mean_series(F, r, f.grid().point(k), cfg.tol) - f[k]));
      }
      rows.emplace_back(r, e);
    }
  } else if (cfg.kind == "poisson_line") {
    const auto g = analytic_function(cfg.spec);
    const auto f = line::boundary_function(g);
    const complex target = f(cfg.x);
    line::HalfPlaneOptions opts{.step = std::nullopt, .half_width = std::nullopt, .tol = cfg.tol};
    for (double y : cfg.y) {
      rows.emplace_back(y, std::abs(line::poisson_halfplane(f, cfg.x, y, opts).value - target));
    }
  } else if (cfg.kind == "ap_mean") {
    const auto f = ap_function(cfg.spec.empty() ? "file:" + cfg.input : cfg.spec);
    for (double T : cfg.T) {
      rows.emplace_back(T, std::abs(ap::mean_interval(f, -T, T).value - ap::mean_exact(f)));
    }
  } else {
    throw domain_error("--kind must be abel_circle, poisson_line or ap_mean");
  }
  CsvWriter csv(out);
  csv.row("parameter", "error");
  std::vector<CheckFailure> failures;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    csv.row(rows[k].first, rows[k].second);
    if (k > 0 && rows[k].second > 2.0 * rows[k - 1].second + cfg.tol.exact_eps) {
      failures.push_back({"convergence_monotone", rows[k].second, 2.0 * rows[k - 1].second});
    }
  }
  return report(failures, err);
}

/// Dispatches cfg.subcommand; domain errors become exit code 2.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    using Command = int (*)(const RunConfig&, std::ostream&, std::ostream&);
    const std::vector<std::pair<std::string, Command>> table{
        {"circle-coeffs", cmd_circle_coeffs}, {"abel-mean", cmd_abel_mean},
        {"poisson-kernel", cmd_poisson_kernel}, {"line-transform", cmd_line_transform},
        {"group-dft", cmd_group_dft},           {"ap-mean", cmd_ap_mean},
        {"convergence", cmd_convergence}};
    for (const auto& [name, command] : table) {
      if (name != cfg.subcommand) continue;
      if (cfg.output.empty()) return command(cfg, out, err);
      std::ostringstream buffer;
      const int code = command(cfg, buffer, err);
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw domain_error("cannot write '" + cfg.output + "'");
      file << buffer.str();
      return code;
    }
    throw domain_error("unknown subcommand '" + cfg.subcommand + "'");
  } catch (const std::exception& e) {
    err << "ERROR domain: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace harmonic::cli

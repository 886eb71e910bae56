#pragma once

// Trigonometric polynomials f(x) = Σ_t c_t e^{ixt} with real frequencies, the
// computable core of the almost periodic functions on ℝ.
//
// The Bohr mean Λ(f) = lim (1/|I|)∫_I f picks out c_0, the inner product is
// ⟨f, g⟩ = Λ(f ḡ) = Σ_t c_t conj(d_t), and products convolve the spectra.

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iterator>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/numerics.hpp"

namespace harmonic::ap {

/// Frequencies closer than this are the same frequency.
inline constexpr double frequency_merge_tolerance = 1e-9;

struct Term {
  double frequency;
  complex coefficient;
};

class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  TrigPolynomial(std::initializer_list<Term> terms) {
    for (const auto& t : terms) add(t.frequency, t.coefficient);
  }
  explicit TrigPolynomial(std::span<const Term> terms) {
    for (const auto& t : terms) add(t.frequency, t.coefficient);
  }

  /// e_t(x) = e^{ixt}
  static TrigPolynomial exponential(double t, complex c = 1.0) { return {{t, c}}; }
  static TrigPolynomial constant(complex c) { return {{0.0, c}}; }

  /// Adds c·e_t, merging with any stored frequency within the merge tolerance.
  void add(double t, complex c) {
    if (!std::isfinite(t)) throw domain_error("frequency must be finite");
    if (c == complex{}) return;
    auto it = terms_.lower_bound(t - frequency_merge_tolerance);
    if (it != terms_.end() && it->first <= t + frequency_merge_tolerance) {
      it->second += c;
      if (it->second == complex{}) terms_.erase(it);
      return;
    }
    // Snap to exactly 0 so the mean sees it.
    terms_.emplace(std::abs(t) <= frequency_merge_tolerance ? 0.0 : t, c);
  }

  const std::map<double, complex>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// ⟨f, e_t⟩, the coefficient at t.
  complex coefficient(double t) const {
    auto it = terms_.lower_bound(t - frequency_merge_tolerance);
    if (it != terms_.end() && it->first <= t + frequency_merge_tolerance) return it->second;
    return {};
  }

  double min_frequency() const { return terms_.empty() ? 0.0 : terms_.begin()->first; }

  /// Σ|c_t|, an upper bound for sup|f|.
  double coefficient_l1() const {
    double s = 0.0;
    for (const auto& [t, c] : terms_) s += std::abs(c);
    return s;
  }

  complex operator()(double x) const { return evaluate(x); }

  complex evaluate(double x) const {
    complex s{};
    for (const auto& [t, c] : terms_) s += c * std::polar(1.0, x * t);
    return s;
  }

  /// x ↦ conj(f(x))
  TrigPolynomial conj() const {
    TrigPolynomial out;
    for (const auto& [t, c] : terms_) out.add(-t, std::conj(c));
    return out;
  }

  /// x ↦ f(x + b); multiplies c_t by e^{ibt}.
  TrigPolynomial shifted(double b) const {
    TrigPolynomial out;
    for (const auto& [t, c] : terms_) out.add(t, c * std::polar(1.0, b * t));
    return out;
  }

  TrigPolynomial operator+(const TrigPolynomial& g) const {
    TrigPolynomial out = *this;
    for (const auto& [t, c] : g.terms_) out.add(t, c);
    return out;
  }

  TrigPolynomial operator*(complex s) const {
    TrigPolynomial out;
    for (const auto& [t, c] : terms_) out.add(t, c * s);
    return out;
  }

  friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;

 private:
  std::map<double, complex> terms_;
};

/// Λ(f) = c_0
inline complex mean_exact(const TrigPolynomial& f) { return f.coefficient(0.0); }

struct IntervalAverage {
  double a;
  double b;
  complex value;
};

/// (1/(b − a))∫_a^b f from the closed-form antiderivative.
inline IntervalAverage mean_interval(const TrigPolynomial& f, double a, double b) {
  if (!(b > a)) throw domain_error("interval average needs a < b");
  const double len = b - a;
  complex s{};
  for (const auto& [t, c] : f.terms()) {
    if (t == 0.0) {
      s += c;
    } else {
      s += c * (std::polar(1.0, b * t) - std::polar(1.0, a * t)) / (I * t * len);
    }
  }
  return {a, b, s};
}

/// Σ_{t≠0} 2|c_t| / (|t|(b − a)), the bound on |mean_interval − Λ|.
inline double mean_interval_bound(const TrigPolynomial& f, double a, double b) {
  if (!(b > a)) throw domain_error("interval average needs a < b");
  double s = 0.0;
  for (const auto& [t, c] : f.terms()) {
    if (t != 0.0) s += 2.0 * std::abs(c) / (std::abs(t) * (b - a));
  }
  return s;
}

/// ⟨f, g⟩ = Λ(f ḡ) = Σ_t c_t conj(d_t)
inline complex inner_product(const TrigPolynomial& f, const TrigPolynomial& g) {
  complex s{};
  for (const auto& [t, c] : f.terms()) s += c * std::conj(g.coefficient(t));
  return s;
}

/// (fg)^(t) = Σ_r c^f_{t−r} c^g_r
inline TrigPolynomial multiply(const TrigPolynomial& f, const TrigPolynomial& g) {
  TrigPolynomial out;
  for (const auto& [s, a] : f.terms()) {
    for (const auto& [t, b] : g.terms()) out.add(s + t, a * b);
  }
  return out;
}

/// Poisson average Σ_t c_t e^{ixt} e^{−y|t|}; tends to Λ(f) as y → ∞.
inline complex halfplane_average(const TrigPolynomial& f, double x, double y) {
  if (!(y > 0.0)) throw domain_error("half-plane average needs y > 0");
  complex s{};
  for (const auto& [t, c] : f.terms()) s += c * std::polar(std::exp(-y * std::abs(t)), x * t);
  return s;
}

/// No negative frequencies, i.e. f extends boundedly and holomorphically to
/// the upper half-plane.
inline bool is_boundary_holomorphic(const TrigPolynomial& f) {
  return f.empty() || f.min_frequency() >= 0.0;
}

struct MeanProduct {
  /// Λ(fg)
  complex mean_of_product;
  /// Λ(f)Λ(g)
  complex product_of_means;
};

inline MeanProduct holomorphic_mean_product_check(const TrigPolynomial& f, const TrigPolynomial& g) {
  if (!is_boundary_holomorphic(f) || !is_boundary_holomorphic(g)) {
    throw domain_error("mean multiplicativity needs nonnegative spectra");
  }
  return {mean_exact(multiply(f, g)), mean_exact(f) * mean_exact(g)};
}

struct AlmostPeriodSearch {
  /// sup is estimated over x = −span … span in steps of sample_step.
  double sample_span = 100.0;
  double sample_step = 0.05;
};

/// Estimated sup_x |f(x + τ) − f(x)| over the sample grid.
inline double translation_distance(const TrigPolynomial& f, double tau,
                                   const AlmostPeriodSearch& grid = {}) {
  TrigPolynomial diff;
  for (const auto& [t, c] : f.terms()) diff.add(t, c * (std::polar(1.0, tau * t) - 1.0));
  double sup = 0.0;
  const auto steps = static_cast<long>(std::ceil(grid.sample_span / grid.sample_step));
  for (long k = -steps; k <= steps; ++k) {
    sup = std::max(sup, std::abs(diff.evaluate(static_cast<double>(k) * grid.sample_step)));
  }
  return sup;
}

/// τ ∈ {τ_step, 2τ_step, …} ∩ (0, τ_max] with estimated sup |f(·+τ) − f| ≤ ε.
/// Diagnostic only; no completeness claim.
inline std::vector<double> almost_period_search(const TrigPolynomial& f, double eps, double tau_max,
                                                double tau_step, const AlmostPeriodSearch& grid = {}) {
  if (!(eps > 0.0)) throw domain_error("epsilon must be positive");
  if (!(tau_step > 0.0 && tau_step < tau_max)) throw domain_error("need 0 < tau_step < tau_max");
  if (!(grid.sample_span > 0.0 && grid.sample_step > 0.0)) throw domain_error("bad sample grid");
  std::vector<double> out;
  const auto count = static_cast<long>(std::floor(tau_max / tau_step + 1e-9));
  for (long k = 1; k <= count; ++k) {
    const double tau = static_cast<double>(k) * tau_step;
    if (translation_distance(f, tau, grid) <= eps) out.push_back(tau);
  }
  return out;
}

/// Reads lines "t, re, im"; blank lines and lines starting with '#' are skipped.
inline TrigPolynomial parse_trig_polynomial(std::istream& in) {
  TrigPolynomial f;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double t = 0, re = 0, im = 0;
    if (!(fields >> t >> re >> im)) {
      throw domain_error("trig polynomial line " + std::to_string(lineno) + ": expected 't, re, im'");
    }
    std::string extra;
    if (fields >> extra) {
      throw domain_error("trig polynomial line " + std::to_string(lineno) + ": trailing fields");
    }
    f.add(t, {re, im});
  }
  return f;
}

inline TrigPolynomial load_trig_polynomial(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open trig polynomial file '" + path + "'");
  return parse_trig_polynomial(in);
}

}  // namespace harmonic::ap

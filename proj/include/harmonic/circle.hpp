#pragma once

// Fourier series on the unit circle T = {|z| = 1}, measured by (1/2π)|dz|.
//
// Two representations are kept side by side: SampledCircleFunction (values on
// a uniform grid, the quadrature side) and SpectralSeries (finitely many
// coefficients, the series side). Abel means are available through both the
// series Σ f̂(j) r^{|j|} z^j and the Poisson integral, so each route can be
// checked against the other.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "harmonic/numerics.hpp"

namespace harmonic::circle {

class SampledCircleFunction {
 public:
  SampledCircleFunction(CircleGrid grid, std::vector<complex> values)
      : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
      throw domain_error("sample count does not match the circle grid");
    }
  }

  /// Samples f(θ) at θ_k = 2πk/n.
  template <class F>
    requires std::invocable<F, double>
  static SampledCircleFunction sample(F&& f, std::size_t n) {
    CircleGrid grid(n);
    std::vector<complex> values(n);
    for (std::size_t k = 0; k < n; ++k) values[k] = complex(f(grid.angle(k)));
    return {grid, std::move(values)};
  }

  const CircleGrid& grid() const noexcept { return grid_; }
  std::span<const complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  complex operator[](std::size_t k) const { return values_[k]; }

  /// max_k |f(θ_k)|
  double sup_norm() const {
    double m = 0.0;
    for (complex v : values_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  CircleGrid grid_;
  std::vector<complex> values_;
};

/// Finitely supported map j ↦ f̂(j); absent keys are zero.
class SpectralSeries {
 public:
  using Map = std::map<std::int64_t, complex>;

  SpectralSeries() = default;
  SpectralSeries(std::initializer_list<std::pair<const std::int64_t, complex>> terms) {
    for (const auto& [j, c] : terms) add(j, c);
  }
  explicit SpectralSeries(Map terms) {
    for (const auto& [j, c] : terms) add(j, c);
  }

  complex operator()(std::int64_t j) const {
    auto it = coeffs_.find(j);
    return it == coeffs_.end() ? complex{} : it->second;
  }

  /// Adds c to the coefficient at j; exact zeros are not stored.
  void add(std::int64_t j, complex c) {
    if (c == complex{}) return;
    auto [it, inserted] = coeffs_.try_emplace(j, c);
    if (!inserted) {
      it->second += c;
      if (it->second == complex{}) coeffs_.erase(it);
    }
  }

  const Map& terms() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::int64_t min_frequency() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  std::int64_t max_frequency() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
  /// Smallest J with support ⊆ [−J, J].
  std::int64_t degree() const {
    return coeffs_.empty() ? 0 : std::max(-min_frequency(), max_frequency());
  }

  /// Σ_j f̂(j) e^{ijθ}
  complex evaluate(double theta) const {
    complex s{};
    for (const auto& [j, c] : coeffs_) s += c * std::polar(1.0, static_cast<double>(j) * theta);
    return s;
  }

  SampledCircleFunction synthesize(std::size_t n) const {
    return SampledCircleFunction::sample([this](double t) { return evaluate(t); }, n);
  }

  /// Σ_j |f̂(j)|²
  double energy() const {
    double s = 0.0;
    for (const auto& [j, c] : coeffs_) s += std::norm(c);
    return s;
  }

  friend bool operator==(const SpectralSeries&, const SpectralSeries&) = default;

 private:
  Map coeffs_;
};

/// f̂(j) = (1/2π)∫ f(z) z̄^j |dz|, computed as the mean of f(θ_k) e^{−ijθ_k}.
/// Exact for trigonometric polynomials of degree < n/2.
inline complex fourier_coefficient(const SampledCircleFunction& f, std::int64_t j) {
  const auto n = static_cast<std::int64_t>(f.size());
  if (2 * std::abs(j) >= n) {
    throw aliasing_error("frequency " + std::to_string(j) + " aliases on a grid of " +
                         std::to_string(n) + " samples (need |j| < n/2)");
  }
  std::vector<complex> products(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    // jk mod n keeps the phase argument small and exact.
    const std::int64_t phase = ((-j * static_cast<std::int64_t>(k)) % n + n) % n;
    products[k] = f[k] * std::polar(1.0, 2.0 * pi * static_cast<double>(phase) / static_cast<double>(n));
  }
  return circle_mean(products);
}

/// Coefficients for |j| ≤ J; magnitudes at or below `drop_below` are omitted.
inline SpectralSeries coefficient_window(const SampledCircleFunction& f, std::int64_t J,
                                         double drop_below = Tolerances{}.exact_eps) {
  if (J < 0) throw domain_error("window half-width must be nonnegative");
  SpectralSeries out;
  for (std::int64_t j = -J; j <= J; ++j) {
    const complex c = fourier_coefficient(f, j);
    if (std::abs(c) > drop_below) out.add(j, c);
  }
  return out;
}

namespace detail {
inline void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw domain_error("radius r must lie in [0, 1)");
}
inline void require_unimodular(complex z, const char* name, double eps) {
  if (std::abs(std::abs(z) - 1.0) > eps) {
    throw domain_error(std::string(name) + " must lie on the unit circle");
  }
}
}  // namespace detail

/// p_r(w, z) = (1 − r²)/|w − r z|²
inline double poisson_kernel(double r, complex z, complex w, const Tolerances& tol = {}) {
  detail::require_radius(r);
  detail::require_unimodular(z, "z", tol.exact_eps);
  detail::require_unimodular(w, "w", tol.exact_eps);
  return (1.0 - r * r) / std::norm(w - r * z);
}

/// Σ_{|j|≤N} r^{|j|} z^j is the truncated series of p_r(1, z̄) = p_r(z, 1).
inline complex poisson_kernel_partial_sum(double r, complex z, std::int64_t N) {
  detail::require_radius(r);
  complex s = 1.0;
  complex zp = 1.0;
  double rp = 1.0;
  for (std::int64_t j = 1; j <= N; ++j) {
    zp *= z;
    rp *= r;
    s += rp * (zp + std::conj(zp));
  }
  return s;
}

/// A_r(f)(z) = Σ_j f̂(j) r^{|j|} z^j
inline complex abel_mean_series(const SpectralSeries& F, double r, complex z,
                                const Tolerances& tol = {}) {
  detail::require_radius(r);
  detail::require_unimodular(z, "z", tol.exact_eps);
  complex s{};
  for (const auto& [j, c] : F.terms()) {
    s += c * std::pow(r, static_cast<double>(std::abs(j))) * std::pow(z, static_cast<double>(j));
  }
  return s;
}

/// A_r(f)(z) = (1/2π)∫ f(w) p_r(w, z) |dw| by the uniform rule.
inline complex abel_mean_integral(const SampledCircleFunction& f, double r, complex z,
                                  const Tolerances& tol = {}) {
  detail::require_radius(r);
  detail::require_unimodular(z, "z", tol.exact_eps);
  std::vector<complex> products(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const complex w = f.grid().point(k);
    products[k] = f[k] * ((1.0 - r * r) / std::norm(w - r * z));
  }
  return circle_mean(products);
}

namespace detail {
inline void require_interior(complex zeta) {
  if (!(std::abs(zeta) < 1.0)) throw domain_error("disk point must satisfy |ζ| < 1");
}
}  // namespace detail

/// Values of h₊(ζ) = Σ_{j≥0} f̂(j) ζ^j and h₋(ζ) = Σ_{j≥1} f̂(−j) ζ̄^j.
struct HolomorphicParts {
  complex plus;
  complex minus;
};

inline HolomorphicParts holomorphic_parts(const SpectralSeries& F, complex zeta) {
  detail::require_interior(zeta);
  HolomorphicParts out{};
  for (const auto& [j, c] : F.terms()) {
    if (j >= 0) {
      out.plus += c * std::pow(zeta, static_cast<double>(j));
    } else {
      out.minus += c * std::pow(std::conj(zeta), static_cast<double>(-j));
    }
  }
  return out;
}

/// Harmonic extension h = h₊ + h₋ of the boundary data F into the disk.
inline complex harmonic_extension(const SpectralSeries& F, complex zeta) {
  const auto [plus, minus] = holomorphic_parts(F, zeta);
  return plus + minus;
}

/// c_l = Σ_{j=0}^{l} a_j b_{l−j}
inline std::vector<complex> cauchy_product(std::span<const complex> a, std::span<const complex> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<complex> c(a.size() + b.size() - 1);
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < b.size(); ++k) c[j + k] += a[j] * b[k];
  }
  return c;
}

struct AbelSumResult {
  /// Σ a_j r^j at the last radius of the schedule.
  complex value;
  /// One value per radius, in schedule order.
  std::vector<complex> values;
};

namespace detail {
inline void require_schedule(std::span<const double> radii) {
  if (radii.empty()) throw domain_error("radius schedule is empty");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] >= 0.0 && radii[k] < 1.0)) throw domain_error("schedule radii must lie in [0, 1)");
    if (k > 0 && !(radii[k] > radii[k - 1])) {
      throw domain_error("schedule radii must be strictly increasing");
    }
  }
}
}  // namespace detail

/// Evaluates Σ_{j<terms} a(j) r^j for each r in the schedule. No
/// extrapolation: the caller judges convergence as r → 1⁻.
template <class Term>
  requires std::invocable<Term, std::size_t>
AbelSumResult abel_sum(Term&& term, std::size_t terms, std::span<const double> radii) {
  detail::require_schedule(radii);
  AbelSumResult out;
  out.values.reserve(radii.size());
  for (double r : radii) {
    // Horner from the top keeps the small tail terms from being swamped.
    complex s{};
    for (std::size_t j = terms; j-- > 0;) s = s * r + complex(term(j));
    out.values.push_back(s);
  }
  out.value = out.values.back();
  return out;
}

inline AbelSumResult abel_sum(std::span<const complex> a, std::span<const double> radii) {
  return abel_sum([a](std::size_t j) { return a[j]; }, a.size(), radii);
}

/// (fg)^(l) = Σ_k f̂(l − k) ĝ(k)
inline SpectralSeries product_coefficients(const SpectralSeries& F, const SpectralSeries& G) {
  SpectralSeries out;
  for (const auto& [j, a] : F.terms()) {
    for (const auto& [k, b] : G.terms()) out.add(j + k, a * b);
  }
  return out;
}

/// Atom on T: weight at the point e^{iφ}.
struct CircleAtom {
  double angle;
  complex weight;
};

/// μ̂(j) = Σ_k w_k ā_k^j for |j| ≤ J, with μ̂(j) = ∫ z̄^j dμ.
inline SpectralSeries atomic_coefficients(std::span<const CircleAtom> atoms, std::int64_t J) {
  SpectralSeries out;
  for (std::int64_t j = -J; j <= J; ++j) {
    complex s{};
    for (const auto& a : atoms) s += a.weight * std::polar(1.0, -static_cast<double>(j) * a.angle);
    out.add(j, s);
  }
  return out;
}

}  // namespace harmonic::circle

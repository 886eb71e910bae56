#pragma once

/**
 * @file numerics.hpp
 * @brief Shared numeric substrate: uniform circle grids, truncated line
 * quadrature with tail certificates, and the two-tier tolerance policy.
 *
 * Circle integrals use the uniform rule with weight 2π/n. For a band-limited
 * integrand with |j| < n this rule is exact, which is what lets most circle
 * identities be checked at `exact_eps`.
 *
 * Line integrals use the composite midpoint rule on [-T, T]. The caller must
 * certify the truncation: `tail_bound(T)` bounds ∫_{|x|>T} |f|. A truncation
 * whose certificate exceeds `quad_eps` is refused.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace harmonic {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr complex I{0.0, 1.0};

/// Raised when an argument lies outside an operation's domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested frequency cannot be resolved on the sampling grid.
class aliasing_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// The tail certificate of a truncated line integral is too large.
class truncation_error : public domain_error {
 public:
  truncation_error() : domain_error("truncation insufficient") {}
  explicit truncation_error(const std::string& detail)
      : domain_error("truncation insufficient: " + detail) {}
};

struct Tolerances {
  /// Identities that hold in exact arithmetic.
  double exact_eps = 1e-12;
  /// Identities limited by quadrature or truncation.
  double quad_eps = 1e-6;

  void validate() const {
    if (!(exact_eps > 0.0 && exact_eps < quad_eps && quad_eps < 1.0)) {
      throw domain_error("tolerances must satisfy 0 < exact_eps < quad_eps < 1");
    }
  }
};

/// Uniform nodes θ_k = 2πk/n on the unit circle.
class CircleGrid {
 public:
  explicit CircleGrid(std::size_t n) : n_(n) {
    if (n == 0) throw domain_error("circle grid needs at least one node");
  }

  std::size_t size() const noexcept { return n_; }
  double angle(std::size_t k) const noexcept {
    return 2.0 * pi * static_cast<double>(k) / static_cast<double>(n_);
  }
  complex point(std::size_t k) const { return std::polar(1.0, angle(k)); }
  double weight() const noexcept { return 2.0 * pi / static_cast<double>(n_); }

  std::vector<double> angles() const {
    std::vector<double> out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = angle(k);
    return out;
  }

  friend bool operator==(const CircleGrid&, const CircleGrid&) = default;

 private:
  std::size_t n_;
};

namespace detail {

/// Neumaier-compensated complex accumulator.
class Accumulator {
 public:
  void add(complex v) noexcept {
    add_part(sum_re_, comp_re_, v.real());
    add_part(sum_im_, comp_im_, v.imag());
  }
  complex value() const noexcept { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double v) noexcept {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

}  // namespace detail

/// (1/2π)∫ f |dz| realized as the arithmetic mean of uniform samples.
inline complex circle_mean(std::span<const complex> samples) {
  if (samples.empty()) throw domain_error("circle_mean of an empty sample vector");
  detail::Accumulator acc;
  for (complex v : samples) acc.add(v);
  return acc.value() / static_cast<double>(samples.size());
}

template <class F>
concept RealToComplex = std::invocable<F, double> &&
    std::convertible_to<std::invoke_result_t<F, double>, complex>;

template <class F>
concept RealToReal = std::invocable<F, double> &&
    std::convertible_to<std::invoke_result_t<F, double>, double>;

/// Composite midpoint rule with `panels` equal panels on [a, b].
template <RealToComplex F>
complex midpoint_rule(F&& f, double a, double b, std::size_t panels) {
  if (panels == 0) throw domain_error("midpoint rule needs at least one panel");
  if (!(b > a)) throw domain_error("midpoint rule needs a < b");
  const double h = (b - a) / static_cast<double>(panels);
  detail::Accumulator acc;
  for (std::size_t k = 0; k < panels; ++k) {
    acc.add(complex(f(a + (static_cast<double>(k) + 0.5) * h)));
  }
  return acc.value() * h;
}

/// Composite midpoint on [-half_width, half_width].
struct LineQuadrature {
  double half_width = 1.0;
  std::size_t panels = 1;

  LineQuadrature() = default;
  LineQuadrature(double T, std::size_t n) : half_width(T), panels(n) {
    if (!(T > 0.0) || !std::isfinite(T)) throw domain_error("half width must be positive");
    if (n == 0) throw domain_error("panel count must be positive");
  }

  double step() const noexcept { return 2.0 * half_width / static_cast<double>(panels); }

  /// Panels of width at most `step`, rounded up to a multiple of 6 so the
  /// grid is symmetric about 0 and nests with its 3x coarsening.
  static LineQuadrature with_step(double T, double step) {
    if (!(step > 0.0)) throw domain_error("quadrature step must be positive");
    const double raw = std::ceil(2.0 * T / step);
    if (raw > 4.0e9) throw domain_error("quadrature grid too large");
    auto n = static_cast<std::size_t>(raw);
    n = ((n + 5) / 6) * 6;
    return {T, n};
  }
};

struct QuadratureResult {
  complex value;
  /// |value − value on the 3x coarser nested grid|.
  double refinement_delta = 0.0;
  /// Certified bound on the discarded tails.
  double tail = 0.0;

  double error_budget() const noexcept { return refinement_delta + tail; }
};

/// Truncated midpoint quadrature of f over ℝ.
///
/// Throws truncation_error when tail_bound(T) > tol.quad_eps.
template <RealToComplex F, RealToReal Tail>
QuadratureResult line_integral(F&& f, const LineQuadrature& q, Tail&& tail_bound,
                               const Tolerances& tol = {}) {
  const double tail = tail_bound(q.half_width);
  if (!(tail <= tol.quad_eps)) {
    throw truncation_error("tail bound " + std::to_string(tail) + " at T = " +
                           std::to_string(q.half_width));
  }
  const double T = q.half_width;
  const std::size_t n = q.panels;
  const double h = q.step();

  detail::Accumulator fine, coarse;
  for (std::size_t k = 0; k < n; ++k) {
    const complex v = f(-T + (static_cast<double>(k) + 0.5) * h);
    fine.add(v);
    if (k % 3 == 1) coarse.add(v);
  }
  QuadratureResult out;
  out.value = fine.value() * h;
  out.tail = tail;
  if (n % 3 == 0) {
    out.refinement_delta = std::abs(out.value - coarse.value() * (3.0 * h));
  } else {
    const std::size_t m = n / 2 == 0 ? 1 : n / 2;
    out.refinement_delta = std::abs(out.value - midpoint_rule(f, -T, T, m));
  }
  return out;
}

/// A half width T ≥ T0 whose tail certificate is at most `target`: doubling
/// from T0, then bisection down to within 2% of the first passing width.
template <RealToReal Tail>
double certified_half_width(Tail&& tail_bound, double target, double T0 = 1.0) {
  double T = T0;
  for (int k = 0; k < 80; ++k, T *= 2.0) {
    if (tail_bound(T) <= target) {
      if (T == T0) return T;
      double lo = T / 2.0, hi = T;
      while (hi - lo > 0.02 * lo) {
        const double mid = 0.5 * (lo + hi);
        (tail_bound(mid) <= target ? hi : lo) = mid;
      }
      return hi;
    }
  }
  throw truncation_error("no half width certifies a tail below " + std::to_string(target));
}

/// True when |a − b| ≤ eps·max(1, |b|).
inline bool close(complex a, complex b, double eps) {
  return std::abs(a - b) <= eps * std::max(1.0, std::abs(b));
}

}  // namespace harmonic

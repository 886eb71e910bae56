#pragma once

/**
 * @file line.hpp
 * @brief Fourier analysis on the real line.
 *
 * Transform convention: f̂(ξ) = ∫ f(x) e^{−ixξ} dx, and μ̂(ξ) = ∫ e^{−ixξ} dμ(x)
 * for measures.
 *
 * Closed-form families (r > 0):
 *   a_r(x) = e^{rx} for x ≤ 0, 0 otherwise      â_r(ζ) = 1/(r − iζ),  Im ζ > −r
 *   b_r(x) = e^{−rx} for x > 0, 0 otherwise     b̂_r(ζ) = 1/(r + iζ),  Im ζ < r
 *   c_r(x) = a_r + b_r = e^{−r|x|}              ĉ_r(ζ) = 2r/(r² + ζ²), |Im ζ| < r
 *
 * Everything else is a callable carrying a decay certificate, and is
 * integrated by the truncated midpoint rule from numerics.hpp.
 *
 * Half-plane objects live on U = {Im z > 0}. For z = x + iy,
 *   Poisson average  A_y(f)(x) = (1/π) ∫ f(t) y / ((t − x)² + y²) dt
 *   Cauchy parts     h₊(z) = (1/2πi) ∫ f(t)/(t − z) dt
 *                    h₋(z) = −(1/2πi) ∫ f(t)/(t − z̄) dt
 * with h₊ + h₋ = A_y(f)(x).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/numerics.hpp"

namespace harmonic::line {

/// |f(t)| ≤ constant·|t|^{−power} for every real t ≠ 0.
struct PowerDecay {
  double constant = 1.0;
  double power = 1.0;
};

/// What a callable promises about its size. At least one field must be set.
struct DecayCertificate {
  /// sup |f|
  std::optional<double> sup;
  /// T ↦ bound on ∫_{|x|>T} |f|
  std::function<double(double)> tail_mass;
  std::optional<PowerDecay> decay;
};

class LineFunction {
 public:
  enum class Kind { decay_left, decay_right, two_sided, callable };

  /// a_r
  static LineFunction decay_left(double r) { return closed(Kind::decay_left, r); }
  /// b_r
  static LineFunction decay_right(double r) { return closed(Kind::decay_right, r); }
  /// c_r
  static LineFunction two_sided(double r) { return closed(Kind::two_sided, r); }

  static LineFunction callable(std::function<complex(double)> fn, DecayCertificate cert) {
    if (!fn) throw domain_error("callable line function is empty");
    if (!cert.sup && !cert.tail_mass && !cert.decay) {
      throw domain_error("callable line function must supply a decay certificate");
    }
    if (cert.decay && !(cert.decay->power > 0.0 && cert.decay->constant >= 0.0)) {
      throw domain_error("power decay needs a positive exponent");
    }
    LineFunction f;
    f.kind_ = Kind::callable;
    f.fn_ = std::move(fn);
    f.cert_ = std::move(cert);
    return f;
  }

  /// Bounded, not necessarily integrable.
  static LineFunction bounded(std::function<complex(double)> fn, double sup) {
    return callable(std::move(fn), DecayCertificate{.sup = sup, .tail_mass = {}, .decay = {}});
  }

  static LineFunction constant(complex c) {
    return bounded([c](double) { return c; }, std::abs(c));
  }

  /// t ↦ e^{iωt}
  static LineFunction plane_wave(double omega) {
    return bounded([omega](double t) { return std::polar(1.0, omega * t); }, 1.0);
  }

  Kind kind() const noexcept { return kind_; }
  /// Decay rate r of the closed-form kinds.
  double rate() const noexcept { return rate_; }
  bool is_closed_form() const noexcept { return kind_ != Kind::callable; }

  complex operator()(double x) const {
    switch (kind_) {
      case Kind::decay_left: return x <= 0.0 ? std::exp(rate_ * x) : 0.0;
      case Kind::decay_right: return x > 0.0 ? std::exp(-rate_ * x) : 0.0;
      case Kind::two_sided: return std::exp(-rate_ * std::abs(x));
      case Kind::callable: return fn_(x);
    }
    return {};
  }

  bool integrable() const noexcept {
    return is_closed_form() || static_cast<bool>(cert_.tail_mass) ||
           (cert_.decay && cert_.decay->power > 1.0);
  }

  std::optional<double> sup_bound() const {
    if (is_closed_form()) return 1.0;
    std::optional<double> s = cert_.sup;
    return s;
  }

  const std::optional<PowerDecay>& power_decay() const noexcept { return cert_.decay; }

  /// Bound on ∫_{|x|>T} |f|; infinite when no certificate applies.
  double tail_mass(double T) const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    T = std::max(T, 0.0);
    switch (kind_) {
      case Kind::decay_left:
      case Kind::decay_right: return std::exp(-rate_ * T) / rate_;
      case Kind::two_sided: return 2.0 * std::exp(-rate_ * T) / rate_;
      case Kind::callable: break;
    }
    double best = inf;
    if (cert_.tail_mass) best = std::min(best, cert_.tail_mass(T));
    if (cert_.decay && cert_.decay->power > 1.0 && T > 0.0) {
      const auto [C, p] = *cert_.decay;
      best = std::min(best, 2.0 * C / ((p - 1.0) * std::pow(T, p - 1.0)));
    }
    return best;
  }

  /// Bound on ∫_{|x−c|>T} |f|.
  double tail_mass_about(double c, double T) const {
    if (T <= std::abs(c)) return tail_mass(0.0);
    return tail_mass(T - std::abs(c));
  }

  /// ∫|f| for the closed-form kinds.
  std::optional<double> l1_norm() const {
    switch (kind_) {
      case Kind::decay_left:
      case Kind::decay_right: return 1.0 / rate_;
      case Kind::two_sided: return 2.0 / rate_;
      case Kind::callable: break;
    }
    return std::nullopt;
  }

  /// x ↦ f(x − a)
  LineFunction translated(double a) const {
    const LineFunction self = *this;
    DecayCertificate cert;
    cert.sup = sup_bound();
    if (integrable()) {
      cert.tail_mass = [self, a](double T) { return self.tail_mass_about(-a, T); };
    }
    return callable([self, a](double x) { return self(x - a); }, std::move(cert));
  }

  /// x ↦ f(x) e^{−iαx}
  LineFunction modulated(double alpha) const {
    const LineFunction self = *this;
    DecayCertificate cert;
    cert.sup = sup_bound();
    if (integrable()) cert.tail_mass = [self](double T) { return self.tail_mass(T); };
    if (!is_closed_form()) cert.decay = cert_.decay;
    return callable([self, alpha](double x) { return self(x) * std::polar(1.0, -alpha * x); },
                    std::move(cert));
  }

 private:
  LineFunction() = default;
  static LineFunction closed(Kind kind, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw domain_error("decay rate r must be positive");
    LineFunction f;
    f.kind_ = kind;
    f.rate_ = r;
    return f;
  }

  Kind kind_ = Kind::callable;
  double rate_ = 0.0;
  std::function<complex(double)> fn_;
  DecayCertificate cert_;
};

struct LineOptions {
  /// Midpoint panel width.
  double step = 1e-3;
  /// Truncation half-width; chosen from the certificate when absent.
  std::optional<double> half_width;
  Tolerances tol;
};

namespace detail {

inline void require_integrable(const LineFunction& f) {
  if (!f.integrable()) throw domain_error("line function has no integrability certificate");
}

/// Quadrature of f(x)·g(x) where |g| ≤ g_sup, truncated about 0.
template <class G>
QuadratureResult integrate_against(const LineFunction& f, G&& g, double g_sup,
                                   const LineOptions& opts) {
  require_integrable(f);
  auto tail = [&](double T) { return g_sup * f.tail_mass(T); };
  const double T = opts.half_width.value_or(certified_half_width(tail, opts.tol.quad_eps / 4.0));
  return line_integral([&](double x) { return f(x) * g(x); },
                       LineQuadrature::with_step(T, opts.step), tail, opts.tol);
}

}  // namespace detail

/// Quadrature route for f̂(ξ), available for every integrable kind.
inline QuadratureResult fourier_transform_quadrature(const LineFunction& f, double xi,
                                                     const LineOptions& opts = {}) {
  return detail::integrate_against(
      f, [xi](double x) { return std::polar(1.0, -x * xi); }, 1.0, opts);
}

/// Closed-form transform at a complex argument. Caller checks the strip.
inline complex closed_form_transform(LineFunction::Kind kind, double r, complex zeta) {
  switch (kind) {
    case LineFunction::Kind::decay_left: return 1.0 / (r - I * zeta);
    case LineFunction::Kind::decay_right: return 1.0 / (r + I * zeta);
    case LineFunction::Kind::two_sided: return 2.0 * r / (r * r + zeta * zeta);
    case LineFunction::Kind::callable: break;
  }
  throw domain_error("no closed form for a callable line function");
}

/// f̂(ξ): exact for closed-form kinds, quadrature otherwise.
inline complex fourier_transform(const LineFunction& f, double xi, const LineOptions& opts = {}) {
  if (f.is_closed_form()) return closed_form_transform(f.kind(), f.rate(), complex(xi, 0.0));
  return fourier_transform_quadrature(f, xi, opts).value;
}

/// Is ζ inside the strip where the transform integral converges absolutely?
inline bool in_transform_strip(const LineFunction& f, complex zeta) {
  const double r = f.rate();
  switch (f.kind()) {
    case LineFunction::Kind::decay_left: return zeta.imag() > -r;
    case LineFunction::Kind::decay_right: return zeta.imag() < r;
    case LineFunction::Kind::two_sided: return std::abs(zeta.imag()) < r;
    case LineFunction::Kind::callable: return zeta.imag() == 0.0;
  }
  return false;
}

inline complex transform_complex(const LineFunction& f, complex zeta, const LineOptions& opts = {}) {
  if (!in_transform_strip(f, zeta)) throw domain_error("transform strip violated");
  if (f.is_closed_form()) return closed_form_transform(f.kind(), f.rate(), zeta);
  return fourier_transform(f, zeta.real(), opts);
}

struct LineAtom {
  double location;
  complex weight;
};

/// Finite sum of point masses plus an optional scaled density.
struct AtomicDensityMeasure {
  std::vector<LineAtom> atoms;
  std::optional<LineFunction> density;
  complex scale = 1.0;

  static AtomicDensityMeasure dirac(double a, complex weight = 1.0) {
    return {.atoms = {{a, weight}}, .density = std::nullopt};
  }
  static AtomicDensityMeasure with_density(LineFunction f, complex scale = 1.0) {
    return {.atoms = {}, .density = std::move(f), .scale = scale};
  }

  /// |μ|(ℝ) = Σ|w_k| + |scale|·∫|density|.
  double total_variation(const LineOptions& opts = {}) const {
    double tv = 0.0;
    for (const auto& a : atoms) tv += std::abs(a.weight);
    if (density && scale != complex{}) {
      double l1 = 0.0;
      if (auto exact = density->l1_norm()) {
        l1 = *exact;
      } else {
        const auto& f = *density;
        l1 = detail::integrate_against(
                 LineFunction::callable([&f](double x) { return complex(std::abs(f(x))); },
                                        DecayCertificate{.sup = f.sup_bound(),
                                                         .tail_mass = [&f](double T) { return f.tail_mass(T); },
                                                         .decay = f.power_decay()}),
                 [](double) { return 1.0; }, 1.0, opts)
                 .value.real();
      }
      tv += std::abs(scale) * l1;
    }
    return tv;
  }
};

/// μ̂(ξ) = Σ_k w_k e^{−i a_k ξ} + scale·f̂(ξ)
inline complex measure_transform(const AtomicDensityMeasure& mu, double xi,
                                 const LineOptions& opts = {}) {
  complex s{};
  for (const auto& a : mu.atoms) s += a.weight * std::polar(1.0, -a.location * xi);
  if (mu.density && mu.scale != complex{}) s += mu.scale * fourier_transform(*mu.density, xi, opts);
  return s;
}

/// μ̂(ζ) = Σ_k w_k e^{−i a_k ζ} + scale·f̂(ζ); atoms alone give an entire function.
inline complex transform_complex(const AtomicDensityMeasure& mu, complex zeta,
                                 const LineOptions& opts = {}) {
  complex s{};
  for (const auto& a : mu.atoms) s += a.weight * std::exp(-I * a.location * zeta);
  if (mu.density && mu.scale != complex{}) s += mu.scale * transform_complex(*mu.density, zeta, opts);
  return s;
}

struct TranslationModulation {
  /// Transform of x ↦ f(x − a), computed by quadrature.
  complex translated;
  /// f̂(ξ) e^{−iaξ}
  complex translated_predicted;
  /// Transform of x ↦ f(x) e^{−iαx}, computed by quadrature.
  complex modulated;
  /// f̂(ξ + α)
  complex modulated_predicted;
};

inline TranslationModulation translation_modulation_check(const LineFunction& f, double a,
                                                          double alpha, double xi,
                                                          const LineOptions& opts = {}) {
  detail::require_integrable(f);
  TranslationModulation out{};
  out.translated = fourier_transform_quadrature(f.translated(a), xi, opts).value;
  out.translated_predicted = fourier_transform(f, xi, opts) * std::polar(1.0, -a * xi);
  out.modulated = fourier_transform_quadrature(f.modulated(alpha), xi, opts).value;
  out.modulated_predicted = fourier_transform(f, xi + alpha, opts);
  return out;
}

namespace detail {

/// ∫ g dμ with |g| ≤ g_sup.
template <class G>
complex integrate_measure(const AtomicDensityMeasure& mu, G&& g, double g_sup,
                          const LineOptions& opts) {
  complex s{};
  for (const auto& a : mu.atoms) s += a.weight * complex(g(a.location));
  if (mu.density && mu.scale != complex{}) {
    LineOptions scaled = opts;
    // The scale multiplies the tail, so tighten the tail target to match.
    scaled.tol.quad_eps = opts.tol.quad_eps / std::max(1.0, std::abs(mu.scale));
    scaled.tol.exact_eps = std::min(opts.tol.exact_eps, scaled.tol.quad_eps / 2.0);
    s += mu.scale * integrate_against(*mu.density, g, g_sup, scaled).value;
  }
  return s;
}

}  // namespace detail

struct MultiplicationSides {
  /// ∫ ν̂(t) dμ(t)
  complex lhs;
  /// ∫ μ̂(ξ) dν(ξ)
  complex rhs;
};

inline MultiplicationSides multiplication_formula_check(const AtomicDensityMeasure& mu,
                                                       const AtomicDensityMeasure& nu,
                                                       const LineOptions& opts = {}) {
  const double tv_mu = mu.total_variation(opts);
  const double tv_nu = nu.total_variation(opts);
  MultiplicationSides out{};
  out.lhs = detail::integrate_measure(
      mu, [&](double t) { return measure_transform(nu, t, opts); }, tv_nu, opts);
  out.rhs = detail::integrate_measure(
      nu, [&](double xi) { return measure_transform(mu, xi, opts); }, tv_mu, opts);
  return out;
}

/// A point of the open upper half-plane.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double x, double y) : z_(x, y) {
    if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
      throw domain_error("half-plane point must have Im z > 0");
    }
  }
  explicit HalfPlanePoint(complex z) : HalfPlanePoint(z.real(), z.imag()) {}

  complex z() const noexcept { return z_; }
  double x() const noexcept { return z_.real(); }
  double y() const noexcept { return z_.imag(); }

 private:
  complex z_;
};

struct HalfPlaneOptions {
  /// Panel width; min(y, 1)/4 when absent, which puts the midpoint error on
  /// the kernel near e^{−8π}.
  std::optional<double> step;
  std::optional<double> half_width;
  Tolerances tol;

  double step_for(double y) const { return step.value_or(std::min(y, 1.0) / 4.0); }
};

namespace detail {

/// Bound on (1/π)∫_{|t−x|>T} |f(t)| y/((t−x)² + y²) dt from whatever the
/// function certifies.
inline double poisson_tail(const LineFunction& f, double x, double y, double T) {
  double best = std::numeric_limits<double>::infinity();
  if (f.integrable()) best = std::min(best, f.tail_mass_about(x, T) / (pi * y));
  if (auto sup = f.sup_bound()) best = std::min(best, *sup * (2.0 / pi) * std::atan(y / T));
  if (const auto& d = f.power_decay(); d && T >= 2.0 * std::abs(x)) {
    const double p = d->power;
    best = std::min(best, 2.0 * d->constant * std::pow(2.0, p) * y / (pi * (p + 1.0) * std::pow(T, p + 1.0)));
  }
  return best;
}

}  // namespace detail

/// A_y(f)(x) = (1/π) ∫ f(t) y/((t − x)² + y²) dt, truncated about x.
inline QuadratureResult poisson_halfplane(const LineFunction& f, const HalfPlanePoint& z,
                                          const HalfPlaneOptions& opts = {}) {
  const double x = z.x(), y = z.y();
  auto tail = [&](double T) { return detail::poisson_tail(f, x, y, T); };
  const double T = opts.half_width.value_or(
      certified_half_width(tail, opts.tol.quad_eps / 2.0, std::max(1.0, 4.0 * y)));
  return line_integral(
      [&](double s) { return f(x + s) * (y / (pi * (s * s + y * y))); },
      LineQuadrature::with_step(T, opts.step_for(y)), tail, opts.tol);
}

inline QuadratureResult poisson_halfplane(const LineFunction& f, double x, double y,
                                          const HalfPlaneOptions& opts = {}) {
  return poisson_halfplane(f, HalfPlanePoint(x, y), opts);
}

struct CauchyOptions {
  HalfPlaneOptions poisson;
  /// Outer radius of the tapered symmetric window used for the conjugate part.
  double taper_radius = 4000.0;
};

struct CauchyParts {
  complex plus;
  complex minus;
  /// A_y(f)(x), equal to plus + minus.
  QuadratureResult poisson;
  /// Conjugate Poisson integral (1/π)∫ f(t)(t − x)/|t − z|² dt.
  complex conjugate;
  /// |conjugate − same integral with half the taper radius|.
  double conjugate_delta = 0.0;
};

namespace detail {

/// C^∞ step: 1 on [0, 1/2], 0 on [1, ∞).
inline double taper(double u) {
  if (u <= 0.5) return 1.0;
  if (u >= 1.0) return 0.0;
  const double v = 2.0 * (u - 0.5);
  const double a = std::exp(-1.0 / (1.0 - v));
  const double b = std::exp(-1.0 / v);
  return a / (a + b);
}

/// (1/π)∫_0^R (f(x+s) − f(x−s)) s/(s² + y²) taper(s/R) ds, together with the
/// same integral at radius R/2 from the same nodes.
inline std::pair<complex, complex> conjugate_poisson(const LineFunction& f, double x, double y,
                                                     double R, double h) {
  const auto panels = static_cast<std::size_t>(std::ceil(R / h));
  const double step = R / static_cast<double>(panels);
  harmonic::detail::Accumulator full, half;
  for (std::size_t k = 0; k < panels; ++k) {
    const double s = (static_cast<double>(k) + 0.5) * step;
    const complex v = (f(x + s) - f(x - s)) * (s / (s * s + y * y));
    full.add(v * taper(s / R));
    if (s < 0.5 * R) half.add(v * taper(2.0 * s / R));
  }
  return {full.value() * (step / pi), half.value() * (step / pi)};
}

/// Bound on the conjugate integral beyond radius R, from the certificates.
inline double conjugate_tail(const LineFunction& f, double x, double R) {
  double best = std::numeric_limits<double>::infinity();
  // s/(s² + y²) ≤ 1/R on s ≥ R.
  if (f.integrable()) best = std::min(best, f.tail_mass_about(x, R) / (pi * R));
  if (const auto& d = f.power_decay(); d && R >= 2.0 * std::abs(x)) {
    const double p = d->power;
    best = std::min(best, 2.0 * d->constant * std::pow(2.0, p) / (pi * p * std::pow(R, p)));
  }
  return best;
}

}  // namespace detail

/// (h₊(z), h₋(z)) through h₊ = (P − iQ)/2, h₋ = (P + iQ)/2, where P is the
/// Poisson integral and Q the conjugate Poisson integral.
///
/// Q is taken as the limit of symmetric windows about x with a smooth taper,
/// which agrees with the absolutely convergent integral whenever f(t)/(1+|t|)
/// is integrable and also covers bounded oscillating data such as e^{it}.
/// When f certifies decay, the window is wide enough that the part of Q it
/// drops is below quad_eps/2; otherwise it is the taper radius.
inline CauchyParts cauchy_parts(const LineFunction& f, const HalfPlanePoint& z,
                                const CauchyOptions& opts = {}) {
  const double x = z.x(), y = z.y();
  double R = std::max(opts.taper_radius, 64.0 * y);
  auto tail = [&](double r) { return detail::conjugate_tail(f, x, r); };
  if (std::isfinite(tail(std::max(1.0, 2.0 * std::abs(x)) * 1e12))) {
    const double certified =
        certified_half_width(tail, opts.poisson.tol.quad_eps / 2.0, std::max(1.0, 2.0 * std::abs(x)));
    // The taper starts at R/2.
    R = std::max(R, 2.0 * certified);
  }
  const double h = opts.poisson.step_for(y);
  CauchyParts out{};
  out.poisson = poisson_halfplane(f, z, opts.poisson);
  const auto [full, half] = detail::conjugate_poisson(f, x, y, R, h);
  out.conjugate = full;
  out.conjugate_delta = std::abs(full - half);
  out.plus = 0.5 * (out.poisson.value - I * out.conjugate);
  out.minus = 0.5 * (out.poisson.value + I * out.conjugate);
  return out;
}

/// Fixed catalog of test functions continuous on the closed upper half-plane,
/// holomorphic inside, and decaying at infinity.
enum class AnalyticFunction {
  inverse_linear,  ///< 1/(ζ + i)
  inverse_square,  ///< 1/(ζ + i)²
  oscillating,     ///< e^{iζ}/(ζ + 2i)
};

inline std::string to_string(AnalyticFunction g) {
  switch (g) {
    case AnalyticFunction::inverse_linear: return "inverse_linear";
    case AnalyticFunction::inverse_square: return "inverse_square";
    case AnalyticFunction::oscillating: return "oscillating";
  }
  return "?";
}

inline complex evaluate(AnalyticFunction g, complex zeta) {
  switch (g) {
    case AnalyticFunction::inverse_linear: return 1.0 / (zeta + I);
    case AnalyticFunction::inverse_square: return 1.0 / ((zeta + I) * (zeta + I));
    case AnalyticFunction::oscillating: return std::exp(I * zeta) / (zeta + 2.0 * I);
  }
  return {};
}

/// |g(x)| ≤ |x|^{−p} on ℝ.
inline double decay_power(AnalyticFunction g) {
  return g == AnalyticFunction::inverse_square ? 2.0 : 1.0;
}

/// sup over ℝ of |g|.
inline double sup_norm(AnalyticFunction g) {
  return g == AnalyticFunction::oscillating ? 0.5 : 1.0;
}

/// Boundary values on ℝ as a certified callable.
inline LineFunction boundary_function(AnalyticFunction g) {
  return LineFunction::callable([g](double x) { return evaluate(g, complex(x, 0.0)); },
                                DecayCertificate{.sup = sup_norm(g),
                                                 .tail_mass = {},
                                                 .decay = PowerDecay{1.0, decay_power(g)}});
}

struct CauchyIntegralCheck {
  /// (1/2πi) ∫ g(x)/(x − w) dx
  complex cauchy_integral;
  /// g(w) from the closed form.
  complex value;
  /// (1/2πi) ∫ g(x)/(x − w̄) dx, zero in exact arithmetic.
  complex conjugate_integral;
  /// (1/2πi) ∫ g(x)[1/(x − w) − 1/(x − w̄)] dx, equal to g(w).
  complex difference_kernel;
};

inline CauchyIntegralCheck cauchy_integral_check(AnalyticFunction g, const HalfPlanePoint& w,
                                                 const HalfPlaneOptions& opts = {}) {
  const complex wz = w.z();
  const double p = decay_power(g);
  const double y = w.y();
  const double far = 4.0 * (std::abs(wz) + 1.0);
  // For |x| ≥ far: |g(x)| ≤ |x|^{−p} and |x − w| ≥ (3/4)|x|.
  auto simple_tail = [&](double T) {
    if (T < far) return std::numeric_limits<double>::infinity();
    return 4.0 / (3.0 * pi * p * std::pow(T, p));
  };
  auto difference_tail = [&](double T) {
    if (T < far) return std::numeric_limits<double>::infinity();
    return 32.0 * y / (9.0 * pi * (p + 1.0) * std::pow(T, p + 1.0));
  };
  // Poles sit at distance ≥ min(y, 1) from the axis.
  const double h = opts.step_for(y);
  const auto integrate = [&](auto kernel, auto tail) {
    const double T = opts.half_width.value_or(certified_half_width(tail, opts.tol.quad_eps / 2.0, far));
    return line_integral(
               [&](double x) { return evaluate(g, complex(x, 0.0)) * kernel(x) / (2.0 * pi * I); },
               LineQuadrature::with_step(T, h), tail, opts.tol)
        .value;
  };
  CauchyIntegralCheck out{};
  out.value = evaluate(g, wz);
  out.cauchy_integral = integrate([&](double x) { return 1.0 / (x - wz); }, simple_tail);
  out.conjugate_integral = integrate([&](double x) { return 1.0 / (x - std::conj(wz)); }, simple_tail);
  out.difference_kernel = integrate(
      [&](double x) { return 1.0 / (x - wz) - 1.0 / (x - std::conj(wz)); }, difference_tail);
  return out;
}

}  // namespace harmonic::line

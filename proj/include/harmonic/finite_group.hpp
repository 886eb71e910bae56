#pragma once

// Fourier analysis on finite abelian groups A = Z/n_1 × … × Z/n_k.
//
// Elements are residue tuples, enumerated in mixed-radix lexicographic order
// (first coordinate most significant). Haar measure is the probability
// counting measure, so for functions
//
//   f̂(χ) = (1/|A|) Σ_x f(x) conj(χ(x)),    f = Σ_χ f̂(χ) χ,
//   (f ∗ g)(x) = (1/|A|) Σ_y f(x − y) g(y),
//
// while measures are plain weight vectors with μ̂(χ) = Σ_x μ(x) conj(χ(x)).
// The character with frequency m is χ_m(x) = exp(2πi Σ m_j x_j / n_j), and
// the dual group is identified with the frequency tuples.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/numerics.hpp"

namespace harmonic::groups {

using Element = std::vector<std::size_t>;

class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::size_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw domain_error("group needs at least one cyclic factor");
    size_ = 1;
    lcm_ = 1;
    for (std::size_t n : orders_) {
      if (n == 0) throw domain_error("cyclic orders must be positive");
      size_ *= n;
      lcm_ = std::lcm(lcm_, n);
    }
  }

  /// Parses "4,3,2".
  static FiniteAbelianGroup parse(const std::string& spec) {
    std::vector<std::size_t> orders;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(item, &used);
      } catch (const std::exception&) {
        throw domain_error("bad group spec '" + spec + "'");
      }
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size() || v <= 0) throw domain_error("bad group spec '" + spec + "'");
      orders.push_back(static_cast<std::size_t>(v));
    }
    return FiniteAbelianGroup(std::move(orders));
  }

  const std::vector<std::size_t>& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::size_t order() const noexcept { return size_; }
  /// Exponent of the group; every character value is a power of e^{2πi/lcm}.
  std::size_t exponent() const noexcept { return lcm_; }

  Element element(std::size_t index) const {
    Element x(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
      x[i] = index % orders_[i];
      index /= orders_[i];
    }
    return x;
  }

  std::size_t index_of(std::span<const std::size_t> x) const {
    if (x.size() != orders_.size()) throw domain_error("element has the wrong rank");
    std::size_t index = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) index = index * orders_[i] + x[i] % orders_[i];
    return index;
  }

  std::size_t add(std::size_t a, std::size_t b) const {
    Element x = element(a), y = element(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % orders_[i];
    return index_of(x);
  }

  std::size_t negate(std::size_t a) const {
    Element x = element(a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (orders_[i] - x[i]) % orders_[i];
    return index_of(x);
  }

  std::size_t subtract(std::size_t a, std::size_t b) const { return add(a, negate(b)); }

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::size_t> orders_;
  std::size_t size_ = 1;
  std::size_t lcm_ = 1;
};

inline std::string format_tuple(std::span<const std::size_t> x, char sep = ':') {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(x[i]);
  }
  return out;
}

namespace detail {
inline void require_same(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  if (!(a == b)) throw domain_error("objects live on different groups");
}
}  // namespace detail

/// χ_m(x) = exp(2πi Σ m_j x_j / n_j)
class Character {
 public:
  Character(FiniteAbelianGroup group, Element freq) : group_(std::move(group)), freq_(std::move(freq)) {
    if (freq_.size() != group_.rank()) throw domain_error("frequency tuple has the wrong rank");
    for (std::size_t i = 0; i < freq_.size(); ++i) freq_[i] %= group_.orders()[i];
  }

  static Character trivial(const FiniteAbelianGroup& g) { return {g, Element(g.rank(), 0)}; }
  static Character from_index(const FiniteAbelianGroup& g, std::size_t index) {
    return {g, g.element(index)};
  }

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const Element& frequency() const noexcept { return freq_; }
  std::size_t index() const { return group_.index_of(freq_); }

  /// Σ m_j x_j / n_j as a multiple of 1/exponent, reduced mod exponent.
  std::size_t phase(std::size_t x_index) const {
    const Element x = group_.element(x_index);
    const std::size_t L = group_.exponent();
    std::size_t num = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const std::size_t n = group_.orders()[i];
      num = (num + ((freq_[i] * x[i]) % n) * (L / n)) % L;
    }
    return num;
  }

  complex operator()(std::size_t x_index) const {
    const std::size_t num = phase(x_index);
    if (num == 0) return 1.0;
    return std::polar(1.0, 2.0 * pi * static_cast<double>(num) / static_cast<double>(group_.exponent()));
  }

  /// χ(x) == 1, decided in integer arithmetic.
  bool is_trivial_at(std::size_t x_index) const { return phase(x_index) == 0; }

  Character operator*(const Character& other) const {
    detail::require_same(group_, other.group_);
    Element m(freq_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = freq_[i] + other.freq_[i];
    return {group_, m};
  }

  Character conj() const {
    Element m(freq_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = group_.orders()[i] - freq_[i];
    return {group_, m};
  }

  /// Values in element order.
  std::vector<complex> values() const {
    std::vector<complex> v(group_.order());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = (*this)(x);
    return v;
  }

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character& a, const Character& b) { return a.freq_ <=> b.freq_; }

 private:
  FiniteAbelianGroup group_;
  Element freq_;
};

/// Â in mixed-radix order of frequency tuples.
inline std::vector<Character> dual_group(const FiniteAbelianGroup& g) {
  std::vector<Character> out;
  out.reserve(g.order());
  for (std::size_t m = 0; m < g.order(); ++m) out.push_back(Character::from_index(g, m));
  return out;
}

/// Dense complex vector indexed by element; used for functions and measures.
template <class Tag>
class GroupVector {
 public:
  explicit GroupVector(FiniteAbelianGroup g) : group_(std::move(g)), values_(group_.order()) {}
  GroupVector(FiniteAbelianGroup g, std::vector<complex> values)
      : group_(std::move(g)), values_(std::move(values)) {
    if (values_.size() != group_.order()) {
      throw domain_error("expected " + std::to_string(group_.order()) + " values, got " +
                         std::to_string(values_.size()));
    }
  }

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::span<const complex> values() const noexcept { return values_; }
  std::vector<complex>& mutable_values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  complex operator[](std::size_t x) const { return values_[x]; }
  complex& operator[](std::size_t x) { return values_[x]; }

  friend bool operator==(const GroupVector&, const GroupVector&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<complex> values_;
};

struct FunctionTag {};
struct MeasureTag {};
using GroupFunction = GroupVector<FunctionTag>;
using GroupMeasure = GroupVector<MeasureTag>;

inline GroupFunction as_function(const Character& chi) { return {chi.group(), chi.values()}; }

inline GroupMeasure dirac(const FiniteAbelianGroup& g, std::size_t a, complex weight = 1.0) {
  GroupMeasure m(g);
  m[a] = weight;
  return m;
}

/// f̂(χ) = (1/|A|) Σ_x f(x) conj(χ(x))
inline complex fourier_transform(const GroupFunction& f, const Character& chi) {
  detail::require_same(f.group(), chi.group());
  harmonic::detail::Accumulator acc;
  for (std::size_t x = 0; x < f.size(); ++x) acc.add(f[x] * std::conj(chi(x)));
  return acc.value() / static_cast<double>(f.size());
}

/// All of f̂, indexed like dual_group().
inline std::vector<complex> spectrum(const GroupFunction& f) {
  std::vector<complex> out(f.size());
  for (std::size_t m = 0; m < f.size(); ++m) {
    out[m] = fourier_transform(f, Character::from_index(f.group(), m));
  }
  return out;
}

/// μ̂(χ) = Σ_x μ(x) conj(χ(x))
inline complex measure_transform(const GroupMeasure& mu, const Character& chi) {
  detail::require_same(mu.group(), chi.group());
  harmonic::detail::Accumulator acc;
  for (std::size_t x = 0; x < mu.size(); ++x) acc.add(mu[x] * std::conj(chi(x)));
  return acc.value();
}

/// f = Σ_χ F(χ) χ
inline GroupFunction synthesize(const FiniteAbelianGroup& g, const std::map<Character, complex>& F) {
  GroupFunction f(g);
  for (const auto& [chi, c] : F) {
    detail::require_same(g, chi.group());
    for (std::size_t x = 0; x < f.size(); ++x) f[x] += c * chi(x);
  }
  return f;
}

/// Dense variant; F indexed like dual_group().
inline GroupFunction synthesize(const FiniteAbelianGroup& g, std::span<const complex> F) {
  if (F.size() != g.order()) throw domain_error("spectrum length does not match the group");
  GroupFunction f(g);
  for (std::size_t m = 0; m < F.size(); ++m) {
    const Character chi = Character::from_index(g, m);
    for (std::size_t x = 0; x < f.size(); ++x) f[x] += F[m] * chi(x);
  }
  return f;
}

/// (f ∗ g)(x) = (1/|A|) Σ_y f(x − y) g(y)
inline GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  detail::require_same(f.group(), g.group());
  const auto& A = f.group();
  GroupFunction out(A);
  for (std::size_t x = 0; x < f.size(); ++x) {
    complex s{};
    for (std::size_t y = 0; y < f.size(); ++y) s += f[A.subtract(x, y)] * g[y];
    out[x] = s / static_cast<double>(f.size());
  }
  return out;
}

/// (μ ∗ ν)(z) = Σ_{x+y=z} μ(x) ν(y)
inline GroupMeasure convolve_measures(const GroupMeasure& mu, const GroupMeasure& nu) {
  detail::require_same(mu.group(), nu.group());
  const auto& A = mu.group();
  GroupMeasure out(A);
  for (std::size_t x = 0; x < mu.size(); ++x) {
    for (std::size_t y = 0; y < nu.size(); ++y) out[A.add(x, y)] += mu[x] * nu[y];
  }
  return out;
}

inline complex total_mass(const GroupMeasure& mu) {
  complex s{};
  for (complex w : mu.values()) s += w;
  return s;
}

inline double total_variation(const GroupMeasure& mu) {
  double s = 0.0;
  for (complex w : mu.values()) s += std::abs(w);
  return s;
}

/// f_a(x) = f(x − a)
inline GroupFunction translate(const GroupFunction& f, std::size_t a) {
  GroupFunction out(f.group());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[f.group().subtract(x, a)];
  return out;
}

/// A group homomorphism stored as its full image table.
class Homomorphism {
 public:
  /// Validates h(x + y) = h(x) + h(y) over all pairs.
  Homomorphism(FiniteAbelianGroup from, FiniteAbelianGroup to, std::vector<std::size_t> image)
      : from_(std::move(from)), to_(std::move(to)), image_(std::move(image)) {
    if (image_.size() != from_.order()) throw domain_error("image table has the wrong length");
    for (std::size_t v : image_) {
      if (v >= to_.order()) throw domain_error("image index out of range");
    }
    for (std::size_t x = 0; x < from_.order(); ++x) {
      for (std::size_t y = 0; y < from_.order(); ++y) {
        if (image_[from_.add(x, y)] != to_.add(image_[x], image_[y])) {
          throw domain_error("map is not a homomorphism");
        }
      }
    }
  }

  /// Extends the images of the standard generators e_i linearly.
  static Homomorphism from_generator_images(const FiniteAbelianGroup& from, const FiniteAbelianGroup& to,
                                            const std::vector<Element>& gens) {
    if (gens.size() != from.rank()) throw domain_error("need one image per cyclic factor");
    std::vector<std::size_t> image(from.order());
    for (std::size_t xi = 0; xi < from.order(); ++xi) {
      const Element x = from.element(xi);
      std::size_t acc = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const std::size_t g = to.index_of(gens[i]);
        for (std::size_t k = 0; k < x[i]; ++k) acc = to.add(acc, g);
      }
      image[xi] = acc;
    }
    return {from, to, std::move(image)};
  }

  const FiniteAbelianGroup& from() const noexcept { return from_; }
  const FiniteAbelianGroup& to() const noexcept { return to_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }

  /// φ ∘ h as a character of the source, found by matching values exactly.
  Character pull_back(const Character& phi) const {
    detail::require_same(to_, phi.group());
    for (std::size_t m = 0; m < from_.order(); ++m) {
      const Character psi = Character::from_index(from_, m);
      bool match = true;
      for (std::size_t x = 0; x < from_.order() && match; ++x) {
        // Compare phases as fractions of a full turn.
        match = psi.phase(x) * to_.exponent() == phi.phase(image_[x]) * from_.exponent();
      }
      if (match) return psi;
    }
    throw domain_error("pull-back is not a character");  // unreachable for a homomorphism
  }

 private:
  FiniteAbelianGroup from_, to_;
  std::vector<std::size_t> image_;
};

/// Every homomorphism A → B, by brute force over generator images.
inline std::vector<Homomorphism> all_homomorphisms(const FiniteAbelianGroup& from,
                                                   const FiniteAbelianGroup& to) {
  std::vector<Homomorphism> out;
  std::vector<std::size_t> choice(from.rank(), 0);
  while (true) {
    std::vector<Element> gens;
    bool valid = true;
    for (std::size_t i = 0; i < from.rank(); ++i) {
      gens.push_back(to.element(choice[i]));
      // n_i · h(e_i) must vanish.
      std::size_t acc = 0;
      for (std::size_t k = 0; k < from.orders()[i]; ++k) acc = to.add(acc, choice[i]);
      valid = valid && acc == 0;
    }
    if (valid) out.push_back(Homomorphism::from_generator_images(from, to, gens));
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == to.order()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return out;
}

/// ν(E) = μ(h⁻¹(E))
inline GroupMeasure push_forward(const GroupMeasure& mu, const Homomorphism& h) {
  detail::require_same(mu.group(), h.from());
  GroupMeasure nu(h.to());
  for (std::size_t x = 0; x < mu.size(); ++x) nu[h(x)] += mu[x];
  return nu;
}

/// A subgroup as a sorted list of element indices.
class Subgroup {
 public:
  /// Validates 0 ∈ S and closure under addition and negation by brute force.
  Subgroup(FiniteAbelianGroup g, std::vector<std::size_t> elements)
      : group_(std::move(g)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    member_.assign(group_.order(), false);
    for (std::size_t x : elements_) {
      if (x >= group_.order()) throw domain_error("subgroup element out of range");
      member_[x] = true;
    }
    if (elements_.empty() || !member_[0]) throw domain_error("invalid subgroup: missing 0");
    for (std::size_t a : elements_) {
      if (!member_[group_.negate(a)]) throw domain_error("invalid subgroup: not closed under negation");
      for (std::size_t b : elements_) {
        if (!member_[group_.add(a, b)]) throw domain_error("invalid subgroup: not closed under addition");
      }
    }
  }

  static Subgroup generated_by(const FiniteAbelianGroup& g, std::span<const std::size_t> gens) {
    std::vector<bool> seen(g.order(), false);
    std::vector<std::size_t> frontier{0};
    seen[0] = true;
    while (!frontier.empty()) {
      const std::size_t x = frontier.back();
      frontier.pop_back();
      for (std::size_t s : gens) {
        const std::size_t y = g.add(x, s);
        if (!seen[y]) {
          seen[y] = true;
          frontier.push_back(y);
        }
      }
    }
    std::vector<std::size_t> elems;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (seen[x]) elems.push_back(x);
    }
    return {g, std::move(elems)};
  }

  static Subgroup trivial(const FiniteAbelianGroup& g) { return {g, {0}}; }
  static Subgroup whole(const FiniteAbelianGroup& g) {
    std::vector<std::size_t> all(g.order());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return {g, std::move(all)};
  }

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const std::vector<std::size_t>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(std::size_t x) const { return x < member_.size() && member_[x]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<std::size_t> elements_;
  std::vector<bool> member_;
};

/// All subgroups, found by closing under one extra generator at a time.
inline std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> queue{Subgroup::trivial(g)};
  seen.insert(queue.front().elements());
  while (!queue.empty()) {
    Subgroup h = queue.back();
    queue.pop_back();
    out.push_back(h);
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (h.contains(a)) continue;
      std::vector<std::size_t> gens = h.elements();
      gens.push_back(a);
      Subgroup bigger = Subgroup::generated_by(g, gens);
      if (seen.insert(bigger.elements()).second) queue.push_back(std::move(bigger));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::pair(a.order(), a.elements()) < std::pair(b.order(), b.elements());
  });
  return out;
}

/// {χ : χ ≡ 1 on H}
inline std::vector<Character> annihilator(const Subgroup& H) {
  std::vector<Character> out;
  for (const Character& chi : dual_group(H.group())) {
    bool trivial = true;
    for (std::size_t a : H.elements()) trivial = trivial && chi.is_trivial_at(a);
    if (trivial) out.push_back(chi);
  }
  return out;
}

/// {a : χ(a) = 1 for every χ in the set}
inline Subgroup common_kernel(const FiniteAbelianGroup& g, std::span<const Character> chars) {
  std::vector<std::size_t> elems;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool trivial = true;
    for (const Character& chi : chars) {
      detail::require_same(g, chi.group());
      trivial = trivial && chi.is_trivial_at(a);
    }
    if (trivial) elems.push_back(a);
  }
  return {g, std::move(elems)};
}

/// f_H(b) = (1/|H|) Σ_{a∈H} f(a + b)
inline GroupFunction subgroup_average(const GroupFunction& f, const Subgroup& H) {
  detail::require_same(f.group(), H.group());
  GroupFunction out(f.group());
  for (std::size_t b = 0; b < f.size(); ++b) {
    complex s{};
    for (std::size_t a : H.elements()) s += f[f.group().add(a, b)];
    out[b] = s / static_cast<double>(H.order());
  }
  return out;
}

/// Basis of L_E = {f : f̂ = 0 on E}: the characters outside E.
inline std::vector<GroupFunction> invariant_subspace_from_zero_set(const FiniteAbelianGroup& g,
                                                                   std::span<const Character> E) {
  std::set<Character> excluded(E.begin(), E.end());
  std::vector<GroupFunction> basis;
  for (const Character& chi : dual_group(g)) {
    if (!excluded.contains(chi)) basis.push_back(as_function(chi));
  }
  return basis;
}

/// E(S) = {χ : f̂(χ) = 0 for every f ∈ S}, zero meaning |f̂(χ)| ≤ eps.
inline std::vector<Character> zero_set_of_span(const FiniteAbelianGroup& g,
                                               std::span<const GroupFunction> S,
                                               double eps = Tolerances{}.exact_eps) {
  std::vector<Character> out;
  for (const Character& chi : dual_group(g)) {
    bool zero = true;
    for (const GroupFunction& f : S) {
      detail::require_same(g, f.group());
      zero = zero && std::abs(fourier_transform(f, chi)) <= eps;
    }
    if (zero) out.push_back(chi);
  }
  return out;
}

/// Ψ_a(φ) = φ(a), as a character of Â. With Â identified with frequency
/// tuples of the same orders, Ψ_a is the character of Â with frequency a.
inline Character evaluation_map(const FiniteAbelianGroup& g, std::size_t a) {
  return Character::from_index(g, a);
}

/// Ψ_a evaluated at φ, straight from the definition.
inline complex evaluate_at(std::size_t a, const Character& phi) { return phi(a); }

}  // namespace harmonic::groups

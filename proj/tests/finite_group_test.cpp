#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "harmonic/finite_group.hpp"
#include "oracles.hpp"

namespace {

using namespace harmonic;
using namespace harmonic::groups;

const Tolerances tol;

const std::vector<std::vector<std::size_t>> test_groups{{1}, {6}, {8}, {5}, {2, 3}, {3, 4}, {4, 3}, {2, 2, 2}, {2, 4}, {12}};

double gap(complex a, complex b) { return std::abs(a - b); }

double max_gap(const GroupFunction& f, const GroupFunction& g) {
  double m = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) m = std::max(m, gap(f[x], g[x]));
  return m;
}

template <class Tag>
double max_gap(const GroupVector<Tag>& f, const GroupVector<Tag>& g) {
  double m = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) m = std::max(m, gap(f[x], g[x]));
  return m;
}

/// Numerical rank of the columns, full-pivot LU.
int rank_of(const std::vector<GroupFunction>& cols, std::size_t n) {
  if (cols.empty()) return 0;
  Eigen::MatrixXcd M(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t x = 0; x < n; ++x) M(x, j) = cols[j][x];
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

/// All translates of every member of S.
std::vector<GroupFunction> translation_closure(const std::vector<GroupFunction>& S) {
  std::vector<GroupFunction> out;
  for (const auto& f : S) {
    for (std::size_t a = 0; a < f.size(); ++a) out.push_back(translate(f, a));
  }
  return out;
}

TEST(FiniteAbelianGroup, ParseAndEnumerate) {
  const auto g = FiniteAbelianGroup::parse("4,3,2");
  EXPECT_EQ(g.orders(), (std::vector<std::size_t>{4, 3, 2}));
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(g.exponent(), 12u);
  // Mixed radix, first coordinate most significant.
  EXPECT_EQ(g.element(0), (Element{0, 0, 0}));
  EXPECT_EQ(g.element(1), (Element{0, 0, 1}));
  EXPECT_EQ(g.element(2), (Element{0, 1, 0}));
  EXPECT_EQ(g.element(23), (Element{3, 2, 1}));
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.index_of(g.element(i)), i);
  EXPECT_THROW(FiniteAbelianGroup::parse("4,0"), domain_error);
  EXPECT_THROW(FiniteAbelianGroup::parse("4,x"), domain_error);
  EXPECT_THROW(FiniteAbelianGroup::parse(""), domain_error);
  EXPECT_THROW(FiniteAbelianGroup({}), domain_error);
}

TEST(FiniteAbelianGroup, AdditionIsComponentwise) {
  const FiniteAbelianGroup g({3, 4});
  for (std::size_t a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.add(a, g.negate(a)), 0u);
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto x = g.element(a), y = g.element(b), s = g.element(g.add(a, b));
      for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(s[i], (x[i] + y[i]) % g.orders()[i]);
    }
  }
}

TEST(DualGroup, SmallCases) {
  const auto one = dual_group(FiniteAbelianGroup({1}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0](0), complex(1.0));

  const FiniteAbelianGroup z2({2});
  const auto d2 = dual_group(z2);
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_EQ(d2[0](1), complex(1.0));
  EXPECT_NEAR(gap(d2[1](1), -1.0), 0.0, tol.exact_eps);

  const FiniteAbelianGroup g({2, 3});
  const auto d = dual_group(g);
  ASSERT_EQ(d.size(), 6u);
  const std::set<Character> distinct(d.begin(), d.end());
  EXPECT_EQ(distinct.size(), 6u);
  for (const auto& a : d) {
    for (const auto& b : d) {
      const Character ab = a * b;
      EXPECT_TRUE(distinct.count(ab));
      for (std::size_t x = 0; x < g.order(); ++x) EXPECT_NEAR(gap(ab(x), a(x) * b(x)), 0.0, tol.exact_eps);
    }
  }
}

TEST(Character, HomomorphismAndUnimodular) {
  for (const auto& orders : test_groups) {
    const FiniteAbelianGroup g(orders);
    for (const auto& chi : dual_group(g)) {
      for (std::size_t x = 0; x < g.order(); ++x) {
        EXPECT_NEAR(std::abs(chi(x)), 1.0, tol.exact_eps);
        EXPECT_NEAR(gap(chi(x), oracle::character_value(g, chi.index(), x)), 0.0, tol.exact_eps);
        for (std::size_t y = 0; y < g.order(); ++y) {
          EXPECT_NEAR(gap(chi(g.add(x, y)), chi(x) * chi(y)), 0.0, tol.exact_eps);
        }
      }
    }
  }
}

TEST(Character, Orthonormality) {
  for (const auto& orders : test_groups) {
    const FiniteAbelianGroup g(orders);
    for (const auto& chi : dual_group(g)) {
      for (const auto& psi : dual_group(g)) {
        EXPECT_NEAR(gap(fourier_transform(as_function(chi), psi), chi == psi ? 1.0 : 0.0), 0.0, tol.exact_eps);
      }
    }
  }
}

TEST(FourierTransform, ConstantAndGroupMismatch) {
  const FiniteAbelianGroup g({3, 4});
  GroupFunction f(g, std::vector<complex>(12, complex(2, -1)));
  EXPECT_NEAR(gap(fourier_transform(f, Character::trivial(g)), complex(2, -1)), 0.0, tol.exact_eps);
  EXPECT_THROW(fourier_transform(f, Character::trivial(FiniteAbelianGroup({12}))), domain_error);
  EXPECT_THROW(GroupFunction(g, std::vector<complex>(5)), domain_error);
}

TEST(FourierTransform, MatchesDoubleLoop) {
  const FiniteAbelianGroup g({8});
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = oracle::random_group_function(g);
    const auto F = spectrum(f);
    for (std::size_t m = 0; m < g.order(); ++m) {
      EXPECT_NEAR(gap(F[m], oracle::group_transform(f, m)), 0.0, tol.exact_eps);
      EXPECT_NEAR(gap(fourier_transform(f, Character::from_index(g, m)), F[m]), 0.0, tol.exact_eps);
    }
  }
}

TEST(Synthesize, SmallCases) {
  const FiniteAbelianGroup g({3, 4});
  const auto one = synthesize(g, std::map<Character, complex>{{Character::trivial(g), 1.0}});
  for (std::size_t x = 0; x < g.order(); ++x) EXPECT_NEAR(gap(one[x], 1.0), 0.0, tol.exact_eps);
  const Character chi = Character::from_index(g, 7);
  EXPECT_LE(max_gap(synthesize(g, std::map<Character, complex>{{chi, 1.0}}), as_function(chi)), tol.exact_eps);
  EXPECT_THROW(synthesize(g, std::map<Character, complex>{{Character::trivial(FiniteAbelianGroup({12})), 1.0}}),
               domain_error);
}

TEST(Synthesize, RoundTrips) {
  for (const auto& orders : test_groups) {
    const FiniteAbelianGroup g(orders);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = oracle::random_group_function(g);
      EXPECT_LE(max_gap(synthesize(g, spectrum(f)), f), tol.exact_eps);
      std::map<Character, complex> F;
      for (const auto& chi : dual_group(g)) F[chi] = oracle::random_complex();
      const auto h = synthesize(g, F);
      for (const auto& [chi, c] : F) EXPECT_NEAR(gap(fourier_transform(h, chi), c), 0.0, tol.exact_eps);
    }
  }
}

TEST(Spectrum, ParsevalUniquenessAndInclusion) {
  for (const auto& orders : test_groups) {
    const FiniteAbelianGroup g(orders);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = oracle::random_group_function(g);
      const auto F = spectrum(f);
      double spectral = 0.0, spatial = 0.0, l1 = 0.0;
      for (auto c : F) {
        spectral += std::norm(c);
        l1 += std::abs(c);
      }
      for (std::size_t x = 0; x < f.size(); ++x) spatial += std::norm(f[x]);
      spatial /= static_cast<double>(f.size());
      EXPECT_NEAR(spectral, spatial, tol.exact_eps);
      EXPECT_LE(std::sqrt(spectral), l1 + tol.exact_eps);
    }
    // The transform matrix has full rank, so only f = 0 has a vanishing spectrum.
    std::vector<GroupFunction> rows;
    for (const auto& chi : dual_group(g)) rows.push_back(as_function(chi.conj()));
    EXPECT_EQ(rank_of(rows, g.order()), static_cast<int>(g.order()));
  }
}

TEST(Convolution, IdentityAndCharacters) {
  const FiniteAbelianGroup g({6});
  GroupFunction unit(g);
  unit[0] = static_cast<double>(g.order());
  const auto f = oracle::random_group_function(g);
  EXPECT_LE(max_gap(convolve(f, unit), f), tol.exact_eps);
  for (const auto& chi : dual_group(g)) {
    for (const auto& psi : dual_group(g)) {
      const auto c = convolve(as_function(chi), as_function(psi));
      EXPECT_LE(max_gap(c, chi == psi ? as_function(chi) : GroupFunction(g)), tol.exact_eps);
    }
  }
}

TEST(Convolution, TheoremAndCommutativity) {
  for (const auto& orders : test_groups) {
    const FiniteAbelianGroup g(orders);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = oracle::random_group_function(g), h = oracle::random_group_function(g);
      const auto fh = convolve(f, h);
      EXPECT_LE(max_gap(fh, convolve(h, f)), tol.exact_eps);
      const auto F = spectrum(f), H = spectrum(h), FH = spectrum(fh);
      for (std::size_t m = 0; m < g.order(); ++m) EXPECT_NEAR(gap(FH[m], F[m] * H[m]), 0.0, tol.exact_eps);
    }
  }
}

TEST(Convolution, ProductSpectrumFormula) {
  for (const auto& orders : test_groups) {
    const FiniteAbelianGroup g(orders);
    const auto dual = dual_group(g);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = oracle::random_group_function(g), h = oracle::random_group_function(g);
      GroupFunction fh(g);
      for (std::size_t x = 0; x < g.order(); ++x) fh[x] = f[x] * h[x];
      for (const auto& phi : dual) {
        complex s{};
        for (const auto& psi : dual) s += fourier_transform(f, phi * psi.conj()) * fourier_transform(h, psi);
        EXPECT_NEAR(gap(fourier_transform(fh, phi), s), 0.0, tol.exact_eps);
      }
    }
  }
}

TEST(MeasureConvolution, AtomsAndUnit) {
  const FiniteAbelianGroup g({2, 4});
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      EXPECT_EQ(convolve_measures(dirac(g, a), dirac(g, b)), dirac(g, g.add(a, b)));
    }
  }
  const auto mu = oracle::random_group_measure(g);
  EXPECT_LE(max_gap(convolve_measures(mu, dirac(g, 0)), mu), tol.exact_eps);
}

TEST(MeasureConvolution, TheoremMassAndVariation) {
  for (const auto& orders : test_groups) {
    const FiniteAbelianGroup g(orders);
    for (int trial = 0; trial < 20; ++trial) {
      const auto mu = oracle::random_group_measure(g), nu = oracle::random_group_measure(g);
      const auto c = convolve_measures(mu, nu);
      for (const auto& chi : dual_group(g)) {
        EXPECT_NEAR(gap(measure_transform(c, chi), measure_transform(mu, chi) * measure_transform(nu, chi)), 0.0,
                    tol.exact_eps);
      }
      EXPECT_NEAR(gap(total_mass(c), total_mass(mu) * total_mass(nu)), 0.0, tol.exact_eps);
      EXPECT_LE(total_variation(c), total_variation(mu) * total_variation(nu) + tol.exact_eps);
    }
  }
}

TEST(Homomorphism, ValidationAndEnumeration) {
  const FiniteAbelianGroup z4({4}), z2({2}), z6({6});
  EXPECT_THROW(Homomorphism(z4, z2, {0, 1, 1, 0}), domain_error);
  EXPECT_NO_THROW(Homomorphism(z4, z2, {0, 1, 0, 1}));
  EXPECT_EQ(all_homomorphisms(z6, z6).size(), 6u);
  EXPECT_EQ(all_homomorphisms(z4, z2).size(), 2u);
  EXPECT_EQ(all_homomorphisms(FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({4})).size(), 4u);
}

TEST(PushForward, Examples) {
  const FiniteAbelianGroup z4({4}), z2({2}), z6({6});
  const auto mu = oracle::random_group_measure(z6);
  const Homomorphism id(z6, z6, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(push_forward(mu, id), mu);
  EXPECT_EQ(push_forward(dirac(z4, 1), Homomorphism(z4, z2, {0, 1, 0, 1})), dirac(z2, 1));
  EXPECT_THROW(push_forward(mu, Homomorphism(z4, z2, {0, 1, 0, 1})), domain_error);
}

TEST(PushForward, SpectralIdentity) {
  const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> pairs{
      {{6}, {6}}, {{4}, {2}}, {{2, 2}, {4}}, {{6}, {2, 3}}, {{4}, {2, 4}}};
  for (const auto& [a, b] : pairs) {
    const FiniteAbelianGroup A(a), B(b);
    for (const auto& h : all_homomorphisms(A, B)) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto mu = oracle::random_group_measure(A);
        const auto nu = push_forward(mu, h);
        EXPECT_NEAR(gap(total_mass(nu), total_mass(mu)), 0.0, tol.exact_eps);
        for (const auto& phi : dual_group(B)) {
          // Right-hand side by brute force: Σ_x μ(x) conj(φ(h(x))).
          complex direct{};
          for (std::size_t x = 0; x < A.order(); ++x) direct += mu[x] * std::conj(phi(h(x)));
          EXPECT_NEAR(gap(measure_transform(nu, phi), direct), 0.0, tol.exact_eps);
          EXPECT_NEAR(gap(measure_transform(nu, phi), measure_transform(mu, h.pull_back(phi))), 0.0, tol.exact_eps);
        }
      }
    }
  }
}

TEST(Subgroup, ValidationAndGeneration) {
  const FiniteAbelianGroup z6({6});
  EXPECT_THROW(Subgroup(z6, {1, 2}), domain_error);
  EXPECT_THROW(Subgroup(z6, {0, 2}), domain_error);
  EXPECT_NO_THROW(Subgroup(z6, {0, 2, 4}));
  const std::vector<std::size_t> gen{4};
  EXPECT_EQ(Subgroup::generated_by(z6, gen), Subgroup(z6, {0, 2, 4}));
  EXPECT_EQ(all_subgroups(z6).size(), 4u);
  EXPECT_EQ(all_subgroups(FiniteAbelianGroup({12})).size(), 6u);
  EXPECT_EQ(all_subgroups(FiniteAbelianGroup({2, 4})).size(), 8u);
  EXPECT_EQ(all_subgroups(FiniteAbelianGroup({2, 2, 2})).size(), 16u);
}

TEST(Annihilator, Examples) {
  const FiniteAbelianGroup z4({4});
  EXPECT_EQ(annihilator(Subgroup::trivial(z4)).size(), 4u);
  const auto whole = annihilator(Subgroup::whole(z4));
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0], Character::trivial(z4));
  const Subgroup H(z4, {0, 2});
  const auto B1 = annihilator(H);
  ASSERT_EQ(B1.size(), 2u);
  EXPECT_EQ(B1[0].frequency(), Element{0});
  EXPECT_EQ(B1[1].frequency(), Element{2});
  EXPECT_EQ(common_kernel(z4, B1), H);
}

TEST(Annihilator, OrderDualityAndDoubleAnnihilator) {
  for (const auto& orders : test_groups) {
    const FiniteAbelianGroup g(orders);
    for (const auto& H : all_subgroups(g)) {
      const auto B1 = annihilator(H);
      EXPECT_EQ(B1.size() * H.order(), g.order());
      EXPECT_EQ(common_kernel(g, B1), H);
      // Restriction to H is onto the dual of H: the restrictions take |Â|/|B₁| distinct value patterns.
      std::set<std::vector<std::size_t>> restrictions;
      for (const auto& chi : dual_group(g)) {
        std::vector<std::size_t> pattern;
        for (std::size_t a : H.elements()) pattern.push_back(chi.phase(a));
        restrictions.insert(pattern);
      }
      EXPECT_EQ(restrictions.size(), H.order());
    }
  }
}

TEST(SubgroupAverage, Examples) {
  const FiniteAbelianGroup z6({6});
  const auto f = oracle::random_group_function(z6);
  EXPECT_LE(max_gap(subgroup_average(f, Subgroup::trivial(z6)), f), tol.exact_eps);
  const auto whole = subgroup_average(f, Subgroup::whole(z6));
  const complex mean = fourier_transform(f, Character::trivial(z6));
  for (std::size_t x = 0; x < 6; ++x) EXPECT_NEAR(gap(whole[x], mean), 0.0, tol.exact_eps);

  const Subgroup H(z6, {0, 3});
  const auto fH = subgroup_average(f, H);
  const auto B1 = annihilator(H);
  for (const auto& chi : dual_group(z6)) {
    const bool in = std::find(B1.begin(), B1.end(), chi) != B1.end();
    EXPECT_NEAR(gap(fourier_transform(fH, chi), in ? fourier_transform(f, chi) : 0.0), 0.0, tol.exact_eps);
  }
}

TEST(SubgroupAverage, InvariantIdempotentAndConvolution) {
  for (const auto& orders : test_groups) {
    const FiniteAbelianGroup g(orders);
    for (const auto& H : all_subgroups(g)) {
      const auto f = oracle::random_group_function(g);
      const auto fH = subgroup_average(f, H);
      for (std::size_t b = 0; b < g.order(); ++b) {
        for (std::size_t a : H.elements()) EXPECT_NEAR(gap(fH[g.add(a, b)], fH[b]), 0.0, tol.exact_eps);
      }
      EXPECT_LE(max_gap(subgroup_average(fH, H), fH), tol.exact_eps);
      EXPECT_NEAR(gap(fourier_transform(fH, Character::trivial(g)), fourier_transform(f, Character::trivial(g))),
                  0.0, tol.exact_eps);
      // Normalized uniform measure on H as a density for normalized convolution.
      GroupFunction u(g);
      for (std::size_t a : H.elements()) u[a] = static_cast<double>(g.order()) / static_cast<double>(H.order());
      EXPECT_LE(max_gap(convolve(f, u), fH), tol.exact_eps);
    }
  }
}

TEST(IdealCorrespondence, ZeroSetExamples) {
  const FiniteAbelianGroup z6({6});
  const auto dual = dual_group(z6);
  EXPECT_EQ(invariant_subspace_from_zero_set(z6, {}).size(), 6u);
  EXPECT_TRUE(invariant_subspace_from_zero_set(z6, dual).empty());
  const Character chi0 = dual[2];
  const auto E = zero_set_of_span(z6, std::vector<GroupFunction>{as_function(chi0)});
  EXPECT_EQ(E.size(), 5u);
  EXPECT_EQ(std::count(E.begin(), E.end(), chi0), 0);
  std::vector<GroupFunction> all;
  for (const auto& chi : dual) all.push_back(as_function(chi));
  EXPECT_TRUE(zero_set_of_span(z6, all).empty());
}

TEST(IdealCorrespondence, AllZeroSetsOnZ6) {
  const FiniteAbelianGroup z6({6});
  const auto dual = dual_group(z6);
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Character> E;
    for (std::size_t m = 0; m < 6; ++m) {
      if (mask & (1u << m)) E.push_back(dual[m]);
    }
    const auto basis = invariant_subspace_from_zero_set(z6, E);
    ASSERT_EQ(basis.size(), 6 - E.size());
    const int r = rank_of(basis, 6);
    EXPECT_EQ(r, static_cast<int>(basis.size()));
    // Translation closure adds nothing.
    auto closure = translation_closure(basis);
    EXPECT_EQ(rank_of(closure, 6), r) << mask;
    // Every basis element has vanishing transform on E, and E is recovered exactly.
    EXPECT_EQ(zero_set_of_span(z6, basis), E) << mask;
  }
}

TEST(IdealCorrespondence, RandomSpansRoundTrip) {
  for (const auto& orders : std::vector<std::vector<std::size_t>>{{4}, {6}, {2, 3}, {2, 2, 2}}) {
    const FiniteAbelianGroup g(orders);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<GroupFunction> S;
      for (int k = 0; k < 2; ++k) {
        // Sparse spectra so the zero set is usually nonempty.
        GroupFunction f(g);
        for (const auto& chi : dual_group(g)) {
          if (oracle::uniform(0, 1) < 0.5) {
            const auto v = chi.values();
            const complex c = oracle::random_complex();
            for (std::size_t x = 0; x < g.order(); ++x) f[x] += c * v[x];
          }
        }
        S.push_back(f);
      }
      const auto closure = translation_closure(S);
      const auto basis = invariant_subspace_from_zero_set(g, zero_set_of_span(g, S));
      const int rc = rank_of(closure, g.order());
      EXPECT_EQ(rc, static_cast<int>(basis.size()));
      auto both = closure;
      both.insert(both.end(), basis.begin(), basis.end());
      EXPECT_EQ(rank_of(both, g.order()), rc);
    }
  }
}

TEST(EvaluationMap, DoubleDuality) {
  const FiniteAbelianGroup z4({4});
  EXPECT_EQ(evaluation_map(z4, 0), Character::trivial(z4));
  const auto dual = dual_group(z4);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const Character sum = evaluation_map(z4, z4.add(a, b));
      const Character prod = evaluation_map(z4, a) * evaluation_map(z4, b);
      EXPECT_EQ(sum, prod);
    }
  }
  for (const auto& orders : test_groups) {
    const FiniteAbelianGroup g(orders);
    const auto dg = dual_group(g);
    std::set<std::vector<std::size_t>> tables;
    for (std::size_t a = 0; a < g.order(); ++a) {
      const Character psi = evaluation_map(g, a);
      std::vector<std::size_t> table;
      for (const auto& phi : dg) {
        // Ψ_a(φ) = φ(a), with φ read as an element of Â through its frequency index.
        EXPECT_NEAR(gap(psi(phi.index()), evaluate_at(a, phi)), 0.0, tol.exact_eps);
        table.push_back(psi.phase(phi.index()));
      }
      tables.insert(table);
    }
    EXPECT_EQ(tables.size(), g.order());
  }
}

}  // namespace

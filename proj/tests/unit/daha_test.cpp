#include <gtest/gtest.h>

#include <random>

#include "wtrace/daha.hpp"

namespace wtrace {
namespace {

DahaElement mono(const Exponents& a, const Permutation& w) { return DahaElement::term(a, w); }

Permutation s12() { return Permutation::simple(2, 1); }

TraceCombination combine(const TraceCombination& a, const TraceCombination& b, const Rational& scale) {
  TraceCombination out = a;
  for (const auto& [k, v] : b) {
    out[k] += scale * v;
    if (out[k].is_zero()) out.erase(k);
  }
  return out;
}

// Product in S_n semidirect C[x]: x^a u * x^b v = x^(a + u.b) uv, u.b moving the
// exponent at position i to position u(i).
DahaElement semidirect(const DahaElement& f, const DahaElement& g) {
  DahaElement out(f.arity());
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      Exponents e = kf.first;
      for (int i = 1; i <= f.arity(); ++i) e[static_cast<std::size_t>(kf.second(i) - 1)] += kg.first[static_cast<std::size_t>(i - 1)];
      out.add(e, kf.second * kg.second, cf * cg);
    }
  }
  return out;
}

TEST(Permutation, BasicsAndReducedWords) {
  const auto s1 = Permutation::simple(3, 1);
  const auto s2 = Permutation::simple(3, 2);
  EXPECT_TRUE((s1 * s1).is_identity());
  EXPECT_EQ(s1 * s2 * s1, s2 * s1 * s2);
  const Permutation w({3, 1, 2});
  EXPECT_EQ(w * w.inverse(), Permutation::identity(3));
  Permutation rebuilt = Permutation::identity(3);
  for (int i : w.reduced_word()) rebuilt = rebuilt * Permutation::simple(3, i);
  EXPECT_EQ(rebuilt, w);
  EXPECT_EQ(w.reduced_word().size(), 2U);
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST(Daha, SpecProducts) {
  const auto T1 = DahaElement::T(2, 1);
  const auto x1 = DahaElement::x(2, 1);
  const auto x2 = DahaElement::x(2, 2);
  EXPECT_EQ(T1 * x1, mono({0, 1}, s12()) + DahaElement::one(2));
  EXPECT_EQ(T1 * T1, DahaElement::one(2));
  EXPECT_EQ(T1 * (x1 * x2), mono({1, 1}, s12()));
  EXPECT_EQ(x2 * T1 - T1 * x1, Rational(-1) * DahaElement::one(2));
  EXPECT_THROW(DahaElement::x(2, 1) * DahaElement::x(3, 1), std::invalid_argument);
}

TEST(Daha, DividedDifference) {
  // (x1^3 - x2^3)/(x1 - x2) = x1^2 + x1 x2 + x2^2
  const auto d = divided_difference({3, 0}, 1);
  const std::map<Exponents, Rational> expected{{{2, 0}, Rational(1)}, {{1, 1}, Rational(1)}, {{0, 2}, Rational(1)}};
  EXPECT_EQ(d, expected);
  EXPECT_TRUE(divided_difference({2, 2}, 1).empty());
}

TEST(Daha, DefiningRelations) {
  EXPECT_TRUE(check_defining_relations(2, 4).passed());
  EXPECT_TRUE(check_defining_relations(3, 3).passed());
  const auto T1 = DahaElement::T(3, 1);
  const auto T2 = DahaElement::T(3, 2);
  EXPECT_EQ(T1 * T2 * T1, T2 * T1 * T2);
}

TEST(Daha, TopDegreeMatchesSemidirectProduct) {
  std::mt19937 rng(11);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto f = random_element(n, 3, 3, rng);
      const auto g = random_element(n, 3, 3, rng);
      const auto prod = f * g;
      const auto naive = semidirect(f, g);
      EXPECT_EQ(prod.homogeneous_part(naive.degree()), naive.homogeneous_part(naive.degree()));
      EXPECT_LE(prod.degree(), f.degree() + g.degree());
    }
  }
}

TEST(Daha, Associativity) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_element(3, 2, 3, rng);
    const auto b = random_element(3, 2, 3, rng);
    const auto c = random_element(3, 2, 3, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Hhsd, StructuralCounts) {
  EXPECT_EQ(hhsd_dims(2, 2), (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(hhsd_dims(1, 3), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(hhsd_dims(3, 2), (std::vector<int>{3, 4, 6}));
}

TEST(Cocenter, SpecDimensions) {
  EXPECT_EQ(cocenter_dims(2, 2, 2).dims, (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(cocenter_dims(2, 4, 2).dims, (std::vector<int>{2, 2, 3, 3, 4}));
  EXPECT_EQ(cocenter_dims(3, 2, 2).dims, (std::vector<int>{3, 4, 6}));
  EXPECT_TRUE(cocenter_dims(2, 4, 2).stabilized);
}

TEST(Cocenter, DimsBoundBelowByStructuralCountAndMonotoneInBuffer) {
  for (int n = 1; n <= 3; ++n) {
    const auto target = hhsd_dims(n, 2);
    std::vector<int> previous;
    for (int b = 0; b <= 2; ++b) {
      const auto dims = cocenter_dims(n, 2, b).dims;
      for (std::size_t d = 0; d < dims.size(); ++d) {
        EXPECT_GE(dims[d], target[d]);
        if (!previous.empty()) EXPECT_LE(dims[d], previous[d]);
      }
      previous = dims;
    }
    EXPECT_EQ(previous, target);
  }
}

TEST(Cocenter, GeneratorSpanContainsPairCommutators) {
  std::mt19937 rng(3);
  const CocenterSpace space(2, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_element(2, 2, 2, rng);
    const auto b = random_element(2, 2, 2, rng);
    EXPECT_TRUE(space.contains(daha_commutator(a, b)));
  }
  EXPECT_FALSE(space.contains(DahaElement::one(2)));
}

TEST(Cocenter, ResourceGuard) {
  CocenterLimits tight;
  tight.max_basis = 10;
  EXPECT_THROW(cocenter_dims(3, 3, 2, tight), ResourceLimitError);
}

TEST(TraceReduce, DotMoveAcrossTransposition) {
  // [x1, x2 s] = x1 x2 s - x2^2 s - x2, so the two dotted classes differ by [x2].
  const auto lhs = mono({1, 1}, s12());
  const auto rhs = mono({0, 2}, s12());
  const auto x2 = DahaElement::x(2, 2);
  EXPECT_EQ(daha_commutator(DahaElement::x(2, 1), mono({0, 1}, s12())), lhs - rhs - x2);
  EXPECT_EQ(trace_reduce(lhs), combine(trace_reduce(rhs), trace_reduce(x2), Rational(1)));
  EXPECT_NE(trace_reduce(lhs), trace_reduce(rhs));
  const CocenterSpace space(2, 3);
  EXPECT_TRUE(space.contains(lhs - rhs - x2));
  EXPECT_FALSE(space.contains(lhs - rhs));
}

TEST(TraceReduce, UndottedPermutationsGiveCycleType) {
  const Permutation w({2, 3, 1, 4});
  const auto r = trace_reduce(DahaElement::group_element(w));
  const TraceCombination expected{{TraceClass{{3, 0}, {1, 0}}, Rational(1)}};
  EXPECT_EQ(r, expected);
}

TEST(TraceReduce, SquareOfDottedTransposition) {
  const auto f = mono({1, 0}, s12()) * mono({1, 0}, s12());
  const auto r = trace_reduce(f);
  EXPECT_EQ(r.at(TraceClass{{1, 1}, {1, 1}}), Rational(1));
  const CocenterSpace space(2, 3);
  EXPECT_TRUE(space.contains(f - combination_representative(2, r)));
}

TEST(TraceReduce, ResidueLiesInCommutatorSpan) {
  std::mt19937 rng(17);
  for (int n = 2; n <= 3; ++n) {
    const CocenterSpace space(n, 3);
    for (int trial = 0; trial < 15; ++trial) {
      const auto f = random_element(n, 3, 3, rng);
      EXPECT_TRUE(space.contains(f - combination_representative(n, trace_reduce(f))));
    }
  }
}

TEST(TraceReduce, ConjugationInvariant) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const auto f = random_element(3, 3, 3, rng);
    const Permutation g({2, 3, 1});
    const auto conj = DahaElement::group_element(g) * f * DahaElement::group_element(g.inverse());
    EXPECT_EQ(trace_reduce(conj), trace_reduce(f));
  }
  EXPECT_TRUE(trace_reduce_suite(3, 3).passed());
}

}  // namespace
}  // namespace wtrace

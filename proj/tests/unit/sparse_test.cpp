#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "wtrace/sparse.hpp"

namespace wtrace {
namespace {

using Dense = std::vector<std::vector<Rational>>;

// Plain dense Gaussian elimination, used as a rank oracle.
std::size_t dense_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

Dense random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> value(-2, 2);
  std::bernoulli_distribution zero(0.5);
  Dense m(rows, std::vector<Rational>(cols, Rational(0)));
  for (auto& row : m) {
    for (auto& x : row) x = zero(rng) ? Rational(0) : Rational(value(rng));
  }
  return m;
}

TEST(SparseVec, NeverStoresZeros) {
  SparseVec v;
  v.add(3, Rational(2));
  v.add(3, Rational(-2));
  EXPECT_TRUE(v.empty());
  v.set(1, Rational(0));
  EXPECT_TRUE(v.empty());
  SparseVec w{{0, Rational(1)}, {2, Rational(5)}};
  w.axpy(Rational(-5), SparseVec{{2, Rational(1)}});
  EXPECT_EQ(w.size(), 1u);
  EXPECT_EQ(w.get(0), Rational(1));
  w.scale(Rational(0));
  EXPECT_TRUE(w.empty());
}

TEST(RowSpace, RankMatchesDenseElimination) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_matrix(rng, 6, 5);
    RowSpace space;
    for (const auto& row : m) space.insert(SparseVec::from_dense(row));
    EXPECT_EQ(space.rank(), dense_rank(m));
    for (const auto& row : m) EXPECT_TRUE(space.contains(SparseVec::from_dense(row)));
  }
}

TEST(RowSpace, ReducedEchelonInvariant) {
  std::mt19937 rng(5);
  RowSpace space;
  for (const auto& row : random_matrix(rng, 8, 8)) space.insert(SparseVec::from_dense(row));
  for (const auto& [pivot, row] : space.rows()) {
    EXPECT_EQ(row.leading_column(), pivot);
    EXPECT_TRUE(row.get(pivot).is_one());
    for (const auto& [other_pivot, other] : space.rows()) {
      if (other_pivot != pivot) EXPECT_TRUE(other.get(pivot).is_zero());
    }
  }
}

TEST(RowSpace, RankFromCountsTrailingPivots) {
  RowSpace space;
  EXPECT_TRUE(space.insert(SparseVec{{0, Rational(1)}, {3, Rational(1)}}));
  EXPECT_TRUE(space.insert(SparseVec{{3, Rational(2)}}));
  EXPECT_FALSE(space.insert(SparseVec{{0, Rational(4)}}));
  EXPECT_EQ(space.rank(), 2u);
  EXPECT_EQ(space.rank_from(1), 1u);
  EXPECT_EQ(space.rank_from(4), 0u);
}

TEST(SolveSpan, FindsExactCoefficients) {
  const std::vector<SparseVec> targets{SparseVec{{0, Rational(1)}, {1, Rational(1)}}, SparseVec{{1, Rational(2)}}};
  const auto c = solve_span(targets, SparseVec{{0, Rational(3)}, {1, Rational(7)}});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], Rational(3));
  EXPECT_EQ((*c)[1], Rational(2));
  EXPECT_FALSE(solve_span(targets, SparseVec{{2, Rational(1)}}).has_value());
}

}  // namespace
}  // namespace wtrace

#include <gtest/gtest.h>

#include <random>

#include "wtrace/fock.hpp"
#include "wtrace/partition.hpp"

namespace wtrace {
namespace {

// p(n, k): partitions of n with parts <= k, by the textbook recursion.
long count_partitions(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return count_partitions(n - k, k) + count_partitions(n, k - 1);
}

FockVector random_vector(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-4, 4);
  FockVector v;
  for (int i = 0; i < 5; ++i) {
    const auto& basis = degree_basis(deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    v.add(basis[pick(rng)], Rational(coeff(rng), 3));
  }
  return v;
}

TEST(Partition, CountsMatchRecursion) {
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(static_cast<long>(partition_count(d)), count_partitions(d, d)) << d;
  EXPECT_EQ(partition_count(8), 22u);
}

TEST(Partition, ReverseLexOrder) {
  const auto& b3 = degree_basis(3);
  ASSERT_EQ(b3.size(), 3u);
  EXPECT_EQ(b3[0], (Partition{3}));
  EXPECT_EQ(b3[1], (Partition{2, 1}));
  EXPECT_EQ(b3[2], (Partition{1, 1, 1}));
  PartitionOrder less;
  EXPECT_TRUE(less(Partition{3}, Partition{2, 1}));
  EXPECT_TRUE(less(Partition{1, 1}, Partition{3}));
  for (int d = 1; d <= 8; ++d) {
    const auto& b = degree_basis(d);
    for (std::size_t i = 0; i < b.size(); ++i) {
      EXPECT_EQ(basis_index(b[i]), i);
      if (i) EXPECT_TRUE(less(b[i - 1], b[i]));
    }
  }
}

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_THROW(Partition({-1}), std::invalid_argument);
  EXPECT_EQ(Partition({1, 3, 2}).parts(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(Partition({2, 1}).with_part(2), (Partition{2, 2, 1}));
  EXPECT_EQ(Partition({2, 2, 1}).without_part(2), (Partition{2, 1}));
  EXPECT_THROW(Partition({2, 1}).without_part(3), std::invalid_argument);
}

TEST(Fock, CreationAndAnnihilation) {
  const auto v = mul_power_sum(2, FockVector::vacuum());
  EXPECT_EQ(v, FockVector::basis(Partition{2}));
  // 2 d/dp_2 applied to p_2^2 p_1 is 2 * 2 p_2 p_1.
  EXPECT_EQ(del_power_sum(2, FockVector::basis(Partition{2, 2, 1})), FockVector::basis(Partition{2, 1}, Rational(4)));
  EXPECT_TRUE(del_power_sum(3, FockVector::basis(Partition{2, 1})).is_zero());
  EXPECT_THROW(mul_power_sum(0, v), std::invalid_argument);
  EXPECT_THROW(del_power_sum(-1, v), std::invalid_argument);
}

TEST(Fock, HeisenbergCommutatorOnRandomVectors) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_vector(rng, 6);
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 4; ++m) {
        const auto lhs = del_power_sum(n, mul_power_sum(m, v)) - mul_power_sum(m, del_power_sum(n, v));
        EXPECT_EQ(lhs, n == m ? Rational(n) * v : FockVector{}) << n << "," << m;
      }
    }
  }
}

TEST(Fock, VectorSpaceOperations) {
  FockVector a{{Partition{1}, Rational(2)}, {Partition{2}, Rational(1)}};
  FockVector b{{Partition{1}, Rational(-2)}};
  const auto s = a + b;
  EXPECT_EQ(s, FockVector::basis(Partition{2}));
  EXPECT_EQ(s.degrees(), std::vector<int>{2});
  EXPECT_EQ(a.homogeneous_part(1), FockVector::basis(Partition{1}, Rational(2)));
  EXPECT_TRUE((Rational(0) * a).is_zero());
  EXPECT_EQ(a.coeff(Partition{3}), Rational(0));
  EXPECT_EQ(linear_combine({{Rational(2), a}, {Rational(-1), a}}), a);
}

}  // namespace
}  // namespace wtrace

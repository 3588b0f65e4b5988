#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "wtrace/fock.hpp"
#include "wtrace/rational.hpp"
#include "wtrace/sparse.hpp"

namespace wtrace {

/// Exact matrix of a graded operator restricted to one input degree.
///
/// Column i is the image of degree_basis(degree_in)[i], keyed by position in
/// degree_basis(degree_in + rank). When degree_in + rank < 0 every column is
/// empty.
struct MatrixBlock {
  int rank = 0;
  int degree_in = 0;
  std::vector<SparseVec> columns;

  [[nodiscard]] int degree_out() const { return degree_in + rank; }
  [[nodiscard]] std::size_t rows() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Rational entry(std::size_t row, std::size_t col) const { return columns.at(col).get(row); }
};

namespace detail {
class OperatorNode;
}

/// Rank-homogeneous linear endomorphism of Fock space, evaluated lazily and
/// exactly one degree block at a time.
///
/// rank is the degree shift: degree d maps into degree d + rank. Values are
/// cheap handles onto an immutable expression DAG; every node memoizes its
/// blocks behind a mutex, so concurrent apply()/block() calls are safe.
class GradedOperator {
 public:
  /// Summands able to act nontrivially on a given input degree.
  using SummandGenerator = std::function<std::vector<GradedOperator>(int degree)>;

  /// The zero operator of rank 0.
  GradedOperator();

  static GradedOperator creation(int n);
  static GradedOperator annihilation(int n);
  /// Multiplies a degree-d vector by scale * d.
  static GradedOperator diagonal_degree(const Rational& scale);
  static GradedOperator identity();
  static GradedOperator zero(int rank = 0);

  /// Infinite formal sum made finite per input degree. The generator must
  /// return every summand that can act nontrivially on degree-d input; all
  /// returned summands must have the given rank.
  static GradedOperator formal_sum(int rank, SummandGenerator summands, std::optional<int> filtration = {});

  [[nodiscard]] int rank() const;
  [[nodiscard]] std::optional<int> filtration() const;
  /// Same operator, carrying the given filtration degree as metadata.
  [[nodiscard]] GradedOperator with_filtration(int filtration) const;

  [[nodiscard]] std::shared_ptr<const MatrixBlock> block(int degree) const;
  [[nodiscard]] FockVector apply(const FockVector& v) const;

  /// Applies b first, then a.
  friend GradedOperator compose(const GradedOperator& a, const GradedOperator& b);
  /// All summands must share one rank; throws std::invalid_argument otherwise.
  friend GradedOperator sum(int rank, const std::vector<GradedOperator>& terms);
  friend GradedOperator linear_combination(int rank, const std::vector<std::pair<Rational, GradedOperator>>& terms);
  friend GradedOperator scale(const Rational& c, const GradedOperator& a);
  friend GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);

  friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b);
  friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);
  friend GradedOperator operator*(const Rational& c, const GradedOperator& a) { return scale(c, a); }
  friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) { return compose(a, b); }

 private:
  explicit GradedOperator(std::shared_ptr<const detail::OperatorNode> node);
  std::shared_ptr<const detail::OperatorNode> node_;
};

GradedOperator compose(const GradedOperator& a, const GradedOperator& b);
GradedOperator sum(int rank, const std::vector<GradedOperator>& terms);
GradedOperator linear_combination(int rank, const std::vector<std::pair<Rational, GradedOperator>>& terms);
GradedOperator scale(const Rational& c, const GradedOperator& a);
GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);

/// Lowest input degree <= max_degree on which a and b differ, if any.
/// Operators of different rank agree only where both vanish.
std::optional<int> first_difference(const GradedOperator& a, const GradedOperator& b, int max_degree);

/// True iff a and b agree on every basis vector of every degree <= max_degree.
bool equal_up_to(const GradedOperator& a, const GradedOperator& b, int max_degree);

/// Coefficients c with target = sum_i c_i basis[i] on all degrees <= max_degree,
/// or nullopt. All operators must share the target's rank.
std::optional<std::vector<Rational>> solve_operator_span(const GradedOperator& target,
                                                         const std::vector<GradedOperator>& basis, int max_degree);

/// All blocks of degree <= max_degree as one vector, coordinates
/// (degree, column, row) packed into a single index.
SparseVec flatten_blocks(const GradedOperator& op, int max_degree);

/// Dimension of the span of the operators restricted to degrees <= max_degree.
std::size_t span_rank(const std::vector<GradedOperator>& ops, int max_degree);

/// Sum of rank-homogeneous parts, for user-composed inhomogeneous expressions.
class InhomogeneousOperator {
 public:
  void add(const GradedOperator& part);
  [[nodiscard]] const std::vector<GradedOperator>& parts() const { return parts_; }
  [[nodiscard]] FockVector apply(const FockVector& v) const;

 private:
  std::vector<GradedOperator> parts_;  // one per rank, sorted by rank
};

}  // namespace wtrace

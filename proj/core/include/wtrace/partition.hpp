#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace wtrace {

/// Weakly decreasing sequence of positive integers.
///
/// Indexes the power-sum monomial basis of Fock space and the cycle types of
/// symmetric groups. The empty partition (degree 0) is allowed.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Sorts the parts; throws std::invalid_argument on a nonpositive part.
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }

  /// Number of parts equal to n.
  [[nodiscard]] int multiplicity(int n) const;

  [[nodiscard]] Partition with_part(int n) const;
  /// Removes one copy of n. Precondition: multiplicity(n) > 0.
  [[nodiscard]] Partition without_part(int n) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Degree ascending, then reverse-lexicographic within a degree
/// ([3] < [2,1] < [1,1,1]).
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of d in reverse-lexicographic order (largest part first).
/// The returned reference stays valid for the program lifetime.
const std::vector<Partition>& degree_basis(int d);

/// Position of p inside degree_basis(p.degree()).
std::size_t basis_index(const Partition& p);

/// Number of partitions of d.
std::size_t partition_count(int d);

}  // namespace wtrace

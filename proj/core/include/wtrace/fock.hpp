#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wtrace/partition.hpp"
#include "wtrace/rational.hpp"

namespace wtrace {

/// Element of bosonic Fock space, written in the power-sum monomial basis.
///
/// The partition [l_1, ..., l_r] stands for p_{l_1} ... p_{l_r}, the image of
/// (h_{l_1} (x) 1) ... (h_{l_r} (x) 1) under the trace action, equivalently
/// w_{-l_1,0} ... w_{-l_r,0} applied to the vacuum.
class FockVector {
 public:
  using Terms = std::map<Partition, Rational, PartitionOrder>;

  FockVector() = default;
  FockVector(std::initializer_list<std::pair<const Partition, Rational>> init);

  static FockVector vacuum();
  static FockVector basis(const Partition& p, const Rational& coeff = Rational(1));

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] Rational coeff(const Partition& p) const;

  /// Component of exactly this degree.
  [[nodiscard]] FockVector homogeneous_part(int degree) const;
  /// Degrees that carry a nonzero component, ascending.
  [[nodiscard]] std::vector<int> degrees() const;

  void add(const Partition& p, const Rational& c);
  void axpy(const Rational& factor, const FockVector& other);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& c, const FockVector& v);

  friend bool operator==(const FockVector&, const FockVector&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  Terms terms_;
};

/// Multiplication by p_n: each partition gains a part n. Raises degree by n.
/// Throws std::invalid_argument for n <= 0.
FockVector mul_power_sum(int n, const FockVector& v);

/// n * d/dp_n: a partition with m parts equal to n maps to the partition with
/// one such part removed, times n*m. Lowers degree by n.
///
/// The factor n is deliberate: it gives [del(n), mul(n)] = n, the level-one
/// Heisenberg normalization. Conventions that divide by n differ from this one.
FockVector del_power_sum(int n, const FockVector& v);

FockVector linear_combine(const std::vector<std::pair<Rational, FockVector>>& pairs);

}  // namespace wtrace

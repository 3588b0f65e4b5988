#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wtrace/rational.hpp"
#include "wtrace/report.hpp"
#include "wtrace/sparse.hpp"

namespace wtrace {

/// Raised when a requested computation exceeds a configured size limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Permutation of {1..n} in one-line notation; (u*v)(i) = u(v(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `one_line` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// Simple transposition s_i = (i, i+1), 1 <= i < n.
  static Permutation simple(int n, int i);

  [[nodiscard]] int size() const { return static_cast<int>(image_.size()); }
  /// Image of i, 1-based.
  [[nodiscard]] int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] const std::vector<int>& one_line() const { return image_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Permutation inverse() const;
  /// Indices i_1..i_k with *this = s_{i_1} ... s_{i_k}, k = length.
  [[nodiscard]] std::vector<int> reduced_word() const;
  /// Cycles, each starting at its smallest element and following the map.
  [[nodiscard]] std::vector<std::vector<int>> cycles() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Exponent vector of a monomial x_1^{a_1} ... x_n^{a_n}.
using Exponents = std::vector<int>;

int total_degree(const Exponents& a);

/// Element of the degenerate affine Hecke algebra DH_n in PBW normal form,
/// a sum of terms x^a * w.
class DahaElement {
 public:
  using Key = std::pair<Exponents, Permutation>;
  using Terms = std::map<Key, Rational>;

  explicit DahaElement(int n = 1);

  static DahaElement one(int n);
  static DahaElement x(int n, int i);
  /// T_i, the crossing of strands i and i+1.
  static DahaElement T(int n, int i);
  static DahaElement group_element(const Permutation& w);
  static DahaElement term(const Exponents& a, const Permutation& w, const Rational& coeff = Rational(1));

  [[nodiscard]] int arity() const { return n_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Largest total polynomial degree among the terms; -1 for zero.
  [[nodiscard]] int degree() const;
  /// Terms of exactly this polynomial degree.
  [[nodiscard]] DahaElement homogeneous_part(int degree) const;

  void add(const Exponents& a, const Permutation& w, const Rational& c);
  DahaElement& operator+=(const DahaElement& o);
  DahaElement& operator-=(const DahaElement& o);
  friend DahaElement operator+(DahaElement a, const DahaElement& b) { return a += b; }
  friend DahaElement operator-(DahaElement a, const DahaElement& b) { return a -= b; }
  friend DahaElement operator*(const Rational& c, const DahaElement& f);
  friend bool operator==(const DahaElement&, const DahaElement&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void check_arity(const DahaElement& o) const;
  int n_;
  Terms terms_;
};

/// Normal form of f*g. Throws std::invalid_argument on arity mismatch.
DahaElement multiply(const DahaElement& f, const DahaElement& g);
DahaElement operator*(const DahaElement& f, const DahaElement& g);
DahaElement daha_commutator(const DahaElement& f, const DahaElement& g);

/// (p - s_i p) / (x_i - x_{i+1}) for a monomial, as exponent -> coefficient.
std::map<Exponents, Rational> divided_difference(const Exponents& a, int i);

/// Defining relations for every i, j, the identity
/// T_i x_i^a - x_{i+1}^a T_i = sum_{f+g=a-1} x_i^f x_{i+1}^g for a <= max_degree,
/// and associativity on `samples` random triples of degree <= max_degree.
SuiteReport check_defining_relations(int n, int max_degree, int samples = 20, unsigned seed = 1);

/// Size limits for the cocenter computation.
struct CocenterLimits {
  std::size_t max_basis = 20000;
};

struct CocenterReport {
  int n = 0;
  int max_degree = 0;
  int buffer = 0;
  std::vector<int> dims;
  bool stabilized = false;
};

/// Span of commutators inside A_{<=T}, with the basis of A_{<=T} ordered by
/// polynomial degree descending so that reduced rows with pivot in the
/// low-degree tail span the commutators of low degree.
class CocenterSpace {
 public:
  CocenterSpace(int n, int top_degree, const CocenterLimits& limits = {});

  [[nodiscard]] int arity() const { return n_; }
  [[nodiscard]] int top_degree() const { return top_; }
  [[nodiscard]] std::size_t basis_size() const { return basis_.size(); }
  /// Dimension of A_{<=d} modulo (commutator span intersect A_{<=d}).
  [[nodiscard]] std::size_t quotient_dim(int d) const;
  /// True iff f (of degree <= top) lies in the commutator span.
  [[nodiscard]] bool contains(const DahaElement& f) const;

 private:
  [[nodiscard]] SparseVec coordinates(const DahaElement& f) const;
  std::size_t offset(int d) const;

  int n_;
  int top_;
  std::vector<DahaElement::Key> basis_;
  std::map<DahaElement::Key, std::size_t> index_;
  std::vector<std::size_t> degree_start_;  // first index of degree d
  RowSpace span_;
};

/// Graded dimensions of the cocenter truncated to degree <= D, using
/// commutators of total degree <= D + B.
CocenterReport cocenter_dims(int n, int max_degree, int buffer, const CocenterLimits& limits = {});

/// Structural graded dimensions: sum over cycle types of the tensor product of
/// symmetric powers of C[x], one variable per cycle.
std::vector<int> hhsd_dims(int n, int max_degree);

/// A basis class of the cocenter: (cycle length, exponent) per cycle, cycle
/// lengths descending and exponents descending within equal lengths.
using TraceClass = std::vector<std::pair<int, int>>;
using TraceCombination = std::map<TraceClass, Rational>;

/// Rewrites f as a combination of basis classes modulo commutators.
TraceCombination trace_reduce(const DahaElement& f);
/// The standard element x^a * w representing a class.
DahaElement class_representative(int n, const TraceClass& cls);
DahaElement combination_representative(int n, const TraceCombination& comb);
std::string to_string(const TraceClass& cls);

/// cocenter_dims(n, D, B) against hhsd_dims(n, D); passes iff equal and
/// stabilized in B.
SuiteReport cocenter_suite(int n, int max_degree, int buffer, const CocenterLimits& limits = {});

/// On random elements of degree <= max_degree: trace_reduce(f) - f lies in the
/// commutator span, and trace_reduce is invariant under conjugation by S_n.
SuiteReport trace_reduce_suite(int n, int max_degree, int samples = 20, unsigned seed = 7);

/// Random element with `terms` terms of polynomial degree <= max_degree.
DahaElement random_element(int n, int max_degree, int terms, std::mt19937& rng);

}  // namespace wtrace

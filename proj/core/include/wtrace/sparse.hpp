#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wtrace/rational.hpp"

namespace wtrace {

/// Sparse vector of rationals keyed by column index. Never stores zeros.
class SparseVec {
 public:
  using Map = std::map<std::size_t, Rational>;

  SparseVec() = default;
  SparseVec(std::initializer_list<std::pair<const std::size_t, Rational>> init);

  /// Dense convenience constructor; zero entries are dropped.
  static SparseVec from_dense(std::span<const Rational> values);

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const Map& entries() const { return entries_; }
  [[nodiscard]] Rational get(std::size_t column) const;

  void set(std::size_t column, const Rational& value);
  void add(std::size_t column, const Rational& value);

  /// this += factor * other
  void axpy(const Rational& factor, const SparseVec& other);
  void scale(const Rational& factor);

  /// Column of the first nonzero entry. Precondition: !empty().
  [[nodiscard]] std::size_t leading_column() const { return entries_.begin()->first; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  Map entries_;
};

/// Row space in reduced row-echelon form.
///
/// Every stored row has leading entry 1 and that entry is the only nonzero in
/// its pivot column across all rows. The pivot is always the smallest column
/// index of the row, so results do not depend on anything but the inserted
/// vectors' order-independent span (and the rows themselves are canonical).
class RowSpace {
 public:
  /// Adds v to the space. Returns true iff v was not already in the span.
  bool insert(const SparseVec& v);

  /// Residual of v after eliminating against the stored rows.
  [[nodiscard]] SparseVec reduce(const SparseVec& v) const;
  [[nodiscard]] bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

  /// Number of rows whose pivot column is >= column.
  [[nodiscard]] std::size_t rank_from(std::size_t column) const;

  /// Rows keyed by pivot column.
  [[nodiscard]] const std::map<std::size_t, SparseVec>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseVec> rows_;
};

/// Finds c with sum_i c_i * targets[i] == target exactly, or nullopt.
/// Free parameters are fixed to zero.
std::optional<std::vector<Rational>> solve_span(std::span<const SparseVec> targets, const SparseVec& target);

}  // namespace wtrace

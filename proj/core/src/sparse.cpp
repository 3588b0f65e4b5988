#include "wtrace/sparse.hpp"

namespace wtrace {

SparseVec::SparseVec(std::initializer_list<std::pair<const std::size_t, Rational>> init) {
  for (const auto& [col, value] : init) add(col, value);
}

SparseVec SparseVec::from_dense(std::span<const Rational> values) {
  SparseVec out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_zero()) out.entries_.emplace(i, values[i]);
  }
  return out;
}

Rational SparseVec::get(std::size_t column) const {
  const auto it = entries_.find(column);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseVec::set(std::size_t column, const Rational& value) {
  if (value.is_zero()) {
    entries_.erase(column);
  } else {
    entries_.insert_or_assign(column, value);
  }
}

void SparseVec::add(std::size_t column, const Rational& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(column, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseVec::axpy(const Rational& factor, const SparseVec& other) {
  if (factor.is_zero()) return;
  for (const auto& [col, value] : other.entries_) {
    auto it = entries_.lower_bound(col);
    if (it != entries_.end() && it->first == col) {
      it->second += factor * value;
      if (it->second.is_zero()) entries_.erase(it);
    } else {
      entries_.emplace_hint(it, col, factor * value);
    }
  }
}

void SparseVec::scale(const Rational& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& [col, value] : entries_) value *= factor;
}

SparseVec RowSpace::reduce(const SparseVec& v) const {
  // Rows are fully reduced, so subtracting each pivot row once (with the
  // coefficient v had at that pivot) clears every pivot column.
  SparseVec out = v;
  for (const auto& [col, value] : v) {
    const auto row = rows_.find(col);
    if (row != rows_.end()) out.axpy(-value, row->second);
  }
  return out;
}

bool RowSpace::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const std::size_t pivot = r.leading_column();
  const Rational lead = r.get(pivot);
  if (!lead.is_one()) r.scale(Rational(1) / lead);
  for (auto& [col, row] : rows_) {
    const Rational entry = row.get(pivot);
    if (!entry.is_zero()) row.axpy(-entry, r);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::size_t RowSpace::rank_from(std::size_t column) const {
  return static_cast<std::size_t>(std::distance(rows_.lower_bound(column), rows_.end()));
}

std::optional<std::vector<Rational>> solve_span(std::span<const SparseVec> targets, const SparseVec& target) {
  const std::size_t m = targets.size();
  // One equation per coordinate: sum_i c_i targets[i][j] = target[j].
  // Unknown i lives in column i, the right-hand side in column m.
  std::map<std::size_t, SparseVec> equations;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [coord, value] : targets[i]) equations[coord].add(i, value);
  }
  for (const auto& [coord, value] : target) equations[coord].add(m, value);

  RowSpace space;
  for (const auto& [coord, eq] : equations) space.insert(eq);
  if (space.rows().contains(m)) return std::nullopt;

  std::vector<Rational> coefficients(m, Rational(0));
  for (const auto& [pivot, row] : space.rows()) coefficients[pivot] = row.get(m);
  return coefficients;
}

}  // namespace wtrace

#include "wtrace/series.hpp"

#include <stdexcept>

#include "wtrace/partition.hpp"

namespace wtrace {

BiSeries::BiSeries(Side side, int max_t, int max_q) : side_(side), max_t_(max_t), max_q_(max_q) {
  if (max_t < 0 || max_q < 0) throw std::invalid_argument("series truncation orders must be nonnegative");
}

Rational BiSeries::coeff(int r, int k) const {
  const auto it = coeffs_.find({r < 0 ? -r : r, k});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void BiSeries::add(int r, int k, const Rational& c) {
  if (r < 0) r = -r;
  if (r > max_t_ || k < 0 || k > max_q_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace({r, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

BiSeries BiSeries::times(const BiSeries& other) const {
  if (side_ != other.side_) throw std::invalid_argument("series sides differ");
  BiSeries out(side_, max_t_, max_q_);
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : other.coeffs_) out.add(e1.first + e2.first, e1.second + e2.second, c1 * c2);
  }
  return out;
}

std::string to_string(BiSeries::Side side) { return side == BiSeries::Side::positive ? ">" : "<"; }

BiSeries::Side parse_side(const std::string& s) {
  if (s == ">") return BiSeries::Side::positive;
  if (s == "<") return BiSeries::Side::negative;
  throw std::invalid_argument("series side must be \">\" or \"<\"");
}

BiSeries product_formula(BiSeries::Side side, int max_t, int max_q) {
  BiSeries out(side, max_t, max_q);
  out.add(0, 0, Rational(1));
  for (int r = 1; r <= max_t; ++r) {
    for (int k = 0; k <= max_q; ++k) {
      // 1/(1 - t^r q^k) = sum_m t^{rm} q^{km}
      BiSeries geometric(side, max_t, max_q);
      for (int m = 0; r * m <= max_t && k * m <= max_q; ++m) geometric.add(r * m, k * m, Rational(1));
      out = out.times(geometric);
    }
  }
  return out;
}

namespace {

/// Number of partitions of k with at most m parts, for k = 0..max_k.
std::vector<Rational> bounded_partition_counts(int m, int max_k) {
  std::vector<Rational> out;
  for (int k = 0; k <= max_k; ++k) {
    int count = 0;
    for (const auto& mu : degree_basis(k)) count += static_cast<int>(mu.length()) <= m ? 1 : 0;
    out.emplace_back(count);
  }
  return out;
}

}  // namespace

BiSeries trace_count(int max_t, int max_q) {
  BiSeries out(BiSeries::Side::positive, max_t, max_q);
  for (int n = 0; n <= max_t; ++n) {
    for (const auto& lambda : degree_basis(n)) {
      std::vector<Rational> series(static_cast<std::size_t>(max_q + 1), Rational(0));
      series[0] = Rational(1);
      int previous = 0;
      for (int len : lambda.parts()) {
        if (len == previous) continue;
        previous = len;
        const auto sym = bounded_partition_counts(lambda.multiplicity(len), max_q);
        std::vector<Rational> next(series.size(), Rational(0));
        for (int i = 0; i <= max_q; ++i) {
          for (int j = 0; i + j <= max_q; ++j) {
            next[static_cast<std::size_t>(i + j)] += series[static_cast<std::size_t>(i)] * sym[static_cast<std::size_t>(j)];
          }
        }
        series = std::move(next);
      }
      for (int k = 0; k <= max_q; ++k) out.add(n, k, series[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

std::pair<std::map<std::pair<int, int>, Rational>, std::map<std::pair<int, int>, Rational>>
hypergeometric_sides(int max_q, int max_t) {
  // Both sides as BiSeries in (t, q) with t playing the first slot.
  const auto side = BiSeries::Side::positive;
  BiSeries lhs(side, max_t, max_q);
  BiSeries term(side, max_t, max_q);  // q^n / prod_{i<=n} (1 - t^i)
  term.add(0, 0, Rational(1));
  for (const auto& [e, c] : term.coeffs()) lhs.add(e.first, e.second, c);
  for (int n = 1; n <= max_q; ++n) {
    BiSeries factor(side, max_t, max_q);  // q / (1 - t^n)
    for (int m = 0; n * m <= max_t; ++m) factor.add(n * m, 1, Rational(1));
    term = term.times(factor);
    for (const auto& [e, c] : term.coeffs()) lhs.add(e.first, e.second, c);
  }
  BiSeries rhs(side, max_t, max_q);
  rhs.add(0, 0, Rational(1));
  for (int j = 0; j <= max_t; ++j) {
    BiSeries geometric(side, max_t, max_q);  // 1 / (1 - q t^j)
    for (int m = 0; m <= max_q && j * m <= max_t; ++m) geometric.add(j * m, m, Rational(1));
    rhs = rhs.times(geometric);
  }
  auto swap_keys = [](const BiSeries& s) {
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [e, c] : s.coeffs()) out.emplace(std::pair{e.second, e.first}, c);
    return out;
  };
  return {swap_keys(lhs), swap_keys(rhs)};
}

bool hypergeometric_check(int max_q, int max_t) {
  const auto [lhs, rhs] = hypergeometric_sides(max_q, max_t);
  return lhs == rhs;
}

}  // namespace wtrace

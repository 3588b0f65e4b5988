#pragma once

#include <map>
#include <string>
#include <utility>

#include "wtrace/rational.hpp"

namespace wtrace {

/// Truncated power series in t and q with exact coefficients.
///
/// For the "<" side t-exponents are stored as positive numbers; the side flag
/// records that they stand for t^{-r}.
class BiSeries {
 public:
  enum class Side { positive, negative };

  BiSeries(Side side, int max_t, int max_q);

  [[nodiscard]] Side side() const { return side_; }
  [[nodiscard]] int max_t() const { return max_t_; }
  [[nodiscard]] int max_q() const { return max_q_; }
  [[nodiscard]] const std::map<std::pair<int, int>, Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of t^r q^k (r taken as |exponent| on the "<" side).
  [[nodiscard]] Rational coeff(int r, int k) const;
  /// Terms outside the truncation are dropped.
  void add(int r, int k, const Rational& c);

  /// Product truncated to this series' orders. Sides must match.
  [[nodiscard]] BiSeries times(const BiSeries& other) const;

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  Side side_;
  int max_t_;
  int max_q_;
  std::map<std::pair<int, int>, Rational> coeffs_;
};

std::string to_string(BiSeries::Side side);
/// Parses ">" or "<"; throws std::invalid_argument otherwise.
BiSeries::Side parse_side(const std::string& s);

/// prod_{0<r<=R, 0<=k<=K} 1/(1 - t^r q^k), truncated at t^R, q^K.
BiSeries product_formula(BiSeries::Side side, int max_t, int max_q);

/// Bigraded count of the positive half of the trace: for each n <= R and
/// partition of n, monomials of the tensor product of symmetric powers of
/// C[x], one variable per cycle.
BiSeries trace_count(int max_t, int max_q);

/// sum_n q^n / prod_{i=1}^n (1 - t^i) against prod_{j>=0} 1/(1 - q t^j), both
/// truncated at q^{max_q}, t^{max_t}.
bool hypergeometric_check(int max_q, int max_t);

/// The two sides of the check, keyed (q-exponent, t-exponent).
std::pair<std::map<std::pair<int, int>, Rational>, std::map<std::pair<int, int>, Rational>>
hypergeometric_sides(int max_q, int max_t);

}  // namespace wtrace

#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "wtrace/gradop.hpp"
#include "wtrace/rational.hpp"
#include "wtrace/report.hpp"

namespace wtrace {

/// Generator w_{l,k} ~ t^l D^k. l is the algebra rank; on Fock space the
/// operator shifts degree by -l (negative l creates).
struct WIndex {
  int l = 0;
  int k = 0;
  friend auto operator<=>(const WIndex&, const WIndex&) = default;
};

/// Right-hand side of [w_{l,k}, w_{m,j}] in the quotient by C - 1 and w_{0,0}.
struct CommutatorExpansion {
  int rank_index = 0;  ///< l + m
  std::vector<std::pair<WIndex, Rational>> linear;  ///< sorted by k, no zero coefficients, no w_{0,0}
  Rational central;                                 ///< nonzero only when l = -m

  [[nodiscard]] Rational coefficient(int k) const;
};

/// Structure constants of [w_{l,k}, w_{m,j}] from the generating relation
/// [t^l e^{aD}, t^m e^{bD}] = (e^{ma} - e^{lb}) t^{l+m} e^{(a+b)D}
///                           + delta_{l,-m} (e^{-la} - e^{-mb}) / (1 - e^{a+b}) C.
///
/// Linear part: coefficients of D^i in (D+m)^k D^j - (D+l)^j D^k.
/// Central part: k! j! [a^k b^j] of the quotient series, obtained by exact
/// truncated division (no Bernoulli table).
CommutatorExpansion structure_constants(int l, int k, int m, int j);

/// The level-one Fock realization of W_{1+inf}/(C-1, w_{0,0}).
///
/// Only w_{+-n,0}, w_{0,1} and w_{0,2} are defined directly; everything else
/// is solved out of commutators whose expansions come from
/// structure_constants, with the closed-form pivot coefficient asserted.
class WAlgebra {
 public:
  /// Process-wide instance; its operator memo is shared by all callers.
  static WAlgebra& shared();

  /// w(0,0) is the zero operator.
  GradedOperator w(int l, int k);
  GradedOperator w(WIndex i) { return w(i.l, i.k); }

  /// sum_i c_i w(l+m, i) + central * identity.
  GradedOperator expansion_operator(const CommutatorExpansion& e);

  /// -w_{l,1} - (l+1)/2 w_{l,0}
  GradedOperator virasoro_bar(int l);

 private:
  GradedOperator build(int l, int k);
  GradedOperator solve_top(const GradedOperator& x, const GradedOperator& y, const CommutatorExpansion& e,
                           WIndex target, const Rational& expected_pivot);

  std::mutex mutex_;
  std::map<WIndex, GradedOperator> memo_;
};

inline GradedOperator w(int l, int k) { return WAlgebra::shared().w(l, k); }
inline GradedOperator virasoro_bar(int l) { return WAlgebra::shared().virasoro_bar(l); }

/// Lowest degree <= D where [w(l,k), w(m,j)] differs from its structure
/// constant expansion.
std::optional<int> relation_witness(int l, int k, int m, int j, int max_degree);
bool check_relation(int l, int k, int m, int j, int max_degree);

namespace wsuite {

/// structure_constants vs operator commutators, |l|,|m| <= l_max, k,j <= k_max.
SuiteReport relations(int l_max, int k_max, int max_degree);
/// [w_{l,0}, w_{k,0}] = l delta_{l,-k}, 1 <= |l|,|k| <= l_max.
SuiteReport heisenberg(int l_max, int max_degree);
/// The four displayed consequences ([w_{l,1},w_{k,1}], [w_{-1,a},w_{1,b}],
/// [w_{l,1},w_{k,0}], [w_{l,0},w_{0,2}]) as closed forms independent of
/// structure_constants.
SuiteReport named_consequences(int range, int max_degree);
/// [Lbar_l, Lbar_k] = (l-k) Lbar_{l+k} + delta_{l,-k} (l^3-l)/12.
SuiteReport virasoro(int l_max, int max_degree);
/// Rebuilds w(l,0) and w(0,2) through the recursions and compares.
SuiteReport recursion_consistency(int max_degree);
/// {w(l,k) : 1 <= l <= l_max, 0 <= k <= k_max} independent on degrees <= D.
SuiteReport freeness(int l_max, int k_max, int max_degree);

}  // namespace wsuite

}  // namespace wtrace

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wtrace/gradop.hpp"
#include "wtrace/rational.hpp"
#include "wtrace/report.hpp"

namespace wtrace {

/// Elements of the trace of the Heisenberg category, realized as their images
/// in operators on Fock space.
///
/// The base assignments are
///   h(1,0) -> w(-1,0), h(-1,0) -> w(1,0), c(0) -> -w(0,1), c(0) + c(1) -> w(0,2),
/// and every other element is solved out of commutators with c(1) and the
/// bubble recursions. Operator rank of h(n,a) is n.
class TraceAlgebra {
 public:
  static TraceAlgebra& shared();

  /// h_n (x) x_1^a. Throws std::invalid_argument for n = 0 or a < 0.
  GradedOperator h(int n, int a);
  /// Clockwise bubble c_j; c(0) is the degree operator.
  GradedOperator c(int j);
  /// Counterclockwise bubble: ctilde(0) = 1, ctilde(1) = 0.
  GradedOperator ctilde(int j);
  /// Symmetrizers: p_op(n) raises degree by n, q_op(n) lowers it by n.
  GradedOperator p_op(int n);
  GradedOperator q_op(int n);
  /// h_m (x) x_i for 1 <= i <= |m|, through the dot-move lemma.
  GradedOperator h_dotted(int m, int i);
  /// Heisenberg-Virasoro generators; L(0) = c(0), b(l) = h(-l,0).
  GradedOperator L(int l);
  /// b(0) is taken to be zero (h_0 (x) 1 maps to w_{0,0} = 0).
  GradedOperator b(int l);

 private:
  GradedOperator build_h(int n, int a);
  GradedOperator build_c(int j);

  std::mutex mutex_;
  std::map<std::pair<int, int>, GradedOperator> h_memo_;
  std::map<int, GradedOperator> c_memo_;
  std::map<int, GradedOperator> ctilde_memo_;
  std::map<int, GradedOperator> p_memo_;
  std::map<int, GradedOperator> q_memo_;
};

inline GradedOperator h(int n, int a) { return TraceAlgebra::shared().h(n, a); }
inline GradedOperator c(int j) { return TraceAlgebra::shared().c(j); }
inline GradedOperator ctilde(int j) { return TraceAlgebra::shared().ctilde(j); }
inline GradedOperator p_op(int n) { return TraceAlgebra::shared().p_op(n); }
inline GradedOperator q_op(int n) { return TraceAlgebra::shared().q_op(n); }

/// [h(-1,b), h(1,a)] = ctilde(a+b) + sum_{l=0}^{a+b-2} (a+b-1-l) ctilde(l) c(a+b-2-l)
/// on degrees <= max_degree.
bool bubble_commutator_check(int a, int b, int max_degree);

/// Coefficients of h(1,l) in the span of w(-1,0..l), lowest k first, or
/// nullopt if h(1,l) is not in that span on degrees <= max_degree.
std::optional<std::vector<Rational>> psi_leading_term(int l, int max_degree);

namespace tsuite {

/// [h(m,0), h(n,0)] = n delta_{m,-n}, 1 <= |m|,|n| <= range.
SuiteReport heisenberg(int range, int max_degree);
/// [h(m,1), h(n,1)] = (n-m) h(m+n,1) for mn > 0, |m|,|n| <= range.
SuiteReport same_sign(int range, int max_degree);
/// The three mixed lemmas with h(+-n,0) and the [h(-m,1), h(n,1)] lemma,
/// 1 <= m,n <= range. The undefined n = m case of the last one is recorded
/// as observed data, not asserted.
SuiteReport mixed(int range, int max_degree);
/// Heisenberg-Virasoro relations for |k|,|l| <= range, central charge
/// extracted as a rational.
SuiteReport heisenberg_virasoro(int range, int max_degree);
/// Bubble lemma for a + b <= max_sum, the two routes to c(0) and c(1), and
/// [h(n,a), c(0)] = -n h(n,a).
SuiteReport bubbles(int max_sum, int max_degree);
/// q(n) p(m) = sum_k p(m-k) q(n-k); p's and q's commute among themselves.
SuiteReport pq(int range, int max_degree);
/// [h(n,1), h(m,2)] for (n,m) in {(1,2), (2,2), (2,3)}.
SuiteReport remark(int max_degree);
/// Declared rank and filtration of every generator up to the given bounds.
SuiteReport bookkeeping(int range, int max_a, int max_degree);
/// psi_leading_term(l) for l <= l_max: solvable with leading coefficient (-1)^l.
SuiteReport psi(int l_max, int max_degree);

}  // namespace tsuite

}  // namespace wtrace

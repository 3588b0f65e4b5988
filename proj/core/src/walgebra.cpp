#include "wtrace/walgebra.hpp"

#include <cstdlib>
#include <stdexcept>

namespace wtrace {

namespace {

/// Power series in two variables truncated at total degree `order`.
class TruncatedBiSeries {
 public:
  explicit TruncatedBiSeries(int order) : order_(order), c_(static_cast<std::size_t>(order + 1)) {
    for (int a = 0; a <= order; ++a) c_[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(order - a + 1), Rational(0));
  }

  [[nodiscard]] int order() const { return order_; }
  Rational& at(int a, int b) { return c_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  [[nodiscard]] const Rational& at(int a, int b) const { return c_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

  /// Exact quotient by (x + y), truncated one order lower. Throws if the
  /// division is not exact within the truncation.
  [[nodiscard]] TruncatedBiSeries divide_by_sum() const {
    if (!at(0, 0).is_zero()) throw std::logic_error("series not divisible by (x + y)");
    TruncatedBiSeries q(order_ - 1);
    // [x^a y^b] N = Q_{a-1,b} + Q_{a,b-1}; solve along each total degree.
    for (int s = 0; s <= order_ - 1; ++s) {
      for (int a = 0; a <= s; ++a) {
        const int b = s - a;
        Rational v = at(a, b + 1);
        if (a > 0) v -= q.at(a - 1, b + 1);
        q.at(a, b) = v;
      }
      Rational rest = at(s + 1, 0) - q.at(s, 0);
      if (!rest.is_zero()) throw std::logic_error("series not divisible by (x + y)");
    }
    return q;
  }

  [[nodiscard]] TruncatedBiSeries times(const TruncatedBiSeries& other) const {
    const int order = std::min(order_, other.order_);
    TruncatedBiSeries out(order);
    for (int a1 = 0; a1 <= order; ++a1) {
      for (int b1 = 0; a1 + b1 <= order; ++b1) {
        if (at(a1, b1).is_zero()) continue;
        for (int a2 = 0; a1 + a2 <= order; ++a2) {
          for (int b2 = 0; a1 + b1 + a2 + b2 <= order; ++b2) {
            out.at(a1 + a2, b1 + b2) += at(a1, b1) * other.at(a2, b2);
          }
        }
      }
    }
    return out;
  }

 private:
  int order_;
  std::vector<std::vector<Rational>> c_;
};

/// k! j! [a^k b^j] (e^{-l a} - e^{-m b}) / (1 - e^{a+b}) for l = -m.
Rational central_coefficient(int l, int m, int k, int j) {
  if (l == 0 && m == 0) return Rational(0);
  const int order = k + j;
  TruncatedBiSeries numerator(order + 1);
  for (int a = 0; a <= order + 1; ++a) {
    numerator.at(a, 0) += power(Rational(-l), static_cast<unsigned>(a)) / factorial(static_cast<unsigned>(a));
  }
  for (int b = 0; b <= order + 1; ++b) {
    numerator.at(0, b) -= power(Rational(-m), static_cast<unsigned>(b)) / factorial(static_cast<unsigned>(b));
  }
  // 1 - e^{s} = -s u(s), u(s) = sum_n s^n / (n+1)!; invert u as a series in s.
  std::vector<Rational> u(static_cast<std::size_t>(order + 1));
  for (int n = 0; n <= order; ++n) u[static_cast<std::size_t>(n)] = Rational(1) / factorial(static_cast<unsigned>(n + 1));
  std::vector<Rational> inv(static_cast<std::size_t>(order + 1), Rational(0));
  inv[0] = Rational(1);
  for (int n = 1; n <= order; ++n) {
    Rational acc(0);
    for (int i = 1; i <= n; ++i) acc += u[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(n - i)];
    inv[static_cast<std::size_t>(n)] = -acc;
  }
  TruncatedBiSeries factor(order);
  for (int n = 0; n <= order; ++n) {
    for (int a = 0; a <= n; ++a) factor.at(a, n - a) = -inv[static_cast<std::size_t>(n)] * binomial(n, a);
  }
  const TruncatedBiSeries quotient = numerator.divide_by_sum().times(factor);
  return quotient.at(k, j) * factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(j));
}

std::string case_name(const char* tag, std::initializer_list<std::pair<const char*, int>> params) {
  std::string s = tag;
  bool first = true;
  for (const auto& [name, value] : params) {
    s += first ? " " : ",";
    first = false;
    s += name;
    s += "=";
    s += std::to_string(value);
  }
  return s;
}

}  // namespace

Rational CommutatorExpansion::coefficient(int k) const {
  for (const auto& [idx, c] : linear) {
    if (idx.k == k) return c;
  }
  return Rational(0);
}

CommutatorExpansion structure_constants(int l, int k, int m, int j) {
  if (k < 0 || j < 0) throw std::invalid_argument("structure_constants: negative differential order");
  CommutatorExpansion e;
  e.rank_index = l + m;
  const int top = k + j;
  for (int i = 0; i <= top; ++i) {
    Rational c(0);
    if (i >= j) c += binomial(k, i - j) * power(Rational(m), static_cast<unsigned>(k - (i - j)));
    if (i >= k) c -= binomial(j, i - k) * power(Rational(l), static_cast<unsigned>(j - (i - k)));
    if (c.is_zero()) continue;
    if (e.rank_index == 0 && i == 0) continue;  // w_{0,0} = 0 in the quotient
    e.linear.emplace_back(WIndex{e.rank_index, i}, c);
  }
  if (l == -m) e.central = central_coefficient(l, m, k, j);  // times C = 1
  return e;
}

WAlgebra& WAlgebra::shared() {
  static WAlgebra instance;
  return instance;
}

GradedOperator WAlgebra::w(int l, int k) {
  if (k < 0) throw std::invalid_argument("w(l,k) requires k >= 0");
  const WIndex key{l, k};
  {
    std::lock_guard lock(mutex_);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  GradedOperator op = build(l, k).with_filtration(k);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(key, std::move(op)).first->second;
}

GradedOperator WAlgebra::expansion_operator(const CommutatorExpansion& e) {
  std::vector<std::pair<Rational, GradedOperator>> terms;
  for (const auto& [idx, c] : e.linear) terms.emplace_back(c, w(idx));
  if (!e.central.is_zero()) {
    if (e.rank_index != 0) throw std::logic_error("central term outside rank 0");
    terms.emplace_back(e.central, GradedOperator::identity());
  }
  return linear_combination(-e.rank_index, terms);
}

GradedOperator WAlgebra::solve_top(const GradedOperator& x, const GradedOperator& y, const CommutatorExpansion& e,
                                   WIndex target, const Rational& expected_pivot) {
  const Rational pivot = e.coefficient(target.k);
  if (pivot != expected_pivot || pivot.is_zero()) {
    throw std::logic_error("recursion pivot for w(" + std::to_string(target.l) + "," + std::to_string(target.k) +
                           ") is " + pivot.to_string() + ", expected " + expected_pivot.to_string());
  }
  std::vector<std::pair<Rational, GradedOperator>> terms{{Rational(1), commutator(x, y)}};
  for (const auto& [idx, c] : e.linear) {
    if (idx.k != target.k) terms.emplace_back(-c, w(idx));
  }
  if (!e.central.is_zero()) terms.emplace_back(-e.central, GradedOperator::identity());
  return scale(Rational(1) / pivot, linear_combination(-target.l, terms));
}

GradedOperator WAlgebra::build(int l, int k) {
  if (l == 0 && k == 0) return GradedOperator::zero(0);
  if (k == 0) return l < 0 ? GradedOperator::creation(-l) : GradedOperator::annihilation(l);
  if (l == 0 && k == 1) {
    // Forced by [w_{0,1}, w_{n,0}] = n w_{n,0} and w_{0,1} killing the vacuum.
    return GradedOperator::diagonal_degree(Rational(-1));
  }
  if (l == 0 && k == 2) {
    // sum_{k,l>0} (w_{-l,0} w_{-k,0} w_{k+l,0} + w_{-l-k,0} w_{l,0} w_{k,0}) - w_{0,1};
    // a summand with total annihilation weight above the input degree is zero.
    auto cubic = GradedOperator::formal_sum(
        0,
        [this](int degree) {
          std::vector<GradedOperator> out;
          for (int a = 1; a < degree; ++a) {
            for (int b = 1; a + b <= degree; ++b) {
              out.push_back(compose(w(-a, 0), compose(w(-b, 0), w(a + b, 0))));
              out.push_back(compose(w(-a - b, 0), compose(w(a, 0), w(b, 0))));
            }
          }
          return out;
        },
        2);
    return cubic - w(0, 1);
  }
  if (l == 1 || l == -1) {
    // [w_{0,2}, w_{+-1,k-1}] = +-2 w_{+-1,k} + w_{+-1,k-1}
    return solve_top(w(0, 2), w(l, k - 1), structure_constants(0, 2, l, k - 1), {l, k}, Rational(2 * l));
  }
  if (l == 0) {
    // [w_{-1,0}, w_{1,b}] = b w_{0,b-1} + lower, b = k + 1
    const int b = k + 1;
    return solve_top(w(-1, 0), w(1, b), structure_constants(-1, 0, 1, b), {0, k}, Rational(b));
  }
  if (l >= 2) {
    // [w_{1,k+1}, w_{l-1,0}] = (k+1)(l-1) w_{l,k} + lower
    return solve_top(w(1, k + 1), w(l - 1, 0), structure_constants(1, k + 1, l - 1, 0), {l, k},
                     Rational((k + 1) * (l - 1)));
  }
  // l <= -2: [w_{-1,k+1}, w_{l+1,0}] = (k+1)(l+1) w_{l,k} + lower
  return solve_top(w(-1, k + 1), w(l + 1, 0), structure_constants(-1, k + 1, l + 1, 0), {l, k},
                   Rational((k + 1) * (l + 1)));
}

GradedOperator WAlgebra::virasoro_bar(int l) {
  return linear_combination(-l, {{Rational(-1), w(l, 1)}, {Rational(-(l + 1), 2), w(l, 0)}});
}

std::optional<int> relation_witness(int l, int k, int m, int j, int max_degree) {
  auto& alg = WAlgebra::shared();
  return first_difference(commutator(alg.w(l, k), alg.w(m, j)),
                          alg.expansion_operator(structure_constants(l, k, m, j)), max_degree);
}

bool check_relation(int l, int k, int m, int j, int max_degree) {
  return !relation_witness(l, k, m, j, max_degree).has_value();
}

namespace wsuite {

SuiteReport relations(int l_max, int k_max, int max_degree) {
  SuiteReport r{"walg.relations", {}};
  for (int l = -l_max; l <= l_max; ++l) {
    for (int k = 0; k <= k_max; ++k) {
      for (int m = -l_max; m <= l_max; ++m) {
        for (int j = 0; j <= k_max; ++j) {
          r.cases.push_back(make_case(case_name("[w(l,k),w(m,j)]", {{"l", l}, {"k", k}, {"m", m}, {"j", j}}),
                                      relation_witness(l, k, m, j, max_degree)));
        }
      }
    }
  }
  return r;
}

SuiteReport heisenberg(int l_max, int max_degree) {
  SuiteReport r{"walg.heisenberg", {}};
  for (int l = -l_max; l <= l_max; ++l) {
    for (int k = -l_max; k <= l_max; ++k) {
      if (l == 0 || k == 0) continue;
      const GradedOperator lhs = commutator(w(l, 0), w(k, 0));
      const GradedOperator rhs =
          l == -k ? scale(Rational(l), GradedOperator::identity()) : GradedOperator::zero(-(l + k));
      r.cases.push_back(make_case(case_name("[w(l,0),w(k,0)]", {{"l", l}, {"k", k}}), first_difference(lhs, rhs, max_degree)));
    }
  }
  return r;
}

SuiteReport named_consequences(int range, int max_degree) {
  SuiteReport r{"walg.consequences", {}};
  const auto id = GradedOperator::identity();
  // [w_{l,1}, w_{k,1}] = (k-l) w_{l+k,1} + (k^3-k)/6 delta_{l,-k}
  for (int l = -range; l <= range; ++l) {
    for (int k = -range; k <= range; ++k) {
      std::vector<std::pair<Rational, GradedOperator>> rhs{{Rational(k - l), w(l + k, 1)}};
      if (l == -k) rhs.emplace_back(Rational(k * k * k - k, 6), id);
      r.cases.push_back(make_case(case_name("[w(l,1),w(k,1)]", {{"l", l}, {"k", k}}),
                                  first_difference(commutator(w(l, 1), w(k, 1)),
                                                   linear_combination(-(l + k), rhs), max_degree)));
    }
  }
  // [w_{-1,a}, w_{1,b}] = sum_r C(a,r) w_{0,a+b-r} - sum_s (-1)^s C(b,s) w_{0,a+b-s} + delta_{a,0} (-1)^{b+1}
  for (int a = 0; a <= range; ++a) {
    for (int b = 0; b <= range; ++b) {
      std::vector<std::pair<Rational, GradedOperator>> rhs;
      for (int s = 1; s <= a; ++s) rhs.emplace_back(binomial(a, s), w(0, a + b - s));
      for (int s = 1; s <= b; ++s) rhs.emplace_back(-power(Rational(-1), s) * binomial(b, s), w(0, a + b - s));
      if (a == 0) rhs.emplace_back(power(Rational(-1), b + 1), id);
      r.cases.push_back(make_case(case_name("[w(-1,a),w(1,b)]", {{"a", a}, {"b", b}}),
                                  first_difference(commutator(w(-1, a), w(1, b)), linear_combination(0, rhs), max_degree)));
    }
  }
  // [w_{l,1}, w_{k,0}] = k w_{l+k,0} - delta_{l,-k} k(k-1)/2
  for (int l = -range; l <= range; ++l) {
    for (int k = -range; k <= range; ++k) {
      std::vector<std::pair<Rational, GradedOperator>> rhs{{Rational(k), w(l + k, 0)}};
      if (l == -k) rhs.emplace_back(Rational(-k * (k - 1), 2), id);
      r.cases.push_back(make_case(case_name("[w(l,1),w(k,0)]", {{"l", l}, {"k", k}}),
                                  first_difference(commutator(w(l, 1), w(k, 0)),
                                                   linear_combination(-(l + k), rhs), max_degree)));
    }
  }
  // [w_{l,0}, w_{0,2}] = -2l w_{l,1} - l^2 w_{l,0}
  for (int l = -range; l <= range; ++l) {
    const auto rhs = linear_combination(-l, {{Rational(-2 * l), w(l, 1)}, {Rational(-l * l), w(l, 0)}});
    r.cases.push_back(make_case(case_name("[w(l,0),w(0,2)]", {{"l", l}}),
                                first_difference(commutator(w(l, 0), w(0, 2)), rhs, max_degree)));
  }
  return r;
}

SuiteReport virasoro(int l_max, int max_degree) {
  SuiteReport r{"walg.virasoro", {}};
  for (int l = -l_max; l <= l_max; ++l) {
    for (int k = -l_max; k <= l_max; ++k) {
      std::vector<std::pair<Rational, GradedOperator>> rhs{{Rational(l - k), virasoro_bar(l + k)}};
      if (l == -k) rhs.emplace_back(Rational(l * l * l - l, 12), GradedOperator::identity());
      r.cases.push_back(make_case(case_name("[Lbar_l,Lbar_k]", {{"l", l}, {"k", k}}),
                                  first_difference(commutator(virasoro_bar(l), virasoro_bar(k)),
                                                   linear_combination(-(l + k), rhs), max_degree)));
    }
  }
  // Central value at l = 2 extracted as a scalar.
  const auto residue = commutator(virasoro_bar(2), virasoro_bar(-2)) - scale(Rational(4), virasoro_bar(0));
  const auto coeffs = solve_operator_span(residue, {GradedOperator::identity()}, max_degree);
  CaseResult central;
  central.params = "central [Lbar_2,Lbar_-2]-4Lbar_0";
  central.pass = coeffs && (*coeffs)[0] == Rational(1, 2);
  central.data = coeffs ? (*coeffs)[0].to_string() : "unsolvable";
  r.cases.push_back(central);
  return r;
}

SuiteReport recursion_consistency(int max_degree) {
  SuiteReport r{"walg.recursion", {}};
  auto& alg = WAlgebra::shared();
  for (int l = 2; l <= 4; ++l) {
    // k = 0 instance of the |l| >= 2 recursion: [w_{1,1}, w_{l-1,0}] = (l-1) w_{l,0}
    const auto up = scale(Rational(1, l - 1), commutator(alg.w(1, 1), alg.w(l - 1, 0)));
    r.cases.push_back(make_case(case_name("w(l,0) via [w(1,1),w(l-1,0)]", {{"l", l}}),
                                first_difference(up, alg.w(l, 0), max_degree)));
    const auto down = scale(Rational(1, -l + 1), commutator(alg.w(-1, 1), alg.w(-l + 1, 0)));
    r.cases.push_back(make_case(case_name("w(l,0) via [w(-1,1),w(l+1,0)]", {{"l", -l}}),
                                first_difference(down, alg.w(-l, 0), max_degree)));
  }
  // b = 3 instance of the w_{0,*} recursion reproduces the cubic w_{0,2}.
  const auto e = structure_constants(-1, 0, 1, 3);
  std::vector<std::pair<Rational, GradedOperator>> terms{{Rational(1), commutator(alg.w(-1, 0), alg.w(1, 3))}};
  for (const auto& [idx, c] : e.linear) {
    if (idx.k != 2) terms.emplace_back(-c, alg.w(idx));
  }
  terms.emplace_back(-e.central, GradedOperator::identity());
  const auto rebuilt = scale(Rational(1) / e.coefficient(2), linear_combination(0, terms));
  r.cases.push_back(make_case("w(0,2) via [w(-1,0),w(1,3)]", first_difference(rebuilt, alg.w(0, 2), max_degree)));
  return r;
}

SuiteReport freeness(int l_max, int k_max, int max_degree) {
  SuiteReport r{"walg.freeness", {}};
  for (int l = 1; l <= l_max; ++l) {
    std::vector<GradedOperator> ops;
    for (int k = 0; k <= k_max; ++k) ops.push_back(w(l, k));
    const std::size_t rank = span_rank(ops, max_degree);
    CaseResult c;
    c.params = case_name("independence of w(l,0..k_max)", {{"l", l}, {"k_max", k_max}});
    c.pass = rank == ops.size();
    c.data = "rank=" + std::to_string(rank);
    r.cases.push_back(c);
  }
  return r;
}

}  // namespace wsuite

}  // namespace wtrace

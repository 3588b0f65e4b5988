#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wtrace/daha.hpp"
#include "wtrace/series.hpp"
#include "wtrace/traceh.hpp"
#include "wtrace/walgebra.hpp"
#include "wtrace_tool/cli.hpp"

namespace {

using namespace wtrace;

constexpr int D = 8;

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> check;
};

bool all_pass(const std::vector<SuiteReport>& reports, std::string& detail) {
  bool ok = true;
  std::size_t cases = 0;
  for (const auto& r : reports) {
    cases += r.cases.size();
    if (const auto* f = r.first_failure()) {
      ok = false;
      detail += r.suite + " failed at " + f->params + "; ";
    }
  }
  detail += std::to_string(cases) + " cases";
  return ok;
}

bool criterion_walg(std::string& detail) {
  return all_pass({wsuite::relations(3, 3, D), wsuite::heisenberg(5, D), wsuite::named_consequences(3, D)}, detail);
}

bool criterion_virasoro(std::string& detail) {
  const bool suite = all_pass({wsuite::virasoro(3, D)}, detail);
  const auto lhs = commutator(virasoro_bar(2), virasoro_bar(-2)) - scale(Rational(4), virasoro_bar(0));
  const bool central = equal_up_to(lhs, scale(Rational(1, 2), GradedOperator::identity()), D);
  if (!central) detail += "; l = 2 central value is not 1/2";
  return suite && central;
}

bool criterion_trace_lemmas(std::string& detail) {
  return all_pass({tsuite::heisenberg(5, D), tsuite::same_sign(4, D), tsuite::mixed(4, D), tsuite::heisenberg_virasoro(3, D)},
                  detail);
}

bool criterion_bubbles(std::string& detail) { return all_pass({tsuite::bubbles(4, D)}, detail); }

bool criterion_pq(std::string& detail) {
  const bool scalar = equal_up_to(compose(q_op(1), p_op(1)), compose(p_op(1), q_op(1)) + GradedOperator::identity(), D);
  if (!scalar) detail += "(1,1) scalar term wrong; ";
  return all_pass({tsuite::pq(4, D)}, detail) && scalar;
}

bool criterion_psi(std::string& detail) { return all_pass({tsuite::psi(4, D)}, detail); }

bool criterion_daha(std::string& detail) {
  bool ok = all_pass({check_defining_relations(2, 4), check_defining_relations(3, 4)}, detail);
  const auto two = cocenter_dims(2, 4, 2);
  const auto three = cocenter_dims(3, 2, 2);
  const bool dims = two.dims == std::vector<int>{2, 2, 3, 3, 4} && three.dims == std::vector<int>{3, 4, 6};
  const bool structural = two.dims == hhsd_dims(2, 4) && three.dims == hhsd_dims(3, 2);
  const bool stable = two.stabilized && three.stabilized;
  if (!dims) detail += "; cocenter dimensions differ";
  if (!structural) detail += "; cocenter disagrees with structural count";
  if (!stable) detail += "; not stabilized in the buffer";
  return ok && dims && structural && stable;
}

bool criterion_series(std::string& detail) {
  const auto product = product_formula(BiSeries::Side::positive, 5, 3);
  const bool equal = product == trace_count(5, 3);
  const bool hyper = hypergeometric_check(4, 8);
  const bool spots = product.coeff(1, 0) == Rational(1) && product.coeff(2, 1) == Rational(2);
  detail += std::string("product=count ") + (equal ? "yes" : "no") + ", hypergeometric " + (hyper ? "yes" : "no");
  return equal && hyper && spots;
}

bool criterion_remark(std::string& detail) { return all_pass({tsuite::remark(D)}, detail); }

bool criterion_determinism(std::string& detail) {
  auto run = [] {
    const char* argv[] = {"wtrace", "verify", "all", "--jobs", "2"};
    std::ostringstream out;
    std::ostringstream err;
    const int code = tool::run_cli(5, argv, out, err);
    return std::make_pair(code, out.str());
  };
  const auto first = run();
  const auto second = run();
  detail += std::to_string(first.second.size()) + " bytes, exit " + std::to_string(first.first);
  return first.first == 0 && !first.second.empty() && first.second == second.second;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "W-algebra relations, Heisenberg and consequences", criterion_walg},
      {2, "Virasoro on the W side with central charge 1", criterion_virasoro},
      {3, "trace lemma suite", criterion_trace_lemmas},
      {4, "bubble suite", criterion_bubbles},
      {5, "pq exchange relations", criterion_pq},
      {6, "psi triangularity", criterion_psi},
      {7, "DH_n relations and cocenter dimensions", criterion_daha},
      {8, "Poincare series", criterion_series},
      {9, "remark cross-check", criterion_remark},
      {10, "determinism of verify all", criterion_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail += std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << detail << ", " << ms << " ms)\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

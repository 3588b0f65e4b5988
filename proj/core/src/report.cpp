#include "wtrace/report.hpp"

#include <algorithm>

namespace wtrace {

bool SuiteReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

const CaseResult* SuiteReport::first_failure() const {
  const auto it = std::find_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; });
  return it == cases.end() ? nullptr : &*it;
}

void SuiteReport::append(const SuiteReport& other) { cases.insert(cases.end(), other.cases.begin(), other.cases.end()); }

CaseResult make_case(std::string params, std::optional<int> witness) {
  CaseResult c;
  c.params = std::move(params);
  c.pass = !witness.has_value();
  c.witness_degree = witness;
  return c;
}

}  // namespace wtrace

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wtrace {

/// One verified identity instance.
struct CaseResult {
  std::string params;
  bool pass = false;
  /// First Fock degree where the two sides differ.
  std::optional<int> witness_degree;
  /// Free-form observed data (coefficients found, dimensions, ...).
  std::optional<std::string> data;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const CaseResult* first_failure() const;
  void append(const SuiteReport& other);
};

/// Case for "lhs == rhs on degrees <= D", given the first differing degree.
CaseResult make_case(std::string params, std::optional<int> witness);

}  // namespace wtrace

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wtrace/gradop.hpp"
#include "wtrace/json_io.hpp"

namespace wtrace::tool {

/// Malformed command-line input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int max_degree = 8;
  int l_max = 3;
  int k_max = 3;
  int mn_max = 4;
  int n = 2;
  int buffer = 2;
  int jobs = 1;
  std::string out;
  bool verbose = false;

  /// Throws UsageError when a bound is nonpositive or beyond the guards.
  void validate() const;
  /// Overrides fields present in a JSON object.
  void merge(const Json& j);
  [[nodiscard]] Json to_json() const;
};

/// Environment variable naming a JSON file with default RunConfig values.
inline constexpr const char* kConfigEnv = "WTRACE_CONFIG";

/// Loads defaults from $WTRACE_CONFIG if set. Throws UsageError on a bad file.
RunConfig default_config();

/// One generator such as "w:-1,2", "h:1,0", "c:0", "ct:2", "p:3", "q:1",
/// "L:-2", "b:1". Throws UsageError.
GradedOperator parse_generator(const std::string& spec);
/// Whitespace-separated generators read as an operator product, written
/// left to right: "A B" acts by B first, then A.
GradedOperator parse_operator(const std::string& text);
/// Resolution basis: items separated by spaces or ';', each a generator or
/// a range "X:a,b..X:a,c" in which only the last index varies.
std::vector<std::pair<std::string, GradedOperator>> parse_resolve_list(const std::string& text);

struct VerifyResult {
  std::vector<SuiteReport> reports;
  [[nodiscard]] bool passed() const;
};

/// Suite names: all, walg, heisenberg, virasoro, trace, pq, bubbles, daha,
/// series, psi. Throws UsageError on an unknown name.
VerifyResult run_verify(const std::string& suite, const RunConfig& config);

/// Full command line; returns the process exit code (0 pass, 1 failed
/// identity, 2 usage error). JSON goes to `out` (or --out), the summary to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wtrace::tool

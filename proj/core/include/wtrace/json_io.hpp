#pragma once

#include <nlohmann/json.hpp>

#include "wtrace/daha.hpp"
#include "wtrace/fock.hpp"
#include "wtrace/gradop.hpp"
#include "wtrace/rational.hpp"
#include "wtrace/report.hpp"
#include "wtrace/series.hpp"
#include "wtrace/walgebra.hpp"

namespace wtrace {

using Json = nlohmann::json;

/// Malformed JSON input (wrong shape, bad rational, invalid partition).
class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"terms":[{"partition":[3,1],"coeff":"5/2"}, ...]} in basis order.
Json to_json(const FockVector& v);
/// Accepts the object form above or the string "vacuum".
FockVector fock_from_json(const Json& j);

/// {"rank","degree_in","basis_in","basis_out","matrix"}; matrix rows follow basis_out.
Json to_json(const MatrixBlock& b);

/// {"linear":[{"l","k","coeff"}],"central"}
Json to_json(const CommutatorExpansion& e);

/// {"n","terms":[{"exps","perm","coeff"}]}
Json to_json(const DahaElement& f);
DahaElement daha_from_json(const Json& j);

Json to_json(const CocenterReport& r);
/// [{"class":[[len,exp],...],"coeff"}]
Json to_json(const TraceCombination& c);

/// {"side","max_t","max_q","coeffs":[{"t","q","value"}]}
Json to_json(const BiSeries& s);

/// {"suite","cases":[{"params","pass","witness_degree"?,"data"?}]}
Json to_json(const SuiteReport& r);

}  // namespace wtrace

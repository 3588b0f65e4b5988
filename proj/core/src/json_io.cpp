#include "wtrace/json_io.hpp"

namespace wtrace {

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw JsonFormatError("rational must be a string \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ArithmeticError& e) {
    throw JsonFormatError(e.what());
  }
}

namespace {

Json partition_json(const Partition& p) { return p.parts(); }

}  // namespace

Json to_json(const FockVector& v) {
  Json terms = Json::array();
  for (const auto& [p, c] : v.terms()) terms.push_back({{"partition", partition_json(p)}, {"coeff", to_json(c)}});
  return {{"terms", terms}};
}

FockVector fock_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "vacuum") return FockVector::vacuum();
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw JsonFormatError("Fock vector must be \"vacuum\" or {\"terms\":[...]}");
  }
  FockVector v;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("partition") || !t.contains("coeff") || !t["partition"].is_array()) {
      throw JsonFormatError("Fock term needs \"partition\" and \"coeff\"");
    }
    std::vector<int> parts;
    for (const auto& x : t["partition"]) {
      if (!x.is_number_integer()) throw JsonFormatError("partition parts must be integers");
      parts.push_back(x.get<int>());
    }
    try {
      v.add(Partition(parts), rational_from_json(t["coeff"]));
    } catch (const std::invalid_argument& e) {
      throw JsonFormatError(e.what());
    }
  }
  return v;
}

Json to_json(const MatrixBlock& b) {
  Json basis_in = Json::array();
  for (const auto& p : degree_basis(b.degree_in)) basis_in.push_back(partition_json(p));
  Json basis_out = Json::array();
  Json matrix = Json::array();
  if (b.degree_out() >= 0) {
    for (const auto& p : degree_basis(b.degree_out())) basis_out.push_back(partition_json(p));
    for (std::size_t row = 0; row < b.rows(); ++row) {
      Json r = Json::array();
      for (std::size_t col = 0; col < b.columns.size(); ++col) r.push_back(to_json(b.entry(row, col)));
      matrix.push_back(r);
    }
  }
  return {{"rank", b.rank}, {"degree_in", b.degree_in}, {"basis_in", basis_in}, {"basis_out", basis_out}, {"matrix", matrix}};
}

Json to_json(const CommutatorExpansion& e) {
  Json linear = Json::array();
  for (const auto& [idx, c] : e.linear) linear.push_back({{"l", idx.l}, {"k", idx.k}, {"coeff", to_json(c)}});
  return {{"linear", linear}, {"central", to_json(e.central)}};
}

Json to_json(const DahaElement& f) {
  Json terms = Json::array();
  for (const auto& [key, c] : f.terms()) {
    terms.push_back({{"exps", key.first}, {"perm", key.second.one_line()}, {"coeff", to_json(c)}});
  }
  return {{"n", f.arity()}, {"terms", terms}};
}

DahaElement daha_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) throw JsonFormatError("DH_n element needs \"n\" and \"terms\"");
  try {
    DahaElement f(j["n"].get<int>());
    for (const auto& t : j["terms"]) {
      const auto a = t.at("exps").get<Exponents>();
      const Permutation w(t.at("perm").get<std::vector<int>>());
      if (w.size() != f.arity()) throw JsonFormatError("permutation length does not match n");
      f += DahaElement::term(a, w, rational_from_json(t.at("coeff")));
    }
    return f;
  } catch (const Json::exception& e) {
    throw JsonFormatError(e.what());
  }
}

Json to_json(const CocenterReport& r) {
  return {{"n", r.n}, {"max_degree", r.max_degree}, {"buffer", r.buffer}, {"dims", r.dims}, {"stabilized", r.stabilized}};
}

Json to_json(const TraceCombination& comb) {
  Json out = Json::array();
  for (const auto& [cls, c] : comb) {
    Json cycles = Json::array();
    for (const auto& [len, e] : cls) cycles.push_back({len, e});
    out.push_back({{"class", cycles}, {"coeff", to_json(c)}});
  }
  return out;
}

Json to_json(const BiSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : s.coeffs()) coeffs.push_back({{"t", e.first}, {"q", e.second}, {"value", to_json(c)}});
  return {{"side", to_string(s.side())}, {"max_t", s.max_t()}, {"max_q", s.max_q()}, {"coeffs", coeffs}};
}

Json to_json(const SuiteReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json j = {{"params", c.params}, {"pass", c.pass}};
    if (c.witness_degree) j["witness_degree"] = *c.witness_degree;
    if (c.data) j["data"] = *c.data;
    cases.push_back(std::move(j));
  }
  return {{"suite", r.suite}, {"pass", r.passed()}, {"cases", cases}};
}

}  // namespace wtrace

#include "wtrace_tool/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

#include "wtrace/daha.hpp"
#include "wtrace/series.hpp"
#include "wtrace/traceh.hpp"
#include "wtrace/walgebra.hpp"

namespace wtrace::tool {

namespace {

constexpr int kMaxDegree = 14;
constexpr int kMaxRange = 6;
constexpr int kMaxDahaN = 4;
constexpr int kMaxBuffer = 4;
constexpr int kMaxJobs = 64;
constexpr int kMaxSeriesOrder = 40;

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

}  // namespace

void RunConfig::validate() const {
  require(max_degree >= 1 && max_degree <= kMaxDegree, "--max-degree must be in 1.." + std::to_string(kMaxDegree));
  require(l_max >= 1 && l_max <= kMaxRange, "--l-max must be in 1.." + std::to_string(kMaxRange));
  require(k_max >= 0 && k_max <= kMaxRange, "--k-max must be in 0.." + std::to_string(kMaxRange));
  require(mn_max >= 1 && mn_max <= kMaxRange, "--mn-max must be in 1.." + std::to_string(kMaxRange));
  require(n >= 1 && n <= kMaxDahaN, "--n must be in 1.." + std::to_string(kMaxDahaN));
  require(buffer >= 0 && buffer <= kMaxBuffer, "--buffer must be in 0.." + std::to_string(kMaxBuffer));
  require(jobs >= 1 && jobs <= kMaxJobs, "--jobs must be in 1.." + std::to_string(kMaxJobs));
}

void RunConfig::merge(const Json& j) {
  require(j.is_object(), "config must be a JSON object");
  auto take = [&](const char* key, int& field) {
    if (!j.contains(key)) return;
    require(j[key].is_number_integer(), std::string("config field ") + key + " must be an integer");
    field = j[key].get<int>();
  };
  take("max_degree", max_degree);
  take("l_max", l_max);
  take("k_max", k_max);
  take("mn_max", mn_max);
  take("n", n);
  take("buffer", buffer);
  take("jobs", jobs);
  if (j.contains("out")) {
    require(j["out"].is_string(), "config field out must be a string");
    out = j["out"].get<std::string>();
  }
  if (j.contains("verbose")) {
    require(j["verbose"].is_boolean(), "config field verbose must be a boolean");
    verbose = j["verbose"].get<bool>();
  }
}

Json RunConfig::to_json() const {
  // jobs, out and verbose do not change results and are left out so that
  // reports stay byte-identical across them.
  return {{"max_degree", max_degree}, {"l_max", l_max}, {"k_max", k_max}, {"mn_max", mn_max}, {"n", n}, {"buffer", buffer}};
}

RunConfig default_config() {
  RunConfig config;
  const char* path = std::getenv(kConfigEnv);
  if (path == nullptr || *path == '\0') return config;
  std::ifstream in(path);
  require(in.good(), std::string("cannot read config file ") + path);
  try {
    config.merge(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("config file is not valid JSON: ") + e.what());
  }
  return config;
}

namespace {

std::vector<int> parse_ints(const std::string& text, const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    static const std::regex integer(R"(\s*[-+]?\d{1,6}\s*)");
    require(std::regex_match(item, integer), "bad integer in generator spec \"" + spec + "\"");
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

GradedOperator parse_generator(const std::string& spec) {
  const auto colon = spec.find(':');
  require(colon != std::string::npos, "generator spec \"" + spec + "\" needs the form kind:args");
  const std::string kind = spec.substr(0, colon);
  const auto args = parse_ints(spec.substr(colon + 1), spec);
  auto arity = [&](std::size_t expected) {
    require(args.size() == expected, "generator \"" + kind + "\" takes " + std::to_string(expected) + " argument(s)");
  };
  auto& t = TraceAlgebra::shared();
  try {
    if (kind == "w") {
      arity(2);
      require(!(args[0] == 0 && args[1] == 0), "w:0,0 is zero in the quotient; refusing to evaluate it");
      require(args[1] >= 0, "w:l,k requires k >= 0");
      return w(args[0], args[1]);
    }
    if (kind == "h") {
      arity(2);
      return t.h(args[0], args[1]);
    }
    if (kind == "c") {
      arity(1);
      return t.c(args[0]);
    }
    if (kind == "ct") {
      arity(1);
      return t.ctilde(args[0]);
    }
    if (kind == "p") {
      arity(1);
      return t.p_op(args[0]);
    }
    if (kind == "q") {
      arity(1);
      return t.q_op(args[0]);
    }
    if (kind == "L") {
      arity(1);
      return t.L(args[0]);
    }
    if (kind == "b") {
      arity(1);
      require(args[0] != 0, "b:l requires l != 0");
      return t.b(args[0]);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError("generator \"" + spec + "\": " + e.what());
  }
  throw UsageError("unknown generator kind \"" + kind + "\"");
}

GradedOperator parse_operator(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  std::optional<GradedOperator> op;
  while (in >> token) {
    auto g = parse_generator(token);
    op = op ? compose(*op, g) : g;
  }
  require(op.has_value(), "empty operator expression");
  return *op;
}

std::vector<std::pair<std::string, GradedOperator>> parse_resolve_list(const std::string& text) {
  std::string normalized = text;
  for (char& ch : normalized) {
    if (ch == ';') ch = ' ';
  }
  std::istringstream in(normalized);
  std::string item;
  std::vector<std::pair<std::string, GradedOperator>> out;
  while (in >> item) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.emplace_back(item, parse_generator(item));
      continue;
    }
    const std::string lo = item.substr(0, dots);
    const std::string hi = item.substr(dots + 2);
    const auto lo_colon = lo.find(':');
    const auto hi_colon = hi.find(':');
    require(lo_colon != std::string::npos && hi_colon != std::string::npos && lo.substr(0, lo_colon) == hi.substr(0, hi_colon),
            "range \"" + item + "\" must join two specs of the same kind");
    const auto a = parse_ints(lo.substr(lo_colon + 1), lo);
    const auto b = parse_ints(hi.substr(hi_colon + 1), hi);
    require(a.size() == b.size() && !a.empty() && std::equal(a.begin(), a.end() - 1, b.begin()) && a.back() <= b.back(),
            "range \"" + item + "\" may vary only its last index, upward");
    for (int v = a.back(); v <= b.back(); ++v) {
      std::string spec = lo.substr(0, lo_colon + 1);
      for (std::size_t i = 0; i + 1 < a.size(); ++i) spec += std::to_string(a[i]) + ",";
      spec += std::to_string(v);
      out.emplace_back(spec, parse_generator(spec));
    }
  }
  require(!out.empty(), "empty resolution basis");
  return out;
}

bool VerifyResult::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
}

namespace {

template <typename... Args>
std::string key(const char* name, Args... args) {
  std::string s = name;
  ((s += "," + std::to_string(args)), ...);
  return s;
}

/// A suite run keyed by a name, so that selections sharing a suite run it once.
struct Task {
  std::string key;
  std::function<SuiteReport()> run;
};

class TaskList {
 public:
  void emplace_back(std::string key, std::function<SuiteReport()> run) {
    for (const auto& t : tasks_) {
      if (t.key == key) return;
    }
    tasks_.push_back({std::move(key), std::move(run)});
  }
  [[nodiscard]] const std::vector<Task>& tasks() const { return tasks_; }

 private:
  std::vector<Task> tasks_;
};

void add_walg(TaskList& tasks, const RunConfig& c) {
  const int d = c.max_degree;
  tasks.emplace_back(key("wsuite::relations", c.l_max, c.k_max, d), [=] { return wsuite::relations(c.l_max, c.k_max, d); });
  tasks.emplace_back(key("wsuite::heisenberg", 5, d), [=] { return wsuite::heisenberg(5, d); });
  tasks.emplace_back(key("wsuite::named_consequences", c.l_max, d), [=] { return wsuite::named_consequences(c.l_max, d); });
  tasks.emplace_back(key("wsuite::recursion_consistency", d), [=] { return wsuite::recursion_consistency(d); });
  tasks.emplace_back(key("wsuite::freeness", c.l_max, c.k_max, d), [=] { return wsuite::freeness(c.l_max, c.k_max, d); });
}

void add_heisenberg(TaskList& tasks, const RunConfig& c) {
  tasks.emplace_back(key("wsuite::heisenberg", 5, c.max_degree), [=] { return wsuite::heisenberg(5, c.max_degree); });
  tasks.emplace_back(key("tsuite::heisenberg", 5, c.max_degree), [=] { return tsuite::heisenberg(5, c.max_degree); });
}

void add_virasoro(TaskList& tasks, const RunConfig& c) {
  tasks.emplace_back(key("wsuite::virasoro", c.l_max, c.max_degree), [=] { return wsuite::virasoro(c.l_max, c.max_degree); });
  tasks.emplace_back(key("tsuite::heisenberg_virasoro", 3, c.max_degree), [=] { return tsuite::heisenberg_virasoro(3, c.max_degree); });
}

void add_trace(TaskList& tasks, const RunConfig& c) {
  const int d = c.max_degree;
  tasks.emplace_back(key("tsuite::heisenberg", 5, d), [=] { return tsuite::heisenberg(5, d); });
  tasks.emplace_back(key("tsuite::same_sign", c.mn_max, d), [=] { return tsuite::same_sign(c.mn_max, d); });
  tasks.emplace_back(key("tsuite::mixed", c.mn_max, d), [=] { return tsuite::mixed(c.mn_max, d); });
  tasks.emplace_back(key("tsuite::heisenberg_virasoro", 3, d), [=] { return tsuite::heisenberg_virasoro(3, d); });
  tasks.emplace_back(key("tsuite::remark", d), [=] { return tsuite::remark(d); });
  tasks.emplace_back(key("tsuite::bookkeeping", 3, 2, d), [=] { return tsuite::bookkeeping(3, 2, d); });
}

void add_daha(TaskList& tasks, const RunConfig& c) {
  for (int n = 2; n <= std::max(3, c.n); ++n) {
    tasks.emplace_back(key("check_defining_relations", n, c.max_degree), [=] { return check_defining_relations(n, c.max_degree); });
  }
  tasks.emplace_back(key("cocenter_suite", c.n, c.max_degree, c.buffer), [=] { return cocenter_suite(c.n, c.max_degree, c.buffer); });
  tasks.emplace_back(key("trace_reduce_suite", c.n, 3), [=] { return trace_reduce_suite(c.n, 3); });
}

void add_series(TaskList& tasks, const RunConfig&) {
  tasks.emplace_back("series", [] {
    SuiteReport r{"series", {}};
    const auto product = product_formula(BiSeries::Side::positive, 5, 3);
    auto flag = [&](std::string name, bool pass) {
      CaseResult c;
      c.params = std::move(name);
      c.pass = pass;
      r.cases.push_back(c);
    };
    flag("product_formula(>,5,3) = trace_count(5,3)", product == trace_count(5, 3));
    flag("product_formula(<,5,3) mirrors product_formula(>,5,3)",
         product.coeffs() == product_formula(BiSeries::Side::negative, 5, 3).coeffs());
    flag("hypergeometric_check(4,8)", hypergeometric_check(4, 8));
    flag("t^1 q^0 = 1", product.coeff(1, 0) == Rational(1));
    flag("t^2 q^1 = 2", product.coeff(2, 1) == Rational(2));
    flag("t^0 q^0 = 1", product.coeff(0, 0) == Rational(1));
    bool nonnegative_integers = true;
    for (const auto& [e, v] : product.coeffs()) nonnegative_integers = nonnegative_integers && v.is_integer() && v.sign() > 0;
    flag("coefficients are nonnegative integers", nonnegative_integers);
    return r;
  });
}

void add_pq(TaskList& tasks, const RunConfig& c) {
  tasks.emplace_back(key("tsuite::pq", c.mn_max, c.max_degree), [=] { return tsuite::pq(c.mn_max, c.max_degree); });
}

void add_bubbles(TaskList& tasks, const RunConfig& c) {
  tasks.emplace_back(key("tsuite::bubbles", 4, c.max_degree), [=] { return tsuite::bubbles(4, c.max_degree); });
}

void add_psi(TaskList& tasks, const RunConfig& c) {
  tasks.emplace_back(key("tsuite::psi", 4, c.max_degree), [=] { return tsuite::psi(4, c.max_degree); });
}

std::vector<SuiteReport> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<SuiteReport> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i].run();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

VerifyResult run_verify(const std::string& suite, const RunConfig& config) {
  config.validate();
  using Adder = void (*)(TaskList&, const RunConfig&);
  static const std::vector<std::pair<std::string, Adder>> table = {
      {"walg", add_walg},   {"heisenberg", add_heisenberg}, {"virasoro", add_virasoro}, {"trace", add_trace},
      {"pq", add_pq},       {"bubbles", add_bubbles},       {"daha", add_daha},         {"series", add_series},
      {"psi", add_psi}};
  TaskList tasks;
  bool known = suite == "all";
  for (const auto& [name, adder] : table) {
    if (suite == "all" || suite == name) {
      adder(tasks, config);
      known = true;
    }
  }
  require(known, "unknown suite \"" + suite + "\"");
  return {run_tasks(tasks.tasks(), config.jobs)};
}

namespace {

void emit(const Json& j, const RunConfig& config, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  require(file.good(), "cannot open output file " + config.out);
  file << text;
}

void describe(const CaseResult& c, const char* prefix, std::ostream& err) {
  err << prefix << c.params;
  if (c.witness_degree) err << " (differs at Fock degree " << *c.witness_degree << ")";
  if (c.data) err << " [" << *c.data << "]";
  err << "\n";
}

void summarize(const std::vector<SuiteReport>& reports, bool verbose, std::ostream& err) {
  for (const auto& r : reports) {
    std::size_t passed = 0;
    for (const auto& c : r.cases) passed += c.pass ? 1 : 0;
    err << r.suite << ": " << passed << "/" << r.cases.size() << " passed\n";
    if (verbose) {
      for (const auto& c : r.cases) {
        if (!c.pass) describe(c, "  failed: ", err);
      }
    } else if (const auto* f = r.first_failure()) {
      describe(*f, "  first failure: ", err);
    }
  }
}

Json blocks_json(const GradedOperator& op, int max_degree) {
  Json blocks = Json::array();
  for (int d = 0; d <= max_degree; ++d) {
    if (d + op.rank() < 0) continue;
    blocks.push_back(to_json(*op.block(d)));
  }
  return blocks;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = default_config();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Exact verification of the trace of the Heisenberg category against W_{1+inf}", "wtrace"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-degree", config.max_degree, "Highest Fock degree checked");
    sub->add_option("--out", config.out, "Write JSON here instead of stdout");
    sub->add_option("--jobs", config.jobs, "Worker threads");
    sub->add_flag("-v,--verbose", config.verbose, "List every failing case in the summary");
  };

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "all|walg|heisenberg|virasoro|trace|pq|bubbles|daha|series|psi");
  verify->add_option("--l-max", config.l_max, "W-algebra range |l| <= L");
  verify->add_option("--k-max", config.k_max, "W-algebra range k <= K");
  verify->add_option("--mn-max", config.mn_max, "Trace lemma range m,n <= M");
  verify->add_option("--n", config.n, "DH_n arity for the cocenter");
  verify->add_option("--buffer", config.buffer, "Commutator degree buffer for the cocenter");
  add_common(verify);

  std::string eval_spec;
  std::string eval_vector = "vacuum";
  auto* eval = app.add_subcommand("eval", "Apply an operator to a Fock vector");
  eval->add_option("spec", eval_spec, "Generators, composed left to right")->required();
  eval->add_option("vector", eval_vector, "Fock vector JSON or \"vacuum\"");
  add_common(eval);

  std::string comm_a;
  std::string comm_b;
  std::string resolve;
  auto* comm = app.add_subcommand("commutator", "Matrix blocks of [A,B]");
  comm->add_option("a", comm_a)->required();
  comm->add_option("b", comm_b)->required();
  comm->add_option("--resolve", resolve, "Express [A,B] in a span, e.g. \"w:-1,0..w:-1,3\"");
  add_common(comm);

  std::string side;
  int series_r = 0;
  int series_k = 0;
  std::string which = "both";
  auto* poincare = app.add_subcommand("poincare", "Bigraded Poincare series");
  poincare->add_option("side", side, "\">\" or \"<\"")->required();
  poincare->add_option("R", series_r, "t order")->required();
  poincare->add_option("K", series_k, "q order")->required();
  poincare->add_option("which", which, "product|count|both");
  add_common(poincare);

  auto* daha = app.add_subcommand("daha-dims", "Graded cocenter dimensions of DH_n");
  daha->add_option("--n", config.n, "Arity");
  daha->add_option("--buffer", config.buffer, "Commutator degree buffer");
  add_common(daha);

  int psi_l = 4;
  auto* psi = app.add_subcommand("psi-leading", "Coefficients of h(1,l) in w(-1,0..l)");
  psi->add_option("l", psi_l, "Dot count l");
  add_common(psi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    config.validate();
    if (verify->parsed()) {
      const auto result = run_verify(suite, config);
      Json reports = Json::array();
      for (const auto& r : result.reports) reports.push_back(to_json(r));
      emit({{"command", "verify"}, {"suite", suite}, {"config", config.to_json()}, {"pass", result.passed()}, {"reports", reports}},
           config, out);
      summarize(result.reports, config.verbose, err);
      return result.passed() ? 0 : 1;
    }
    if (eval->parsed()) {
      const auto op = parse_operator(eval_spec);
      FockVector v;
      try {
        v = fock_from_json(eval_vector == "vacuum" ? Json("vacuum") : Json::parse(eval_vector));
      } catch (const Json::parse_error& e) {
        throw UsageError(std::string("vector is not valid JSON: ") + e.what());
      } catch (const JsonFormatError& e) {
        throw UsageError(e.what());
      }
      for (int d : v.degrees()) require(d <= kMaxDegree, "input vector degree exceeds " + std::to_string(kMaxDegree));
      emit({{"command", "eval"}, {"spec", eval_spec}, {"result", to_json(op.apply(v))}}, config, out);
      return 0;
    }
    if (comm->parsed()) {
      const auto a = parse_operator(comm_a);
      const auto b = parse_operator(comm_b);
      const auto op = commutator(a, b);
      Json j = {{"command", "commutator"}, {"a", comm_a}, {"b", comm_b}, {"rank", op.rank()}, {"blocks", blocks_json(op, config.max_degree)}};
      int code = 0;
      if (!resolve.empty()) {
        const auto basis = parse_resolve_list(resolve);
        std::vector<GradedOperator> ops;
        Json names = Json::array();
        for (const auto& [name, g] : basis) {
          require(g.rank() == op.rank(), "resolution element " + name + " has rank " + std::to_string(g.rank()) +
                                             ", commutator has rank " + std::to_string(op.rank()));
          ops.push_back(g);
          names.push_back(name);
        }
        const auto coeffs = solve_operator_span(op, ops, config.max_degree);
        Json res = {{"basis", names}, {"resolved", coeffs.has_value()}};
        if (coeffs) {
          Json cs = Json::array();
          for (const auto& c : *coeffs) cs.push_back(to_json(c));
          res["coeffs"] = cs;
        } else {
          code = 1;
          err << "commutator is not in the span of the given elements on degrees <= " << config.max_degree << "\n";
        }
        j["resolution"] = res;
      }
      emit(j, config, out);
      return code;
    }
    if (poincare->parsed()) {
      BiSeries::Side s{};
      try {
        s = parse_side(side);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      require(series_r >= 0 && series_r <= kMaxSeriesOrder && series_k >= 0 && series_k <= kMaxSeriesOrder,
              "series orders must be in 0.." + std::to_string(kMaxSeriesOrder));
      require(which == "product" || which == "count" || which == "both", "which must be product, count or both");
      Json j = {{"command", "poincare"}, {"side", side}};
      const auto product = product_formula(s, series_r, series_k);
      // The count is computed on the positive half; the negative half is its mirror image.
      BiSeries count(s, series_r, series_k);
      const auto positive_count = trace_count(series_r, series_k);
      for (const auto& [e, v] : positive_count.coeffs()) count.add(e.first, e.second, v);
      if (which != "count") j["product"] = to_json(product);
      if (which != "product") j["count"] = to_json(count);
      int code = 0;
      if (which == "both") {
        j["equal"] = product == count;
        code = product == count ? 0 : 1;
      }
      emit(j, config, out);
      return code;
    }
    if (daha->parsed()) {
      const auto report = cocenter_dims(config.n, config.max_degree, config.buffer);
      const auto expected = hhsd_dims(config.n, config.max_degree);
      emit({{"command", "daha-dims"}, {"cocenter", to_json(report)}, {"hhsd", expected}, {"matches_hhsd", report.dims == expected}},
           config, out);
      return 0;
    }
    if (psi->parsed()) {
      require(psi_l >= 0 && psi_l <= kMaxRange, "l must be in 0.." + std::to_string(kMaxRange));
      const auto coeffs = psi_leading_term(psi_l, config.max_degree);
      Json j = {{"command", "psi-leading"}, {"l", psi_l}, {"max_degree", config.max_degree}, {"solved", coeffs.has_value()}};
      bool ok = false;
      if (coeffs) {
        Json cs = Json::array();
        for (const auto& c : *coeffs) cs.push_back(to_json(c));
        j["coeffs"] = cs;
        ok = coeffs->back() == (psi_l % 2 == 0 ? Rational(1) : Rational(-1));
      }
      j["leading_ok"] = ok;
      emit(j, config, out);
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace wtrace::tool

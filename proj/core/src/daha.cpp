#include "wtrace/daha.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "wtrace/partition.hpp"

namespace wtrace {

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation in one-line notation");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple transposition index out of range");
  auto p = identity(n);
  std::swap(p.image_[static_cast<std::size_t>(i - 1)], p.image_[static_cast<std::size_t>(i)]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::reduced_word() const {
  // Peel right descents: if u(i) > u(i+1) then u = (u s_i) s_i with u s_i shorter.
  std::vector<int> u = image_;
  std::vector<int> reversed;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] > u[i + 1]) {
        std::swap(u[i], u[i + 1]);
        reversed.push_back(static_cast<int>(i + 1));
        found = true;
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cyc;
    for (int j = start; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(v.image_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u(v.image_[i]);
  return Permutation(std::move(out));
}

int total_degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), 0); }

DahaElement::DahaElement(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("DH_n requires n >= 1");
}

DahaElement DahaElement::one(int n) { return term(Exponents(static_cast<std::size_t>(n), 0), Permutation::identity(n)); }

DahaElement DahaElement::x(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("x_i index out of range");
  Exponents a(static_cast<std::size_t>(n), 0);
  a[static_cast<std::size_t>(i - 1)] = 1;
  return term(a, Permutation::identity(n));
}

DahaElement DahaElement::T(int n, int i) { return group_element(Permutation::simple(n, i)); }

DahaElement DahaElement::group_element(const Permutation& w) {
  return term(Exponents(static_cast<std::size_t>(w.size()), 0), w);
}

DahaElement DahaElement::term(const Exponents& a, const Permutation& w, const Rational& coeff) {
  if (a.size() != static_cast<std::size_t>(w.size())) throw std::invalid_argument("exponent length does not match arity");
  for (int e : a) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  DahaElement f(w.size());
  f.add(a, w, coeff);
  return f;
}

int DahaElement::degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, total_degree(key.first));
  return d;
}

DahaElement DahaElement::homogeneous_part(int degree) const {
  DahaElement out(n_);
  for (const auto& [key, c] : terms_) {
    if (total_degree(key.first) == degree) out.terms_.emplace(key, c);
  }
  return out;
}

void DahaElement::add(const Exponents& a, const Permutation& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, w}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DahaElement::check_arity(const DahaElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("DH_n arity mismatch");
}

DahaElement& DahaElement::operator+=(const DahaElement& o) {
  check_arity(o);
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

DahaElement& DahaElement::operator-=(const DahaElement& o) {
  check_arity(o);
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

DahaElement operator*(const Rational& c, const DahaElement& f) {
  DahaElement out(f.n_);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : f.terms_) out.terms_.emplace(key, c * v);
  return out;
}

std::string DahaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*x^(";
    for (std::size_t i = 0; i < key.first.size(); ++i) os << (i ? "," : "") << key.first[i];
    os << ")*[";
    for (std::size_t i = 0; i < key.second.one_line().size(); ++i) os << (i ? "," : "") << key.second.one_line()[i];
    os << "]";
  }
  return os.str();
}

std::map<Exponents, Rational> divided_difference(const Exponents& a, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= a.size()) throw std::invalid_argument("divided difference index out of range");
  const auto ii = static_cast<std::size_t>(i - 1);
  const int p = a[ii];
  const int q = a[ii + 1];
  std::map<Exponents, Rational> out;
  if (p == q) return out;
  // (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1})
  //   = sign * (x_i x_{i+1})^lo * sum_{f+g=hi-lo-1} x_i^f x_{i+1}^g
  const int lo = std::min(p, q);
  const int hi = std::max(p, q);
  const Rational sign(p > q ? 1 : -1);
  for (int f = 0; f <= hi - lo - 1; ++f) {
    Exponents b = a;
    b[ii] = lo + f;
    b[ii + 1] = lo + (hi - lo - 1 - f);
    out.emplace(std::move(b), sign);
  }
  return out;
}

namespace {

/// T_i * f, f in normal form.
DahaElement left_T(int i, const DahaElement& f) {
  const int n = f.arity();
  const auto s = Permutation::simple(n, i);
  const auto ii = static_cast<std::size_t>(i - 1);
  DahaElement out(n);
  for (const auto& [key, c] : f.terms()) {
    const auto& [a, w] = key;
    Exponents swapped = a;
    std::swap(swapped[ii], swapped[ii + 1]);
    out.add(swapped, s * w, c);
    for (const auto& [b, dc] : divided_difference(a, i)) out.add(b, w, c * dc);
  }
  return out;
}

/// w * x^b in normal form.
DahaElement perm_times_monomial(const Permutation& w, const Exponents& b) {
  DahaElement e = DahaElement::term(b, Permutation::identity(w.size()));
  const auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) e = left_T(*it, e);
  return e;
}

}  // namespace

DahaElement multiply(const DahaElement& f, const DahaElement& g) {
  if (f.arity() != g.arity()) throw std::invalid_argument("DH_n arity mismatch");
  DahaElement out(f.arity());
  std::map<std::pair<Permutation, Exponents>, DahaElement> cache;
  for (const auto& [fk, fc] : f.terms()) {
    const auto& [a, u] = fk;
    for (const auto& [gk, gc] : g.terms()) {
      const auto& [b, v] = gk;
      auto it = cache.find({u, b});
      if (it == cache.end()) it = cache.emplace(std::pair{u, b}, perm_times_monomial(u, b)).first;
      for (const auto& [ek, ec] : it->second.terms()) {
        Exponents sum = ek.first;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += a[i];
        out.add(sum, ek.second * v, fc * gc * ec);
      }
    }
  }
  return out;
}

DahaElement operator*(const DahaElement& f, const DahaElement& g) { return multiply(f, g); }

DahaElement daha_commutator(const DahaElement& f, const DahaElement& g) { return multiply(f, g) - multiply(g, f); }

DahaElement random_element(int n, int max_degree, int terms, std::mt19937& rng) {
  DahaElement f(n);
  std::uniform_int_distribution<int> deg_dist(0, max_degree);
  std::uniform_int_distribution<int> pos_dist(0, n - 1);
  std::uniform_int_distribution<int> coeff_dist(-3, 3);
  std::uniform_int_distribution<int> den_dist(1, 2);
  for (int t = 0; t < terms; ++t) {
    Exponents a(static_cast<std::size_t>(n), 0);
    const int d = deg_dist(rng);
    for (int k = 0; k < d; ++k) ++a[static_cast<std::size_t>(pos_dist(rng))];
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    f.add(a, Permutation(perm), Rational(coeff_dist(rng), den_dist(rng)));
  }
  return f;
}

namespace {

std::string label(const std::string& tag, std::initializer_list<std::pair<const char*, int>> values) {
  std::string s = tag;
  bool first = true;
  for (const auto& [name, value] : values) {
    s += first ? " " : ",";
    first = false;
    s += name;
    s += "=";
    s += std::to_string(value);
  }
  return s;
}

CaseResult identity_case(std::string name, const DahaElement& lhs, const DahaElement& rhs) {
  CaseResult c;
  c.params = std::move(name);
  c.pass = lhs == rhs;
  if (!c.pass) c.data = "lhs - rhs = " + (lhs - rhs).to_string();
  return c;
}

DahaElement x_power(int n, int i, int a) {
  Exponents e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i - 1)] = a;
  return DahaElement::term(e, Permutation::identity(n));
}

}  // namespace

SuiteReport check_defining_relations(int n, int max_degree, int samples, unsigned seed) {
  if (n < 2) throw std::invalid_argument("defining relations need n >= 2");
  SuiteReport r{label("daha.relations", {{"n", n}}), {}};
  const auto one = DahaElement::one(n);
  auto X = [n](int i) { return DahaElement::x(n, i); };
  auto T = [n](int i) { return DahaElement::T(n, i); };
  for (int i = 1; i < n; ++i) {
    r.cases.push_back(identity_case(label("T_i x_i = x_{i+1} T_i + 1", {{"i", i}}), T(i) * X(i), X(i + 1) * T(i) + one));
    r.cases.push_back(identity_case(label("x_i T_i = T_i x_{i+1} + 1", {{"i", i}}), X(i) * T(i), T(i) * X(i + 1) + one));
    r.cases.push_back(identity_case(label("T_i^2 = 1", {{"i", i}}), T(i) * T(i), one));
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) > 1) {
        r.cases.push_back(identity_case(label("T_i T_j = T_j T_i", {{"i", i}, {"j", j}}), T(i) * T(j), T(j) * T(i)));
      }
    }
    if (i + 1 < n) {
      r.cases.push_back(identity_case(label("braid", {{"i", i}}), T(i) * T(i + 1) * T(i), T(i + 1) * T(i) * T(i + 1)));
    }
    for (int j = 1; j <= n; ++j) {
      if (j != i && j != i + 1) {
        r.cases.push_back(identity_case(label("T_i x_j = x_j T_i", {{"i", i}, {"j", j}}), T(i) * X(j), X(j) * T(i)));
      }
    }
    for (int a = 0; a <= max_degree; ++a) {
      DahaElement rhs(n);
      for (int f = 0; f + 1 <= a; ++f) rhs += x_power(n, i, f) * x_power(n, i + 1, a - 1 - f);
      r.cases.push_back(identity_case(label("T_i x_i^a - x_{i+1}^a T_i", {{"i", i}, {"a", a}}),
                                      T(i) * x_power(n, i, a) - x_power(n, i + 1, a) * T(i), rhs));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      r.cases.push_back(identity_case(label("x_i x_j = x_j x_i", {{"i", i}, {"j", j}}), X(i) * X(j), X(j) * X(i)));
    }
  }
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const auto f = random_element(n, max_degree, 3, rng);
    const auto g = random_element(n, max_degree, 3, rng);
    const auto h = random_element(n, max_degree, 3, rng);
    r.cases.push_back(identity_case(label("associativity", {{"sample", s}}), (f * g) * h, f * (g * h)));
  }
  return r;
}

namespace {

std::vector<Exponents> monomials(int n, int d) {
  std::vector<Exponents> out;
  Exponents a(static_cast<std::size_t>(n), 0);
  // Lexicographically descending enumeration of compositions of d.
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
    if (pos + 1 == a.size()) {
      a[pos] = remaining;
      out.push_back(a);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      a[pos] = e;
      rec(pos + 1, remaining - e);
    }
  };
  rec(0, d);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::size_t binomial_size(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

CocenterSpace::CocenterSpace(int n, int top_degree, const CocenterLimits& limits) : n_(n), top_(top_degree) {
  if (n < 1 || top_degree < 0) throw std::invalid_argument("cocenter requires n >= 1 and degree >= 0");
  // dim A_{<=T} = n! * C(T+n, n)
  std::size_t estimate = binomial_size(top_degree + n, n);
  for (int k = 2; k <= n; ++k) estimate *= static_cast<std::size_t>(k);
  if (estimate > limits.max_basis) {
    throw ResourceLimitError("cocenter basis of size " + std::to_string(estimate) + " exceeds limit " +
                             std::to_string(limits.max_basis));
  }
  const auto perms = all_permutations(n);
  degree_start_.assign(static_cast<std::size_t>(top_degree + 1), 0);
  for (int d = top_degree; d >= 0; --d) {
    degree_start_[static_cast<std::size_t>(d)] = basis_.size();
    for (const auto& a : monomials(n, d)) {
      for (const auto& w : perms) {
        index_.emplace(DahaElement::Key{a, w}, basis_.size());
        basis_.emplace_back(a, w);
      }
    }
  }
  // [g, y] over algebra generators g and basis elements y spans the same
  // space as all commutators of basis pairs within the degree bound.
  std::vector<std::pair<DahaElement, int>> generators;
  for (int i = 1; i <= n; ++i) generators.emplace_back(DahaElement::x(n, i), 1);
  for (int i = 1; i < n; ++i) generators.emplace_back(DahaElement::T(n, i), 0);
  for (const auto& [g, gdeg] : generators) {
    for (const auto& [a, w] : basis_) {
      if (total_degree(a) + gdeg > top_degree) continue;
      span_.insert(coordinates(daha_commutator(g, DahaElement::term(a, w))));
    }
  }
}

SparseVec CocenterSpace::coordinates(const DahaElement& f) const {
  SparseVec v;
  for (const auto& [key, c] : f.terms()) {
    const auto it = index_.find(key);
    if (it == index_.end()) throw std::invalid_argument("element exceeds the cocenter truncation degree");
    v.add(it->second, c);
  }
  return v;
}

std::size_t CocenterSpace::offset(int d) const { return degree_start_.at(static_cast<std::size_t>(d)); }

std::size_t CocenterSpace::quotient_dim(int d) const {
  if (d < 0) return 0;
  const std::size_t start = offset(d);
  return (basis_.size() - start) - span_.rank_from(start);
}

bool CocenterSpace::contains(const DahaElement& f) const { return span_.contains(coordinates(f)); }

CocenterReport cocenter_dims(int n, int max_degree, int buffer, const CocenterLimits& limits) {
  if (buffer < 0) throw std::invalid_argument("buffer must be nonnegative");
  auto dims_for = [&](int b) {
    const CocenterSpace space(n, max_degree + b, limits);
    std::vector<int> dims;
    for (int d = 0; d <= max_degree; ++d) {
      dims.push_back(static_cast<int>(space.quotient_dim(d)) - static_cast<int>(space.quotient_dim(d - 1)));
    }
    return dims;
  };
  CocenterReport r;
  r.n = n;
  r.max_degree = max_degree;
  r.buffer = buffer;
  r.dims = dims_for(buffer);
  r.stabilized = buffer > 0 && dims_for(buffer - 1) == r.dims;
  return r;
}

std::vector<int> hhsd_dims(int n, int max_degree) {
  std::vector<int> total(static_cast<std::size_t>(max_degree + 1), 0);
  for (const auto& lambda : degree_basis(n)) {
    std::vector<int> series(static_cast<std::size_t>(max_degree + 1), 0);
    series[0] = 1;
    std::vector<int> lengths = lambda.parts();
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    for (int len : lengths) {
      // S^m C[x] in degree k: partitions of k into at most m parts
      const int m = lambda.multiplicity(len);
      std::vector<int> sym(static_cast<std::size_t>(max_degree + 1), 0);
      for (int k = 0; k <= max_degree; ++k) {
        int count = 0;
        for (const auto& mu : degree_basis(k)) count += static_cast<int>(mu.length()) <= m ? 1 : 0;
        sym[static_cast<std::size_t>(k)] = count;
      }
      std::vector<int> next(static_cast<std::size_t>(max_degree + 1), 0);
      for (int i = 0; i <= max_degree; ++i) {
        for (int j = 0; i + j <= max_degree; ++j) {
          next[static_cast<std::size_t>(i + j)] += series[static_cast<std::size_t>(i)] * sym[static_cast<std::size_t>(j)];
        }
      }
      series = std::move(next);
    }
    for (int k = 0; k <= max_degree; ++k) total[static_cast<std::size_t>(k)] += series[static_cast<std::size_t>(k)];
  }
  return total;
}

namespace {

/// Blocks of the standard permutation for a cycle type: block t covers
/// positions start+1 .. start+len and maps start+j -> start+j+1 cyclically.
struct Block {
  int start;
  int len;
};

std::vector<Block> blocks_of(const std::vector<int>& lengths) {
  std::vector<Block> out;
  int start = 0;
  for (int len : lengths) {
    out.push_back({start, len});
    start += len;
  }
  return out;
}

Permutation standard_permutation(int n, const std::vector<int>& lengths) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (const auto& b : blocks_of(lengths)) {
    for (int j = 1; j <= b.len; ++j) img[static_cast<std::size_t>(b.start + j - 1)] = b.start + (j % b.len) + 1;
  }
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> sorted_cycles(const Permutation& w) {
  auto cycles = w.cycles();
  std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return cycles;
}

/// g * f * g^{-1}, equal to f in the cocenter.
DahaElement conjugate(const Permutation& g, const DahaElement& f) {
  return DahaElement::group_element(g) * f * DahaElement::group_element(g.inverse());
}

/// One rewriting step of a single term towards its canonical form, or nullopt
/// when the term already is a canonical class representative.
std::optional<DahaElement> rewrite_step(const Exponents& a, const Permutation& w) {
  const int n = w.size();
  const auto cycles = sorted_cycles(w);
  std::vector<int> lengths;
  for (const auto& c : cycles) lengths.push_back(static_cast<int>(c.size()));
  const auto standard = standard_permutation(n, lengths);
  const DahaElement self = DahaElement::term(a, w);
  if (w != standard) {
    // g maps the t-th element of each (ordered) cycle to block position t.
    std::vector<int> img(static_cast<std::size_t>(n));
    int pos = 0;
    for (const auto& c : cycles) {
      for (int v : c) img[static_cast<std::size_t>(v - 1)] = ++pos;
    }
    return conjugate(Permutation(std::move(img)), self);
  }
  const auto blocks = blocks_of(lengths);
  for (const auto& b : blocks) {
    for (int j = b.len; j >= 2; --j) {
      const int i = b.start + j;
      if (a[static_cast<std::size_t>(i - 1)] == 0) continue;
      // x_i Y == Y x_i in the cocenter: move one unit from position i to w(i).
      Exponents rest = a;
      --rest[static_cast<std::size_t>(i - 1)];
      return DahaElement::term(rest, w) * DahaElement::x(n, i);
    }
  }
  for (std::size_t t = 0; t + 1 < blocks.size(); ++t) {
    const auto& b1 = blocks[t];
    const auto& b2 = blocks[t + 1];
    if (b1.len != b2.len) continue;
    if (a[static_cast<std::size_t>(b1.start)] >= a[static_cast<std::size_t>(b2.start)]) continue;
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    for (int j = 0; j < b1.len; ++j) std::swap(img[static_cast<std::size_t>(b1.start + j)], img[static_cast<std::size_t>(b2.start + j)]);
    return conjugate(Permutation(std::move(img)), self);
  }
  return std::nullopt;
}

TraceClass class_of(const Exponents& a, const Permutation& w) {
  TraceClass cls;
  for (const auto& c : sorted_cycles(w)) cls.emplace_back(static_cast<int>(c.size()), a[static_cast<std::size_t>(c.front() - 1)]);
  return cls;
}

}  // namespace

TraceCombination trace_reduce(const DahaElement& f) {
  TraceCombination out;
  DahaElement work = f;
  while (!work.is_zero()) {
    // Highest degree first, so every correction lands strictly below.
    const int top = work.degree();
    auto it = std::find_if(work.terms().begin(), work.terms().end(),
                           [top](const auto& kv) { return total_degree(kv.first.first) == top; });
    const auto [a, w] = it->first;
    const Rational c = it->second;
    work.add(a, w, -c);
    if (auto next = rewrite_step(a, w)) {
      work += c * *next;
    } else {
      auto [slot, inserted] = out.try_emplace(class_of(a, w), c);
      if (!inserted) {
        slot->second += c;
        if (slot->second.is_zero()) out.erase(slot);
      }
    }
  }
  return out;
}

DahaElement class_representative(int n, const TraceClass& cls) {
  std::vector<int> lengths;
  for (const auto& [len, e] : cls) lengths.push_back(len);
  if (std::accumulate(lengths.begin(), lengths.end(), 0) != n) throw std::invalid_argument("class does not match arity");
  Exponents a(static_cast<std::size_t>(n), 0);
  const auto blocks = blocks_of(lengths);
  for (std::size_t t = 0; t < blocks.size(); ++t) a[static_cast<std::size_t>(blocks[t].start)] = cls[t].second;
  return DahaElement::term(a, standard_permutation(n, lengths));
}

DahaElement combination_representative(int n, const TraceCombination& comb) {
  DahaElement out(n);
  for (const auto& [cls, c] : comb) out += c * class_representative(n, cls);
  return out;
}

SuiteReport cocenter_suite(int n, int max_degree, int buffer, const CocenterLimits& limits) {
  SuiteReport r{label("daha.cocenter", {{"n", n}}), {}};
  const auto report = cocenter_dims(n, max_degree, buffer, limits);
  const auto expected = hhsd_dims(n, max_degree);
  auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  CaseResult c;
  c.params = label("cocenter_dims", {{"n", n}, {"D", max_degree}, {"B", buffer}});
  c.pass = report.dims == expected && report.stabilized;
  c.data = "dims=" + list(report.dims) + " hhsd=" + list(expected) + (report.stabilized ? " stabilized" : " not stabilized");
  r.cases.push_back(c);
  return r;
}

SuiteReport trace_reduce_suite(int n, int max_degree, int samples, unsigned seed) {
  SuiteReport r{label("daha.trace_reduce", {{"n", n}}), {}};
  const CocenterSpace space(n, max_degree);
  std::mt19937 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int s = 0; s < samples; ++s) {
    const auto f = random_element(n, max_degree, 3, rng);
    const auto reduced = trace_reduce(f);
    CaseResult member;
    member.params = label("trace_reduce(f) - f in commutator span", {{"sample", s}});
    member.pass = space.contains(combination_representative(n, reduced) - f);
    r.cases.push_back(member);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Permutation g(perm);
    CaseResult invariant;
    invariant.params = label("trace_reduce(g f g^-1) = trace_reduce(f)", {{"sample", s}});
    invariant.pass = trace_reduce(conjugate(g, f)) == reduced;
    r.cases.push_back(invariant);
  }
  return r;
}

std::string to_string(const TraceClass& cls) {
  std::string s = "{";
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(cls[i].first) + ":" + std::to_string(cls[i].second) + ")";
  }
  return s + "}";
}

}  // namespace wtrace

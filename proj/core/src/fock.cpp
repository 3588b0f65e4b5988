#include "wtrace/fock.hpp"

#include <set>
#include <stdexcept>

namespace wtrace {

FockVector::FockVector(std::initializer_list<std::pair<const Partition, Rational>> init) {
  for (const auto& [p, c] : init) add(p, c);
}

FockVector FockVector::vacuum() { return basis(Partition{}); }

FockVector FockVector::basis(const Partition& p, const Rational& coeff) {
  FockVector v;
  v.add(p, coeff);
  return v;
}

Rational FockVector::coeff(const Partition& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

FockVector FockVector::homogeneous_part(int degree) const {
  FockVector out;
  for (const auto& [p, c] : terms_) {
    if (p.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), p, c);
  }
  return out;
}

std::vector<int> FockVector::degrees() const {
  std::vector<int> out;
  for (const auto& [p, c] : terms_) {
    if (out.empty() || out.back() != p.degree()) out.push_back(p.degree());
  }
  return out;
}

void FockVector::add(const Partition& p, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FockVector::axpy(const Rational& factor, const FockVector& other) {
  if (factor.is_zero()) return;
  for (const auto& [p, c] : other.terms_) add(p, factor * c);
}

FockVector& FockVector::operator+=(const FockVector& other) {
  axpy(Rational(1), other);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  axpy(Rational(-1), other);
  return *this;
}

FockVector operator*(const Rational& c, const FockVector& v) {
  FockVector out;
  out.axpy(c, v);
  return out;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s = "{";
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) s += ", ";
    first = false;
    s += p.to_string() + ":" + c.to_string();
  }
  return s + "}";
}

FockVector mul_power_sum(int n, const FockVector& v) {
  if (n <= 0) throw std::invalid_argument("mul_power_sum requires n >= 1");
  FockVector out;
  for (const auto& [p, c] : v.terms()) out.add(p.with_part(n), c);
  return out;
}

FockVector del_power_sum(int n, const FockVector& v) {
  if (n <= 0) throw std::invalid_argument("del_power_sum requires n >= 1");
  FockVector out;
  for (const auto& [p, c] : v.terms()) {
    const int m = p.multiplicity(n);
    if (m == 0) continue;
    out.add(p.without_part(n), c * Rational(n * m));
  }
  return out;
}

FockVector linear_combine(const std::vector<std::pair<Rational, FockVector>>& pairs) {
  FockVector out;
  for (const auto& [c, v] : pairs) out.axpy(c, v);
  return out;
}

}  // namespace wtrace

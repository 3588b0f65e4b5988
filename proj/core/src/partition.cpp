#include "wtrace/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace wtrace {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int n) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), n));
}

Partition Partition::with_part(int n) const {
  if (n <= 0) throw std::invalid_argument("partition parts must be positive");
  Partition out;
  out.parts_.reserve(parts_.size() + 1);
  const auto pos = std::find_if(parts_.begin(), parts_.end(), [n](int p) { return p < n; });
  out.parts_.insert(out.parts_.end(), parts_.begin(), pos);
  out.parts_.push_back(n);
  out.parts_.insert(out.parts_.end(), pos, parts_.end());
  out.degree_ = degree_ + n;
  return out;
}

Partition Partition::without_part(int n) const {
  Partition out = *this;
  const auto pos = std::find(out.parts_.begin(), out.parts_.end(), n);
  if (pos == out.parts_.end()) throw std::invalid_argument("partition has no such part");
  out.parts_.erase(pos);
  out.degree_ -= n;
  return out;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(), a.parts().end());
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

struct BasisTable {
  std::vector<Partition> basis;
  std::map<Partition, std::size_t, PartitionOrder> index;
};

const BasisTable& table(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<BasisTable>> tables;
  if (d < 0) throw std::invalid_argument("negative degree");
  std::lock_guard lock(mutex);
  auto& slot = tables[d];
  if (!slot) {
    auto t = std::make_unique<BasisTable>();
    std::vector<int> prefix;
    enumerate(d, d, prefix, t->basis);
    for (std::size_t i = 0; i < t->basis.size(); ++i) t->index.emplace(t->basis[i], i);
    slot = std::move(t);
  }
  return *slot;
}

}  // namespace

const std::vector<Partition>& degree_basis(int d) { return table(d).basis; }

std::size_t basis_index(const Partition& p) {
  const auto& t = table(p.degree());
  return t.index.at(p);
}

std::size_t partition_count(int d) { return d < 0 ? 0 : degree_basis(d).size(); }

}  // namespace wtrace

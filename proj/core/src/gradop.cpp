#include "wtrace/gradop.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "wtrace/partition.hpp"

namespace wtrace {

std::size_t MatrixBlock::rows() const { return partition_count(degree_out()); }

bool MatrixBlock::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const SparseVec& c) { return c.empty(); });
}

namespace detail {

class OperatorNode {
 public:
  OperatorNode(int rank, std::optional<int> filtration) : rank_(rank), filtration_(filtration) {}
  virtual ~OperatorNode() = default;
  OperatorNode(const OperatorNode&) = delete;
  OperatorNode& operator=(const OperatorNode&) = delete;

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] std::optional<int> filtration() const { return filtration_; }

  std::shared_ptr<const MatrixBlock> block(int d) const {
    if (d < 0) throw std::invalid_argument("negative Fock degree");
    {
      std::lock_guard lock(mutex_);
      if (const auto it = memo_.find(d); it != memo_.end()) return it->second;
    }
    // Computed without holding the lock: children take their own locks and a
    // duplicate computation is harmless since evaluation is pure.
    auto fresh = std::make_shared<const MatrixBlock>(compute_checked(d));
    std::lock_guard lock(mutex_);
    return memo_.try_emplace(d, std::move(fresh)).first->second;
  }

 protected:
  [[nodiscard]] MatrixBlock empty_block(int d) const {
    MatrixBlock b;
    b.rank = rank_;
    b.degree_in = d;
    b.columns.resize(partition_count(d));
    return b;
  }

  virtual MatrixBlock compute(int d) const = 0;

 private:
  MatrixBlock compute_checked(int d) const {
    if (d + rank_ < 0) return empty_block(d);
    return compute(d);
  }

  int rank_;
  std::optional<int> filtration_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<int, std::shared_ptr<const MatrixBlock>> memo_;
};

namespace {

/// Operators given by an action on single basis vectors.
class BasisActionNode final : public OperatorNode {
 public:
  using Action = std::function<FockVector(const Partition&)>;
  BasisActionNode(int rank, std::optional<int> filtration, Action action)
      : OperatorNode(rank, filtration), action_(std::move(action)) {}

 protected:
  MatrixBlock compute(int d) const override {
    MatrixBlock b = empty_block(d);
    const auto& basis = degree_basis(d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const FockVector image = action_(basis[i]);
      for (const auto& [p, c] : image.terms()) {
        if (p.degree() != d + rank()) throw std::logic_error("basis action is not rank-homogeneous");
        b.columns[i].add(basis_index(p), c);
      }
    }
    return b;
  }

 private:
  Action action_;
};

class ZeroNode final : public OperatorNode {
 public:
  explicit ZeroNode(int rank) : OperatorNode(rank, 0) {}

 protected:
  MatrixBlock compute(int d) const override { return empty_block(d); }
};

/// columns of a (at degree d + rank(b)) combined by the columns of b.
void multiply_into(const MatrixBlock& a, const MatrixBlock& b, const Rational& factor, MatrixBlock& out) {
  for (std::size_t j = 0; j < b.columns.size(); ++j) {
    for (const auto& [k, v] : b.columns[j]) out.columns[j].axpy(factor * v, a.columns[k]);
  }
}

class ComposeNode final : public OperatorNode {
 public:
  ComposeNode(std::shared_ptr<const OperatorNode> a, std::shared_ptr<const OperatorNode> b, std::optional<int> filtration)
      : OperatorNode(a->rank() + b->rank(), filtration), a_(std::move(a)), b_(std::move(b)) {}

 protected:
  MatrixBlock compute(int d) const override {
    MatrixBlock out = empty_block(d);
    if (d + b_->rank() < 0) return out;
    const auto bb = b_->block(d);
    if (bb->is_zero()) return out;
    multiply_into(*a_->block(d + b_->rank()), *bb, Rational(1), out);
    return out;
  }

 private:
  std::shared_ptr<const OperatorNode> a_, b_;
};

class CommutatorNode final : public OperatorNode {
 public:
  CommutatorNode(std::shared_ptr<const OperatorNode> a, std::shared_ptr<const OperatorNode> b,
                 std::optional<int> filtration)
      : OperatorNode(a->rank() + b->rank(), filtration), a_(std::move(a)), b_(std::move(b)) {}

 protected:
  MatrixBlock compute(int d) const override {
    MatrixBlock out = empty_block(d);
    if (d + b_->rank() >= 0) multiply_into(*a_->block(d + b_->rank()), *b_->block(d), Rational(1), out);
    if (d + a_->rank() >= 0) multiply_into(*b_->block(d + a_->rank()), *a_->block(d), Rational(-1), out);
    return out;
  }

 private:
  std::shared_ptr<const OperatorNode> a_, b_;
};

class LinearNode final : public OperatorNode {
 public:
  using Terms = std::vector<std::pair<Rational, std::shared_ptr<const OperatorNode>>>;
  LinearNode(int rank, Terms terms, std::optional<int> filtration)
      : OperatorNode(rank, filtration), terms_(std::move(terms)) {}

 protected:
  MatrixBlock compute(int d) const override {
    MatrixBlock out = empty_block(d);
    for (const auto& [c, node] : terms_) {
      const auto b = node->block(d);
      for (std::size_t j = 0; j < b->columns.size(); ++j) out.columns[j].axpy(c, b->columns[j]);
    }
    return out;
  }

 private:
  Terms terms_;
};

class FormalSumNode final : public OperatorNode {
 public:
  FormalSumNode(int rank, GradedOperator::SummandGenerator gen, std::optional<int> filtration)
      : OperatorNode(rank, filtration), gen_(std::move(gen)) {}

 protected:
  MatrixBlock compute(int d) const override {
    MatrixBlock out = empty_block(d);
    for (const auto& term : gen_(d)) {
      if (term.rank() != rank()) throw std::logic_error("formal sum summand has the wrong rank");
      const auto b = term.block(d);
      for (std::size_t j = 0; j < b->columns.size(); ++j) out.columns[j].axpy(Rational(1), b->columns[j]);
    }
    return out;
  }

 private:
  GradedOperator::SummandGenerator gen_;
};

/// Forwards to another node; used to attach filtration metadata.
class AliasNode final : public OperatorNode {
 public:
  AliasNode(std::shared_ptr<const OperatorNode> target, std::optional<int> filtration)
      : OperatorNode(target->rank(), filtration), target_(std::move(target)) {}

 protected:
  MatrixBlock compute(int d) const override { return *target_->block(d); }

 private:
  std::shared_ptr<const OperatorNode> target_;
};

std::optional<int> add_filtration(std::optional<int> a, std::optional<int> b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace
}  // namespace detail

GradedOperator::GradedOperator() : node_(std::make_shared<detail::ZeroNode>(0)) {}

GradedOperator::GradedOperator(std::shared_ptr<const detail::OperatorNode> node) : node_(std::move(node)) {}

GradedOperator GradedOperator::creation(int n) {
  if (n <= 0) throw std::invalid_argument("creation(n) requires n >= 1");
  return GradedOperator(std::make_shared<detail::BasisActionNode>(
      n, 0, [n](const Partition& p) { return FockVector::basis(p.with_part(n)); }));
}

GradedOperator GradedOperator::annihilation(int n) {
  if (n <= 0) throw std::invalid_argument("annihilation(n) requires n >= 1");
  return GradedOperator(std::make_shared<detail::BasisActionNode>(
      -n, 0, [n](const Partition& p) { return del_power_sum(n, FockVector::basis(p)); }));
}

GradedOperator GradedOperator::diagonal_degree(const Rational& s) {
  return GradedOperator(std::make_shared<detail::BasisActionNode>(
      0, 1, [s](const Partition& p) { return FockVector::basis(p, s * Rational(p.degree())); }));
}

GradedOperator GradedOperator::identity() {
  return GradedOperator(
      std::make_shared<detail::BasisActionNode>(0, 0, [](const Partition& p) { return FockVector::basis(p); }));
}

GradedOperator GradedOperator::zero(int rank) { return GradedOperator(std::make_shared<detail::ZeroNode>(rank)); }

GradedOperator GradedOperator::formal_sum(int rank, SummandGenerator summands, std::optional<int> filtration) {
  return GradedOperator(std::make_shared<detail::FormalSumNode>(rank, std::move(summands), filtration));
}

int GradedOperator::rank() const { return node_->rank(); }

std::optional<int> GradedOperator::filtration() const { return node_->filtration(); }

GradedOperator GradedOperator::with_filtration(int filtration) const {
  return GradedOperator(std::make_shared<detail::AliasNode>(node_, filtration));
}

std::shared_ptr<const MatrixBlock> GradedOperator::block(int degree) const { return node_->block(degree); }

FockVector GradedOperator::apply(const FockVector& v) const {
  FockVector out;
  for (int d : v.degrees()) {
    if (d + rank() < 0) continue;
    const auto b = block(d);
    const auto& out_basis = degree_basis(d + rank());
    const FockVector part = v.homogeneous_part(d);
    for (const auto& [p, c] : part.terms()) {
      for (const auto& [row, value] : b->columns[basis_index(p)]) out.add(out_basis[row], c * value);
    }
  }
  return out;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
  return GradedOperator(std::make_shared<detail::ComposeNode>(
      a.node_, b.node_, detail::add_filtration(a.filtration(), b.filtration())));
}

GradedOperator linear_combination(int rank, const std::vector<std::pair<Rational, GradedOperator>>& terms) {
  detail::LinearNode::Terms nodes;
  std::optional<int> filtration = 0;
  for (const auto& [c, op] : terms) {
    if (op.rank() != rank) throw std::invalid_argument("sum of operators with mixed ranks");
    if (c.is_zero()) continue;
    nodes.emplace_back(c, op.node_);
    if (!op.filtration()) {
      filtration.reset();
    } else if (filtration) {
      filtration = std::max(*filtration, *op.filtration());
    }
  }
  return GradedOperator(std::make_shared<detail::LinearNode>(rank, std::move(nodes), filtration));
}

GradedOperator sum(int rank, const std::vector<GradedOperator>& terms) {
  std::vector<std::pair<Rational, GradedOperator>> weighted;
  weighted.reserve(terms.size());
  for (const auto& t : terms) weighted.emplace_back(Rational(1), t);
  return linear_combination(rank, weighted);
}

GradedOperator scale(const Rational& c, const GradedOperator& a) {
  if (c.is_zero()) return GradedOperator::zero(a.rank());
  return linear_combination(a.rank(), {{c, a}});
}

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) {
  // gr of both algebras is commutative, so brackets drop filtration by one.
  std::optional<int> filtration;
  if (a.filtration() && b.filtration()) filtration = std::max(0, *a.filtration() + *b.filtration() - 1);
  return GradedOperator(std::make_shared<detail::CommutatorNode>(a.node_, b.node_, filtration));
}

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
  return linear_combination(a.rank(), {{Rational(1), a}, {Rational(1), b}});
}

GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
  return linear_combination(a.rank(), {{Rational(1), a}, {Rational(-1), b}});
}

std::optional<int> first_difference(const GradedOperator& a, const GradedOperator& b, int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    const auto ba = a.block(d);
    const auto bb = b.block(d);
    if (a.rank() != b.rank()) {
      if (!ba->is_zero() || !bb->is_zero()) return d;
      continue;
    }
    if (ba->columns != bb->columns) return d;
  }
  return std::nullopt;
}

bool equal_up_to(const GradedOperator& a, const GradedOperator& b, int max_degree) {
  return !first_difference(a, b, max_degree).has_value();
}

std::optional<std::vector<Rational>> solve_operator_span(const GradedOperator& target,
                                                         const std::vector<GradedOperator>& basis, int max_degree) {
  for (const auto& op : basis) {
    if (op.rank() != target.rank()) throw std::invalid_argument("solve_operator_span: rank mismatch");
  }
  std::vector<SparseVec> vectors;
  vectors.reserve(basis.size());
  for (const auto& op : basis) vectors.push_back(flatten_blocks(op, max_degree));
  return solve_span(vectors, flatten_blocks(target, max_degree));
}

SparseVec flatten_blocks(const GradedOperator& op, int max_degree) {
  SparseVec out;
  for (int d = 0; d <= max_degree; ++d) {
    const auto b = op.block(d);
    for (std::size_t col = 0; col < b->columns.size(); ++col) {
      for (const auto& [row, value] : b->columns[col]) {
        out.add((static_cast<std::size_t>(d) << 40) | (col << 20) | row, value);
      }
    }
  }
  return out;
}

std::size_t span_rank(const std::vector<GradedOperator>& ops, int max_degree) {
  RowSpace space;
  for (const auto& op : ops) space.insert(flatten_blocks(op, max_degree));
  return space.rank();
}

void InhomogeneousOperator::add(const GradedOperator& part) {
  const auto it = std::lower_bound(parts_.begin(), parts_.end(), part.rank(),
                                   [](const GradedOperator& p, int r) { return p.rank() < r; });
  if (it != parts_.end() && it->rank() == part.rank()) {
    *it = *it + part;
  } else {
    parts_.insert(it, part);
  }
}

FockVector InhomogeneousOperator::apply(const FockVector& v) const {
  FockVector out;
  for (const auto& p : parts_) out += p.apply(v);
  return out;
}

}  // namespace wtrace

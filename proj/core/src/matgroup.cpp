#include "singk/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "singk/error.hpp"
#include "singk/intlat.hpp"

namespace singk {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::vector<bool> membership(std::size_t order, const Subgroup& s) {
  std::vector<bool> in(order, false);
  for (auto x : s) in[x] = true;
  return in;
}

}  // namespace

std::optional<std::size_t> FiniteMatrixGroup::find(const CycMatrix& m) const {
  const CycMatrix probe = m.conductor() == conductor_ ? m : m.promoted(lcm_ul(m.conductor(), conductor_));
  if (probe.conductor() != conductor_) return std::nullopt;
  auto it = index_.find(probe);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteMatrixGroup::multiply(std::size_t a, std::size_t b) const {
  const std::size_t n = elements_.size();
  if (!table_.empty()) return table_[a * n + b];
  // b = gens[via_1] ... gens[via_k] along its BFS word
  std::vector<std::size_t> word;
  for (std::size_t x = b; x != 0; x = parent_[x]) word.push_back(via_[x]);
  std::size_t acc = a;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = right_gen_[acc][*it];
  return acc;
}

std::size_t FiniteMatrixGroup::power(std::size_t a, long k) const {
  if (k < 0) return power(inverse_[a], -k);
  std::size_t result = 0;
  std::size_t base = a;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1UL) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t FiniteMatrixGroup::power_class(std::size_t c, long j) const {
  const long e = static_cast<long>(exponent_);
  long r = j % e;
  if (r < 0) r += e;
  return power_map_[c][static_cast<std::size_t>(r)];
}

void FiniteMatrixGroup::build_tables() {
  const std::size_t n = elements_.size();
  if (n <= kDenseTableLimit) {
    table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      table_[i * n] = static_cast<std::uint32_t>(i);
      for (std::size_t j = 1; j < n; ++j)
        table_[i * n + j] = static_cast<std::uint32_t>(right_gen_[table_[i * n + parent_[j]]][via_[j]]);
    }
  }

  element_order_.assign(n, 0);
  inverse_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t ord = 1;
    std::size_t prev = 0;
    std::size_t y = x;
    while (y != 0) {
      prev = y;
      y = multiply(y, x);
      ++ord;
    }
    // y = x^ord on exit, so prev = x^{ord-1} = x^{-1}
    element_order_[x] = x == 0 ? 1 : ord;
    inverse_[x] = x == 0 ? 0 : prev;
  }
  exponent_ = 1;
  for (auto o : element_order_) exponent_ = std::lcm(exponent_, o);
}

void FiniteMatrixGroup::build_classes() {
  const std::size_t n = elements_.size();
  class_of_.assign(n, kUnset);
  classes_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] != kUnset) continue;
    const std::size_t c = classes_.size();
    ConjugacyClass cls;
    cls.representative = x;
    std::deque<std::size_t> queue{x};
    class_of_[x] = c;
    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      cls.members.push_back(y);
      for (auto g : generators_) {
        const std::size_t z = multiply(multiply(inverse_[g], y), g);
        if (class_of_[z] == kUnset) {
          class_of_[z] = c;
          queue.push_back(z);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }

  power_map_.assign(classes_.size(), {});
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto& row = power_map_[c];
    row.resize(exponent_);
    std::size_t y = 0;
    for (std::size_t j = 0; j < exponent_; ++j) {
      row[j] = class_of_[y];
      y = multiply(y, classes_[c].representative);
    }
  }
}

GroupPtr close_group(const std::vector<CycMatrix>& generators, std::size_t max_order) {
  if (generators.empty()) raise(ErrorCode::InvalidArgument, "at least one generator is required");
  const std::size_t dim = generators.front().dim();
  unsigned long cond = 1;
  for (const auto& g : generators) {
    if (g.dim() != dim) raise(ErrorCode::DimensionMismatch, "generators have different sizes");
    cond = lcm_ul(cond, g.conductor());
  }
  std::vector<CycMatrix> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.determinant().is_zero()) raise(ErrorCode::NonInvertibleGenerator, "generator has zero determinant");
    gens.push_back(g.promoted(cond));
  }

  auto group = std::shared_ptr<FiniteMatrixGroup>(new FiniteMatrixGroup());
  group->dim_ = dim;
  group->conductor_ = cond;
  group->elements_.push_back(CycMatrix::identity(dim, cond));
  group->index_.emplace(group->elements_.front(), 0);
  group->parent_.push_back(0);
  group->via_.push_back(0);

  for (std::size_t i = 0; i < group->elements_.size(); ++i) {
    std::vector<std::size_t> row(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      CycMatrix product = group->elements_[i] * gens[gi];
      auto it = group->index_.find(product);
      if (it != group->index_.end()) {
        row[gi] = it->second;
        continue;
      }
      const std::size_t idx = group->elements_.size();
      if (idx >= max_order)
        raise(ErrorCode::OrderExceeded,
              "group order exceeds " + std::to_string(max_order) + " (infinite or too large)");
      group->index_.emplace(product, idx);
      group->elements_.push_back(std::move(product));
      group->parent_.push_back(i);
      group->via_.push_back(gi);
      row[gi] = idx;
    }
    group->right_gen_.push_back(std::move(row));
  }

  for (const auto& g : gens) group->generators_.push_back(group->index_.at(g));
  group->build_tables();
  group->build_classes();
  return group;
}

bool is_reflection(const FiniteMatrixGroup& group, std::size_t element) {
  if (element == FiniteMatrixGroup::identity()) return false;
  const CycMatrix& g = group.element(element);
  return (g - CycMatrix::identity(g.dim(), group.conductor())).rank() == 1;
}

bool acts_freely_off_origin(const FiniteMatrixGroup& group) {
  // det(g - I) is a class function, so representatives suffice.
  for (const auto& cls : group.classes()) {
    if (cls.representative == FiniteMatrixGroup::identity()) continue;
    const CycMatrix& g = group.element(cls.representative);
    if ((g - CycMatrix::identity(g.dim(), group.conductor())).determinant().is_zero()) return false;
  }
  return true;
}

Subgroup subgroup_closure(const FiniteMatrixGroup& group, const std::vector<std::size_t>& generators) {
  std::vector<bool> in(group.order(), false);
  std::vector<std::size_t> members{FiniteMatrixGroup::identity()};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto g : generators) {
      const std::size_t y = group.multiply(members[i], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup normal_closure(const FiniteMatrixGroup& group, const std::vector<std::size_t>& generators) {
  std::vector<std::size_t> gens = generators;
  while (true) {
    Subgroup h = subgroup_closure(group, gens);
    const auto in = membership(group.order(), h);
    std::vector<std::size_t> extra;
    for (auto s : gens) {
      for (auto g : group.generator_indices()) {
        const std::size_t c = group.multiply(group.multiply(group.inverse(g), s), g);
        if (!in[c]) extra.push_back(c);
      }
    }
    if (extra.empty()) return h;
    gens.insert(gens.end(), extra.begin(), extra.end());
  }
}

bool is_normal(const FiniteMatrixGroup& group, const Subgroup& subgroup) {
  const auto in = membership(group.order(), subgroup);
  for (auto h : subgroup)
    for (auto g : group.generator_indices())
      if (!in[group.multiply(group.multiply(group.inverse(g), h), g)]) return false;
  return true;
}

Subgroup reflection_normal_closure(const FiniteMatrixGroup& group) {
  std::vector<std::size_t> reflections;
  for (const auto& cls : group.classes())
    if (is_reflection(group, cls.representative))
      reflections.insert(reflections.end(), cls.members.begin(), cls.members.end());
  Subgroup n = subgroup_closure(group, reflections);
  if (!is_normal(group, n))
    raise(ErrorCode::AlgorithmFailure, "subgroup generated by reflections is not normal");
  return n;
}

AbelianGroupStructure dual_abelianization_of_quotient(const FiniteMatrixGroup& group, const Subgroup& normal) {
  if (subgroup_closure(group, normal) != normal)
    raise(ErrorCode::InvalidArgument, "element set is not a subgroup");
  if (!is_normal(group, normal)) raise(ErrorCode::NotNormal, "subgroup is not normal");

  // K = <N, [G, G]>; G/K is the abelianization of G/N.
  std::vector<std::size_t> seeds = normal;
  const auto& gens = group.generator_indices();
  for (auto a : gens) {
    for (auto b : gens) {
      const std::size_t comm =
          group.multiply(group.multiply(group.inverse(a), group.inverse(b)), group.multiply(a, b));
      seeds.push_back(comm);
    }
  }
  Subgroup k = normal_closure(group, seeds);

  // Split off cyclic factors generated by elements of maximal order.
  std::vector<BigInt> orders;
  auto in = membership(group.order(), k);
  while (k.size() < group.order()) {
    std::size_t best = 0;
    std::size_t best_order = 0;
    for (std::size_t x = 0; x < group.order(); ++x) {
      if (in[x]) continue;
      std::size_t ord = 1;
      for (std::size_t y = x; !in[y]; y = group.multiply(y, x)) ++ord;
      if (ord > best_order) {
        best_order = ord;
        best = x;
      }
    }
    orders.emplace_back(static_cast<unsigned long>(best_order));
    Subgroup next;
    std::size_t xp = 0;
    for (std::size_t j = 0; j < best_order; ++j) {
      for (auto h : k) next.push_back(group.multiply(h, xp));
      xp = group.multiply(xp, best);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    k = std::move(next);
    in = membership(group.order(), k);
  }
  return AbelianGroupStructure::from_cyclic_orders(orders);
}

}  // namespace singk

#include "chief/lattice.hpp"

#include <algorithm>
#include <set>

#include "chief/errors.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief {

NormalLattice::NormalLattice(GroupPtr group, std::vector<Subgroup> nodes)
    : group_(std::move(group)), nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(), [](const Subgroup& a, const Subgroup& b) { return canonical_less(a, b); });
  const std::size_t n = nodes_.size();
  ensure(n >= 1 && nodes_.front().is_trivial() && nodes_.back().is_whole(), "lattice lacks trivial or whole group");
  for (std::size_t i = 0; i < n; ++i) by_fingerprint_.emplace(nodes_[i].fingerprint(), i);
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (nodes_[i].members().is_subset_of(nodes_[j].members())) leq_[i * n + j] = 1;
  up_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!leq(i, j)) continue;
      bool between = false;
      for (std::size_t k = i + 1; k < j && !between; ++k) between = leq(i, k) && leq(k, j) && k != i && k != j;
      if (!between) {
        covers_.emplace_back(i, j);
        up_[i].push_back(j);
      }
    }
}

std::optional<std::size_t> NormalLattice::index_of(const ElementSet& members) const {
  auto [lo, hi] = by_fingerprint_.equal_range(chief::fingerprint(members));
  for (auto it = lo; it != hi; ++it)
    if (nodes_[it->second].members() == members) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> NormalLattice::index_of(const Subgroup& sub) const {
  if (sub.parent() != group_) raise(ErrorKind::DifferentParents, "subgroup is not in the lattice's group");
  return index_of(sub.members());
}

std::size_t NormalLattice::require_index(const Subgroup& sub) const {
  auto idx = index_of(sub);
  if (!idx) raise(ErrorKind::NotNormal, "subgroup of order " + std::to_string(sub.order()) + " is not normal");
  return *idx;
}

bool NormalLattice::is_cover(std::size_t lower, std::size_t upper) const {
  const auto& u = up_[lower];
  return std::find(u.begin(), u.end(), upper) != u.end();
}

std::size_t NormalLattice::join(std::size_t i, std::size_t j) const {
  // node indices are sorted by order, so the first upper bound is the least
  for (std::size_t k = std::max(i, j); k < nodes_.size(); ++k)
    if (leq(i, k) && leq(j, k)) return k;
  raise(ErrorKind::PostconditionFailed, "lattice is not closed under join");
}

std::size_t NormalLattice::meet(std::size_t i, std::size_t j) const {
  for (std::size_t k = std::min(i, j) + 1; k-- > 0;)
    if (leq(k, i) && leq(k, j)) return k;
  raise(ErrorKind::PostconditionFailed, "lattice is not closed under meet");
}

std::vector<std::size_t> NormalLattice::atoms() const {
  if (nodes_.size() == 1) return {};
  return up_[0];
}

NormalLattice normal_subgroups(const GroupPtr& g, std::size_t node_cap) {
  std::vector<Subgroup> nodes{Subgroup::trivial(g)};
  std::unordered_multimap<std::uint64_t, std::size_t> seen{{nodes[0].fingerprint(), 0}};
  auto add = [&](Subgroup s) {
    auto [lo, hi] = seen.equal_range(s.fingerprint());
    for (auto it = lo; it != hi; ++it)
      if (nodes[it->second] == s) return;
    if (nodes.size() >= node_cap)
      raise(ErrorKind::NodeCapExceeded, "normal lattice exceeds node cap " + std::to_string(node_cap));
    seen.emplace(s.fingerprint(), nodes.size());
    nodes.push_back(std::move(s));
  };
  for (const auto& cls : conjugacy_classes(*g)) {
    if (cls.front() == 0) continue;
    Elem rep = cls.front();
    add(normal_closure(g, std::span<const Elem>(&rep, 1)));
  }
  for (std::size_t i = 1; i < nodes.size(); ++i)
    for (std::size_t j = 1; j < i; ++j) {
      if (nodes[i].members().is_subset_of(nodes[j].members()) || nodes[j].members().is_subset_of(nodes[i].members()))
        continue;
      add(join(nodes[i], nodes[j]));
    }
  if (!nodes.back().is_whole() && std::none_of(nodes.begin(), nodes.end(), [](const Subgroup& s) { return s.is_whole(); }))
    add(Subgroup::whole(g));
  for (const auto& s : nodes) ensure(s.is_normal(), "lattice node is not normal");
  return NormalLattice(g, std::move(nodes));
}

bool is_chief_factor(const NormalLattice& lattice, const Subgroup& k, const Subgroup& l) {
  if (!k.is_normal() || !l.is_normal()) raise(ErrorKind::NotNormal, "chief factor terms must be normal");
  auto ki = lattice.require_index(k);
  auto li = lattice.require_index(l);
  if (!lattice.lt(li, ki)) raise(ErrorKind::NotNested, "lower term is not properly contained in the upper term");
  return lattice.is_cover(li, ki);
}

std::vector<FactorIndex> chief_factor_indices(const NormalLattice& lattice) {
  std::vector<FactorIndex> out;
  for (auto [lo, up] : lattice.covers()) out.push_back({up, lo});
  std::sort(out.begin(), out.end(), [](const FactorIndex& a, const FactorIndex& b) {
    return std::tie(a.upper, a.lower) < std::tie(b.upper, b.lower);
  });
  return out;
}

ChiefSeriesEnumerator::ChiefSeriesEnumerator(const NormalLattice& lattice, std::size_t max_series)
    : lattice_(&lattice), remaining_(max_series) {}

std::optional<std::vector<std::size_t>> ChiefSeriesEnumerator::next() {
  if (remaining_ == 0) return std::nullopt;
  const std::size_t top = lattice_->top();
  if (!started_) {
    started_ = true;
    chain_ = {lattice_->bottom()};
    branch_ = {0};
    if (lattice_->bottom() == top) {
      --remaining_;
      auto out = chain_;
      chain_.clear();
      return out;
    }
  } else {
    if (chain_.empty()) return std::nullopt;
    chain_.pop_back();
    branch_.pop_back();
  }
  while (!chain_.empty()) {
    const auto& ups = lattice_->upper_covers(chain_.back());
    std::size_t& b = branch_.back();
    if (b >= ups.size()) {
      chain_.pop_back();
      branch_.pop_back();
      continue;
    }
    std::size_t nxt = ups[b++];
    chain_.push_back(nxt);
    branch_.push_back(0);
    if (nxt == top) {
      --remaining_;
      return chain_;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> chief_series(const NormalLattice& lattice, std::size_t max_series) {
  std::vector<std::vector<std::size_t>> out;
  ChiefSeriesEnumerator it(lattice, max_series);
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

std::vector<Subgroup> oracle_all_subgroups(const GroupPtr& g) {
  if (g->order() > kOracleBound)
    raise(ErrorKind::OracleBoundExceeded, "oracle enumeration is limited to order " + std::to_string(kOracleBound));
  auto cmp = [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); };
  std::set<ElementSet, decltype(cmp)> found(cmp);
  ElementSet trivial(g->order());
  trivial.set(0);
  std::vector<ElementSet> frontier{trivial};
  found.insert(trivial);
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& h : frontier) {
      auto gens = to_elements(h);
      for (Elem x = 0; x < g->order(); ++x) {
        if (h.test(x)) continue;
        auto seed = gens;
        seed.push_back(x);
        ElementSet k = closure_of(*g, seed);
        ensure(g->order() % k.count() == 0, "subgroup order does not divide the group order");
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& s : found) out.push_back(Subgroup::from_members(g, s));
  return out;
}

}  // namespace chief

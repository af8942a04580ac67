#include "chief/blocks.hpp"

#include <algorithm>
#include <set>

#include "chief/errors.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief {

BlockPoset::BlockPoset(NormalLattice lattice, std::vector<ChiefBlock> blocks)
    : lattice_(std::move(lattice)), blocks_(std::move(blocks)) {
  const std::size_t n = blocks_.size();
  leq_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      leq_[a * n + b] = blocks_[a].centralizer.members().is_subset_of(blocks_[b].centralizer.members());
  for (const auto& blk : blocks_) minimal_covers_.push_back(chief::minimal_cover(lattice_, blk));
}

std::optional<std::size_t> BlockPoset::find_by_centralizer(const Subgroup& c) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].centralizer == c) return i;
  return std::nullopt;
}

std::optional<std::size_t> BlockPoset::block_of(const NormalFactor& f) const {
  if (is_abelian_factor(f)) return std::nullopt;
  return find_by_centralizer(factor_centralizer(f));
}

bool BlockPoset::is_antichain() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (a != b && leq(a, b)) return false;
  return true;
}

BlockPoset chief_blocks(const NormalLattice& lattice) {
  std::vector<ChiefBlock> blocks;
  for (const auto& f : chief_factors(lattice)) {
    if (is_abelian_factor(f)) continue;
    auto c = factor_centralizer(f);
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const ChiefBlock& b) { return b.centralizer == c; });
    if (it == blocks.end()) {
      blocks.push_back({0, c, {f}});
    } else {
      ensure(are_associated(it->representatives.front(), f), "equal centralizers without association");
      it->representatives.push_back(f);
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const ChiefBlock& a, const ChiefBlock& b) { return canonical_less(a.centralizer, b.centralizer); });
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i].id = i;
  return BlockPoset(lattice, std::move(blocks));
}

CoverStatus cover_status(const NormalFactor& f, const ChiefBlock& a) {
  require_same_parent(f.upper(), a.centralizer);
  const auto& c = a.centralizer.members();
  if (!f.lower().members().is_subset_of(c)) return CoverStatus::Above;
  if (f.upper().members().is_subset_of(c)) return CoverStatus::Below;
  return CoverStatus::Covers;
}

CoverStatus cover_status(const Subgroup& n, const ChiefBlock& a) {
  require_same_parent(n, a.centralizer);
  return n.members().is_subset_of(a.centralizer.members()) ? CoverStatus::Below : CoverStatus::Covers;
}

bool covers(const NormalFactor& f, const ChiefBlock& a) { return cover_status(f, a) == CoverStatus::Covers; }
bool covers(const Subgroup& n, const ChiefBlock& a) { return cover_status(n, a) == CoverStatus::Covers; }

std::vector<std::size_t> covering_filter(const NormalLattice& lattice, const ChiefBlock& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (covers(lattice.node(i), a)) out.push_back(i);
  return out;
}

Subgroup minimal_cover(const NormalLattice& lattice, const ChiefBlock& a) {
  auto filter = covering_filter(lattice, a);
  ensure(!filter.empty(), "block is not covered by the whole group");
  ElementSet m = lattice.node(filter.front()).members();
  for (auto i : filter) m &= lattice.node(i).members();
  auto idx = lattice.index_of(m);
  ensure(idx.has_value(), "intersection of the covering filter is not normal");
  const auto& g_a = lattice.node(*idx);
  ensure(covers(g_a, a), "intersection of the covering filter does not cover the block");
  return g_a;
}

Subgroup socle(const NormalLattice& lattice) {
  auto atoms = lattice.atoms();
  Subgroup s = lattice.node(0);
  for (auto i : atoms) s = join(s, lattice.node(i));
  return s;
}

bool is_monolithic(const NormalLattice& lattice) { return lattice.atoms().size() == 1; }

NormalFactor uppermost_representative(const NormalLattice& lattice, const ChiefBlock& a) {
  // Normal subgroups of G/C correspond to nodes above C, so the socle of G/C
  // is read off the upper covers of C.
  const auto ci = lattice.require_index(a.centralizer);
  const auto& ups = lattice.upper_covers(ci);
  ensure(ups.size() == 1, "G / C_G(a) is not monolithic");
  NormalFactor top(lattice.node(ups.front()), a.centralizer);
  ensure(!is_abelian_factor(top) && factor_centralizer(top) == a.centralizer,
         "uppermost representative is not in the block");
  for (const auto& r : a.representatives)
    ensure(is_internal_compression(r, top), "representative does not compress onto the uppermost representative");
  return top;
}

NormalFactor lowermost_representative(const NormalLattice& lattice, const ChiefBlock& a) {
  auto g_a = minimal_cover(lattice, a);
  NormalFactor low(g_a, meet(g_a, a.centralizer));
  ensure(is_chief_factor(lattice, low.upper(), low.lower()), "lowermost representative is not a chief factor");
  ensure(!is_abelian_factor(low) && factor_centralizer(low) == a.centralizer,
         "lowermost representative is not in the block");
  for (const auto& r : a.representatives)
    ensure(is_internal_compression(low, r), "lowermost representative does not compress onto a representative");
  return low;
}

bool block_le(const BlockPoset& poset, std::size_t a, std::size_t b) {
  if (a >= poset.size() || b >= poset.size()) raise(ErrorKind::InvalidArgument, "block index out of range");
  const bool by_centralizer = poset.leq(a, b);
  const auto& lattice = poset.lattice();
  const auto& ba = poset.block(a);
  const auto& bb = poset.block(b);
  bool by_filter = true;
  for (std::size_t i = 0; i < lattice.size() && by_filter; ++i)
    if (covers(lattice.node(i), bb) && !covers(lattice.node(i), ba)) by_filter = false;
  const bool by_min_cover = covers(poset.minimal_cover(b), ba);
  const bool by_cover_order = poset.minimal_cover(a).is_subset_of(poset.minimal_cover(b));
  ensure(by_centralizer == by_filter && by_centralizer == by_min_cover && by_centralizer == by_cover_order,
         "characterizations of the block order disagree");
  return by_centralizer;
}

namespace {

void validate_series(const NormalLattice& lattice, const std::vector<Subgroup>& series) {
  if (series.size() < 1 || !series.front().is_trivial() || !series.back().is_whole())
    raise(ErrorKind::NotAChain, "series must run from the trivial subgroup to the group");
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].parent() != lattice.group()) raise(ErrorKind::DifferentParents, "series term from another group");
    if (!series[i].is_normal()) raise(ErrorKind::NotAChain, "series term is not normal");
    if (i > 0 && !series[i - 1].members().is_proper_subset_of(series[i].members()))
      raise(ErrorKind::NotAChain, "series is not strictly ascending");
  }
}

}  // namespace

Refinement refine_series(const NormalLattice& lattice, const std::vector<Subgroup>& series, const NormalFactor& f) {
  validate_series(lattice, series);
  if (!is_chief_factor(lattice, f.upper(), f.lower())) raise(ErrorKind::NotChief, "factor is not a chief factor");
  if (is_abelian_factor(f)) raise(ErrorKind::AbelianFactor, "factor is abelian");
  const auto& g = f.group();
  const auto c = factor_centralizer(f);

  std::size_t i = 0;
  while (i + 1 < series.size() && series[i + 1].members().is_subset_of(c.members())) ++i;
  ensure(i + 1 < series.size(), "the whole group centralizes a non-abelian chief factor");
  const Subgroup& next = series[i + 1];
  Subgroup b = meet(next, c);

  // g is in R iff conjugation by g agrees on K/L with conjugation by some
  // k in K; compare the cosets of the conjugated generators of K.
  const auto coset = quotient(f.lower()).projection;
  const auto kgens = f.upper().generators();
  auto signature = [&](Elem x) {
    std::vector<Elem> sig;
    sig.reserve(kgens.size());
    for (auto s : kgens) sig.push_back(coset(g->conj(x, s)));
    return sig;
  };
  std::set<std::vector<Elem>> inner;
  for (auto k : f.upper().elements()) inner.insert(signature(k));
  ElementSet r_members(g->order());
  for (auto x : next.elements())
    if (inner.count(signature(x))) r_members.set(x);
  Subgroup r = Subgroup::from_members(g, std::move(r_members));

  Subgroup a = join(commutator_subgroup(r, f.upper(), CommutatorMethod::Generators), b);
  Subgroup d = join(commutator_subgroup(a, a, CommutatorMethod::Generators), b);

  ensure(series[i].is_subset_of(b) && b.is_proper_subset_of(d) && d.is_subset_of(next),
         "refinement does not lie strictly inside its interval");
  ensure(is_chief_factor(lattice, d, b), "refined factor is not a chief factor");
  NormalFactor refined(d, b);
  ensure(are_associated(refined, f), "refined factor is not associated to the input");

  for (std::size_t j = 0; j + 1 < series.size(); ++j) {
    if (j == i) continue;
    const auto lo = lattice.require_index(series[j]);
    const auto hi = lattice.require_index(series[j + 1]);
    for (std::size_t u = 0; u < lattice.size(); ++u) {
      if (!lattice.leq(lo, u) || !lattice.leq(u, hi)) continue;
      for (std::size_t v = 0; v < lattice.size(); ++v) {
        if (!lattice.leq(lo, v) || !lattice.lt(v, u)) continue;
        ensure(!are_associated(NormalFactor(lattice.node(u), lattice.node(v)), f),
               "a second interval of the series carries an associated factor");
      }
    }
  }
  return {i, std::move(b), std::move(r), std::move(a), std::move(d)};
}

std::vector<std::size_t> covering_intervals(const std::vector<Subgroup>& series, const ChiefBlock& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < series.size(); ++i)
    if (covers(NormalFactor(series[i + 1], series[i]), a)) out.push_back(i);
  return out;
}

}  // namespace chief

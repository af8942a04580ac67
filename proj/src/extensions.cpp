#include "chief/extensions.hpp"

#include <algorithm>

#include "chief/errors.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief {

std::string_view to_string(StackingKind k) {
  return k == StackingKind::AntichainOrbit ? "antichain-orbit" : "proper-stacking";
}

Subgroup NormalPair::restrict(const Subgroup& in_g) const { return local.to_local(meet(in_g, h)); }

NormalPair normal_pair(const NormalLattice& lattice_g, const Subgroup& h) {
  if (h.parent() != lattice_g.group()) raise(ErrorKind::DifferentParents, "H does not live in G");
  if (!h.is_normal()) raise(ErrorKind::NotNormal, "H is not normal in G");
  auto local = as_group(h);
  auto blocks_h = chief_blocks(normal_subgroups(local.group));
  return {lattice_g, chief_blocks(lattice_g), h, std::move(local), std::move(blocks_h)};
}

std::size_t block_action(const NormalPair& p, Elem g, std::size_t a) {
  const auto& block = p.blocks_h.block(a);
  auto moved = p.local.to_local(conjugate(p.lift(block.centralizer), g));
  auto idx = p.blocks_h.find_by_centralizer(moved);
  ensure(idx.has_value(), "conjugated centralizer is not a block centralizer");
  const auto reps = std::min<std::size_t>(2, block.representatives.size());
  for (std::size_t r = 0; r < reps; ++r) {
    const auto& f = block.representatives[r];
    auto k = p.local.to_local(conjugate(p.lift(f.upper()), g));
    auto l = p.local.to_local(conjugate(p.lift(f.lower()), g));
    ensure(p.blocks_h.block_of(make_factor(k, l)) == idx, "block action depends on the representative");
  }
  return *idx;
}

namespace {

std::vector<std::size_t> passing_blocks(const NormalPair& p, std::size_t a) {
  const auto& lattice = p.lattice_g;
  std::vector<Subgroup> restricted;
  restricted.reserve(lattice.size());
  for (const auto& k : lattice.nodes()) restricted.push_back(p.restrict(k));
  const auto& ha = p.blocks_h.block(a);
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < p.blocks_g.size(); ++b) {
    const auto& gb = p.blocks_g.block(b);
    bool ok = true;
    for (std::size_t i = 0; i < lattice.size() && ok; ++i)
      ok = covers(lattice.node(i), gb) == covers(restricted[i], ha);
    if (ok) out.push_back(b);
  }
  ensure(out.size() <= 1, "more than one block satisfies the extension property");
  return out;
}

}  // namespace

bool is_extension(const NormalPair& p, std::size_t a, std::size_t b) {
  auto passing = passing_blocks(p, a);
  return !passing.empty() && passing.front() == b;
}

Extension extend_block(const NormalPair& p, std::size_t a) {
  const auto& lattice = p.lattice_g;
  auto m = normal_closure(p.lift(p.blocks_h.minimal_cover(a)));
  auto core = normal_core(p.lift(p.blocks_h.block(a).centralizer));
  auto n = meet(core, m);
  auto mi = lattice.index_of(m);
  auto ni = lattice.index_of(n);
  if (!mi || !ni || !lattice.is_cover(*ni, *mi))
    raise(ErrorKind::ExtensionCheckFailed, "M/N is not a chief factor of G");
  auto f = make_factor(m, n);
  if (is_abelian_factor(f)) raise(ErrorKind::ExtensionCheckFailed, "M/N is abelian");
  auto b = p.blocks_g.block_of(f);
  if (!b) raise(ErrorKind::ExtensionCheckFailed, "M/N lies in no block of G");
  if (!(lowermost_representative(lattice, p.blocks_g.block(*b)) == f))
    raise(ErrorKind::ExtensionCheckFailed, "M/N is not the lowermost representative");
  if (!is_extension(p, a, *b)) raise(ErrorKind::ExtensionCheckFailed, "covering property fails");
  return {*b, std::move(m), std::move(n)};
}

StackingKind classify_stacking_class(const std::vector<std::size_t>& members,
                                     const std::function<bool(std::size_t, std::size_t)>& leq,
                                     const std::function<bool(std::size_t, std::size_t)>& translate_below,
                                     const std::function<bool(std::size_t, std::size_t)>& translate_to) {
  bool antichain_orbit = true;
  bool proper = true;
  for (auto a : members)
    for (auto b : members) {
      if (a != b && leq(a, b)) antichain_orbit = false;
      if (!translate_to(a, b)) antichain_orbit = false;
      if (!translate_below(a, b)) proper = false;
    }
  ensure(antichain_orbit != proper, "stacking class is neither or both kinds");
  return antichain_orbit ? StackingKind::AntichainOrbit : StackingKind::ProperStacking;
}

StackingStructure stacking_structure(const NormalPair& p) {
  const auto& poset = p.blocks_h;
  const std::size_t n = poset.size();
  const auto gens = p.lattice_g.group()->generators();
  std::vector<std::vector<std::size_t>> act;
  for (auto s : gens) {
    std::vector<std::size_t> row(n);
    for (std::size_t a = 0; a < n; ++a) row[a] = block_action(p, s, a);
    act.push_back(std::move(row));
  }
  StackingStructure out;
  out.orbits.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto& orbit = out.orbits[a];
    orbit.push_back(a);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& row : act) {
        auto c = row[orbit[i]];
        if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) orbit.push_back(c);
      }
    std::sort(orbit.begin(), orbit.end());
  }
  out.preorder.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (auto c : out.orbits[a])
        if (poset.leq(c, b)) out.preorder[a * n + b] = 1;

  out.class_of.assign(n, SIZE_MAX);
  for (std::size_t a = 0; a < n; ++a) {
    if (out.class_of[a] != SIZE_MAX) continue;
    std::vector<std::size_t> cls;
    for (std::size_t b = a; b < n; ++b)
      if (out.precedes(a, b) && out.precedes(b, a)) {
        out.class_of[b] = out.classes.size();
        cls.push_back(b);
      }
    out.classes.push_back(std::move(cls));
  }
  auto leq = [&](std::size_t a, std::size_t b) { return poset.leq(a, b); };
  auto below = [&](std::size_t a, std::size_t b) {
    for (auto c : out.orbits[a])
      if (c != b && poset.leq(c, b)) return true;
    return false;
  };
  auto to = [&](std::size_t a, std::size_t b) {
    return std::binary_search(out.orbits[a].begin(), out.orbits[a].end(), b);
  };
  for (const auto& cls : out.classes) out.kinds.push_back(classify_stacking_class(cls, leq, below, to));
  return out;
}

InducedPoset extension_poset_check(const NormalPair& p) {
  const std::size_t n = p.blocks_h.size();
  auto ss = stacking_structure(p);
  InducedPoset out;
  for (std::size_t a = 0; a < n; ++a) out.extension.push_back(extend_block(p, a).block);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      ensure(p.blocks_g.leq(out.extension[a], out.extension[b]) == ss.precedes(a, b),
             "extended order disagrees with the stacking preorder");
  for (const auto& cls : ss.classes) {
    for (auto a : cls) ensure(out.extension[a] == out.extension[cls.front()], "class extends to several blocks");
    out.class_image.push_back(out.extension[cls.front()]);
  }
  auto sorted = out.class_image;
  std::sort(sorted.begin(), sorted.end());
  ensure(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "two classes extend to the same block");
  return out;
}

AntichainOrbitReport antichain_orbit_analysis(const NormalPair& p, std::size_t a) {
  auto ss = stacking_structure(p);
  auto ext = extend_block(p, a);
  AntichainOrbitReport r{ss.kinds[ss.class_of[a]] == StackingKind::AntichainOrbit, false, false, ext.m, ext.n, {}};

  // H-invariant subgroups of M/N are normal subgroups X of H with N <= X <= M.
  std::vector<Subgroup> between;
  for (const auto& x : p.blocks_h.lattice().nodes()) {
    auto lifted = p.lift(x);
    if (r.n.is_proper_subset_of(lifted) && lifted.is_subset_of(r.m)) between.push_back(std::move(lifted));
  }
  for (const auto& x : between) {
    ensure(!commutators_within(x, x, r.n), "M/N has an abelian H-invariant subgroup");
    bool minimal = true;
    for (const auto& y : between) minimal = minimal && !y.is_proper_subset_of(x);
    if (minimal) r.minimal.push_back(x);
  }
  r.has_minimal = !r.minimal.empty();

  if (r.has_minimal) {
    auto k = join(p.lift(p.blocks_h.minimal_cover(a)), r.n);
    std::vector<Subgroup> orbit{k};
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto s : p.lattice_g.group()->generators()) {
        auto c = conjugate(orbit[i], s);
        if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) orbit.push_back(c);
      }
    bool same = orbit.size() == r.minimal.size();
    for (const auto& c : orbit) same = same && std::find(r.minimal.begin(), r.minimal.end(), c) != r.minimal.end();
    if (same) {
      auto fg = factor_group(make_factor(r.m, r.n));
      std::vector<Subgroup> images;
      for (const auto& x : r.minimal) images.push_back(fg.projection.image_of(fg.upper.to_local(x)));
      r.conjugate_family = is_quasi_direct_factorization(fg.group, images);
    }
  }
  ensure(r.antichain_orbit == r.has_minimal && r.has_minimal == r.conjugate_family,
         "antichain-orbit conditions disagree");
  return r;
}

namespace {

void check_isomorphic(const NormalFactor& up, const NormalFactor& down, const Homomorphism& phi) {
  auto fu = factor_group(up);
  auto fd = factor_group(down);
  ensure(fu.group->order() == fd.group->order(), "pulled-back factor has a different order");
  const auto n = fu.group->order();
  std::vector<Elem> rep(n, 0);
  std::vector<char> seen(n, 0);
  for (Elem y = 0; y < fu.upper.group->order(); ++y) {
    auto c = fu.projection(y);
    if (!seen[c]) {
      seen[c] = 1;
      rep[c] = y;
    }
  }
  std::vector<Elem> table(n);
  for (Elem x = 0; x < n; ++x) {
    auto local = fd.upper.local[phi(fu.upper.inclusion(rep[x]))];
    ensure(local >= 0, "image of the upper term leaves the target factor");
    table[x] = fd.projection(static_cast<Elem>(local));
  }
  Homomorphism iso(fu.group, fd.group, std::move(table));
  ensure(iso.is_homomorphism_exhaustive() && iso.is_injective() && iso.is_surjective(),
         "induced map of factors is not an isomorphism");
}

}  // namespace

BlockPullback quotient_block_pullback(const Homomorphism& phi) {
  if (!phi.is_surjective()) raise(ErrorKind::NotSurjective, "pullback needs a surjection");
  auto lattice_g = normal_subgroups(phi.source());
  auto blocks_g = chief_blocks(lattice_g);
  auto blocks_h = chief_blocks(normal_subgroups(phi.target()));
  BlockPullback out;
  for (std::size_t a = 0; a < blocks_h.size(); ++a) {
    std::optional<std::size_t> target;
    for (const auto& f : blocks_h.block(a).representatives) {
      auto k = phi.preimage(f.upper());
      auto l = phi.preimage(f.lower());
      ensure(is_chief_factor(lattice_g, k, l), "preimage is not a chief factor");
      auto up = make_factor(k, l);
      check_isomorphic(up, f, phi);
      auto b = blocks_g.block_of(up);
      ensure(b.has_value() && (!target || *target == *b), "representatives pull back to different blocks");
      target = b;
      out.factors.emplace_back(f, up);
    }
    out.block_map.push_back(*target);
  }
  for (std::size_t a = 0; a < blocks_h.size(); ++a)
    for (std::size_t b = 0; b < blocks_h.size(); ++b) {
      ensure(blocks_h.leq(a, b) == blocks_g.leq(out.block_map[a], out.block_map[b]),
             "block order not preserved by the pullback");
      ensure(a == b || out.block_map[a] != out.block_map[b], "pullback block map is not injective");
    }
  return out;
}

}  // namespace chief

#include "chief/semisimple.hpp"

#include <algorithm>

#include "chief/errors.hpp"
#include "chief/products.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief {

std::string_view to_string(SemisimpleType t) {
  switch (t) {
    case SemisimpleType::NotSemisimple: return "not-semisimple";
    case SemisimpleType::Semisimple: return "semisimple";
    case SemisimpleType::StrictSemisimple: return "strict-semisimple";
  }
  return "?";
}

std::string_view to_string(CharSimpleType t) {
  switch (t) {
    case CharSimpleType::Weak: return "weak";
    case CharSimpleType::Semisimple: return "semisimple";
    case CharSimpleType::Stacking: return "stacking";
  }
  return "?";
}

namespace {

// Z(M) = M meet C_G(M)
ElementSet center_of(const Subgroup& m) {
  const auto& g = m.group();
  ElementSet z(g.order());
  const auto& mm = m.members();
  for (auto e = mm.find_first(); e != ElementSet::npos; e = mm.find_next(e)) {
    bool central = true;
    for (auto s : m.generators())
      if (g.mul(static_cast<Elem>(e), s) != g.mul(s, static_cast<Elem>(e))) {
        central = false;
        break;
      }
    if (central) z.set(e);
  }
  return z;
}

bool central_quotient_nonabelian(const Subgroup& m, const ElementSet& z) {
  const auto& g = m.group();
  for (auto a : m.generators())
    for (auto b : m.generators())
      if (!z.test(g.commutator(a, b))) return true;
  return false;
}

// proper normal subgroups of m all lie in z
bool proper_normals_inside(const Subgroup& m, const ElementSet& z) {
  auto mg = as_group(m);
  auto lat = normal_subgroups(mg.group);
  for (std::size_t i = 0; i < lat.top(); ++i)
    if (!mg.to_parent(lat.node(i)).members().is_subset_of(z)) return false;
  return true;
}

}  // namespace

std::vector<Subgroup> components(const NormalLattice& lattice) {
  // M normal in <<M>> normal in G, so every component is a normal subgroup
  // of some normal N with <<M>>_G = N.
  const auto& g = lattice.group();
  std::vector<Subgroup> out;
  for (std::size_t ni = 1; ni < lattice.size(); ++ni) {
    const auto& n = lattice.node(ni);
    auto ng = as_group(n);
    auto sub_lattice = normal_subgroups(ng.group);
    for (std::size_t mi = 1; mi < sub_lattice.size(); ++mi) {
      auto m = ng.to_parent(sub_lattice.node(mi));
      if (normal_closure(g, m.generators()) != n) continue;
      auto z = center_of(m);
      if (!central_quotient_nonabelian(m, z)) continue;
      if (proper_normals_inside(m, z)) out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return canonical_less(a, b); });
  return out;
}

bool is_component_by_definition(const Subgroup& m) {
  const auto& g = m.parent();
  const auto closure = normal_closure(g, m.generators());
  for (auto x : closure.generators())
    if (!normalizes(x, m)) return false;
  if (!central_quotient_nonabelian(m, center_of(m))) return false;
  auto mg = as_group(m);
  auto lat = normal_subgroups(mg.group);
  for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
    auto k = mg.to_parent(lat.node(i));
    if (!commute(k, closure)) return false;
  }
  return true;
}

ComponentReport component_report(const NormalLattice& lattice) {
  const auto& g = lattice.group();
  ComponentReport r{components(lattice), Subgroup::trivial(g), SemisimpleType::NotSemisimple};
  for (const auto& m : r.components) r.layer = join(r.layer, m);
  if (r.layer.is_whole())
    r.type = center(g).is_trivial() ? SemisimpleType::StrictSemisimple : SemisimpleType::Semisimple;
  return r;
}

Subgroup layer(const NormalLattice& lattice) { return component_report(lattice).layer; }

SemisimpleType semisimple_type(const NormalLattice& lattice) { return component_report(lattice).type; }

QuotientComponents quotient_components(const NormalLattice& lattice, const Subgroup& k) {
  auto report = component_report(lattice);
  if (report.type == SemisimpleType::NotSemisimple) raise(ErrorKind::NotSemisimpleType, "group is not of semisimple type");
  if (!k.is_normal()) raise(ErrorKind::NotNormal, "quotient subgroup is not normal");
  auto q = quotient(k);
  std::vector<Subgroup> images;
  for (const auto& m : report.components)
    if (commute(m, k)) images.push_back(q.projection.image_of(m));
  std::sort(images.begin(), images.end(), [](const Subgroup& a, const Subgroup& b) { return canonical_less(a, b); });
  images.erase(std::unique(images.begin(), images.end()), images.end());
  auto q_lattice = normal_subgroups(q.group);
  auto direct = components(q_lattice);
  ensure(direct == images, "images of the commuting components are not the components of the quotient");
  ensure(join_of(q.group, images).is_whole(), "components of the quotient do not generate it");
  if (k == center(lattice.group())) {
    ensure(center(q.group).is_trivial(), "quotient by the center is not centerless");
    for (std::size_t i = 0; i < images.size(); ++i)
      ensure(images[i].is_normal(), "component of the central quotient is not normal");
    ElementSet m(q.group->order());
    m.set();
    for (std::size_t i = 0; i < images.size(); ++i) {
      Subgroup rest = Subgroup::trivial(q.group);
      for (std::size_t j = 0; j < images.size(); ++j)
        if (j != i) rest = join(rest, images[j]);
      m &= rest.members();
    }
    ensure(m.count() == 1 || images.size() < 2, "components of the central quotient are not quasi-direct");
  }
  return {std::move(q), std::move(images)};
}

std::vector<std::size_t> simple_quotient_kernels(const NormalLattice& lattice) {
  const auto& g = lattice.group();
  const auto derived = derived_subgroup(g);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.top(); ++i) {
    // G/N is simple iff N is a maximal node
    if (!lattice.is_cover(i, lattice.top())) continue;
    if (!derived.is_subset_of(lattice.node(i))) out.push_back(i);
  }
  return out;
}

std::vector<DualityPair> simple_quotient_duality(const NormalLattice& lattice) {
  auto report = component_report(lattice);
  if (report.type == SemisimpleType::NotSemisimple) raise(ErrorKind::NotSemisimpleType, "group is not of semisimple type");
  auto kernels = simple_quotient_kernels(lattice);
  std::vector<DualityPair> out;
  std::vector<bool> used(lattice.size(), false);
  for (const auto& m : report.components) {
    auto c = centralizer(m);
    auto idx = lattice.index_of(c);
    ensure(idx && std::find(kernels.begin(), kernels.end(), *idx) != kernels.end(),
           "centralizer of a component is not a simple-quotient kernel");
    ensure(!used[*idx], "two components share a centralizer");
    used[*idx] = true;
    out.push_back({m, lattice.node(*idx)});
  }
  ensure(out.size() == kernels.size(), "some simple-quotient kernel is not a component centralizer");
  return out;
}

bool semisimple_quotient_criterion(const NormalLattice& lattice) {
  const auto& g = lattice.group();
  auto kernels = simple_quotient_kernels(lattice);
  ElementSet m(g->order());
  m.set();
  for (auto i : kernels) m &= lattice.node(i).members();
  if (m != center(g).members()) return false;
  for (std::size_t i = 0; i < lattice.top(); ++i) {
    bool inside = false;
    for (auto k : kernels) inside = inside || lattice.leq(i, k);
    if (!inside) return false;
  }
  return true;
}

bool stacking_condition(std::size_t blocks, const std::function<bool(std::size_t, std::size_t)>& translate_below) {
  if (blocks == 0) return false;
  for (std::size_t a = 0; a < blocks; ++a)
    for (std::size_t b = 0; b < blocks; ++b)
      if (!translate_below(a, b)) return false;
  return true;
}

namespace {

std::size_t translate_block(const BlockPoset& poset, const std::vector<Elem>& table, std::size_t a) {
  auto idx = poset.find_by_centralizer(apply_automorphism(table, poset.block(a).centralizer));
  ensure(idx.has_value(), "automorphism does not map blocks to blocks");
  return *idx;
}

CharSimpleType decide(const NormalLattice& lattice, const BlockPoset& poset,
                      const std::function<std::vector<std::vector<std::size_t>>()>& orbits) {
  const bool weak = poset.size() == 0;
  const bool semisimple = !components(lattice).empty();
  std::optional<std::vector<std::vector<std::size_t>>> cached;
  auto below = [&](std::size_t a, std::size_t b) {
    // an automorphism preserves the order of C_G(a), so a strictly smaller
    // translate needs |C_G(a)| < |C_G(b)|
    if (poset.block(a).centralizer.order() >= poset.block(b).centralizer.order()) return false;
    if (!cached) cached = orbits();
    for (auto c : (*cached)[a])
      if (c != b && poset.leq(c, b)) return true;
    return false;
  };
  const bool stacking = stacking_condition(poset.size(), below);
  ensure(static_cast<int>(weak) + static_cast<int>(semisimple) + static_cast<int>(stacking) == 1,
         "weak/semisimple/stacking verdicts are not exclusive");
  if (weak) return CharSimpleType::Weak;
  return semisimple ? CharSimpleType::Semisimple : CharSimpleType::Stacking;
}

}  // namespace

CharSimpleType charsimple_type(const GroupPtr& g, std::size_t search_cap) {
  if (!is_characteristically_simple(g, search_cap))
    raise(ErrorKind::NotCharacteristicallySimple, "group is not characteristically simple");
  auto lattice = normal_subgroups(g);
  auto poset = chief_blocks(lattice);
  return decide(lattice, poset, [&] {
    std::vector<std::vector<std::size_t>> orbit(poset.size());
    std::vector<std::vector<char>> seen(poset.size(), std::vector<char>(poset.size(), 0));
    for_each_automorphism(
        g,
        [&](const std::vector<Elem>& t) {
          for (std::size_t a = 0; a < poset.size(); ++a) {
            auto c = translate_block(poset, t, a);
            if (!seen[a][c]) {
              seen[a][c] = 1;
              orbit[a].push_back(c);
            }
          }
          return true;
        },
        search_cap);
    return orbit;
  });
}

CharSimpleType charsimple_type(const GroupPtr& g, const std::vector<std::vector<Elem>>& automorphisms) {
  for (const auto& t : automorphisms)
    if (!Homomorphism(g, g, t).is_homomorphism() || !Homomorphism(g, g, t).is_injective())
      raise(ErrorKind::InvalidArgument, "supplied table is not an automorphism");
  if (g->order() == 1) raise(ErrorKind::NotCharacteristicallySimple, "trivial group");
  auto lattice = normal_subgroups(g);
  for (std::size_t i = 1; i < lattice.top(); ++i) {
    const auto& n = lattice.node(i);
    bool invariant = true;
    for (const auto& t : automorphisms)
      for (auto s : n.generators())
        if (!n.contains(t[s])) invariant = false;
    if (invariant) raise(ErrorKind::NotCharacteristicallySimple, "group is not A-simple for the supplied A");
  }
  auto poset = chief_blocks(lattice);
  return decide(lattice, poset, [&] {
    std::vector<std::vector<std::size_t>> orbit(poset.size());
    for (std::size_t a = 0; a < poset.size(); ++a) {
      orbit[a] = {a};
      for (std::size_t i = 0; i < orbit[a].size(); ++i)
        for (const auto& t : automorphisms) {
          auto c = translate_block(poset, t, orbit[a][i]);
          if (std::find(orbit[a].begin(), orbit[a].end(), c) == orbit[a].end()) orbit[a].push_back(c);
        }
    }
    return orbit;
  });
}

CharSimpleType block_type(const BlockPoset& poset, std::size_t a, std::size_t search_cap) {
  std::optional<CharSimpleType> common;
  for (const auto& rep : poset.block(a).representatives) {
    auto t = charsimple_type(factor_group(rep).group, search_cap);
    ensure(!common || *common == t, "representatives of one block have different types");
    common = t;
  }
  ensure(common.has_value(), "block without representatives");
  return *common;
}

}  // namespace chief

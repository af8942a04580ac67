#include "chief/factors.hpp"

#include "chief/errors.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief {

NormalFactor::NormalFactor(Subgroup upper, Subgroup lower) : upper_(std::move(upper)), lower_(std::move(lower)) {
  require_same_parent(upper_, lower_);
  if (!upper_.is_normal() || !lower_.is_normal()) raise(ErrorKind::NotNormal, "factor terms must be normal");
  if (!lower_.members().is_proper_subset_of(upper_.members()))
    raise(ErrorKind::NotStrictlyNested, "lower term is not a proper subgroup of the upper term");
}

NormalFactor make_factor(const Subgroup& k, const Subgroup& l) { return NormalFactor(k, l); }

NormalFactor make_factor(const NormalLattice& lattice, FactorIndex f) {
  return NormalFactor(lattice.node(f.upper), lattice.node(f.lower));
}

FactorGroup factor_group(const NormalFactor& f) {
  auto upper = as_group(f.upper());
  auto q = quotient(upper.to_local(f.lower()));
  return {q.group, std::move(upper), std::move(q.projection)};
}

Subgroup factor_centralizer(const NormalFactor& f, CentralizerMode mode) {
  // {k in K : [g,k] in L} is a subgroup of K when L is normal, so testing
  // generators of K decides membership.
  const auto& g = f.group();
  const auto& lower = f.lower();
  std::vector<Elem> ks;
  if (mode == CentralizerMode::Generators)
    ks.assign(f.upper().generators().begin(), f.upper().generators().end());
  else
    ks = f.upper().elements();
  ElementSet members(g->order());
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (auto k : ks)
      if (!lower.contains(g->commutator(x, k))) {
        ok = false;
        break;
      }
    if (ok) members.set(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

bool is_abelian_factor(const NormalFactor& f) { return commutators_within(f.upper(), f.upper(), f.lower()); }

bool are_associated(const NormalFactor& f1, const NormalFactor& f2) {
  require_same_parent(f1.upper(), f2.upper());
  if (f1 == f2) return true;
  if (join(f1.upper(), f2.lower()) != join(f2.upper(), f1.lower())) return false;
  const auto l1l2 = join(f1.lower(), f2.lower());
  return (f1.upper().members() & l1l2.members()) == f1.lower().members() &&
         (f2.upper().members() & l1l2.members()) == f2.lower().members();
}

bool is_internal_compression(const NormalFactor& f1, const NormalFactor& f2) {
  require_same_parent(f1.upper(), f2.upper());
  return join(f1.upper(), f2.lower()) == f2.upper() &&
         (f1.upper().members() & f2.lower().members()) == f1.lower().members();
}

NormalFactor common_compression(const NormalFactor& f1, const NormalFactor& f2) {
  if (!are_associated(f1, f2)) raise(ErrorKind::NotAssociated, "factors are not associated");
  NormalFactor c(join(f1.upper(), f2.upper()), join(f1.lower(), f2.lower()));
  ensure(is_internal_compression(f1, c) && is_internal_compression(f2, c),
         "common compression is not an internal compression of both factors");
  return c;
}

std::vector<NormalFactor> chief_factors(const NormalLattice& lattice) {
  std::vector<NormalFactor> out;
  for (auto f : chief_factor_indices(lattice)) out.push_back(make_factor(lattice, f));
  return out;
}

AssociationGraph association_graph(const NormalLattice& lattice) {
  AssociationGraph g{chief_factors(lattice), {}};
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (are_associated(g.vertices[i], g.vertices[j])) g.edges.emplace_back(i, j);
  return g;
}

}  // namespace chief

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chief/blocks.hpp"
#include "chief/products.hpp"

namespace chief {

// A normal subgroup H of G with the block structure of both groups.  Blocks
// of H live in the standalone group local.group.
struct NormalPair {
  NormalLattice lattice_g;
  BlockPoset blocks_g;
  Subgroup h;
  SubgroupGroup local;
  BlockPoset blocks_h;

  // H-local subgroup to a subgroup of G and back.
  Subgroup lift(const Subgroup& in_h) const { return local.to_parent(in_h); }
  Subgroup restrict(const Subgroup& in_g) const;  // (K meet H) as a subgroup of H
};
// Throws NotNormal or DifferentParents.
NormalPair normal_pair(const NormalLattice& lattice_g, const Subgroup& h);

// Block of H containing g K g^-1 / g L g^-1 for a representative K/L of a.
// Computed on the stored centralizer and cross-checked on representatives.
std::size_t block_action(const NormalPair& p, Elem g, std::size_t a);

struct Extension {
  std::size_t block;   // block of G
  Subgroup m;          // <<H_a>>_G
  Subgroup n;          // core_G(C_H(a)) meet M
};
// Throws ExtensionCheckFailed when the constructed block fails the defining
// property: K covers a^G iff K meet H covers a, for every normal K of G.
Extension extend_block(const NormalPair& p, std::size_t a);

// Definitional check over the normal lattice of G.  Asserts that at most one
// block of G passes for the given a.
bool is_extension(const NormalPair& p, std::size_t a, std::size_t b);

enum class StackingKind { AntichainOrbit, ProperStacking };
std::string_view to_string(StackingKind k);

// Kind of a stacking class given abstract predicates, so that the proper
// stacking path can be exercised on posets that do not come from finite
// groups.  translate_below(a, b): some g has g.a < b.  translate_to(a, b):
// some g has g.a = b.  Asserts that exactly one kind applies.
StackingKind classify_stacking_class(const std::vector<std::size_t>& members,
                                     const std::function<bool(std::size_t, std::size_t)>& leq,
                                     const std::function<bool(std::size_t, std::size_t)>& translate_below,
                                     const std::function<bool(std::size_t, std::size_t)>& translate_to);

struct StackingStructure {
  std::vector<std::vector<std::size_t>> orbits;  // G-orbit of each block of H
  std::vector<char> preorder;                    // row-major, a then b
  std::vector<std::vector<std::size_t>> classes;
  std::vector<StackingKind> kinds;
  std::vector<std::size_t> class_of;

  bool precedes(std::size_t a, std::size_t b) const { return preorder[a * orbits.size() + b] != 0; }
};
StackingStructure stacking_structure(const NormalPair& p);

struct InducedPoset {
  std::vector<std::size_t> extension;     // block of H -> block of G
  std::vector<std::size_t> class_image;   // stacking class -> block of G
};
// Asserts a^G <= b^G iff a precedes b, and that classes map bijectively
// onto the extended blocks.
InducedPoset extension_poset_check(const NormalPair& p);

struct AntichainOrbitReport {
  bool antichain_orbit = false;     // (1)
  bool has_minimal = false;         // (2)
  bool conjugate_family = false;    // (3)
  Subgroup m;
  Subgroup n;
  std::vector<Subgroup> minimal;    // minimal H-invariant subgroups X with N < X <= M
};
// Evaluates the three conditions separately and asserts they agree.  Also
// asserts that M/N has no non-trivial abelian H-invariant subgroup.
AntichainOrbitReport antichain_orbit_analysis(const NormalPair& p, std::size_t a);

struct BlockPullback {
  std::vector<std::pair<NormalFactor, NormalFactor>> factors;  // K/L in H, preimage in G
  std::vector<std::size_t> block_map;                          // block of H -> block of G
};
// K/L -> phi^-1(K)/phi^-1(L) over all block representatives of the target.
// Throws NotSurjective.
BlockPullback quotient_block_pullback(const Homomorphism& phi);

}  // namespace chief

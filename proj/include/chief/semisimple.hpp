#pragma once

#include <functional>
#include <vector>

#include "chief/automorphisms.hpp"
#include "chief/blocks.hpp"

namespace chief {

enum class SemisimpleType { NotSemisimple, Semisimple, StrictSemisimple };
std::string_view to_string(SemisimpleType t);

// Sweeps M normal in N normal in G with <<M>>_G = N, accepting M when
// M/Z(M) is non-abelian and every proper normal subgroup of M lies in Z(M).
// Ordered canonically.
std::vector<Subgroup> components(const NormalLattice& lattice);

// Literal definition: M normal in <<M>>, M/Z(M) non-abelian, every proper
// normal subgroup of M central in <<M>>.  Uses the lattice of M.
bool is_component_by_definition(const Subgroup& m);

struct ComponentReport {
  std::vector<Subgroup> components;
  Subgroup layer;
  SemisimpleType type = SemisimpleType::NotSemisimple;
};
ComponentReport component_report(const NormalLattice& lattice);
Subgroup layer(const NormalLattice& lattice);
SemisimpleType semisimple_type(const NormalLattice& lattice);

struct QuotientComponents {
  QuotientResult quotient;
  std::vector<Subgroup> components;  // MK/K for components M with [M,K] = 1
};
// Throws NotSemisimpleType.
QuotientComponents quotient_components(const NormalLattice& lattice, const Subgroup& k);

struct DualityPair {
  Subgroup component;
  Subgroup kernel;  // C_G(M); G/C_G(M) is non-abelian simple
};
// Throws NotSemisimpleType.
std::vector<DualityPair> simple_quotient_duality(const NormalLattice& lattice);

// Normal N with G/N non-abelian simple.
std::vector<std::size_t> simple_quotient_kernels(const NormalLattice& lattice);
// The intersection of those kernels is Z(G) and every proper normal subgroup
// lies in one of them.
bool semisimple_quotient_criterion(const NormalLattice& lattice);

enum class CharSimpleType { Weak, Semisimple, Stacking };
std::string_view to_string(CharSimpleType t);

// For all blocks a, b some translate of a lies strictly below b; false when
// there are no blocks.
bool stacking_condition(std::size_t blocks, const std::function<bool(std::size_t, std::size_t)>& translate_below);

// Trichotomy for Aut(G)-simple groups.  Throws NotCharacteristicallySimple.
CharSimpleType charsimple_type(const GroupPtr& g, std::size_t search_cap = kDefaultSearchCap);
// Trichotomy for A-simple groups, with A generated by the supplied
// automorphism tables.  Throws NotCharacteristicallySimple when G is not
// A-simple.
CharSimpleType charsimple_type(const GroupPtr& g, const std::vector<std::vector<Elem>>& automorphisms);

// Common type of the factor groups of every representative.
CharSimpleType block_type(const BlockPoset& poset, std::size_t a, std::size_t search_cap = kDefaultSearchCap);

}  // namespace chief

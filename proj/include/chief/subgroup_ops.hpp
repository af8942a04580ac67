#pragma once

#include <span>
#include <vector>

#include "chief/subgroup.hpp"

namespace chief {

// Breadth-first closure of gens under right multiplication.
ElementSet closure_of(const FiniteGroup& g, std::span<const Elem> gens);

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Elem> seed);
Subgroup subgroup_generated(const GroupPtr& g, std::initializer_list<Elem> seed);

// Smallest subgroup containing seed and normalized by every conjugator.
Subgroup normal_closure_under(const GroupPtr& g, std::span<const Elem> seed,
                              std::span<const Elem> conjugators);
Subgroup normal_closure(const GroupPtr& g, std::span<const Elem> seed);
Subgroup normal_closure(const Subgroup& sub);

enum class CommutatorMethod {
  AllPairs,    // generated by [a,b] over all a in A, b in B
  Generators,  // normal closure in <A,B> of generator commutators
};

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b,
                             CommutatorMethod method = CommutatorMethod::AllPairs);
Subgroup derived_subgroup(const GroupPtr& g, CommutatorMethod method = CommutatorMethod::Generators);

// True iff every generator of a commutes with every generator of b.
bool commute(const Subgroup& a, const Subgroup& b);
// True iff [a, b] <= target, tested on generators (valid when target is
// normalized by a and b).
bool commutators_within(const Subgroup& a, const Subgroup& b, const Subgroup& target);

Subgroup centralizer_subgroup(const GroupPtr& g, std::span<const Elem> s);
Subgroup centralizer(const Subgroup& sub);
Subgroup center(const GroupPtr& g);

Subgroup join(const Subgroup& n, const Subgroup& m);
Subgroup meet(const Subgroup& n, const Subgroup& m);
// Literal element products {nm}; used to cross-check join on normal pairs.
ElementSet set_product(const Subgroup& n, const Subgroup& m);

// Largest normal subgroup of the parent contained in sub.
Subgroup normal_core(const Subgroup& sub);
Subgroup conjugate(const Subgroup& sub, Elem g);
// True iff g normalizes sub.
bool normalizes(Elem g, const Subgroup& sub);

// Orbits of conjugation, each sorted, ordered by least element.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);

}  // namespace chief

#pragma once

#include <functional>
#include <vector>

#include "chief/homomorphism.hpp"

namespace chief {

inline constexpr std::size_t kDefaultSearchCap = 50'000'000;

// Greedy small generating set: repeatedly adds the element that enlarges the
// generated subgroup most, preferring high element order.
std::vector<Elem> small_generating_set(const FiniteGroup& g);

// Streams every automorphism as a full table.  The callback returns false to
// stop early.  search_cap bounds the number of complete image tuples tested.
// Returns the number of automorphisms visited.
std::size_t for_each_automorphism(const GroupPtr& g,
                                  const std::function<bool(const std::vector<Elem>&)>& visit,
                                  std::size_t search_cap = kDefaultSearchCap);

std::vector<Homomorphism> automorphism_group(const GroupPtr& g, std::size_t search_cap = kDefaultSearchCap);

// True iff the group is non-trivial and no proper non-trivial normal subgroup
// is invariant under every automorphism.
bool is_characteristically_simple(const GroupPtr& g, std::size_t search_cap = kDefaultSearchCap);

// Image of a subgroup under an automorphism table.
Subgroup apply_automorphism(const std::vector<Elem>& table, const Subgroup& sub);

}  // namespace chief

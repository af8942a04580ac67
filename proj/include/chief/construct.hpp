#pragma once

#include <string>
#include <vector>

#include "chief/homomorphism.hpp"

namespace chief {

GroupPtr group_from_permutations(const std::vector<Permutation>& generators, std::size_t degree,
                                 std::size_t cap = kDefaultElementCap, std::string label = {});

// Element (a, b) has id a * |H| + b.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, std::size_t cap = kDefaultElementCap);
GroupPtr direct_product(const std::vector<GroupPtr>& factors, std::size_t cap = kDefaultElementCap);
// Embedding of operand i of a direct or semidirect product.
Homomorphism embedding(const GroupPtr& product, std::size_t operand);
// Coordinate projection of a two-factor direct product.
Homomorphism projection(const GroupPtr& product, std::size_t operand);

// action[h] is the automorphism of N applied by h, as a full table.
// Element (n, h) has id n * |H| + h.
GroupPtr semidirect_product(const GroupPtr& n, const GroupPtr& h,
                            const std::vector<std::vector<Elem>>& action,
                            std::size_t cap = kDefaultElementCap);
// Tables for the generators of H only; extended to all of H.
GroupPtr semidirect_product_from_generators(const GroupPtr& n, const GroupPtr& h,
                                            const std::vector<std::vector<Elem>>& generator_action,
                                            std::size_t cap = kDefaultElementCap);

struct QuotientResult {
  GroupPtr group;
  Homomorphism projection;
};
QuotientResult quotient(const Subgroup& n);

struct SubgroupGroup {
  GroupPtr group;
  Homomorphism inclusion;
  // local id of a parent id, or -1 for non-members
  std::vector<std::int64_t> local;

  Subgroup to_local(const Subgroup& in_parent) const;
  Subgroup to_parent(const Subgroup& in_local) const;
};
SubgroupGroup as_group(const Subgroup& sub);

// (L x R) / <(a, b^-1)> for each pair (a, b) of central elements.
GroupPtr central_product(const GroupPtr& left, const GroupPtr& right,
                         const std::vector<std::pair<Elem, Elem>>& identify);
// Images of the left and right factors in a group built by central_product.
// Throws InvalidArgument for other groups.
std::vector<Subgroup> central_factors(const GroupPtr& g);

// Named catalogue: Cn, Sn, An, Dn (dihedral of order n), Q8, V4, SL23, SL25,
// ES32 (Q8 central product Q8), A5wrC2.  Throws UnknownName.
GroupPtr named_group(const std::string& name, std::size_t cap = kDefaultElementCap);

GroupPtr cyclic_group(std::size_t n);
GroupPtr symmetric_group(std::size_t n, std::size_t cap = kDefaultElementCap);
GroupPtr alternating_group(std::size_t n, std::size_t cap = kDefaultElementCap);
GroupPtr dihedral_group(std::size_t order);
GroupPtr quaternion_group();
GroupPtr klein_four_group();
GroupPtr special_linear_group_2(std::uint32_t p);
GroupPtr extraspecial_32();
GroupPtr wreath_with_c2(std::size_t n, bool alternating);

}  // namespace chief

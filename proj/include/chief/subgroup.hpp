#pragma once

#include <span>
#include <vector>

#include "chief/group.hpp"

namespace chief {

// Subset of a parent group closed under multiplication and inverses.
// Immutable; normality is decided once at construction.
class Subgroup {
 public:
  // Trusted constructor: members must already be a subgroup generated by gens.
  Subgroup(GroupPtr parent, ElementSet members, std::vector<Elem> generators);

  // Derives a generating set greedily from a known-closed member set.
  static Subgroup from_members(GroupPtr parent, ElementSet members);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const FiniteGroup& group() const { return *parent_; }
  bool contains(Elem e) const { return members_.test(e); }
  std::size_t order() const { return order_; }
  const ElementSet& members() const { return members_; }
  std::vector<Elem> elements() const { return to_elements(members_); }
  std::span<const Elem> generators() const { return generators_; }
  bool is_normal() const { return normal_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == parent_->order(); }
  std::uint64_t fingerprint() const { return fingerprint_; }

  bool same_parent(const Subgroup& other) const { return parent_ == other.parent_; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_proper_subset_of(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const;

 private:
  GroupPtr parent_;
  ElementSet members_;
  std::vector<Elem> generators_;
  std::size_t order_ = 0;
  std::uint64_t fingerprint_ = 0;
  bool normal_ = false;
};

bool canonical_less(const Subgroup& a, const Subgroup& b);

// Throws DifferentParents unless both subgroups live in the same group object.
void require_same_parent(const Subgroup& a, const Subgroup& b);

}  // namespace chief

#pragma once

#include <vector>

#include "chief/subgroup.hpp"

namespace chief {

// Total map between explicitly enumerated groups, stored as an id table.
class Homomorphism {
 public:
  Homomorphism() = default;
  Homomorphism(GroupPtr source, GroupPtr target, std::vector<Elem> map);

  // Extends generator images to the whole source by breadth-first search.
  // Returns nullopt if the assignment is inconsistent.
  static std::optional<Homomorphism> from_generator_images(GroupPtr source, GroupPtr target,
                                                           std::span<const Elem> generators,
                                                           std::span<const Elem> images);
  static Homomorphism identity(GroupPtr group);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& table() const { return map_; }

  // Exact: checks phi(xs) = phi(x)phi(s) for all x and generators s.
  bool is_homomorphism() const;
  // Literal all-pairs check, for oracle use.
  bool is_homomorphism_exhaustive() const;
  bool is_injective() const;
  bool is_surjective() const;

  Subgroup kernel() const;
  Subgroup image() const;
  Subgroup image_of(const Subgroup& sub) const;
  Subgroup preimage(const Subgroup& sub) const;

  // (this o inner)(x) = this(inner(x))
  Homomorphism after(const Homomorphism& inner) const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> map_;
};

}  // namespace chief

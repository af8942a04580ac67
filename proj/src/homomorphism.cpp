#include "chief/homomorphism.hpp"

#include "chief/errors.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief {

Homomorphism::Homomorphism(GroupPtr source, GroupPtr target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_->order()) raise(ErrorKind::InvalidArgument, "map table has the wrong size");
  for (auto y : map_)
    if (y >= target_->order()) raise(ErrorKind::InvalidArgument, "map image out of range");
}

std::optional<Homomorphism> Homomorphism::from_generator_images(GroupPtr source, GroupPtr target,
                                                                std::span<const Elem> generators,
                                                                std::span<const Elem> images) {
  if (generators.size() != images.size()) raise(ErrorKind::InvalidArgument, "generator/image count mismatch");
  const auto& s = *source;
  const auto& t = *target;
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> map(s.order(), kUnset);
  map[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t j = 0; j < generators.size(); ++j) {
      Elem y = s.mul(x, generators[j]);
      Elem fy = t.mul(map[x], images[j]);
      if (map[y] == kUnset) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != s.order()) raise(ErrorKind::InvalidArgument, "generators do not generate the source");
  return Homomorphism(std::move(source), std::move(target), std::move(map));
}

Homomorphism Homomorphism::identity(GroupPtr group) {
  std::vector<Elem> map(group->order());
  for (Elem x = 0; x < map.size(); ++x) map[x] = x;
  return Homomorphism(group, group, std::move(map));
}

bool Homomorphism::is_homomorphism() const {
  const auto& s = *source_;
  const auto& t = *target_;
  if (map_[0] != 0) return false;
  if (closure_of(s, s.generators()).count() != s.order()) return is_homomorphism_exhaustive();
  for (auto g : s.generators())
    for (Elem x = 0; x < s.order(); ++x)
      if (map_[s.mul(x, g)] != t.mul(map_[x], map_[g])) return false;
  return true;
}

bool Homomorphism::is_homomorphism_exhaustive() const {
  const auto& s = *source_;
  const auto& t = *target_;
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem y = 0; y < s.order(); ++y)
      if (map_[s.mul(x, y)] != t.mul(map_[x], map_[y])) return false;
  return true;
}

bool Homomorphism::is_injective() const { return kernel().is_trivial(); }

bool Homomorphism::is_surjective() const { return image().is_whole(); }

Subgroup Homomorphism::kernel() const {
  ElementSet k(source_->order());
  for (Elem x = 0; x < map_.size(); ++x)
    if (map_[x] == 0) k.set(x);
  return Subgroup::from_members(source_, std::move(k));
}

Subgroup Homomorphism::image() const {
  std::vector<Elem> gens;
  for (auto g : source_->generators()) gens.push_back(map_[g]);
  return subgroup_generated(target_, gens);
}

Subgroup Homomorphism::image_of(const Subgroup& sub) const {
  if (sub.parent() != source_) raise(ErrorKind::DifferentParents, "subgroup is not in the source group");
  std::vector<Elem> gens;
  for (auto g : sub.generators()) gens.push_back(map_[g]);
  return subgroup_generated(target_, gens);
}

Subgroup Homomorphism::preimage(const Subgroup& sub) const {
  if (sub.parent() != target_) raise(ErrorKind::DifferentParents, "subgroup is not in the target group");
  ElementSet p(source_->order());
  for (Elem x = 0; x < map_.size(); ++x)
    if (sub.contains(map_[x])) p.set(x);
  return Subgroup::from_members(source_, std::move(p));
}

Homomorphism Homomorphism::after(const Homomorphism& inner) const {
  if (inner.target_ != source_) raise(ErrorKind::DifferentParents, "composition of mismatched maps");
  std::vector<Elem> map(inner.map_.size());
  for (Elem x = 0; x < map.size(); ++x) map[x] = map_[inner.map_[x]];
  return Homomorphism(inner.source_, target_, std::move(map));
}

}  // namespace chief

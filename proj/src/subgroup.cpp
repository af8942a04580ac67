#include "chief/subgroup.hpp"

#include "chief/errors.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief {

Subgroup::Subgroup(GroupPtr parent, ElementSet members, std::vector<Elem> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  if (!parent_) raise(ErrorKind::InvalidArgument, "subgroup without parent");
  if (members_.size() != parent_->order())
    raise(ErrorKind::InvalidArgument, "member set has the wrong universe size");
  order_ = members_.count();
  fingerprint_ = chief::fingerprint(members_);
  normal_ = true;
  for (auto g : parent_->generators()) {
    for (auto h : generators_)
      if (!members_.test(parent_->conj(g, h))) {
        normal_ = false;
        break;
      }
    if (!normal_) break;
  }
}

Subgroup Subgroup::from_members(GroupPtr parent, ElementSet members) {
  const auto& g = *parent;
  std::vector<Elem> gens;
  ElementSet current(g.order());
  current.set(0);
  for (auto e = members.find_first(); e != ElementSet::npos; e = members.find_next(e)) {
    if (current.test(e)) continue;
    gens.push_back(static_cast<Elem>(e));
    current = closure_of(g, gens);
    if (current.count() == members.count()) break;
  }
  ensure(current == members, "member set is not a subgroup");
  return Subgroup(std::move(parent), std::move(members), std::move(gens));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  ElementSet m(parent->order());
  m.set(0);
  return Subgroup(std::move(parent), std::move(m), {});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  ElementSet m(parent->order());
  m.set();
  std::vector<Elem> gens(parent->generators().begin(), parent->generators().end());
  return Subgroup(std::move(parent), std::move(m), std::move(gens));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  require_same_parent(*this, other);
  return members_.is_subset_of(other.members_);
}

bool Subgroup::is_proper_subset_of(const Subgroup& other) const {
  require_same_parent(*this, other);
  return members_.is_proper_subset_of(other.members_);
}

bool Subgroup::operator==(const Subgroup& other) const {
  return parent_ == other.parent_ && order_ == other.order_ && fingerprint_ == other.fingerprint_ &&
         members_ == other.members_;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  return canonical_less(a.members(), b.members());
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!a.same_parent(b)) raise(ErrorKind::DifferentParents, "subgroups belong to different groups");
}

}  // namespace chief

#include "chief/subgroup_ops.hpp"

#include <algorithm>

#include "chief/errors.hpp"

namespace chief {

ElementSet closure_of(const FiniteGroup& g, std::span<const Elem> gens) {
  ElementSet seen(g.order());
  std::vector<Elem> queue{0};
  seen.set(0);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto s : gens) {
      Elem y = g.mul(queue[i], s);
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  return seen;
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Elem> seed) {
  std::vector<Elem> gens;
  ElementSet current(g->order());
  current.set(0);
  for (auto s : seed) {
    if (s >= g->order()) raise(ErrorKind::InvalidArgument, "seed element out of range");
    if (current.test(s)) continue;
    gens.push_back(s);
    current = closure_of(*g, gens);
  }
  return Subgroup(g, std::move(current), std::move(gens));
}

Subgroup subgroup_generated(const GroupPtr& g, std::initializer_list<Elem> seed) {
  return subgroup_generated(g, std::span<const Elem>(seed.begin(), seed.size()));
}

Subgroup normal_closure_under(const GroupPtr& g, std::span<const Elem> seed,
                              std::span<const Elem> conjugators) {
  std::vector<Elem> gens;
  ElementSet current(g->order());
  current.set(0);
  std::vector<Elem> pending(seed.begin(), seed.end());
  while (!pending.empty()) {
    Elem c = pending.back();
    pending.pop_back();
    if (current.test(c)) continue;
    gens.push_back(c);
    current = closure_of(*g, gens);
    for (auto x : conjugators) pending.push_back(g->conj(x, c));
  }
  return Subgroup(g, std::move(current), std::move(gens));
}

Subgroup normal_closure(const GroupPtr& g, std::span<const Elem> seed) {
  return normal_closure_under(g, seed, g->generators());
}

Subgroup normal_closure(const Subgroup& sub) { return normal_closure(sub.parent(), sub.generators()); }

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b, CommutatorMethod method) {
  require_same_parent(a, b);
  const GroupPtr& g = a.parent();
  if (method == CommutatorMethod::Generators) {
    std::vector<Elem> seed, conjugators;
    for (auto x : a.generators())
      for (auto y : b.generators()) seed.push_back(g->commutator(x, y));
    conjugators.assign(a.generators().begin(), a.generators().end());
    conjugators.insert(conjugators.end(), b.generators().begin(), b.generators().end());
    return normal_closure_under(g, seed, conjugators);
  }
  std::vector<Elem> gens;
  ElementSet current(g->order());
  current.set(0);
  auto as = a.elements();
  auto bs = b.elements();
  for (auto x : as)
    for (auto y : bs) {
      Elem c = g->commutator(x, y);
      if (current.test(c)) continue;
      gens.push_back(c);
      current = closure_of(*g, gens);
    }
  return Subgroup(g, std::move(current), std::move(gens));
}

Subgroup derived_subgroup(const GroupPtr& g, CommutatorMethod method) {
  auto whole = Subgroup::whole(g);
  return commutator_subgroup(whole, whole, method);
}

bool commute(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const auto& g = a.group();
  for (auto x : a.generators())
    for (auto y : b.generators())
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool commutators_within(const Subgroup& a, const Subgroup& b, const Subgroup& target) {
  require_same_parent(a, b);
  require_same_parent(a, target);
  const auto& g = a.group();
  for (auto x : a.generators())
    for (auto y : b.generators())
      if (!target.contains(g.commutator(x, y))) return false;
  return true;
}

Subgroup centralizer_subgroup(const GroupPtr& g, std::span<const Elem> s) {
  ElementSet members(g->order());
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (auto y : s)
      if (g->mul(x, y) != g->mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) members.set(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

Subgroup centralizer(const Subgroup& sub) { return centralizer_subgroup(sub.parent(), sub.generators()); }

Subgroup center(const GroupPtr& g) { return centralizer_subgroup(g, g->generators()); }

Subgroup join(const Subgroup& n, const Subgroup& m) {
  require_same_parent(n, m);
  if (n.is_subset_of(m)) return m;
  if (m.is_subset_of(n)) return n;
  std::vector<Elem> seed(n.generators().begin(), n.generators().end());
  seed.insert(seed.end(), m.generators().begin(), m.generators().end());
  return subgroup_generated(n.parent(), seed);
}

Subgroup meet(const Subgroup& n, const Subgroup& m) {
  require_same_parent(n, m);
  if (n.is_subset_of(m)) return n;
  if (m.is_subset_of(n)) return m;
  return Subgroup::from_members(n.parent(), n.members() & m.members());
}

ElementSet set_product(const Subgroup& n, const Subgroup& m) {
  require_same_parent(n, m);
  const auto& g = n.group();
  ElementSet out(g.order());
  auto ms = m.elements();
  for (auto x : n.elements())
    for (auto y : ms) out.set(g.mul(x, y));
  return out;
}

Subgroup normal_core(const Subgroup& sub) {
  const auto& g = sub.group();
  ElementSet s = sub.members();
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto x : g.generators()) {
      ElementSet t(g.order());
      for (auto e = s.find_first(); e != ElementSet::npos; e = s.find_next(e))
        t.set(g.conj(x, static_cast<Elem>(e)));
      ElementSet next = s & t;
      if (next != s) {
        s = std::move(next);
        changed = true;
      }
    }
  }
  return Subgroup::from_members(sub.parent(), std::move(s));
}

Subgroup conjugate(const Subgroup& sub, Elem g) {
  const auto& grp = sub.group();
  ElementSet t(grp.order());
  const auto& m = sub.members();
  for (auto e = m.find_first(); e != ElementSet::npos; e = m.find_next(e))
    t.set(grp.conj(g, static_cast<Elem>(e)));
  std::vector<Elem> gens;
  for (auto h : sub.generators()) gens.push_back(grp.conj(g, h));
  return Subgroup(sub.parent(), std::move(t), std::move(gens));
}

bool normalizes(Elem g, const Subgroup& sub) {
  for (auto h : sub.generators())
    if (!sub.contains(sub.group().conj(g, h))) return false;
  return true;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> classes;
  std::vector<bool> assigned(g.order(), false);
  for (Elem e = 0; e < g.order(); ++e) {
    if (assigned[e]) continue;
    std::vector<Elem> orbit{e};
    assigned[e] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto x : g.generators()) {
        Elem y = g.conj(x, orbit[i]);
        if (!assigned[y]) {
          assigned[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

}  // namespace chief

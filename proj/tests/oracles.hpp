#pragma once

// Brute-force reference computations used only by the tests.  They work on
// raw element loops and do not call the library algorithms they check.

#include <algorithm>
#include <vector>

#include "chief/subgroup.hpp"

namespace chief::oracle {

inline ElementSet close_naive(const FiniteGroup& g, ElementSet s) {
  s.set(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    auto members = to_elements(s);
    for (auto a : members)
      for (auto b : members) {
        auto c = g.mul(a, b);
        if (!s.test(c)) {
          s.set(c);
          grew = true;
        }
      }
  }
  return s;
}

inline bool is_normal(const Subgroup& sub) {
  const auto& g = sub.group();
  auto members = sub.elements();
  for (Elem x = 0; x < g.order(); ++x)
    for (auto m : members)
      if (!sub.contains(g.conj(x, m))) return false;
  return true;
}

inline ElementSet product(const Subgroup& a, const Subgroup& b) {
  const auto& g = a.group();
  ElementSet out(g.order());
  for (auto x : a.elements())
    for (auto y : b.elements()) out.set(g.mul(x, y));
  return out;
}

inline ElementSet commutator(const Subgroup& a, const Subgroup& b) {
  const auto& g = a.group();
  ElementSet s(g.order());
  for (auto x : a.elements())
    for (auto y : b.elements()) s.set(g.commutator(x, y));
  return close_naive(g, s);
}

inline ElementSet centralizer(const Subgroup& sub) {
  const auto& g = sub.group();
  ElementSet out(g.order());
  auto members = sub.elements();
  for (Elem x = 0; x < g.order(); ++x)
    if (std::all_of(members.begin(), members.end(), [&](Elem m) { return g.mul(x, m) == g.mul(m, x); })) out.set(x);
  return out;
}

// {g : [g,k] in L for all k in K}
inline ElementSet factor_centralizer(const Subgroup& k, const Subgroup& l) {
  const auto& g = k.group();
  ElementSet out(g.order());
  auto members = k.elements();
  for (Elem x = 0; x < g.order(); ++x)
    if (std::all_of(members.begin(), members.end(), [&](Elem m) { return l.contains(g.commutator(x, m)); }))
      out.set(x);
  return out;
}

inline ElementSet normal_closure(const FiniteGroup& g, const std::vector<Elem>& seed) {
  ElementSet s(g.order());
  for (auto e : seed)
    for (Elem x = 0; x < g.order(); ++x) s.set(g.conj(x, e));
  return close_naive(g, s);
}

inline bool associated(const Subgroup& k1, const Subgroup& l1, const Subgroup& k2, const Subgroup& l2) {
  auto l1l2 = product(l1, l2);
  return product(k1, l2) == product(k2, l1) && (k1.members() & l1l2) == l1.members() &&
         (k2.members() & l1l2) == l2.members();
}

}  // namespace chief::oracle

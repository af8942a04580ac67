#include "chief/automorphisms.hpp"

#include <algorithm>
#include <map>

#include "chief/errors.hpp"
#include "chief/lattice.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief {

std::vector<Elem> small_generating_set(const FiniteGroup& g) {
  std::vector<Elem> order_sorted(g.order());
  for (Elem x = 0; x < g.order(); ++x) order_sorted[x] = x;
  std::stable_sort(order_sorted.begin(), order_sorted.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Elem> gens;
  ElementSet current = closure_of(g, gens);
  while (current.count() < g.order()) {
    Elem best = 0;
    std::size_t best_size = 0;
    for (auto x : order_sorted) {
      if (current.test(x)) continue;
      gens.push_back(x);
      std::size_t sz = closure_of(g, gens).count();
      gens.pop_back();
      if (sz > best_size) {
        best_size = sz;
        best = x;
        if (sz == g.order()) break;
      }
    }
    gens.push_back(best);
    current = closure_of(g, gens);
  }
  return gens;
}

namespace {

struct AutSearch {
  const FiniteGroup& g;
  std::vector<Elem> gens;
  std::vector<std::vector<Elem>> candidates;
  std::vector<Elem> images;
  std::size_t tested = 0;
  std::size_t cap;
  std::size_t visited = 0;
  const std::function<bool(const std::vector<Elem>&)>& visit;
  std::vector<Elem> table;
  std::vector<Elem> queue;

  // Orders of short words in two generators are invariants under any
  // automorphism; a cheap filter before the full extension.
  bool compatible(std::size_t i, Elem img) const {
    for (std::size_t j = 0; j < i; ++j) {
      if (images[j] == img) return false;
      Elem a = gens[i], b = gens[j], x = img, y = images[j];
      if (g.element_order(g.mul(a, b)) != g.element_order(g.mul(x, y))) return false;
      if (g.element_order(g.mul(a, g.inv(b))) != g.element_order(g.mul(x, g.inv(y)))) return false;
      if (g.element_order(g.commutator(a, b)) != g.element_order(g.commutator(x, y))) return false;
      if (g.element_order(g.mul(g.mul(a, a), b)) != g.element_order(g.mul(g.mul(x, x), y))) return false;
    }
    return true;
  }

  bool extend() {
    constexpr Elem kUnset = ~Elem{0};
    table.assign(g.order(), kUnset);
    std::vector<bool> hit(g.order(), false);
    table[0] = 0;
    hit[0] = true;
    queue.assign(1, 0);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Elem x = queue[q];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Elem y = g.mul(x, gens[j]);
        Elem fy = g.mul(table[x], images[j]);
        if (table[y] == kUnset) {
          if (hit[fy]) return false;
          hit[fy] = true;
          table[y] = fy;
          queue.push_back(y);
        } else if (table[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  // Returns false when the visitor asked to stop.
  bool search(std::size_t i) {
    if (i == gens.size()) {
      if (++tested > cap) raise(ErrorKind::SearchCapExceeded, "automorphism search exceeded its cap");
      if (!extend()) return true;
      ++visited;
      return visit(table);
    }
    for (auto c : candidates[i]) {
      if (!compatible(i, c)) continue;
      images[i] = c;
      if (!search(i + 1)) return false;
    }
    return true;
  }
};

}  // namespace

std::size_t for_each_automorphism(const GroupPtr& gp, const std::function<bool(const std::vector<Elem>&)>& visit,
                                  std::size_t search_cap) {
  const auto& g = *gp;
  if (g.order() == 1) {
    std::vector<Elem> id{0};
    visit(id);
    return 1;
  }
  auto classes = conjugacy_classes(g);
  std::vector<std::size_t> class_size(g.order());
  for (const auto& c : classes)
    for (auto x : c) class_size[x] = c.size();
  AutSearch s{g, small_generating_set(g), {}, {}, 0, search_cap, 0, visit, {}, {}};
  for (auto a : s.gens) {
    std::vector<Elem> cand;
    for (Elem x = 0; x < g.order(); ++x)
      if (g.element_order(x) == g.element_order(a) && class_size[x] == class_size[a]) cand.push_back(x);
    // try the identity assignment first
    std::stable_partition(cand.begin(), cand.end(), [a](Elem x) { return x == a; });
    s.candidates.push_back(std::move(cand));
  }
  s.images.assign(s.gens.size(), 0);
  s.search(0);
  return s.visited;
}

std::vector<Homomorphism> automorphism_group(const GroupPtr& g, std::size_t search_cap) {
  std::vector<Homomorphism> out;
  for_each_automorphism(
      g,
      [&](const std::vector<Elem>& t) {
        out.emplace_back(g, g, t);
        return true;
      },
      search_cap);
  return out;
}

Subgroup apply_automorphism(const std::vector<Elem>& table, const Subgroup& sub) {
  ElementSet m(sub.group().order());
  const auto& sm = sub.members();
  for (auto e = sm.find_first(); e != ElementSet::npos; e = sm.find_next(e)) m.set(table[e]);
  std::vector<Elem> gens;
  for (auto s : sub.generators()) gens.push_back(table[s]);
  return Subgroup(sub.parent(), std::move(m), std::move(gens));
}

bool is_characteristically_simple(const GroupPtr& g, std::size_t search_cap) {
  if (g->order() == 1) return false;
  auto lattice = normal_subgroups(g);
  std::vector<std::size_t> proper;
  for (std::size_t i = 1; i + 1 < lattice.size(); ++i) proper.push_back(i);
  if (proper.empty()) return true;
  std::map<std::size_t, int> by_order;
  for (auto i : proper) ++by_order[lattice.node(i).order()];
  for (auto i : proper)
    if (by_order[lattice.node(i).order()] == 1) return false;
  std::vector<bool> moved(lattice.size(), false);
  std::size_t unmoved = proper.size();
  for_each_automorphism(
      g,
      [&](const std::vector<Elem>& t) {
        for (auto i : proper) {
          if (moved[i]) continue;
          const auto& n = lattice.node(i);
          for (auto s : n.generators())
            if (!n.contains(t[s])) {
              moved[i] = true;
              --unmoved;
              break;
            }
        }
        return unmoved > 0;
      },
      search_cap);
  return unmoved == 0;
}

}  // namespace chief

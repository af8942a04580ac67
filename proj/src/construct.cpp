#include "chief/construct.hpp"

#include <boost/functional/hash.hpp>
#include <map>
#include <unordered_map>

#include "chief/errors.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

// Elements are located by their images of a base: a point sequence whose
// images determine the permutation.  The index is a flat trie keyed by the
// successive base images.
class PermBackend final : public MulBackend {
 public:
  explicit PermBackend(const std::vector<Permutation>& perms) : perms_(perms) {
    degree_ = perms_.empty() ? 0 : perms_[0].degree();
    choose_base();
    trie_.assign(degree_ == 0 ? 1 : degree_, kNone);
    for (Elem e = 0; e < perms_.size(); ++e) insert(e);
  }

  Elem mul(Elem a, Elem b) const override {
    const auto& pa = perms_[a].images();
    const auto& pb = perms_[b].images();
    if (base_.empty()) return 0;
    std::uint32_t node = 0;
    for (std::size_t i = 0; i + 1 < base_.size(); ++i) node = trie_[node * degree_ + pa[pb[base_[i]]]];
    return trie_[node * degree_ + pa[pb[base_.back()]]];
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  void choose_base() {
    const std::size_t n = perms_.size();
    std::vector<std::size_t> cls(n, 0);
    std::size_t distinct = 1;
    for (std::uint32_t p = 0; p < degree_ && distinct < n; ++p) {
      std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> refine;
      std::vector<std::size_t> next(n);
      for (std::size_t e = 0; e < n; ++e) {
        auto key = std::make_pair(cls[e], perms_[e](p));
        auto it = refine.emplace(key, refine.size()).first;
        next[e] = it->second;
      }
      if (refine.size() > distinct) {
        base_.push_back(p);
        distinct = refine.size();
        cls = std::move(next);
      }
    }
  }

  void insert(Elem e) {
    if (base_.empty()) return;
    std::uint32_t node = 0;
    for (std::size_t i = 0; i + 1 < base_.size(); ++i) {
      auto& slot = trie_[node * degree_ + perms_[e](base_[i])];
      if (slot == kNone) {
        slot = static_cast<std::uint32_t>(trie_.size() / degree_);
        trie_.resize(trie_.size() + degree_, kNone);
      }
      node = trie_[node * degree_ + perms_[e](base_[i])];
    }
    trie_[node * degree_ + perms_[e](base_.back())] = e;
  }

  std::vector<Permutation> perms_;
  std::size_t degree_ = 0;
  std::vector<std::uint32_t> base_;
  std::vector<std::uint32_t> trie_;
};

// Mixed radix ids, first factor most significant.
class DirectBackend final : public MulBackend {
 public:
  explicit DirectBackend(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {
    radix_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) radix_[i - 1] = radix_[i] * factors_[i]->order();
  }
  Elem mul(Elem a, Elem b) const override {
    Elem out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Elem x = (a / radix_[i]) % factors_[i]->order();
      Elem y = (b / radix_[i]) % factors_[i]->order();
      out += factors_[i]->mul(x, y) * radix_[i];
    }
    return out;
  }
  std::string describe(Elem a) const override {
    std::string s = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += ", ";
      s += factors_[i]->describe((a / radix_[i]) % factors_[i]->order());
    }
    return s + ")";
  }

 private:
  std::vector<GroupPtr> factors_;
  std::vector<Elem> radix_;
};

class SemidirectBackend final : public MulBackend {
 public:
  SemidirectBackend(GroupPtr n, GroupPtr h, std::vector<std::vector<Elem>> action)
      : n_(std::move(n)), h_(std::move(h)), action_(std::move(action)) {}
  Elem mul(Elem a, Elem b) const override {
    const Elem hn = static_cast<Elem>(h_->order());
    Elem n1 = a / hn, h1 = a % hn, n2 = b / hn, h2 = b % hn;
    return n_->mul(n1, action_[h1][n2]) * hn + h_->mul(h1, h2);
  }
  std::string describe(Elem a) const override {
    const Elem hn = static_cast<Elem>(h_->order());
    return "(" + n_->describe(a / hn) + "; " + h_->describe(a % hn) + ")";
  }

 private:
  GroupPtr n_, h_;
  std::vector<std::vector<Elem>> action_;
};

class QuotientBackend final : public MulBackend {
 public:
  QuotientBackend(GroupPtr parent, std::vector<Elem> reps, std::vector<Elem> coset_of)
      : parent_(std::move(parent)), reps_(std::move(reps)), coset_of_(std::move(coset_of)) {}
  Elem mul(Elem a, Elem b) const override { return coset_of_[parent_->mul(reps_[a], reps_[b])]; }
  std::string describe(Elem a) const override { return parent_->describe(reps_[a]) + "N"; }

 private:
  GroupPtr parent_;
  std::vector<Elem> reps_, coset_of_;
};

class SubgroupBackend final : public MulBackend {
 public:
  SubgroupBackend(GroupPtr parent, std::vector<Elem> members, std::vector<Elem> local)
      : parent_(std::move(parent)), members_(std::move(members)), local_(std::move(local)) {}
  Elem mul(Elem a, Elem b) const override { return local_[parent_->mul(members_[a], members_[b])]; }
  std::string describe(Elem a) const override { return parent_->describe(members_[a]); }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_, local_;
};

std::vector<Elem> dedup_generators(std::vector<Elem> gens) {
  std::vector<Elem> out;
  for (auto g : gens)
    if (g != 0 && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

void check_automorphism(const FiniteGroup& n, const std::vector<Elem>& table) {
  if (table.size() != n.order()) raise(ErrorKind::ActionNotAutomorphism, "automorphism table has the wrong size");
  std::vector<bool> hit(n.order(), false);
  for (auto y : table) {
    if (y >= n.order() || hit[y]) raise(ErrorKind::ActionNotAutomorphism, "action table is not a bijection");
    hit[y] = true;
  }
  for (auto s : n.generators())
    for (Elem x = 0; x < n.order(); ++x)
      if (table[n.mul(x, s)] != n.mul(table[x], table[s]))
        raise(ErrorKind::ActionNotAutomorphism, "action table is not multiplicative");
}

}  // namespace

GroupPtr group_from_permutations(const std::vector<Permutation>& generators, std::size_t degree,
                                 std::size_t cap, std::string label) {
  if (cap < 1) raise(ErrorKind::InvalidArgument, "cap must be at least 1");
  for (const auto& g : generators)
    if (g.degree() != degree) raise(ErrorKind::InvalidPermutation, "generator degree mismatch");
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::unordered_map<std::vector<std::uint32_t>, Elem, ImagesHash> index;
  index.emplace(elems[0].images(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : generators) {
      Permutation y = elems[i] * g;
      if (index.count(y.images())) continue;
      if (elems.size() >= cap)
        raise(ErrorKind::CapExceeded, "permutation closure exceeds element cap " + std::to_string(cap));
      index.emplace(y.images(), static_cast<Elem>(elems.size()));
      elems.push_back(std::move(y));
    }
  std::vector<Elem> gens;
  for (const auto& g : generators) gens.push_back(index.at(g.images()));
  Provenance prov;
  prov.kind = Construction::Permutations;
  prov.label = label.empty() ? "perm(" + std::to_string(degree) + ")" : std::move(label);
  auto backend = std::make_unique<PermBackend>(elems);
  const std::size_t order = elems.size();
  return std::make_shared<const FiniteGroup>(order, std::move(backend), dedup_generators(std::move(gens)),
                                             std::move(prov), std::move(elems));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, std::size_t cap) {
  return direct_product(std::vector<GroupPtr>{g, h}, cap);
}

GroupPtr direct_product(const std::vector<GroupPtr>& factors, std::size_t cap) {
  if (factors.empty()) raise(ErrorKind::InvalidArgument, "direct product of no factors");
  long double total = 1;
  for (const auto& f : factors) total *= static_cast<long double>(f->order());
  if (total > static_cast<long double>(cap))
    raise(ErrorKind::CapExceeded, "direct product exceeds element cap " + std::to_string(cap));
  const std::size_t order = static_cast<std::size_t>(total);
  std::vector<Elem> radix(factors.size(), 1);
  for (std::size_t i = factors.size(); i-- > 1;) radix[i - 1] = radix[i] * static_cast<Elem>(factors[i]->order());
  Provenance prov;
  prov.kind = Construction::DirectProduct;
  prov.label = "(";
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    prov.label += (i ? " x " : "") + factors[i]->label();
    prov.operands.push_back(factors[i]);
    std::vector<Elem> emb(factors[i]->order());
    for (Elem x = 0; x < emb.size(); ++x) emb[x] = x * radix[i];
    for (auto s : factors[i]->generators()) gens.push_back(emb[s]);
    prov.maps.push_back(std::move(emb));
  }
  prov.label += ")";
  return std::make_shared<const FiniteGroup>(order, std::make_unique<DirectBackend>(factors),
                                             dedup_generators(std::move(gens)), std::move(prov));
}

Homomorphism embedding(const GroupPtr& product, std::size_t operand) {
  const auto& prov = product->provenance();
  if ((prov.kind != Construction::DirectProduct && prov.kind != Construction::SemidirectProduct) ||
      operand >= prov.operands.size())
    raise(ErrorKind::InvalidArgument, "group has no such product operand");
  return Homomorphism(prov.operands[operand], product, prov.maps[operand]);
}

Homomorphism projection(const GroupPtr& product, std::size_t operand) {
  const auto& prov = product->provenance();
  if (prov.kind != Construction::DirectProduct || operand >= prov.operands.size())
    raise(ErrorKind::InvalidArgument, "group has no such direct factor");
  Elem radix = 1;
  for (std::size_t i = operand + 1; i < prov.operands.size(); ++i) radix *= static_cast<Elem>(prov.operands[i]->order());
  const Elem m = static_cast<Elem>(prov.operands[operand]->order());
  std::vector<Elem> map(product->order());
  for (Elem x = 0; x < map.size(); ++x) map[x] = (x / radix) % m;
  return Homomorphism(product, prov.operands[operand], std::move(map));
}

GroupPtr semidirect_product(const GroupPtr& n, const GroupPtr& h, const std::vector<std::vector<Elem>>& action,
                            std::size_t cap) {
  if (action.size() != h->order()) raise(ErrorKind::ActionNotHomomorphism, "need one automorphism per element of H");
  if (static_cast<long double>(n->order()) * static_cast<long double>(h->order()) > static_cast<long double>(cap))
    raise(ErrorKind::CapExceeded, "semidirect product exceeds element cap " + std::to_string(cap));
  for (const auto& t : action) check_automorphism(*n, t);
  for (Elem x = 0; x < n->order(); ++x)
    if (action[0][x] != x) raise(ErrorKind::ActionNotHomomorphism, "identity of H must act trivially");
  // alpha(h s) = alpha(h) o alpha(s) for all h and generators s is exact.
  for (Elem hh = 0; hh < h->order(); ++hh)
    for (auto s : h->generators()) {
      const auto& lhs = action[h->mul(hh, s)];
      for (Elem x = 0; x < n->order(); ++x)
        if (lhs[x] != action[hh][action[s][x]])
          raise(ErrorKind::ActionNotHomomorphism, "action is not a homomorphism into Aut(N)");
    }
  const Elem hn = static_cast<Elem>(h->order());
  Provenance prov;
  prov.kind = Construction::SemidirectProduct;
  prov.label = "(" + n->label() + " : " + h->label() + ")";
  prov.operands = {n, h};
  std::vector<Elem> emb_n(n->order()), emb_h(h->order());
  for (Elem x = 0; x < emb_n.size(); ++x) emb_n[x] = x * hn;
  for (Elem x = 0; x < emb_h.size(); ++x) emb_h[x] = x;
  std::vector<Elem> gens;
  for (auto s : n->generators()) gens.push_back(emb_n[s]);
  for (auto s : h->generators()) gens.push_back(emb_h[s]);
  prov.maps = {std::move(emb_n), std::move(emb_h)};
  return std::make_shared<const FiniteGroup>(n->order() * h->order(),
                                             std::make_unique<SemidirectBackend>(n, h, action),
                                             dedup_generators(std::move(gens)), std::move(prov));
}

GroupPtr semidirect_product_from_generators(const GroupPtr& n, const GroupPtr& h,
                                            const std::vector<std::vector<Elem>>& generator_action,
                                            std::size_t cap) {
  auto hgens = h->generators();
  if (generator_action.size() != hgens.size())
    raise(ErrorKind::BadAction, "need one automorphism table per generator of H");
  for (const auto& t : generator_action) check_automorphism(*n, t);
  std::vector<std::vector<Elem>> action(h->order());
  action[0].resize(n->order());
  for (Elem x = 0; x < n->order(); ++x) action[0][x] = x;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem cur = queue[i];
    for (std::size_t j = 0; j < hgens.size(); ++j) {
      Elem next = h->mul(cur, hgens[j]);
      std::vector<Elem> t(n->order());
      for (Elem x = 0; x < n->order(); ++x) t[x] = action[cur][generator_action[j][x]];
      if (action[next].empty()) {
        action[next] = std::move(t);
        queue.push_back(next);
      } else if (action[next] != t) {
        raise(ErrorKind::ActionNotHomomorphism, "generator tables do not define an action of H");
      }
    }
  }
  return semidirect_product(n, h, action, cap);
}

QuotientResult quotient(const Subgroup& n) {
  if (!n.is_normal()) raise(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  const GroupPtr& g = n.parent();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset_of(g->order(), kUnset);
  std::vector<Elem> reps;
  auto ns = n.elements();
  for (Elem x = 0; x < g->order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (auto y : ns) coset_of[g->mul(x, y)] = c;
  }
  std::vector<Elem> gens;
  for (auto s : g->generators()) gens.push_back(coset_of[s]);
  Provenance prov;
  prov.kind = Construction::Quotient;
  prov.label = g->label() + "/N" + std::to_string(n.order());
  prov.operands = {g};
  prov.maps = {coset_of};
  const std::size_t order = reps.size();
  auto q = std::make_shared<const FiniteGroup>(order, std::make_unique<QuotientBackend>(g, std::move(reps), coset_of),
                                               dedup_generators(std::move(gens)), std::move(prov));
  return {q, Homomorphism(g, q, std::move(coset_of))};
}

Subgroup SubgroupGroup::to_local(const Subgroup& in_parent) const {
  if (in_parent.parent() != inclusion.target()) raise(ErrorKind::DifferentParents, "subgroup is not in the parent group");
  ElementSet m(group->order());
  const auto& pm = in_parent.members();
  for (auto e = pm.find_first(); e != ElementSet::npos; e = pm.find_next(e)) {
    if (local[e] < 0) raise(ErrorKind::InvalidArgument, "subgroup is not contained in the embedded subgroup");
    m.set(static_cast<std::size_t>(local[e]));
  }
  std::vector<Elem> gens;
  for (auto s : in_parent.generators()) gens.push_back(static_cast<Elem>(local[s]));
  return Subgroup(group, std::move(m), std::move(gens));
}

Subgroup SubgroupGroup::to_parent(const Subgroup& in_local) const {
  if (in_local.parent() != group) raise(ErrorKind::DifferentParents, "subgroup is not in the embedded group");
  const auto& tgt = inclusion.target();
  ElementSet m(tgt->order());
  const auto& lm = in_local.members();
  for (auto e = lm.find_first(); e != ElementSet::npos; e = lm.find_next(e)) m.set(inclusion(static_cast<Elem>(e)));
  std::vector<Elem> gens;
  for (auto s : in_local.generators()) gens.push_back(inclusion(s));
  return Subgroup(tgt, std::move(m), std::move(gens));
}

SubgroupGroup as_group(const Subgroup& sub) {
  const GroupPtr& g = sub.parent();
  auto members = sub.elements();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> local_e(g->order(), kUnset);
  std::vector<std::int64_t> local(g->order(), -1);
  for (Elem i = 0; i < members.size(); ++i) {
    local_e[members[i]] = i;
    local[members[i]] = i;
  }
  std::vector<Elem> gens;
  for (auto s : sub.generators()) gens.push_back(local_e[s]);
  Provenance prov;
  prov.kind = Construction::Subgroup;
  prov.label = g->label() + "[" + std::to_string(sub.order()) + "]";
  prov.operands = {g};
  prov.maps = {members};
  auto h = std::make_shared<const FiniteGroup>(members.size(), std::make_unique<SubgroupBackend>(g, members, local_e),
                                               dedup_generators(std::move(gens)), std::move(prov));
  return {h, Homomorphism(h, g, members), std::move(local)};
}

GroupPtr central_product(const GroupPtr& left, const GroupPtr& right,
                         const std::vector<std::pair<Elem, Elem>>& identify) {
  auto zl = center(left);
  auto zr = center(right);
  for (auto [a, b] : identify) {
    if (a >= left->order() || b >= right->order() || !zl.contains(a) || !zr.contains(b))
      raise(ErrorKind::InvalidArgument, "central product identifies non-central elements");
    if (left->element_order(a) != right->element_order(b))
      raise(ErrorKind::InvalidArgument, "identified elements have different orders");
  }
  auto p = direct_product(left, right);
  std::vector<Elem> seed;
  for (auto [a, b] : identify) seed.push_back(a * static_cast<Elem>(right->order()) + right->inv(b));
  auto k = subgroup_generated(p, seed);
  // the identified pairs must meet each factor trivially
  for (auto x : k.elements()) {
    Elem a = x / static_cast<Elem>(right->order()), b = x % static_cast<Elem>(right->order());
    if ((a == 0) != (b == 0)) raise(ErrorKind::InvalidArgument, "identification collapses part of a factor");
  }
  return quotient(k).group;
}

std::vector<Subgroup> central_factors(const GroupPtr& g) {
  const auto& prov = g->provenance();
  if (prov.kind != Construction::Quotient || prov.operands.size() != 1 ||
      prov.operands[0]->provenance().kind != Construction::DirectProduct)
    raise(ErrorKind::InvalidArgument, "group is not a central product");
  const auto& p = prov.operands[0];
  Homomorphism to_g(p, g, prov.maps[0]);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < p->provenance().operands.size(); ++i)
    out.push_back(to_g.image_of(embedding(p, i).image()));
  return out;
}

}  // namespace chief

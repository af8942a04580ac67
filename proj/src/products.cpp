#include "chief/products.hpp"

#include "chief/errors.hpp"
#include "chief/subgroup_ops.hpp"

namespace chief {

namespace {

void require_normal_parts(const GroupPtr& g, const std::vector<Subgroup>& parts) {
  for (const auto& p : parts) {
    if (p.parent() != g) raise(ErrorKind::DifferentParents, "factorization part from another group");
    if (!p.is_normal()) raise(ErrorKind::NotNormal, "factorization part is not normal");
  }
}

}  // namespace

Subgroup join_of(const GroupPtr& g, const std::vector<Subgroup>& parts) {
  Subgroup out = Subgroup::trivial(g);
  for (const auto& p : parts) out = join(out, p);
  return out;
}

Subgroup complement(const GroupPtr& g, const std::vector<Subgroup>& parts, std::size_t i) {
  Subgroup out = Subgroup::trivial(g);
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (j != i) out = join(out, parts[j]);
  return out;
}

bool is_generalized_central_factorization(const GroupPtr& g, const std::vector<Subgroup>& parts) {
  require_normal_parts(g, parts);
  if (!join_of(g, parts).is_whole()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!commute(parts[i], parts[j])) return false;
  return true;
}

Subgroup complement_intersection(const GroupPtr& g, const std::vector<Subgroup>& parts) {
  ElementSet m(g->order());
  m.set();
  for (std::size_t i = 0; i < parts.size(); ++i) m &= complement(g, parts, i).members();
  return Subgroup::from_members(g, std::move(m));
}

bool is_quasi_direct_factorization(const GroupPtr& g, const std::vector<Subgroup>& parts) {
  require_normal_parts(g, parts);
  if (parts.size() == 1) return parts.front().is_whole();
  if (!is_generalized_central_factorization(g, parts)) return false;
  return complement_intersection(g, parts).is_trivial();
}

bool has_independence_property(const GroupPtr& g, const std::vector<Subgroup>& parts) {
  const std::size_t n = parts.size();
  if (n > 4) raise(ErrorKind::InvalidArgument, "independence check is limited to four parts");
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<ElementSet> g_of(subsets);
  for (std::size_t a = 0; a < subsets; ++a) {
    std::vector<Subgroup> chosen;
    for (std::size_t i = 0; i < n; ++i)
      if (a >> i & 1) chosen.push_back(parts[i]);
    g_of[a] = join_of(g, chosen).members();
  }
  const std::size_t full = subsets - 1;
  // X ranges over non-empty families of subsets of S
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << subsets); ++x) {
    std::size_t common = full;
    for (std::size_t a = 0; a < subsets; ++a)
      if (x >> a & 1) common &= a;
    if (common != 0) continue;
    ElementSet m(g->order());
    m.set();
    for (std::size_t a = 0; a < subsets; ++a)
      if (x >> a & 1) m &= g_of[a];
    if (m.count() != 1) return false;
  }
  return true;
}

Factorization classify_factorization(const GroupPtr& g, const std::vector<Subgroup>& parts) {
  Factorization f{g, parts, FactorizationKind::Neither, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) f.complements.push_back(complement(g, parts, i));
  if (is_quasi_direct_factorization(g, parts))
    f.kind = FactorizationKind::QuasiDirect;
  else if (is_generalized_central_factorization(g, parts))
    f.kind = FactorizationKind::GeneralizedCentral;
  return f;
}

DiagonalMap diagonal_map(const GroupPtr& g, const std::vector<Subgroup>& parts, std::size_t cap) {
  if (parts.size() < 2) raise(ErrorKind::InvalidArgument, "diagonal map needs at least two parts");
  if (!is_generalized_central_factorization(g, parts))
    raise(ErrorKind::NotGeneralizedCentral, "parts do not form a generalized central factorization");
  DiagonalMap d{complement_intersection(g, parts), false, {}, std::nullopt, std::nullopt};
  std::vector<Homomorphism> projections;
  long double total = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto q = quotient(complement(g, parts, i));
    total *= static_cast<long double>(q.group->order());
    d.coordinates.push_back(q.group);
    projections.push_back(std::move(q.projection));
  }
  d.injective = d.kernel.is_trivial();
  ensure(commute(d.kernel, Subgroup::whole(g)), "kernel of the diagonal map is not central");
  ensure(d.injective == is_quasi_direct_factorization(g, parts), "injectivity disagrees with quasi-directness");
  if (total > static_cast<long double>(cap)) return d;

  auto codomain = direct_product(d.coordinates, cap);
  const auto& prov = codomain->provenance();
  std::vector<Elem> table(g->order(), 0);
  for (Elem x = 0; x < g->order(); ++x)
    for (std::size_t i = 0; i < parts.size(); ++i) table[x] += prov.maps[i][projections[i](x)];
  Homomorphism map(g, codomain, std::move(table));
  ensure(map.is_homomorphism(), "diagonal map is not a homomorphism");
  ensure(map.kernel() == d.kernel, "kernel of the diagonal map is not the complement intersection");
  const auto image = map.image();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto coord = embedding(codomain, i).image();
    ensure(map.image_of(parts[i]) == coord, "part does not map onto its coordinate");
    ensure(meet(image, coord) == coord, "image does not contain the full coordinate");
  }
  d.map = std::move(map);
  d.codomain = codomain;
  return d;
}

SubdirectResult subdirect_quasi_factorization(const Homomorphism& delta, const std::vector<Subgroup>& factors) {
  if (!delta.is_injective()) raise(ErrorKind::NotInjective, "map is not injective");
  const auto& g = delta.source();
  const auto image = delta.image();
  std::vector<Subgroup> pre;
  for (const auto& k : factors) {
    if (k.parent() != delta.target()) raise(ErrorKind::DifferentParents, "factor is not in the codomain");
    if (!k.is_subset_of(image)) raise(ErrorKind::ImageNotFullOnFactor, "image meets a factor in a proper subgroup");
    pre.push_back(delta.preimage(k));
  }
  auto generated = join_of(g, pre);
  auto hg = as_group(generated);
  std::vector<Subgroup> local;
  for (const auto& p : pre) local.push_back(hg.to_local(p));
  auto fact = classify_factorization(hg.group, local);
  ensure(fact.kind == FactorizationKind::QuasiDirect, "preimages do not form a quasi-direct factorization");
  return {std::move(pre), std::move(generated), std::move(hg), std::move(fact)};
}

CentralQuotientResult central_quotient_factorization(const GroupPtr& g, const std::vector<Subgroup>& parts,
                                                     const Subgroup& n) {
  if (!is_generalized_central_factorization(g, parts))
    raise(ErrorKind::NotGeneralizedCentral, "parts do not form a generalized central factorization");
  if (n.parent() != g) raise(ErrorKind::DifferentParents, "subgroup from another group");
  if (!n.is_normal()) raise(ErrorKind::NotNormal, "quotient subgroup is not normal");
  if (n.is_whole()) raise(ErrorKind::InvalidArgument, "quotient subgroup must be proper");
  ElementSet m_set(g->order());
  m_set.set();
  for (std::size_t i = 0; i < parts.size(); ++i) m_set &= join(complement(g, parts, i), n).members();
  CentralQuotientResult out{Subgroup::from_members(g, std::move(m_set)), std::nullopt, std::nullopt};
  ensure(n.is_subset_of(out.m), "M does not contain N");
  ensure(commutators_within(out.m, Subgroup::whole(g), n), "M/N is not central in G/N");
  if (out.m.is_whole()) return out;
  auto q = quotient(out.m);
  std::vector<Subgroup> images;
  for (const auto& p : parts)
    if (!p.is_subset_of(out.m)) images.push_back(q.projection.image_of(p));
  auto fact = classify_factorization(q.group, images);
  ensure(fact.kind == FactorizationKind::QuasiDirect, "quotient parts are not a quasi-direct factorization");
  out.quotient = std::move(q);
  out.factorization = std::move(fact);
  return out;
}

CompressionSemidirect compression_semidirect(const Homomorphism& psi, std::optional<Subgroup> o) {
  const auto& g = psi.source();
  const auto& h = psi.target();
  if (!psi.is_injective()) raise(ErrorKind::NotInjective, "compression map is not injective");
  const auto image = psi.image();
  if (!image.is_normal()) raise(ErrorKind::ImageNotNormal, "image is not normal in the target");
  Subgroup open = o ? *o : Subgroup::whole(h);
  if (open.parent() != h) raise(ErrorKind::DifferentParents, "O is not a subgroup of the target");

  auto og = as_group(open);
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> psi_inv(h->order(), kUnset);
  for (Elem x = 0; x < g->order(); ++x) psi_inv[psi(x)] = x;
  std::vector<std::vector<Elem>> action(og.group->order(), std::vector<Elem>(g->order()));
  for (Elem ol = 0; ol < og.group->order(); ++ol) {
    const Elem hh = og.inclusion(ol);
    for (Elem x = 0; x < g->order(); ++x) action[ol][x] = psi_inv[h->conj(hh, psi(x))];
  }
  auto p = semidirect_product(g, og.group, action, SIZE_MAX);
  const Elem on = static_cast<Elem>(og.group->order());

  std::vector<Elem> pi_table(p->order()), iota_table(g->order());
  for (Elem x = 0; x < p->order(); ++x) pi_table[x] = h->mul(psi(x / on), og.inclusion(x % on));
  for (Elem x = 0; x < g->order(); ++x) iota_table[x] = x * on;
  Homomorphism pi(p, h, std::move(pi_table));
  Homomorphism iota(g, p, std::move(iota_table));
  ensure(pi.is_homomorphism() && iota.is_homomorphism(), "semidirect factorization maps are not homomorphisms");
  ensure(pi.image() == join(image, open), "pi does not map onto psi(G) O");

  auto kernel = pi.kernel();
  ElementSet formula(p->order());
  for (Elem x = 0; x < g->order(); ++x)
    if (og.local[psi(x)] >= 0) formula.set(g->inv(x) * on + static_cast<Elem>(og.local[psi(x)]));
  ensure(formula == kernel.members(), "kernel of pi is not {(g^-1, psi(g))}");
  if (open.is_whole()) {
    std::vector<Elem> kappa(g->order());
    for (Elem x = 0; x < g->order(); ++x) kappa[x] = g->inv(x) * on + static_cast<Elem>(og.local[psi(x)]);
    Homomorphism k(g, p, std::move(kappa));
    ensure(k.is_homomorphism() && k.is_injective() && k.image() == kernel, "kernel of pi is not isomorphic to G");
  }
  const auto iota_image = iota.image();
  ensure(meet(iota_image, kernel).is_trivial(), "iota(G) meets ker(pi) non-trivially");
  ensure(commute(iota_image, kernel), "iota(G) and ker(pi) do not commute");
  const bool generates = join(iota_image, kernel).is_whole();
  ensure(generates == open.is_subset_of(image), "iota(G) ker(pi) = P must hold exactly when O <= psi(G)");
  if (generates)
    ensure(is_quasi_direct_factorization(p, {iota_image, kernel}), "{iota(G), ker(pi)} is not quasi-direct");
  return {p, std::move(pi), std::move(iota), std::move(kernel), image.is_whole(), false, generates};
}

}  // namespace chief

#include "chief/lattice.hpp"
#include "chief/products.hpp"
#include "chief/subgroup_ops.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "expect.hpp"
#include "oracles.hpp"

using namespace chief;
using chief::testing::corpus;
using chief::testing::corpus_group;
using chief::testing::error_kind;

namespace {

std::vector<Subgroup> coordinates(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < g->provenance().operands.size(); ++i) out.push_back(embedding(g, i).image());
  return out;
}

// All index sets of size between lo and hi drawn from {0..n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t lo, std::size_t hi) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() >= lo) out.push_back(cur);
    if (cur.size() == hi) return;
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

GroupPtr elementary_abelian(std::size_t rank) {
  std::vector<GroupPtr> parts(rank, cyclic_group(2));
  return direct_product(parts);
}

}  // namespace

TEST_CASE("generalized central factorizations") {
  auto es = corpus_group("Q8oQ8");
  CHECK(is_generalized_central_factorization(es, central_factors(es)));
  auto aa = corpus_group("A5xA5");
  CHECK(is_generalized_central_factorization(aa, coordinates(aa)));
  auto s4 = normal_subgroups(corpus_group("S4"));
  CHECK(!is_generalized_central_factorization(corpus_group("S4"), {s4.node(2), s4.node(1)}));
  auto g = corpus_group("S4");
  auto t = subgroup_generated(g, {*g->find_permutation(Permutation::from_cycles(4, {{0, 1}}))});
  CHECK(error_kind([&] { is_generalized_central_factorization(g, {t}); }) == ErrorKind::NotNormal);
}

TEST_CASE("quasi-direct factorizations") {
  auto aa = corpus_group("A5xA5");
  CHECK(is_quasi_direct_factorization(aa, coordinates(aa)));
  auto es = corpus_group("Q8oQ8");
  CHECK(!is_quasi_direct_factorization(es, central_factors(es)));
  CHECK(complement_intersection(es, central_factors(es)) == center(es));
  auto v4 = corpus_group("V4");
  auto l = normal_subgroups(v4);
  std::vector<Subgroup> three{l.node(1), l.node(2), l.node(3)};
  CHECK(is_generalized_central_factorization(v4, three));
  CHECK(complement_intersection(v4, three).is_whole());
  CHECK(!is_quasi_direct_factorization(v4, three));
  CHECK(is_quasi_direct_factorization(v4, {l.node(1), l.node(2)}));
  CHECK(is_quasi_direct_factorization(v4, {l.node(4)}));
  CHECK(classify_factorization(v4, three).kind == FactorizationKind::GeneralizedCentral);
  CHECK(classify_factorization(aa, coordinates(aa)).kind == FactorizationKind::QuasiDirect);
}

TEST_CASE("diagonal map") {
  auto aa = corpus_group("A5xA5");
  auto d = diagonal_map(aa, coordinates(aa));
  CHECK(d.injective);
  CHECK(d.kernel.is_trivial());
  REQUIRE(d.map.has_value());
  CHECK(d.map->is_injective());

  auto es = corpus_group("Q8oQ8");
  auto de = diagonal_map(es, central_factors(es));
  CHECK(!de.injective);
  CHECK(de.kernel.order() == 2);
  CHECK(de.kernel == center(es));
  CHECK(commute(de.kernel, Subgroup::whole(es)));
  REQUIRE(de.map.has_value());
  CHECK(de.map->kernel() == de.kernel);

  auto v4 = corpus_group("V4");
  auto l = normal_subgroups(v4);
  auto dv = diagonal_map(v4, {l.node(1), l.node(2)});
  CHECK(dv.injective);
  REQUIRE(dv.map.has_value());
  CHECK(dv.map->is_homomorphism_exhaustive());
  CHECK((*dv.codomain)->order() == 4);

  CHECK(error_kind([&] { diagonal_map(v4, {l.node(4)}); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { diagonal_map(v4, {l.node(1), l.node(1)}); }) == ErrorKind::NotGeneralizedCentral);
}

TEST_CASE("subdirect quasi-factorization") {
  auto aa = corpus_group("A5xA5");
  auto r = subdirect_quasi_factorization(Homomorphism::identity(aa), coordinates(aa));
  CHECK(r.generated.is_whole());
  CHECK(r.preimages == coordinates(aa));
  CHECK(r.factorization.kind == FactorizationKind::QuasiDirect);

  auto v4 = corpus_group("V4");
  auto l = normal_subgroups(v4);
  auto d = diagonal_map(v4, {l.node(1), l.node(2)});
  auto rv = subdirect_quasi_factorization(*d.map, coordinates(*d.codomain));
  CHECK(rv.generated.is_whole());
  CHECK(rv.factorization.kind == FactorizationKind::QuasiDirect);
  std::vector<Subgroup> expected{l.node(2), l.node(1)};
  // delta^-1 of the coordinate G/A2 is A1 and vice versa
  CHECK((rv.preimages == expected || rv.preimages == std::vector<Subgroup>{l.node(1), l.node(2)}));

  auto c2 = cyclic_group(2);
  auto p = direct_product(c2, c2);
  Homomorphism diag(c2, p, {0, 3});
  CHECK(error_kind([&] { subdirect_quasi_factorization(diag, coordinates(p)); }) == ErrorKind::ImageNotFullOnFactor);
  Homomorphism zero(c2, p, {0, 0});
  CHECK(error_kind([&] { subdirect_quasi_factorization(zero, coordinates(p)); }) == ErrorKind::NotInjective);
}

TEST_CASE("central quotient factorization") {
  auto es = corpus_group("Q8oQ8");
  auto parts = central_factors(es);
  auto r = central_quotient_factorization(es, parts, Subgroup::trivial(es));
  CHECK(r.m == center(es));
  REQUIRE(r.factorization.has_value());
  CHECK(r.quotient->group->order() == 16);
  for (Elem x = 1; x < 16; ++x) CHECK(r.quotient->group->element_order(x) == 2);
  CHECK(r.factorization->kind == FactorizationKind::QuasiDirect);
  CHECK(r.factorization->parts.size() == 2);
  for (const auto& part : r.factorization->parts) CHECK(part.order() == 4);

  auto rz = central_quotient_factorization(es, parts, center(es));
  CHECK(rz.m == center(es));
  REQUIRE(rz.factorization.has_value());
  CHECK(rz.factorization->kind == FactorizationKind::QuasiDirect);

  auto aa = corpus_group("A5xA5");
  auto ra = central_quotient_factorization(aa, coordinates(aa), Subgroup::trivial(aa));
  CHECK(ra.m.is_trivial());
  REQUIRE(ra.factorization.has_value());
  CHECK(ra.factorization->parts.size() == 2);
}

TEST_CASE("compression semidirect factorization") {
  auto a5 = corpus_group("A5");
  auto r = compression_semidirect(Homomorphism::identity(a5));
  CHECK(r.product->order() == 3600);
  CHECK(r.normal_compression);
  CHECK(!r.proper_compression);
  CHECK(r.generates);
  CHECK(r.kernel.order() == 60);
  for (Elem g = 0; g < 60; ++g) CHECK(r.kernel.contains(a5->inv(g) * 60 + g));
  CHECK(is_quasi_direct_factorization(r.product, {r.iota.image(), r.kernel}));

  auto c2 = cyclic_group(2);
  auto rc = compression_semidirect(Homomorphism::identity(c2));
  CHECK(rc.product->order() == 4);
  CHECK(rc.product->is_abelian());
  CHECK(rc.kernel.contains(3));

  auto s5 = corpus_group("S5");
  std::vector<Elem> inc(60);
  for (Elem x = 0; x < 60; ++x) inc[x] = *s5->find_permutation(a5->permutation(x));
  Homomorphism psi(a5, s5, inc);
  auto image = psi.image();
  auto ri = compression_semidirect(psi, image);
  CHECK(!ri.normal_compression);
  CHECK(ri.generates);
  CHECK(ri.kernel.order() == 60);
  auto rf = compression_semidirect(psi);
  CHECK(!rf.generates);

  Homomorphism zero(c2, a5, {0, 0});
  CHECK(error_kind([&] { compression_semidirect(zero); }) == ErrorKind::NotInjective);
  auto s4 = corpus_group("S4");
  Homomorphism t(c2, s4, {0, *s4->find_permutation(Permutation::from_cycles(4, {{0, 1}}))});
  CHECK(error_kind([&] { compression_semidirect(t); }) == ErrorKind::ImageNotNormal);
}

TEST_CASE("generalized central is quasi-direct in centerless groups") {
  for (const auto& e : corpus()) {
    if (!center(e.group).is_trivial()) continue;
    CAPTURE(e.name);
    auto l = normal_subgroups(e.group);
    std::vector<Subgroup> nontrivial(l.nodes().begin() + 1, l.nodes().end());
    for (const auto& idx : subsets(nontrivial.size(), 2, 3)) {
      std::vector<Subgroup> parts;
      for (auto i : idx) parts.push_back(nontrivial[i]);
      CHECK(is_generalized_central_factorization(e.group, parts) == is_quasi_direct_factorization(e.group, parts));
    }
  }
}

TEST_CASE("independence property equals the single-intersection criterion") {
  std::vector<GroupPtr> groups{corpus_group("V4"), elementary_abelian(3), corpus_group("A5xA5"), corpus_group("D8"),
                               corpus_group("Q8oQ8")};
  for (const auto& g : groups) {
    auto l = normal_subgroups(g);
    std::vector<Subgroup> nontrivial(l.nodes().begin() + 1, l.nodes().end());
    const std::size_t hi = nontrivial.size() > 20 ? 2 : 4;
    std::size_t checked = 0;
    for (const auto& idx : subsets(nontrivial.size(), 2, hi)) {
      std::vector<Subgroup> parts;
      for (auto i : idx) parts.push_back(nontrivial[i]);
      if (!is_generalized_central_factorization(g, parts)) continue;
      ++checked;
      CHECK(has_independence_property(g, parts) == is_quasi_direct_factorization(g, parts));
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("quasi-direct factorizations are non-redundant") {
  auto c2_4 = elementary_abelian(4);
  auto aa = corpus_group("A5xA5");
  auto v4 = corpus_group("V4");
  auto lv = normal_subgroups(v4);
  std::vector<std::pair<GroupPtr, std::vector<Subgroup>>> cases{
      {c2_4, coordinates(c2_4)}, {aa, coordinates(aa)}, {v4, {lv.node(1), lv.node(2)}}};
  for (const auto& [g, parts] : cases) {
    REQUIRE(is_quasi_direct_factorization(g, parts));
    auto all = subsets(parts.size(), 0, parts.size());
    for (const auto& s1 : all)
      for (const auto& s2 : all) {
        std::vector<Subgroup> p1, p2;
        for (auto i : s1) p1.push_back(parts[i]);
        for (auto i : s2) p2.push_back(parts[i]);
        CHECK((join_of(g, p1) == join_of(g, p2)) == (s1 == s2));
      }
  }
}

#include <set>

#include "chief/products.hpp"
#include "chief/semisimple.hpp"
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
  return {embedding(g, 0).image(), embedding(g, 1).image()};
}

bool is_nonabelian_simple(const GroupPtr& g) { return !g->is_abelian() && normal_subgroups(g).size() == 2; }

// Components from the literal definition over every subgroup.
std::vector<Subgroup> components_oracle(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (const auto& s : oracle_all_subgroups(g))
    if (!s.is_trivial() && is_component_by_definition(s)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return canonical_less(a, b); });
  return out;
}

}  // namespace

TEST_CASE("components of corpus examples") {
  auto aa = corpus_group("A5xA5");
  auto ca = components(normal_subgroups(aa));
  auto coords = coordinates(aa);
  std::sort(coords.begin(), coords.end(), [](const Subgroup& a, const Subgroup& b) { return canonical_less(a, b); });
  CHECK(ca == coords);

  auto s5 = corpus_group("S5");
  auto cs = components(normal_subgroups(s5));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].order() == 60);

  auto sl = corpus_group("SL(2,5)");
  auto csl = components(normal_subgroups(sl));
  REQUIRE(csl.size() == 1);
  CHECK(csl[0].is_whole());
  CHECK(center(sl).order() == 2);

  CHECK(components(normal_subgroups(corpus_group("Q8oQ8"))).empty());

  auto w = corpus_group("A5wrC2");
  auto cw = components(normal_subgroups(w));
  REQUIRE(cw.size() == 2);
  for (const auto& m : cw) {
    CHECK(m.order() == 60);
    CHECK(!m.is_normal());
  }
}

TEST_CASE("component sweep agrees with the definition") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto found = components(normal_subgroups(e.group));
    for (const auto& m : found) CHECK(is_component_by_definition(m));
    if (e.group->order() <= kOracleBound) CHECK(found == components_oracle(e.group));
  }
}

TEST_CASE("layer and semisimple type") {
  auto es = normal_subgroups(corpus_group("Q8oQ8"));
  auto r = component_report(es);
  CHECK(r.layer.is_trivial());
  CHECK(r.type == SemisimpleType::NotSemisimple);
  CHECK(semisimple_type(normal_subgroups(corpus_group("A5xA5"))) == SemisimpleType::StrictSemisimple);
  CHECK(semisimple_type(normal_subgroups(corpus_group("SL(2,5)"))) == SemisimpleType::Semisimple);
  CHECK(semisimple_type(normal_subgroups(corpus_group("S5"))) == SemisimpleType::NotSemisimple);
  CHECK(layer(normal_subgroups(corpus_group("A5wrC2"))).order() == 3600);
  CHECK(to_string(SemisimpleType::StrictSemisimple) == "strict-semisimple");
}

TEST_CASE("components of quotients") {
  auto aa = corpus_group("A5xA5");
  auto la = normal_subgroups(aa);
  auto left = embedding(aa, 0).image();
  auto qc = quotient_components(la, left);
  REQUIRE(qc.components.size() == 1);
  CHECK(qc.components[0].is_whole());
  auto same = quotient_components(la, Subgroup::trivial(aa));
  CHECK(same.components.size() == 2);

  auto sl = corpus_group("SL(2,5)");
  auto ls = normal_subgroups(sl);
  auto qz = quotient_components(ls, center(sl));
  REQUIRE(qz.components.size() == 1);
  CHECK(qz.components[0].order() == 60);
  CHECK(semisimple_type(normal_subgroups(qz.quotient.group)) == SemisimpleType::StrictSemisimple);

  auto es = corpus_group("Q8oQ8");
  CHECK(error_kind([&] { quotient_components(normal_subgroups(es), center(es)); }) == ErrorKind::NotSemisimpleType);
}

TEST_CASE("quotient components on every normal subgroup") {
  for (auto name : {"A5", "A5xA5", "SL(2,5)"}) {
    CAPTURE(name);
    auto l = normal_subgroups(corpus_group(name));
    for (const auto& k : l.nodes()) CHECK_NOTHROW(quotient_components(l, k));
  }
}

TEST_CASE("duality between components and simple quotients") {
  auto aa = corpus_group("A5xA5");
  auto pairs = simple_quotient_duality(normal_subgroups(aa));
  REQUIRE(pairs.size() == 2);
  for (const auto& p : pairs) {
    CHECK(p.kernel == centralizer(p.component));
    CHECK(meet(p.kernel, p.component).is_trivial());
  }
  auto a5 = corpus_group("A5");
  auto pa = simple_quotient_duality(normal_subgroups(a5));
  REQUIRE(pa.size() == 1);
  CHECK(pa[0].kernel.is_trivial());
  CHECK(pa[0].component.is_whole());
  auto sl = corpus_group("SL(2,5)");
  auto ps = simple_quotient_duality(normal_subgroups(sl));
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].kernel.order() == 2);
  CHECK(ps[0].component.is_whole());
  CHECK(error_kind([&] { simple_quotient_duality(normal_subgroups(corpus_group("S4"))); }) ==
        ErrorKind::NotSemisimpleType);
}

TEST_CASE("semisimple quotient criterion in both directions") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto l = normal_subgroups(e.group);
    CHECK((semisimple_type(l) != SemisimpleType::NotSemisimple) == semisimple_quotient_criterion(l));
  }
}

TEST_CASE("structure of components on the corpus") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const auto& g = e.group;
    auto l = normal_subgroups(g);
    auto report = component_report(l);
    auto poset = chief_blocks(l);
    const bool semisimple = report.type != SemisimpleType::NotSemisimple;
    for (const auto& m : report.components) {
      // normalized subgroups either contain or centralize a component
      for (const auto& n : l.nodes()) CHECK((m.is_subset_of(n) || commute(m, n)));
      auto c = centralizer(m);
      auto r = join(m, c);
      if (semisimple) CHECK(r.is_whole());
      // R = M C_G(M): M Z(R)/Z(R) and R / C_G(M) are non-abelian simple
      auto rg = as_group(r);
      auto zr = center(rg.group);
      auto mz = join(rg.to_local(m), zr);
      CHECK(is_nonabelian_simple(factor_group(make_factor(mz, zr)).group));
      CHECK(is_nonabelian_simple(quotient(rg.to_local(c)).group));
      // the normal closure covers exactly one block
      auto closure = normal_closure(m);
      std::size_t covered = 0;
      for (const auto& b : poset.blocks()) covered += covers(closure, b) ? 1 : 0;
      CHECK(covered == 1);
    }
    if (!semisimple) continue;
    for (const auto& n : l.nodes()) {
      if (commutators_within(n, n, Subgroup::trivial(g))) CHECK(commute(n, Subgroup::whole(g)));
      // [K,G] is a join of components
      auto kg = commutator_subgroup(n, Subgroup::whole(g));
      std::vector<Subgroup> inside;
      for (const auto& m : report.components)
        if (m.is_subset_of(kg)) inside.push_back(m);
      CHECK(join_of(g, inside) == kg);
    }
    // components correspond to blocks, which form an antichain
    CHECK(poset.is_antichain());
    CHECK(poset.size() == report.components.size());
    std::set<std::size_t> hit;
    for (const auto& m : report.components)
      for (std::size_t b = 0; b < poset.size(); ++b)
        if (covers(normal_closure(m), poset.block(b))) hit.insert(b);
    CHECK(hit.size() == poset.size());
    if (report.type == SemisimpleType::StrictSemisimple) {
      std::vector<Subgroup> atoms;
      for (auto i : l.atoms()) atoms.push_back(l.node(i));
      CHECK(atoms == report.components);
      for (const auto& m : report.components) CHECK(is_nonabelian_simple(as_group(m).group));
    }
  }
}

TEST_CASE("centerless quasi-product of simple parts is strictly semisimple") {
  auto aa = corpus_group("A5xA5");
  REQUIRE(is_quasi_direct_factorization(aa, coordinates(aa)));
  CHECK(semisimple_type(normal_subgroups(aa)) == SemisimpleType::StrictSemisimple);
}

TEST_CASE("characteristically simple types") {
  CHECK(charsimple_type(corpus_group("V4")) == CharSimpleType::Weak);
  CHECK(charsimple_type(corpus_group("A5xA5")) == CharSimpleType::Semisimple);
  CHECK(charsimple_type(corpus_group("A5")) == CharSimpleType::Semisimple);
  CHECK(charsimple_type(cyclic_group(3)) == CharSimpleType::Weak);
  CHECK(error_kind([] { charsimple_type(corpus_group("S4")); }) == ErrorKind::NotCharacteristicallySimple);
  CHECK(to_string(CharSimpleType::Stacking) == "stacking");
}

TEST_CASE("no finite characteristically simple group has stacking type") {
  std::size_t classified = 0;
  for (const auto& e : corpus()) {
    if (e.group->order() > 3600 || !is_characteristically_simple(e.group)) continue;
    CAPTURE(e.name);
    auto t = charsimple_type(e.group);
    CHECK(t != CharSimpleType::Stacking);
    CHECK((t == CharSimpleType::Weak) == e.group->is_abelian());
    ++classified;
  }
  CHECK(classified == 3);
}

TEST_CASE("A-simple parameterization") {
  auto aa = corpus_group("A5xA5");
  std::vector<Elem> swap(3600);
  for (Elem a = 0; a < 60; ++a)
    for (Elem b = 0; b < 60; ++b) swap[a * 60 + b] = b * 60 + a;
  std::vector<std::vector<Elem>> inner;
  for (auto s : aa->generators()) {
    std::vector<Elem> t(3600);
    for (Elem x = 0; x < 3600; ++x) t[x] = aa->conj(s, x);
    inner.push_back(t);
  }
  CHECK(error_kind([&] { charsimple_type(aa, inner); }) == ErrorKind::NotCharacteristicallySimple);
  auto with_swap = inner;
  with_swap.push_back(swap);
  CHECK(charsimple_type(aa, with_swap) == CharSimpleType::Semisimple);
  auto v4 = corpus_group("V4");
  std::vector<std::vector<Elem>> v4aut;
  for (const auto& a : automorphism_group(v4)) v4aut.push_back(a.table());
  CHECK(charsimple_type(v4, v4aut) == CharSimpleType::Weak);
}

TEST_CASE("stacking condition on abstract predicates") {
  CHECK(!stacking_condition(0, [](std::size_t, std::size_t) { return true; }));
  CHECK(stacking_condition(3, [](std::size_t, std::size_t) { return true; }));
  CHECK(!stacking_condition(2, [](std::size_t a, std::size_t b) { return a < b; }));
}

TEST_CASE("block types") {
  auto la = normal_subgroups(corpus_group("A5xA5"));
  auto pa = chief_blocks(la);
  for (std::size_t b = 0; b < pa.size(); ++b) CHECK(block_type(pa, b) == CharSimpleType::Semisimple);
  auto lw = normal_subgroups(corpus_group("A5wrC2"));
  auto pw = chief_blocks(lw);
  CHECK(block_type(pw, 0) == CharSimpleType::Semisimple);
  for (const auto& e : corpus()) {
    if (e.group->order() > 7200) continue;
    CAPTURE(e.name);
    auto l = normal_subgroups(e.group);
    auto p = chief_blocks(l);
    for (std::size_t b = 0; b < p.size(); ++b) CHECK(block_type(p, b) == CharSimpleType::Semisimple);
  }
}

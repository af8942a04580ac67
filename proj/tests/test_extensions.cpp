#include "chief/errors.hpp"
#include "chief/extensions.hpp"
#include "chief/subgroup_ops.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "expect.hpp"

using namespace chief;
using chief::testing::corpus;
using chief::testing::corpus_group;
using chief::testing::error_kind;

namespace {

struct Wreath {
  GroupPtr g = corpus_group("A5wrC2");
  NormalLattice lattice = normal_subgroups(g);
  NormalPair pair = normal_pair(lattice, lattice.node(1));
};

const Wreath& wreath() {
  static const Wreath w;
  return w;
}

// Blocks of H (as a standalone group) whose lowermost cover lies inside the
// given subgroup of G.
std::optional<std::size_t> block_with_cover(const NormalPair& p, const Subgroup& cover_in_g) {
  for (std::size_t a = 0; a < p.blocks_h.size(); ++a)
    if (p.lift(p.blocks_h.minimal_cover(a)) == cover_in_g) return a;
  return std::nullopt;
}

}  // namespace

TEST_CASE("block action in the wreath product") {
  const auto& w = wreath();
  REQUIRE(w.pair.blocks_h.size() == 2);
  CHECK(block_action(w.pair, 0, 0) == 0);
  CHECK(block_action(w.pair, 0, 1) == 1);
  for (Elem x = 0; x < w.g->order(); x += 97) {
    const bool inside = w.pair.h.contains(x);
    for (std::size_t a = 0; a < 2; ++a) CHECK((block_action(w.pair, x, a) == a) == inside);
  }
}

TEST_CASE("extending the coordinate blocks of the wreath base") {
  const auto& w = wreath();
  for (std::size_t a = 0; a < 2; ++a) {
    auto e = extend_block(w.pair, a);
    CHECK(e.block == 0);
    CHECK(e.m == w.lattice.node(1));
    CHECK(e.n.is_trivial());
    CHECK(is_extension(w.pair, a, 0));
  }
}

TEST_CASE("extension along equality and along a direct factor") {
  for (auto name : {"A5", "A5xA5", "SL(2,5)", "S5"}) {
    CAPTURE(name);
    auto l = normal_subgroups(corpus_group(name));
    auto p = normal_pair(l, Subgroup::whole(l.group()));
    for (std::size_t a = 0; a < p.blocks_h.size(); ++a) {
      auto e = extend_block(p, a);
      CHECK(p.blocks_g.block(e.block).centralizer == p.lift(p.blocks_h.block(a).centralizer));
      CHECK(is_extension(p, a, e.block));
    }
  }
  auto g = corpus_group("A5xA5");
  auto l = normal_subgroups(g);
  auto left = embedding(g, 0).image();
  auto right = embedding(g, 1).image();
  auto p = normal_pair(l, left);
  REQUIRE(p.blocks_h.size() == 1);
  auto e = extend_block(p, 0);
  auto expected = *p.blocks_g.block_of(make_factor(left, Subgroup::trivial(g)));
  auto other = *p.blocks_g.block_of(make_factor(right, Subgroup::trivial(g)));
  CHECK(e.block == expected);
  CHECK(is_extension(p, 0, expected));
  CHECK(!is_extension(p, 0, other));
  CHECK(error_kind([&] { normal_pair(normal_subgroups(corpus_group("S4")), left); }) == ErrorKind::DifferentParents);
}

TEST_CASE("stacking structure") {
  const auto& w = wreath();
  auto ss = stacking_structure(w.pair);
  REQUIRE(ss.classes.size() == 1);
  CHECK(ss.classes[0] == std::vector<std::size_t>{0, 1});
  CHECK(ss.kinds[0] == StackingKind::AntichainOrbit);

  auto l = normal_subgroups(corpus_group("A5xA5"));
  auto whole = stacking_structure(normal_pair(l, Subgroup::whole(l.group())));
  CHECK(whole.classes.size() == 2);
  for (const auto& c : whole.classes) CHECK(c.size() == 1);
  for (auto k : whole.kinds) CHECK(k == StackingKind::AntichainOrbit);

  auto left = embedding(l.group(), 0).image();
  auto single = stacking_structure(normal_pair(l, left));
  CHECK(single.classes.size() == 1);
  CHECK(single.classes[0].size() == 1);
}

TEST_CASE("stacking classes on synthetic fixtures") {
  // points 0..4 of the integers ordered as usual with translations acting
  std::vector<std::size_t> chain{0, 1, 2, 3, 4};
  auto leq = [](std::size_t a, std::size_t b) { return a <= b; };
  auto always = [](std::size_t, std::size_t) { return true; };
  CHECK(classify_stacking_class(chain, leq, always, always) == StackingKind::ProperStacking);

  // two incomparable points swapped by the action
  std::vector<std::size_t> pair{0, 1};
  auto eq = [](std::size_t a, std::size_t b) { return a == b; };
  auto never = [](std::size_t, std::size_t) { return false; };
  CHECK(classify_stacking_class(pair, eq, never, always) == StackingKind::AntichainOrbit);

  // neither kind: a comparable pair with no strict translates
  CHECK(error_kind([&] { classify_stacking_class(pair, leq, never, eq); }) == ErrorKind::PostconditionFailed);
  CHECK(to_string(StackingKind::ProperStacking) == "proper-stacking");
}

TEST_CASE("induced poset isomorphism") {
  const auto& w = wreath();
  auto ip = extension_poset_check(w.pair);
  CHECK(ip.extension == std::vector<std::size_t>{0, 0});
  CHECK(ip.class_image == std::vector<std::size_t>{0});

  auto l = normal_subgroups(corpus_group("A5xA5"));
  auto p = normal_pair(l, Subgroup::whole(l.group()));
  auto id = extension_poset_check(p);
  CHECK(id.extension == std::vector<std::size_t>{0, 1});
  CHECK(id.class_image == std::vector<std::size_t>{0, 1});
}

TEST_CASE("antichain orbit analysis") {
  const auto& w = wreath();
  for (std::size_t a = 0; a < 2; ++a) {
    auto r = antichain_orbit_analysis(w.pair, a);
    CHECK(r.antichain_orbit);
    CHECK(r.has_minimal);
    CHECK(r.conjugate_family);
    REQUIRE(r.minimal.size() == 2);
    for (const auto& m : r.minimal) {
      CHECK(m.order() == 60);
      CHECK(!m.is_normal());
    }
    CHECK(conjugate(r.minimal[0], *std::find_if(w.g->generators().begin(), w.g->generators().end(), [&](Elem s) {
            return !w.pair.h.contains(s);
          })) == r.minimal[1]);
  }
  auto l = normal_subgroups(corpus_group("A5"));
  auto r = antichain_orbit_analysis(normal_pair(l, Subgroup::whole(l.group())), 0);
  CHECK(r.antichain_orbit);
  CHECK(r.minimal.size() == 1);
  CHECK(r.minimal[0].is_whole());
}

TEST_CASE("block pullback along surjections") {
  const auto& w = wreath();
  auto q = quotient(w.lattice.node(1));
  CHECK(quotient_block_pullback(q.projection).block_map.empty());

  auto sl = corpus_group("SL(2,5)");
  auto qz = quotient(center(sl));
  auto pb = quotient_block_pullback(qz.projection);
  REQUIRE(pb.block_map.size() == 1);
  REQUIRE(pb.factors.size() == 1);
  CHECK(pb.factors[0].second.upper().is_whole());
  CHECK(pb.factors[0].second.lower() == center(sl));

  auto aa = corpus_group("A5xA5");
  auto id = quotient_block_pullback(Homomorphism::identity(aa));
  CHECK(id.block_map == std::vector<std::size_t>{0, 1});
  for (const auto& [down, up] : id.factors) CHECK(down == up);

  auto inc = Homomorphism(cyclic_group(1), aa, {0});
  CHECK(error_kind([&] { quotient_block_pullback(inc); }) == ErrorKind::NotSurjective);
}

TEST_CASE("extension properties over corpus normal pairs") {
  for (const auto& e : corpus()) {
    if (e.group->order() > 7200) continue;
    CAPTURE(e.name);
    auto l = normal_subgroups(e.group);
    for (std::size_t hi = 1; hi < l.size(); ++hi) {
      auto p = normal_pair(l, l.node(hi));
      if (p.blocks_h.size() == 0) continue;
      CAPTURE(hi);
      CHECK_NOTHROW(extension_poset_check(p));
      auto ss = stacking_structure(p);
      for (std::size_t a = 0; a < p.blocks_h.size(); ++a) {
        auto ext = extend_block(p, a);
        const auto& hb = p.blocks_h.block(a);
        const auto& gb = p.blocks_g.block(ext.block);
        CHECK(p.blocks_g.minimal_cover(ext.block) == ext.m);
        CHECK(ss.kinds[ss.class_of[a]] == StackingKind::AntichainOrbit);
        CHECK_NOTHROW(antichain_orbit_analysis(p, a));
        auto hc = p.lift(hb.centralizer);
        for (std::size_t ki = 0; ki < l.size(); ++ki)
          for (std::size_t li = 0; li < l.size(); ++li) {
            if (!l.lt(li, ki)) continue;
            auto f = make_factor(l.node(ki), l.node(li));
            auto kh = p.restrict(f.upper());
            auto lh = p.restrict(f.lower());
            const bool restricted_covers = !(kh == lh) && covers(make_factor(kh, lh), hb);
            CHECK(covers(f, gb) == restricted_covers);
            if (restricted_covers) CHECK(meet(factor_centralizer(f), p.h).is_subset_of(hc));
          }
        // every normal L of H with N < L <= M covers a translate of each
        // block covered by M
        for (std::size_t b = 0; b < p.blocks_h.size(); ++b) {
          if (!covers(p.local.to_local(ext.m), p.blocks_h.block(b))) continue;
          for (const auto& x : p.blocks_h.lattice().nodes()) {
            if (p.lift(x).is_subset_of(ext.n) || !p.lift(x).is_subset_of(ext.m)) continue;
            bool some = false;
            for (auto c : ss.orbits[b]) some = some || covers(x, p.blocks_h.block(c));
            CHECK(some);
          }
        }
      }
    }
  }
}

TEST_CASE("extension is transitive along normal chains") {
  for (const auto& e : corpus()) {
    if (e.group->order() > 7200) continue;
    CAPTURE(e.name);
    auto l = normal_subgroups(e.group);
    for (std::size_t ai = 1; ai < l.size(); ++ai)
      for (std::size_t bi = ai; bi < l.size(); ++bi) {
        if (!l.leq(ai, bi)) continue;
        auto ga = normal_pair(l, l.node(ai));
        if (ga.blocks_h.size() == 0) continue;
        auto gb = normal_pair(l, l.node(bi));
        auto ba = normal_pair(gb.blocks_h.lattice(), gb.local.to_local(l.node(ai)));
        for (std::size_t a = 0; a < ba.blocks_h.size(); ++a) {
          auto c_in_g = gb.lift(ba.lift(ba.blocks_h.block(a).centralizer));
          auto a_in_ga = ga.blocks_h.find_by_centralizer(ga.local.to_local(c_in_g));
          REQUIRE(a_in_ga.has_value());
          auto direct = extend_block(ga, *a_in_ga).block;
          auto via_b = extend_block(gb, extend_block(ba, a).block).block;
          CHECK(direct == via_b);
        }
      }
  }
}

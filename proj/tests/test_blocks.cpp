#include <set>

#include "chief/blocks.hpp"
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

std::vector<Subgroup> series_nodes(const NormalLattice& l, const std::vector<std::size_t>& s) {
  std::vector<Subgroup> out;
  for (auto i : s) out.push_back(l.node(i));
  return out;
}

// R by exhaustive search over all of K and all points of K.
ElementSet inner_oracle(const Subgroup& upper_term, const NormalFactor& f) {
  const auto& g = f.group();
  ElementSet out(g->order());
  auto ks = f.upper().elements();
  for (auto x : upper_term.elements())
    for (auto k : ks) {
      bool same = true;
      for (auto y : ks)
        if (!f.lower().contains(g->mul(g->conj(x, y), g->inv(g->conj(k, y))))) {
          same = false;
          break;
        }
      if (same) {
        out.set(x);
        break;
      }
    }
  return out;
}

}  // namespace

TEST_CASE("chief blocks of small examples") {
  CHECK(chief_blocks(normal_subgroups(corpus_group("V4"))).size() == 0);

  auto g = corpus_group("A5xA5");
  auto aa = chief_blocks(normal_subgroups(g));
  REQUIRE(aa.size() == 2);
  CHECK(aa.is_antichain());
  for (std::size_t i = 0; i < 2; ++i) CHECK(aa.block(i).representatives.size() == 2);
  CHECK(!aa.leq(0, 1));
  CHECK(!aa.leq(1, 0));

  auto w = chief_blocks(normal_subgroups(corpus_group("A5wrC2")));
  REQUIRE(w.size() == 1);
  CHECK(w.block(0).centralizer.is_trivial());
  REQUIRE(w.block(0).representatives.size() == 1);
  CHECK(w.block(0).representatives[0].upper().order() == 3600);
  CHECK(w.block(0).representatives[0].lower().is_trivial());
}

TEST_CASE("covering and avoiding") {
  auto g = corpus_group("A5xA5");
  auto l = normal_subgroups(g);
  auto poset = chief_blocks(l);
  auto left = embedding(g, 0).image();
  auto right = embedding(g, 1).image();
  auto a = *poset.block_of(make_factor(left, Subgroup::trivial(g)));
  const auto& block = poset.block(a);
  CHECK(covers(left, block));
  CHECK(cover_status(Subgroup::trivial(g), block) == CoverStatus::Below);
  CHECK(cover_status(right, block) == CoverStatus::Below);
  CHECK(cover_status(make_factor(Subgroup::whole(g), left), block) == CoverStatus::Above);
  CHECK(covers(make_factor(Subgroup::whole(g), right), block));
  CHECK(error_kind([&] { covers(Subgroup::whole(corpus_group("A5")), block); }) == ErrorKind::DifferentParents);

  std::vector<std::size_t> filter = covering_filter(l, block);
  CHECK(filter.size() == 2);
  CHECK(minimal_cover(l, block) == left);
  CHECK(poset.minimal_cover(a) == left);

  auto wl = normal_subgroups(corpus_group("A5wrC2"));
  auto wp = chief_blocks(wl);
  CHECK(covering_filter(wl, wp.block(0)) == std::vector<std::size_t>{1, 2});
  CHECK(minimal_cover(wl, wp.block(0)).order() == 3600);

  auto sl = normal_subgroups(corpus_group("A5"));
  auto sp = chief_blocks(sl);
  CHECK(covering_filter(sl, sp.block(0)) == std::vector<std::size_t>{1});
  CHECK(minimal_cover(sl, sp.block(0)).is_whole());
}

TEST_CASE("socle and monolithic") {
  auto wl = normal_subgroups(corpus_group("A5wrC2"));
  CHECK(socle(wl).order() == 3600);
  CHECK(is_monolithic(wl));
  auto al = normal_subgroups(corpus_group("A5xA5"));
  CHECK(socle(al).is_whole());
  CHECK(!is_monolithic(al));
  auto tl = normal_subgroups(cyclic_group(1));
  CHECK(socle(tl).is_trivial());
  CHECK(!is_monolithic(tl));
}

TEST_CASE("canonical representatives") {
  auto g = corpus_group("A5xA5");
  auto l = normal_subgroups(g);
  auto poset = chief_blocks(l);
  auto left = embedding(g, 0).image();
  auto right = embedding(g, 1).image();
  const auto& block = poset.block(*poset.block_of(make_factor(left, Subgroup::trivial(g))));
  CHECK(uppermost_representative(l, block) == make_factor(Subgroup::whole(g), right));
  CHECK(lowermost_representative(l, block) == make_factor(left, Subgroup::trivial(g)));

  auto a5 = corpus_group("A5");
  auto sl = normal_subgroups(a5);
  auto sp = chief_blocks(sl);
  auto whole = make_factor(Subgroup::whole(a5), Subgroup::trivial(a5));
  CHECK(uppermost_representative(sl, sp.block(0)) == whole);
  CHECK(lowermost_representative(sl, sp.block(0)) == whole);

  auto wl = normal_subgroups(corpus_group("A5wrC2"));
  auto wp = chief_blocks(wl);
  auto socle_factor = make_factor(wl.node(1), wl.node(0));
  CHECK(uppermost_representative(wl, wp.block(0)) == socle_factor);
  CHECK(lowermost_representative(wl, wp.block(0)) == socle_factor);
}

TEST_CASE("block partition equals association partition") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto l = normal_subgroups(e.group);
    auto poset = chief_blocks(l);
    std::vector<NormalFactor> nonabelian;
    for (const auto& f : chief_factors(l))
      if (!is_abelian_factor(f)) nonabelian.push_back(f);
    std::size_t represented = 0;
    for (const auto& b : poset.blocks()) represented += b.representatives.size();
    CHECK(represented == nonabelian.size());
    for (const auto& f1 : nonabelian)
      for (const auto& f2 : nonabelian) {
        const bool c1 = are_associated(f1, f2);
        const bool c2 = factor_centralizer(f1) == factor_centralizer(f2);
        const bool c3 = join(f1.upper(), f2.lower()) == join(f2.upper(), f1.lower()) &&
                        join(f1.lower(), f2.lower()).is_proper_subset_of(join(f1.upper(), f2.upper()));
        CHECK(c1 == c2);
        CHECK(c2 == c3);
        CHECK(c1 == (poset.block_of(f1) == poset.block_of(f2)));
      }
  }
}

TEST_CASE("block order, filters and representatives on the corpus") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto l = normal_subgroups(e.group);
    auto poset = chief_blocks(l);
    for (std::size_t a = 0; a < poset.size(); ++a) {
      const auto& block = poset.block(a);
      auto filter = covering_filter(l, block);
      std::set<std::size_t> fs(filter.begin(), filter.end());
      for (auto i : filter)
        for (auto j : filter) CHECK(fs.count(l.meet(i, j)) == 1);
      auto ga = minimal_cover(l, block);
      CHECK(covers(ga, block));
      for (auto i : filter) CHECK(ga.is_subset_of(l.node(i)));

      for (const auto& rep : block.representatives) {
        CHECK(factor_centralizer(rep) == block.centralizer);
        CHECK(meet(rep.upper(), block.centralizer) == rep.lower());
      }
      auto up = uppermost_representative(l, block);
      auto low = lowermost_representative(l, block);
      CHECK(poset.block_of(up) == a);
      CHECK(poset.block_of(low) == a);
      for (const auto& rep : block.representatives) {
        CHECK(is_internal_compression(rep, up));
        CHECK(is_internal_compression(low, rep));
      }
      // G / C_G(a) is monolithic and its socle lies in a
      auto q = quotient(block.centralizer);
      auto ql = normal_subgroups(q.group);
      CHECK(is_monolithic(ql));
      auto soc = q.projection.preimage(socle(ql));
      CHECK(make_factor(soc, block.centralizer) == up);

      for (std::size_t b = 0; b < poset.size(); ++b) CHECK(block_le(poset, a, b) == poset.leq(a, b));
    }
  }
}

TEST_CASE("every chief series covers each block exactly once") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto l = normal_subgroups(e.group);
    auto poset = chief_blocks(l);
    for (const auto& s : chief_series(l, 200)) {
      auto nodes = series_nodes(l, s);
      for (const auto& block : poset.blocks()) {
        auto hits = covering_intervals(nodes, block);
        CHECK(hits.size() == 1);
        // the downward-closed part below the centralizer is the only split
        // that admits a representative between its two sides
        std::size_t admissible = 0, expected = 0;
        for (std::size_t t = 1; t < nodes.size(); ++t) {
          bool ok = false;
          for (const auto& rep : block.representatives)
            ok = ok || (nodes[t - 1].is_subset_of(rep.lower()) && rep.upper().is_subset_of(nodes[t]));
          if (ok) {
            ++admissible;
            expected = t;
          }
        }
        CHECK(admissible == 1);
        std::size_t below = 0;
        for (const auto& n : nodes) below += n.is_subset_of(block.centralizer) ? 1 : 0;
        CHECK(expected == below);
      }
    }
  }
}

TEST_CASE("refine_series examples") {
  auto g = corpus_group("A5xA5");
  auto left = embedding(g, 0).image();
  auto right = embedding(g, 1).image();
  auto l = normal_subgroups(g);
  auto one = Subgroup::trivial(g), whole = Subgroup::whole(g);
  auto r = refine_series(l, {one, left, whole}, make_factor(right, one));
  CHECK(r.index == 1);
  CHECK(r.centralizer_part == left);
  CHECK(r.refined == whole);

  auto a5 = corpus_group("A5");
  auto sl = normal_subgroups(a5);
  auto a1 = Subgroup::trivial(a5), ag = Subgroup::whole(a5);
  auto rs = refine_series(sl, {a1, ag}, make_factor(ag, a1));
  CHECK(rs.index == 0);
  CHECK(rs.centralizer_part == a1);
  CHECK(rs.refined == ag);

  auto wl = normal_subgroups(corpus_group("A5wrC2"));
  auto rw = refine_series(wl, wl.nodes(), make_factor(wl.node(1), wl.node(0)));
  CHECK(rw.index == 0);
  CHECK(rw.centralizer_part.is_trivial());
  CHECK(rw.refined == wl.node(1));

  CHECK(error_kind([&] { refine_series(l, {one, whole, left}, make_factor(right, one)); }) == ErrorKind::NotAChain);
  CHECK(error_kind([&] { refine_series(l, {one, whole}, make_factor(whole, one)); }) == ErrorKind::NotChief);
  auto s4 = normal_subgroups(corpus_group("S4"));
  CHECK(error_kind([&] { refine_series(s4, s4.nodes(), make_factor(s4.node(2), s4.node(1))); }) ==
        ErrorKind::AbelianFactor);
}

TEST_CASE("refinement over every chief series and non-abelian chief factor") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto l = normal_subgroups(e.group);
    std::vector<NormalFactor> nonabelian;
    for (const auto& f : chief_factors(l))
      if (!is_abelian_factor(f)) nonabelian.push_back(f);
    for (const auto& s : chief_series(l, 200)) {
      auto nodes = series_nodes(l, s);
      for (const auto& f : nonabelian) {
        auto r = refine_series(l, nodes, f);
        CHECK(nodes[r.index].is_subset_of(r.centralizer_part));
        CHECK(r.centralizer_part.is_proper_subset_of(r.refined));
        CHECK(r.refined.is_subset_of(nodes[r.index + 1]));
        auto d = make_factor(r.refined, r.centralizer_part);
        CHECK(is_chief_factor(l, d.upper(), d.lower()));
        CHECK(are_associated(d, f));
        if (e.group->order() <= 200) CHECK(r.inner_part.members() == inner_oracle(nodes[r.index + 1], f));
        // no other interval holds an associated chief factor
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
          if (i == r.index) continue;
          for (const auto& h : nonabelian)
            if (nodes[i].is_subset_of(h.lower()) && h.upper().is_subset_of(nodes[i + 1])) CHECK(!are_associated(h, f));
        }
      }
    }
  }
}

TEST_CASE("semisimple corpus groups have antichain block posets") {
  for (auto name : {"A5", "A5xA5", "SL(2,5)", "S5"}) {
    CAPTURE(name);
    CHECK(chief_blocks(normal_subgroups(corpus_group(name))).is_antichain());
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "digitop/exthomotopy.hpp"
#include "support/generators.hpp"

using namespace digitop;

TEST_CASE("long homotopy validity") {
  DigitalImage x = interval(0, 1);
  DigitalMap id = identity_map(x);
  DigitalMap drop = constant_map(x, x, {0});

  CHECK(is_long_homotopy(LongHomotopy({id})));  // N = 0, constant family
  LongHomotopy interp({id, drop, drop});        // N = 1
  CHECK(is_long_homotopy(interp));
  CHECK(interp.half_width() == 1);
  CHECK(interp.frame_at(-5) == id);
  CHECK(interp.frame_at(5) == drop);

  DigitalImage wide = interval(0, 2);
  LongHomotopy jumpy({constant_map(wide, wide, {0}), constant_map(wide, wide, {2}),
                      constant_map(wide, wide, {2})});
  CHECK_FALSE(is_long_homotopy(jumpy));

  CHECK_THROWS_AS(LongHomotopy({id, drop}), error);  // even frame count
}

TEST_CASE("pointed long homotopies hold their points") {
  DigitalImage x = interval(0, 1);
  DigitalMap id = identity_map(x);
  DigitalMap drop = constant_map(x, x, {0});
  CHECK(is_long_homotopy(LongHomotopy({id, drop, drop}, PointSet{{0}})));
  CHECK_FALSE(is_long_homotopy(LongHomotopy({id, drop, drop}, PointSet{{1}})));
}

TEST_CASE("long homotopies convert to homotopies and back") {
  testgen::Rng rng(42);
  int produced = 0;
  while (produced < 40) {
    DigitalImage dom = testgen::random_image(rng, 3, 2, false);
    DigitalImage cod = testgen::random_image(rng, 3, 2, false);
    DigitalMap f = testgen::random_continuous_map(rng, dom, cod);
    DigitalMap g = testgen::random_continuous_map(rng, dom, cod);
    auto h = are_homotopic(f, g, SearchBudget{100000, 0, 1});
    if (!h) continue;
    ++produced;
    LongHomotopy l = to_long_homotopy(*h);
    CHECK(is_long_homotopy(l));
    CHECK(l.from() == f);
    CHECK(l.to() == g);
    Homotopy back = to_homotopy(l);
    CHECK(is_homotopy(back, f, g));
  }
}

TEST_CASE("product long homotopies pad to the widest factor") {
  DigitalImage x = interval(0, 1);
  DigitalMap id = identity_map(x);
  DigitalMap drop = constant_map(x, x, {0});

  LongHomotopy n0({id});
  CHECK(product_long_homotopy({n0, n0}).half_width() == 0);

  LongHomotopy n1({id, drop, drop});
  std::vector<DigitalMap> frames7;
  for (int i = 0; i < 7; ++i) frames7.push_back(i < 3 ? id : drop);
  LongHomotopy n3(frames7);
  REQUIRE(is_long_homotopy(n3));
  LongHomotopy prod = product_long_homotopy({n1, n3});
  CHECK(prod.half_width() == 3);
  CHECK(is_long_homotopy(prod));
  CHECK(prod.from() == product_map({id, id}, 2));
  CHECK(prod.to() == product_map({drop, drop}, 2));
  CHECK_THROWS_AS(product_long_homotopy({}), error);
}

TEST_CASE("random product long homotopies are valid") {
  testgen::Rng rng(4242);
  int produced = 0;
  while (produced < 40) {
    const int v = testgen::pick(rng, 2, 3);
    std::vector<LongHomotopy> ls;
    bool ok = true;
    for (int i = 0; i < v && ok; ++i) {
      DigitalImage dom = testgen::random_image(rng, 3, 2, false);
      DigitalImage cod = testgen::random_image(rng, 3, 2, false);
      DigitalMap f = testgen::random_continuous_map(rng, dom, cod);
      DigitalMap g = testgen::random_continuous_map(rng, dom, cod);
      auto h = are_homotopic(f, g, SearchBudget{100000, 0, 1});
      if (!h) {
        ok = false;
        break;
      }
      ls.push_back(to_long_homotopy(*h));
    }
    if (!ok) continue;
    ++produced;
    CHECK(is_long_homotopy(product_long_homotopy(ls)));
  }
}

TEST_CASE("real paths") {
  DigitalImage x = interval(0, 1);
  RealPath constant(x, {}, {{0}}, {{0}, {0}});
  CHECK(is_real_path(constant));
  CHECK(jump_points(constant).empty());

  RealPath step(x, {Rational(1, 2)}, {{0}, {1}}, {{0}, {1}, {1}});
  CHECK(is_real_path(step));
  auto jumps = jump_points(step);
  REQUIRE(jumps.size() == 1);
  CHECK(jumps[0] == Rational(1, 2));

  DigitalImage wide = interval(0, 2);
  RealPath broken(wide, {Rational(1, 2)}, {{0}, {2}}, {{0}, {0}, {2}});
  CHECK_FALSE(is_real_path(broken));  // flanking values not adjacent

  RealPath floating(wide, {Rational(1, 2)}, {{0}, {1}}, {{0}, {2}, {1}});
  CHECK_FALSE(is_real_path(floating));  // breakpoint value matches neither side

  CHECK_THROWS_AS(RealPath(x, {Rational(1, 2), Rational(1, 3)}, {{0}, {0}, {0}},
                           {{0}, {0}, {0}, {0}}),
                  error);
  CHECK_THROWS_AS(RealPath(x, {Rational(0, 1)}, {{0}, {0}}, {{0}, {0}, {0}}), error);
}

TEST_CASE("jumps at the endpoints come from the endpoint values") {
  DigitalImage x = interval(0, 1);
  RealPath p(x, {}, {{0}}, {{1}, {0}});
  CHECK(is_real_path(p));
  auto jumps = jump_points(p);
  REQUIRE(jumps.size() == 1);
  CHECK(jumps[0] == Rational(0, 1));
}

TEST_CASE("real homotopy validity and traces") {
  DigitalImage x = interval(0, 1);
  DigitalMap id = identity_map(x);
  DigitalMap drop = constant_map(x, x, {0});
  RealHomotopy r({Rational(0, 1), Rational(1, 2), Rational(1, 1)}, {id, drop}, {id, drop, drop});
  CHECK(is_real_homotopy(r, id, drop));
  CHECK_FALSE(is_real_homotopy(r, drop, drop));
  for (const Point& p : x.points()) CHECK(is_real_path(r.trace(p)));

  CHECK_THROWS_AS(RealHomotopy({Rational(0, 1)}, {}, {id}), error);
  CHECK_THROWS_AS(
      RealHomotopy({Rational(0, 1), Rational(1, 1)}, {id, id}, {id, id}), error);
}

TEST_CASE("product real homotopies merge breakpoints") {
  DigitalImage x = interval(0, 1);
  DigitalMap id = identity_map(x);
  DigitalMap drop = constant_map(x, x, {0});
  RealHomotopy half({Rational(0, 1), Rational(1, 2), Rational(1, 1)}, {id, drop},
                    {id, drop, drop});
  RealHomotopy third({Rational(0, 1), Rational(1, 3), Rational(1, 1)}, {id, drop},
                     {id, drop, drop});

  RealHomotopy single = product_real_homotopy({half});
  CHECK(single.breakpoints() == half.breakpoints());

  RealHomotopy prod = product_real_homotopy({half, third});
  std::vector<Rational> expected = {Rational(0, 1), Rational(1, 3), Rational(1, 2),
                                    Rational(1, 1)};
  CHECK(prod.breakpoints() == expected);
  DigitalMap f = product_map({id, id}, 2);
  DigitalMap g = product_map({drop, drop}, 2);
  CHECK(is_real_homotopy(prod, f, g));

  // Trace jumps stay inside the union of the factor jump sets.
  for (const Point& p : prod.domain().points()) {
    for (const Rational& t : jump_points(prod.trace(p))) {
      bool from_factor = t == Rational(1, 2) || t == Rational(1, 3) || t == Rational(0, 1) ||
                         t == Rational(1, 1);
      CHECK(from_factor);
    }
  }
}

TEST_CASE("random product real homotopies validate") {
  testgen::Rng rng(77);
  int produced = 0;
  while (produced < 30) {
    std::vector<RealHomotopy> factors;
    std::vector<DigitalMap> fs, gs;
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i) {
      DigitalImage dom = testgen::random_image(rng, 3, 2, false);
      DigitalImage cod = testgen::random_image(rng, 3, 2, false);
      DigitalMap f = testgen::random_continuous_map(rng, dom, cod);
      DigitalMap g = testgen::random_continuous_map(rng, dom, cod);
      auto h = are_homotopic(f, g, SearchBudget{100000, 0, 1});
      if (!h) {
        ok = false;
        break;
      }
      // Spread the frames over [0,1] at random rational breakpoints.
      const int m = h->steps();
      std::vector<Rational> bps{Rational(0, 1)};
      for (int t = 1; t <= m; ++t) bps.emplace_back(t, m + 1);
      bps.emplace_back(1, 1);
      std::vector<DigitalMap> iv, pv;
      for (int t = 0; t <= m; ++t) {
        iv.push_back(h->frames()[static_cast<std::size_t>(t)]);
        pv.push_back(h->frames()[static_cast<std::size_t>(t)]);
      }
      pv.push_back(h->frames().back());
      RealHomotopy r(std::move(bps), std::move(iv), std::move(pv));
      REQUIRE(is_real_homotopy(r, f, g));
      factors.push_back(std::move(r));
      fs.push_back(f);
      gs.push_back(g);
    }
    if (!ok) continue;
    ++produced;
    RealHomotopy prod = product_real_homotopy(factors);
    CHECK(is_real_homotopy(prod, product_map(fs, 2), product_map(gs, 2)));
  }
}

namespace {

// A stage whose forward/backward maps are identities, certified by
// single-frame homotopies.
SimilarityStage identity_stage(const DigitalImage& x) {
  DigitalMap id = identity_map(x);
  return SimilarityStage{x, x, id, id, Homotopy({id}), Homotopy({id})};
}

}  // namespace

TEST_CASE("similarity prefixes") {
  DigitalImage x1 = interval(0, 0);
  DigitalImage x2 = interval(0, 1);
  SimilarityStage s1 = identity_stage(x1);
  SimilarityStage s2 = identity_stage(x2);

  // k = 1 collapses to a homotopy equivalence.
  CHECK(verify_similarity_prefix(SimilarityPrefix({s1}, {})));

  // The larger identity restricts to the smaller one; a constant frame
  // certifies it.
  DigitalMap restricted(x1, x1, {{{0}, {0}}});
  RestrictionWitness witness{Homotopy({restricted}), Homotopy({restricted})};
  SimilarityPrefix k2({s1, s2}, {{{0, 1}, witness}});
  CHECK(verify_similarity_prefix(k2));

  SimilarityPrefix prod = product_similarity_prefix({k2, k2});
  CHECK(prod.stage_count() == 2);
  CHECK(verify_similarity_prefix(prod));

  // Mixed stage counts: the shorter factor is padded with its last stage.
  SimilarityPrefix k1({s2}, {});
  SimilarityPrefix mixed = product_similarity_prefix({k1, k2});
  CHECK(mixed.stage_count() == 2);
  CHECK(verify_similarity_prefix(mixed));

  // A witness certifying the wrong map fails verification.
  DigitalImage wide = interval(0, 2);
  SimilarityStage w1 = identity_stage(interval(0, 1));
  SimilarityStage w2 = identity_stage(wide);
  DigitalMap not_the_restriction(interval(0, 1), interval(0, 1), {{{0}, {1}}, {{1}, {0}}});
  SimilarityPrefix bad({w1, w2}, {{{0, 1}, RestrictionWitness{Homotopy({not_the_restriction}),
                                                              Homotopy({not_the_restriction})}}});
  CHECK_FALSE(verify_similarity_prefix(bad));

  // Non-nested chains are rejected outright, as are missing witnesses.
  SimilarityStage disjoint = identity_stage(interval(5, 6));
  CHECK_THROWS_AS(SimilarityPrefix({s1, disjoint}, {{{0, 1}, witness}}), error);
  CHECK_THROWS_AS(SimilarityPrefix({s1, s2}, {}), error);
}

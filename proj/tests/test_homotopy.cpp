#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digitop/homotopy.hpp"
#include "support/generators.hpp"

using namespace digitop;

namespace {

DigitalImage curve(int half_side) {
  PointSet pts;
  for (int x = 0; x <= half_side; ++x)
    for (int y = 0; y <= half_side; ++y)
      if (x == 0 || x == half_side || y == 0 || y == half_side) pts.insert({x, y});
  return DigitalImage(std::move(pts), AdjacencySpec::cu(2, 1));
}

}  // namespace

TEST_CASE("homotopy validity") {
  DigitalImage x = interval(0, 1);
  DigitalMap id = identity_map(x);
  CHECK(is_homotopy(Homotopy({id}), id, id));                       // m = 0
  CHECK(is_homotopy(Homotopy({id, id, id}), id, id));               // constant in time
  DigitalMap flip(x, x, {{{0}, {1}}, {{1}, {0}}});
  CHECK(is_homotopy(Homotopy({id, flip}), id, flip));               // one pointwise step
  CHECK_FALSE(is_homotopy(Homotopy({id, flip}), id, id));           // wrong endpoint
  CHECK_THROWS_AS(Homotopy({}), error);
}

TEST_CASE("a frame that jumps two steps breaks the per-point path condition") {
  DigitalImage x = interval(0, 2);
  DigitalMap far = constant_map(x, x, {2});
  Homotopy h({constant_map(x, x, {0}), far});
  CHECK_FALSE(h.is_valid());
  // The flattened map fails continuity at exactly a (x, t), (x, t+1) pair.
  DigitalMap flat = flatten_np1(h);
  CHECK_FALSE(is_continuous(flat));
  bool found_time_violation = false;
  for (const auto& [a, b] : flat.domain().edges()) {
    if (a.back() == b.back()) continue;  // same time slice
    const Point& fa = flat(a);
    const Point& fb = flat(b);
    if (fa != fb && !adjacent(fa, fb, flat.codomain().adjacency())) found_time_violation = true;
  }
  CHECK(found_time_violation);
}

TEST_CASE("flattening at m = 0 is continuity of the single frame") {
  testgen::Rng rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    DigitalImage x = testgen::random_image(rng, 3, 2, false);
    DigitalImage y = testgen::random_image(rng, 3, 2, false);
    DigitalMap f = testgen::random_map(rng, x, y);
    CHECK(is_continuous(flatten_np1(Homotopy({f}))) == is_continuous(f));
  }
}

TEST_CASE("fixed points must be held throughout") {
  DigitalImage x = interval(0, 1);
  DigitalMap id = identity_map(x);
  DigitalMap drop(x, x, {{{0}, {0}}, {{1}, {0}}});
  CHECK(Homotopy({id, drop}, PointSet{{0}}).is_valid());
  CHECK_FALSE(Homotopy({id, drop}, PointSet{{1}}).is_valid());
  CHECK_THROWS_AS(Homotopy({id}, PointSet{{7}}), error);
}

TEST_CASE("are_homotopic base cases") {
  DigitalImage x = interval(0, 2);
  DigitalMap id = identity_map(x);
  auto self = are_homotopic(id, id);
  REQUIRE(self.has_value());
  CHECK(self->steps() == 0);

  auto down = are_homotopic(id, constant_map(x, x, {0}));
  REQUIRE(down.has_value());
  CHECK(is_homotopy(*down, id, constant_map(x, x, {0})));

  DigitalMap jump(x, x, {{{0}, {2}}, {{1}, {0}}, {{2}, {0}}});
  CHECK_FALSE(is_continuous(jump));
  CHECK_THROWS_AS(are_homotopic(id, jump), error);
}

TEST_CASE("identity on the small closed curve contracts, on the large one it does not") {
  DigitalImage c4 = curve(1);
  DigitalImage c8 = curve(2);
  DigitalMap id4 = identity_map(c4);
  auto h = are_homotopic(id4, constant_map(c4, c4, {0, 0}));
  REQUIRE(h.has_value());
  CHECK(is_homotopy(*h, id4, constant_map(c4, c4, {0, 0})));
  CHECK(is_contractible(c4));

  DigitalMap id8 = identity_map(c8);
  CHECK_FALSE(are_homotopic(id8, constant_map(c8, c8, {0, 0})).has_value());
  CHECK_FALSE(is_contractible(c8));
}

TEST_CASE("searches respect their budget") {
  SearchBudget tiny;
  tiny.max_steps = 5;
  DigitalImage c8 = curve(2);
  CHECK_THROWS_AS(is_contractible(c8, tiny), budget_error);
  SearchBudget one_frame;
  one_frame.max_frames = 1;
  DigitalImage x = interval(0, 2);
  CHECK_THROWS_AS(
      are_homotopic(identity_map(x), constant_map(x, x, {0}), one_frame), budget_error);
}

TEST_CASE("parallel search returns the same homotopy") {
  DigitalImage c4 = curve(1);
  DigitalMap id = identity_map(c4);
  DigitalMap target = constant_map(c4, c4, {0, 0});
  auto serial = are_homotopic(id, target);
  SearchBudget threaded;
  threaded.threads = 4;
  auto parallel = are_homotopic(id, target, threaded);
  REQUIRE(serial.has_value());
  REQUIRE(parallel.has_value());
  REQUIRE(serial->frames().size() == parallel->frames().size());
  for (std::size_t i = 0; i < serial->frames().size(); ++i)
    CHECK(serial->frames()[i] == parallel->frames()[i]);
  CHECK(is_contractible(c4, threaded));
}

TEST_CASE("homotopy is an equivalence relation on small map spaces") {
  testgen::Rng rng(271);
  for (int iter = 0; iter < 8; ++iter) {
    DigitalImage x = testgen::random_image(rng, 2, 1);
    DigitalImage y = testgen::random_image(rng, 3, 1);
    auto maps = continuous_maps(x, y);
    for (const auto& f : maps) CHECK(are_homotopic(f, f).has_value());
    for (const auto& f : maps) {
      for (const auto& g : maps) {
        bool fg = are_homotopic(f, g).has_value();
        CHECK(fg == are_homotopic(g, f).has_value());
        if (!fg) continue;
        for (const auto& k : maps)
          if (are_homotopic(g, k).has_value()) CHECK(are_homotopic(f, k).has_value());
      }
    }
  }
}

TEST_CASE("homotopy equivalence search") {
  DigitalImage x(PointSet{{0, 0}, {1, 1}}, AdjacencySpec::cu(2, 2));
  DigitalImage y(PointSet{{0, 0}, {1, 0}}, AdjacencySpec::cu(2, 2));
  auto equiv = homotopy_equivalent(x, y);
  REQUIRE(equiv.has_value());
  CHECK(is_homotopy(equiv->gf_to_id, compose(equiv->backward, equiv->forward), identity_map(x)));
  CHECK(is_homotopy(equiv->fg_to_id, compose(equiv->forward, equiv->backward), identity_map(y)));

  DigitalImage xp(PointSet{{0, 0, 0}, {1, 1, 0}}, AdjacencySpec::cu(3, 1));
  DigitalImage yp(PointSet{{0, 0, 0}, {1, 0, 0}}, AdjacencySpec::cu(3, 1));
  CHECK_FALSE(homotopy_equivalent(xp, yp).has_value());

  DigitalImage single(PointSet{{0}}, AdjacencySpec::cu(1, 1));
  CHECK(homotopy_equivalent(interval(0, 2), single).has_value());
}

TEST_CASE("product homotopies") {
  DigitalImage x = interval(0, 1);
  DigitalMap id = identity_map(x);
  DigitalMap drop = constant_map(x, x, {0});

  Homotopy still({id});
  Homotopy prod0 = product_homotopy({still, still});
  CHECK(prod0.steps() == 0);

  Homotopy short_h({id, drop});
  Homotopy long_h({id, id, id, drop});
  Homotopy mixed = product_homotopy({short_h, long_h});
  CHECK(mixed.steps() == 3);  // padded to the longest factor
  CHECK(mixed.is_valid());
  CHECK(is_homotopy(mixed, product_map({id, id}, 2), product_map({drop, drop}, 2)));

  CHECK_THROWS_AS(product_homotopy({}), error);
}

TEST_CASE("random product homotopies stay valid and preserve pointedness") {
  testgen::Rng rng(1359);
  int produced = 0;
  while (produced < 60) {
    const int v = testgen::pick(rng, 2, 3);
    std::vector<Homotopy> hs;
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
      // Mark the first point fixed when it happens to be held already.
      Point first = *dom.points().begin();
      bool held = true;
      for (const auto& fr : h->frames())
        if (fr(first) != h->frames().front()(first)) held = false;
      if (held)
        hs.emplace_back(h->frames(), PointSet{first});
      else
        hs.push_back(*h);
    }
    if (!ok) continue;
    ++produced;
    Homotopy prod = product_homotopy(hs);
    CHECK(prod.is_valid());
    bool all_pointed = true;
    for (const auto& h : hs)
      if (!h.fixed_points()) all_pointed = false;
    CHECK(prod.fixed_points().has_value() == all_pointed);
  }
}

TEST_CASE("deformation retracts") {
  DigitalImage x = interval(0, 1);
  CHECK(is_strong_deformation_retract(x, x.points(), Homotopy({identity_map(x)})));

  Homotopy collapse({identity_map(x), constant_map(x, x, {0})});
  CHECK(is_deformation_retract(x, PointSet{{0}}, collapse));
  CHECK(is_strong_deformation_retract(x, PointSet{{0}}, collapse));

  // Valid homotopy, but the final frame does not land in A.
  CHECK_FALSE(is_deformation_retract(x, PointSet{{1}}, collapse));
  CHECK_THROWS_AS(is_deformation_retract(x, PointSet{}, collapse), error);
}

TEST_CASE("products of deformation retract data") {
  testgen::Rng rng(9218);
  int produced = 0;
  while (produced < 40) {
    std::vector<DigitalImage> images;
    std::vector<PointSet> subsets;
    std::vector<Homotopy> hs;
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i) {
      DigitalImage x = testgen::random_connected_image(rng, 3, 2);
      std::vector<Point> pts(x.points().begin(), x.points().end());
      PointSet a;
      for (const Point& p : pts)
        if (testgen::chance(rng, 0.5)) a.insert(p);
      if (a.empty()) a.insert(pts.front());
      std::optional<Homotopy> found;
      enumerate_continuous_maps(x, subimage(x, a), [&](const DigitalMap& r) {
        if (!is_retraction(r, a)) return true;
        DigitalMap self_r(x, x, r.table());
        auto h = are_homotopic(identity_map(x), self_r, SearchBudget{200000, 0, 1});
        if (h) {
          found = h;
          return false;
        }
        return true;
      });
      if (!found) {
        ok = false;
        break;
      }
      images.push_back(x);
      subsets.push_back(a);
      hs.push_back(*found);
    }
    if (!ok) continue;
    ++produced;
    for (std::size_t i = 0; i < hs.size(); ++i)
      REQUIRE(is_deformation_retract(images[i], subsets[i], hs[i]));
    Homotopy prod = product_homotopy(hs);
    std::vector<const PointSet*> parts{&subsets[0], &subsets[1]};
    PointSet prod_a = cartesian_points(parts);
    DigitalImage prod_x = product_image(images, 2);
    CHECK(is_deformation_retract(prod_x, prod_a, prod));

    // The converse construction: factor homotopies recovered through
    // inclusions and projections are again deformation retracts.
    for (std::size_t i = 0; i < hs.size(); ++i) {
      std::vector<Point> base;
      for (const PointSet& s : subsets) base.push_back(*s.begin());
      DigitalMap inc = inclusion(images, static_cast<int>(i), base, 2);
      DigitalMap proj = projection(prod_x, static_cast<int>(i));
      std::vector<DigitalMap> frames;
      for (const auto& fr : prod.frames()) frames.push_back(compose(proj, compose(fr, inc)));
      CHECK(is_deformation_retract(images[i], subsets[i], Homotopy(std::move(frames))));
    }
  }
}

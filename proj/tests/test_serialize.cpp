#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "digitop/fixtures.hpp"
#include "digitop/serialize.hpp"

using namespace digitop;
using nlohmann::json;

TEST_CASE("image round trips for every adjacency kind") {
  std::vector<DigitalImage> images = {
      interval(-1, 2),
      box({{0, 1}, {0, 2}}, 2),
      DigitalImage(PointSet{{0}, {5}}, AdjacencySpec::explicit_edges(1, {{{0}, {5}}})),
      product_image({interval(0, 1), box({{0, 1}, {0, 1}}, 2)}, 1),
      product_image({product_image({interval(0, 1), interval(0, 1)}, 2), interval(0, 1)}, 1),
      DigitalImage(PointSet{{0}, {1}, {2}, {3}}, AdjacencySpec::cu(1, 1), 2),
  };
  for (const DigitalImage& image : images) {
    json j = to_json(image);
    DigitalImage back = image_from_json(j);
    CHECK(back == image);
    CHECK(to_json(back) == j);  // parse -> serialize -> parse is the identity
  }
}

TEST_CASE("map and multimap round trips") {
  DigitalImage x = interval(0, 2);
  DigitalMap f(x, x, {{{0}, {1}}, {{1}, {1}}, {{2}, {2}}});
  DigitalMap f2 = map_from_json(to_json(f));
  CHECK(f2 == f);
  CHECK(f2.domain() == x);

  MultiMap m(x, x, {{{0}, {{0}, {1}}}, {{1}, {{1}}}, {{2}, {{1}, {2}}}});
  MultiMap m2 = multimap_from_json(to_json(m));
  CHECK(m2 == m);
  CHECK(to_json(m2) == to_json(m));
}

TEST_CASE("homotopy round trips keep fixed points") {
  DigitalImage x = interval(0, 1);
  DigitalMap id = identity_map(x);
  DigitalMap drop = constant_map(x, x, {0});
  Homotopy h({id, drop}, PointSet{{0}});
  Homotopy h2 = homotopy_from_json(to_json(h));
  CHECK(h2.frames().size() == 2);
  CHECK(h2.frames()[0] == id);
  CHECK(h2.frames()[1] == drop);
  REQUIRE(h2.fixed_points().has_value());
  CHECK(*h2.fixed_points() == PointSet{{0}});
  CHECK(to_json(h2) == to_json(h));
}

TEST_CASE("real path and real homotopy round trips") {
  DigitalImage x = interval(0, 1);
  RealPath p(x, {Rational(1, 2)}, {{0}, {1}}, {{0}, {1}, {1}});
  RealPath p2 = real_path_from_json(to_json(p));
  CHECK(to_json(p2) == to_json(p));
  CHECK(p2.cuts() == p.cuts());

  DigitalMap id = identity_map(x);
  DigitalMap drop = constant_map(x, x, {0});
  RealHomotopy r({Rational(0, 1), Rational(1, 2), Rational(1, 1)}, {id, drop},
                 {id, drop, drop});
  RealHomotopy r2 = real_homotopy_from_json(to_json(r));
  CHECK(to_json(r2) == to_json(r));
}

TEST_CASE("refs resolve against the builtin registry") {
  json j;
  j["domain"] = "interval01";
  j["codomain"] = "interval02";
  j["table"] = json::array({json::array({json::array({0}), json::array({0})}),
                            json::array({json::array({1}), json::array({1})})});
  DigitalMap f = map_from_json(j);
  CHECK(f.domain() == builtin_images().at("interval01"));
  CHECK(f.codomain() == builtin_images().at("interval02"));
  j["domain"] = "no-such-image";
  CHECK_THROWS_AS(map_from_json(j), error);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS(image_from_json(json::parse(R"({"dim": 1, "points": []})")));
  CHECK_THROWS(image_from_json(
      json::parse(R"({"dim": 1, "points": [[0]], "adjacency": {"kind": "mystery"}})")));
  CHECK_THROWS(image_from_json(json::parse(
      R"({"dim": 2, "points": [[0,0]], "adjacency":
          {"kind": "np", "u": 1, "factors": [{"kind": "cu", "u": 1, "dim": 1}]}})")));
  CHECK_THROWS(map_from_json(json::parse(
      R"({"domain": "interval01", "codomain": "interval01", "table": [[[0],[0]]]})")));
}

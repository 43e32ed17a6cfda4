#include "digitop/fixtures.hpp"

#include <functional>

#include "digitop/analysis.hpp"
#include "digitop/connectivity.hpp"
#include "digitop/homotopy.hpp"

namespace digitop {

namespace {

DigitalImage curve4_image() {
  return DigitalImage(PointSet{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, AdjacencySpec::cu(2, 1));
}

DigitalImage curve8_image() {
  PointSet pts;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y)
      if (x == 0 || x == 2 || y == 0 || y == 2) pts.insert({x, y});
  return DigitalImage(std::move(pts), AdjacencySpec::cu(2, 1));
}

DigitalImage diamond_image() {
  return DigitalImage(PointSet{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, AdjacencySpec::cu(2, 2));
}

// The two-point planar images the product counterexamples are built from.
DigitalImage flat_pair(const AdjacencySpec& spec) {  // {(0,0),(1,0)}
  return DigitalImage(PointSet{{0, 0}, {1, 0}}, spec);
}
DigitalImage diag_pair(const AdjacencySpec& spec) {  // {(0,0),(1,1)}
  return DigitalImage(PointSet{{0, 0}, {1, 1}}, spec);
}

DigitalImage unit_point() { return DigitalImage(PointSet{{0}}, AdjacencySpec::cu(1, 1)); }

// X x {0} inside Z^3 with a plain c_u adjacency.
DigitalImage times_zero_cu(const DigitalImage& x, int u) {
  PointSet pts;
  for (const Point& p : x.points()) pts.insert({p[0], p[1], 0});
  return DigitalImage(std::move(pts), AdjacencySpec::cu(3, u));
}

DigitalMap map_between(const DigitalImage& domain, const DigitalImage& codomain,
                       const std::vector<std::pair<Point, Point>>& entries) {
  std::map<Point, Point> table;
  for (const auto& [x, y] : entries) table[x] = y;
  return DigitalMap(domain, codomain, std::move(table));
}

bool has_cut_vertex(const DigitalImage& image) {
  for (const Point& p : image.points()) {
    PointSet rest = image.points();
    rest.erase(p);
    if (!rest.empty() && !is_connected_subset(image, rest)) return true;
  }
  return false;
}

// Exhaustive isomorphism check for small images.
bool isomorphic(const DigitalImage& x, const DigitalImage& y) {
  if (x.size() != y.size()) return false;
  bool found = false;
  enumerate_continuous_maps(
      x, y,
      [&](const DigitalMap& f) {
        if (is_isomorphism(f)) {
          found = true;
          return false;
        }
        return true;
      });
  return found;
}

struct Checker {
  FixtureReport report;
  explicit Checker(std::string name) { report.fixture = std::move(name); }
  void expect(const std::string& name, bool expected, bool actual) {
    report.checks.push_back({name, expected, actual});
  }
};

FixtureReport factors_not_prod() {
  Checker c("factors-not-prod");
  DigitalImage x = flat_pair(AdjacencySpec::cu(2, 2));
  DigitalImage y = diag_pair(AdjacencySpec::cu(2, 2));
  DigitalMap f = map_between(x, y, {{{0, 0}, {0, 0}}, {{1, 0}, {1, 1}}});
  c.expect("factor_map_is_isomorphism", true, is_isomorphism(f));

  DigitalMap product_np = product_map({f, identity_map(unit_point())}, 2);
  c.expect("product_continuous_under_np", true, is_continuous(product_np));

  DigitalImage xp = times_zero_cu(x, 1);
  DigitalImage yp = times_zero_cu(y, 1);
  DigitalMap product_c1 =
      map_between(xp, yp, {{{0, 0, 0}, {0, 0, 0}}, {{1, 0, 0}, {1, 1, 0}}});
  c.expect("product_continuous_under_c1", false, is_continuous(product_c1));
  c.expect("domain_c1_connected", true, is_connected(xp));
  c.expect("image_c1_connected", false, is_connected(yp));
  return c.report;
}

FixtureReport prod_map_exl() {
  Checker c("prod-map-exl");
  DigitalImage x = diag_pair(AdjacencySpec::cu(2, 2));
  DigitalImage y = flat_pair(AdjacencySpec::cu(2, 2));
  DigitalMap h = map_between(x, y, {{{0, 0}, {0, 0}}, {{1, 1}, {1, 0}}});
  c.expect("factors_isomorphic", true, is_isomorphism(h));

  DigitalMap product_np = product_map({h, identity_map(unit_point())}, 2);
  c.expect("product_isomorphism_under_np", true, is_isomorphism(product_np));

  DigitalImage xp = times_zero_cu(x, 1);
  DigitalImage yp = times_zero_cu(y, 1);
  c.expect("products_isomorphic_under_c1", false, isomorphic(xp, yp));
  c.expect("xp_c1_connected", false, is_connected(xp));
  c.expect("yp_c1_connected", true, is_connected(yp));
  return c.report;
}

FixtureReport c3_projection() {
  Checker c("c3-projection");
  DigitalImage y(PointSet{{0, 0}, {1, 1}}, AdjacencySpec::cu(2, 1));
  PointSet prod_pts;
  for (int t = 0; t <= 1; ++t)
    for (const Point& q : y.points()) prod_pts.insert({t, q[0], q[1]});
  DigitalImage xy_c3(prod_pts, AdjacencySpec::cu(3, 3));
  std::map<Point, Point> table;
  for (const Point& p : xy_c3.points()) table[p] = {p[1], p[2]};
  DigitalMap p2(xy_c3, y, std::move(table));
  c.expect("p2_continuous_under_c3", false, is_continuous(p2));
  c.expect("product_c3_connected", true, is_connected(xy_c3));
  c.expect("factor_c1_connected", false, is_connected(y));

  DigitalMap p2_np = projection(product_image({interval(0, 1), y}, 2), 1);
  c.expect("p2_continuous_under_np", true, is_continuous(p2_np));
  return c.report;
}

FixtureReport prod_connected_exl() {
  Checker c("prod-connected-exl");
  DigitalImage y(PointSet{{0, 0}, {1, 1}}, AdjacencySpec::cu(2, 1));
  PointSet prod_pts;
  for (int t = 0; t <= 1; ++t)
    for (const Point& q : y.points()) prod_pts.insert({t, q[0], q[1]});
  c.expect("product_c2_connected", true,
           is_connected(DigitalImage(prod_pts, AdjacencySpec::cu(3, 2))));
  c.expect("factor_c1_connected", false, is_connected(y));
  c.expect("interval_c1_connected", true, is_connected(interval(0, 1)));
  c.expect("factor_c2_connected", true,
           is_connected(DigitalImage(y.points(), AdjacencySpec::cu(2, 2))));
  c.expect("product_c1_connected", false,
           is_connected(DigitalImage(prod_pts, AdjacencySpec::cu(3, 1))));
  return c.report;
}

FixtureReport pt_images_discon() {
  Checker c("pt-images-discon");
  MultiMap f(interval(0, 1), interval(0, 2),
             {{{0}, {{0}, {2}}}, {{1}, {{1}}}});
  c.expect("weak_continuity", true, has_weak_continuity(f));
  c.expect("strong_continuity", true, has_strong_continuity(f));
  c.expect("connectivity_preserving", false, is_connectivity_preserving(f));
  c.expect("connectivity_preserving_by_subsets", false,
           is_connectivity_preserving_by_subsets(f));
  c.expect("continuous_up_to_r3", false, is_continuous_multimap(f, 3).has_value());
  return c.report;
}

FixtureReport cont_not_strong() {
  Checker c("cont-not-strong");
  MultiMap f(interval(0, 1), interval(0, 2),
             {{{0}, {{0}, {1}}}, {{1}, {{2}}}});
  c.expect("continuous_up_to_r3", true, is_continuous_multimap(f, 3).has_value());
  c.expect("weak_continuity", true, has_weak_continuity(f));
  c.expect("strong_continuity", false, has_strong_continuity(f));
  return c.report;
}

FixtureReport subdiv_fig() {
  Checker c("subdiv-fig");
  DigitalImage x(PointSet{{1, 0}, {0, 1}}, AdjacencySpec::cu(2, 2));
  DigitalImage y(PointSet{{0, 0}, {0, 1}}, AdjacencySpec::cu(2, 2));
  c.expect("factors_isomorphic", true, isomorphic(x, y));
  DigitalImage sx = subdivide(x, 2);
  DigitalImage sy = subdivide(y, 2);
  c.expect("sx2_connected", true, is_connected(sx));
  c.expect("sy2_connected", true, is_connected(sy));
  c.expect("sx2_has_cut_vertex", true, has_cut_vertex(sx));
  c.expect("sy2_has_cut_vertex", false, has_cut_vertex(sy));
  return c.report;
}

FixtureReport shy_prod_counterexample() {
  Checker c("shy-prod-counterexample");
  DigitalImage x = flat_pair(AdjacencySpec::cu(2, 1));
  DigitalImage y = diag_pair(AdjacencySpec::cu(2, 2));
  DigitalMap f = map_between(x, y, {{{0, 0}, {0, 0}}, {{1, 0}, {1, 1}}});
  c.expect("factor_shy", true, is_shy(f));
  c.expect("identity_factor_shy", true, is_shy(identity_map(unit_point())));

  DigitalImage xp = times_zero_cu(x, 1);
  DigitalImage yp = times_zero_cu(y, 1);
  DigitalMap product_c1 =
      map_between(xp, yp, {{{0, 0, 0}, {0, 0, 0}}, {{1, 0, 0}, {1, 1, 0}}});
  c.expect("product_shy_under_c1", false, is_shy(product_c1));

  DigitalMap product_np = product_map({f, identity_map(unit_point())}, 2);
  c.expect("product_shy_under_np", true, is_shy(product_np));
  return c.report;
}

FixtureReport np2_vs_np1_recursion() {
  Checker c("np2-vs-np1-recursion");
  AdjacencySpec k = AdjacencySpec::cu(1, 1);
  AdjacencySpec triple = AdjacencySpec::np(2, {k, k, k});
  AdjacencySpec nested_np1 = AdjacencySpec::np(2, {AdjacencySpec::np(1, {k, k}), k});
  AdjacencySpec full3 = AdjacencySpec::np(3, {k, k, k});
  AdjacencySpec nested_np2 = AdjacencySpec::np(2, {AdjacencySpec::np(2, {k, k}), k});

  Point p{0, 0, 0}, q{1, 1, 0};
  c.expect("witness_adjacent_under_np2_of_three", true, adjacent(p, q, triple));
  c.expect("witness_adjacent_under_np2_of_np1", false, adjacent(p, q, nested_np1));

  bool recursion_holds = true;
  std::vector<Point> cube;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int d = 0; d <= 1; ++d) cube.push_back({a, b, d});
  for (const Point& s : cube)
    for (const Point& t : cube)
      if (adjacent(s, t, full3) != adjacent(s, t, nested_np2)) recursion_holds = false;
  c.expect("np3_equals_np2_of_np2", true, recursion_holds);
  return c.report;
}

FixtureReport curve4_fixture() {
  Checker c("curve4");
  DigitalImage s = curve4_image();
  bool two_regular = true;
  for (const Point& p : s.points())
    if (s.neighbors(p).size() != 2) two_regular = false;
  c.expect("simple_closed_curve", true, two_regular && is_connected(s));
  c.expect("contractible", true, is_contractible(s));
  return c.report;
}

FixtureReport curve8_fixture() {
  Checker c("curve8");
  DigitalImage s = curve8_image();
  bool two_regular = true;
  for (const Point& p : s.points())
    if (s.neighbors(p).size() != 2) two_regular = false;
  c.expect("simple_closed_curve", true, two_regular && is_connected(s));
  c.expect("contractible", false, is_contractible(s));
  return c.report;
}

FixtureReport cycle_double_cover() {
  Checker c("cycle-double-cover");
  std::vector<Point> e = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
  std::vector<Point> b = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  DigitalImage upstairs(PointSet(e.begin(), e.end()), AdjacencySpec::cu(2, 1));
  DigitalImage downstairs(PointSet(b.begin(), b.end()), AdjacencySpec::cu(2, 1));
  std::map<Point, Point> table;
  for (int i = 0; i < 8; ++i) table[e[static_cast<std::size_t>(i)]] = b[static_cast<std::size_t>(i % 4)];
  DigitalMap g(upstairs, downstairs, std::move(table));
  c.expect("covering_map", true, is_covering_map(g));
  c.expect("radius_1_local_iso", true, is_radius_n_local_iso(g, 1));
  c.expect("radius_2_local_iso", false, is_radius_n_local_iso(g, 2));
  return c.report;
}

FixtureReport np_homotopy_negative() {
  Checker c("np-homotopy-negative");
  DigitalImage x = diag_pair(AdjacencySpec::cu(2, 2));
  DigitalImage y = flat_pair(AdjacencySpec::cu(2, 1));
  DigitalMap f = map_between(y, x, {{{0, 0}, {0, 0}}, {{1, 0}, {1, 1}}});
  c.expect("factor_map_is_isomorphism", true, is_isomorphism(f));
  c.expect("factor_map_homotopic_to_constant", true,
           are_homotopic(f, constant_map(y, x, {0, 0})).has_value());

  auto equiv = homotopy_equivalent(x, y);
  c.expect("factors_homotopy_equivalent", true, equiv.has_value());

  DigitalImage xp = times_zero_cu(x, 1);
  DigitalImage yp = times_zero_cu(y, 1);
  c.expect("products_equivalent_under_c1", false, homotopy_equivalent(xp, yp).has_value());

  bool np_products_equivalent = false;
  if (equiv) {
    DigitalImage pt = unit_point();
    Homotopy trivial({identity_map(pt)});
    DigitalMap fw = product_map({equiv->forward, identity_map(pt)}, 2);
    DigitalMap bw = product_map({equiv->backward, identity_map(pt)}, 2);
    Homotopy h1 = product_homotopy({equiv->gf_to_id, trivial});
    Homotopy h2 = product_homotopy({equiv->fg_to_id, trivial});
    np_products_equivalent =
        is_homotopy(h1, compose(bw, fw), identity_map(h1.domain())) &&
        is_homotopy(h2, compose(fw, bw), identity_map(h2.domain()));
  }
  c.expect("products_equivalent_under_np", true, np_products_equivalent);
  return c.report;
}

FixtureReport cp_not_continuous() {
  Checker c("cp-not-continuous");
  DigitalImage c4 = curve4_image();
  DigitalImage c8 = curve8_image();
  // Walk the square once around the larger cycle: each corner maps to a
  // two-point arc, consecutive arcs meeting end to end.
  std::vector<Point> x_cycle = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::vector<Point> y_cycle = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
  std::map<Point, PointSet> table;
  for (int j = 0; j < 4; ++j)
    table[x_cycle[static_cast<std::size_t>(j)]] = {y_cycle[static_cast<std::size_t>(2 * j)],
                                                   y_cycle[static_cast<std::size_t>(2 * j + 1)]};
  MultiMap f(c4, c8, std::move(table));
  c.expect("connectivity_preserving", true, is_connectivity_preserving(f));
  c.expect("weak_continuity", true, has_weak_continuity(f));
  c.expect("continuous_up_to_r4", false, is_continuous_multimap(f, 4).has_value());
  return c.report;
}

FixtureReport afpp_interval() {
  Checker c("afpp-interval");
  auto r = has_afpp(interval(0, 2));
  c.expect("afpp", true, r.holds);
  return c.report;
}

FixtureReport afpp_gap() {
  Checker c("afpp-gap");
  DigitalImage gap(PointSet{{0}, {2}}, AdjacencySpec::cu(1, 1));
  auto r = has_afpp(gap);
  c.expect("afpp", false, r.holds);
  bool swap_witness = false;
  if (r.counterexample)
    swap_witness = (*r.counterexample)(Point{0}) == Point{2} &&
                   (*r.counterexample)(Point{2}) == Point{0} &&
                   approximate_fixed_points(*r.counterexample).empty();
  c.expect("counterexample_is_the_swap", true, swap_witness);
  return c.report;
}

FixtureReport bu_diamond() {
  Checker c("bu-diamond");
  DigitalImage s = diamond_image();
  c.expect("symmetric_about_origin", true, is_symmetric_origin(s));
  auto r = has_bu_property(s, 1, 2, AdjacencySpec::cu(1, 1));
  c.expect("bu_property_on_box", true, r.holds);
  return c.report;
}

const std::map<std::string, std::function<FixtureReport()>>& registry() {
  static const std::map<std::string, std::function<FixtureReport()>> table = {
      {"factors-not-prod", factors_not_prod},
      {"prod-map-exl", prod_map_exl},
      {"c3-projection", c3_projection},
      {"prod-connected-exl", prod_connected_exl},
      {"pt-images-discon", pt_images_discon},
      {"cont-not-strong", cont_not_strong},
      {"subdiv-fig", subdiv_fig},
      {"shy-prod-counterexample", shy_prod_counterexample},
      {"np2-vs-np1-recursion", np2_vs_np1_recursion},
      {"curve4", curve4_fixture},
      {"curve8", curve8_fixture},
      {"cycle-double-cover", cycle_double_cover},
      {"np-homotopy-negative", np_homotopy_negative},
      {"cp-not-continuous", cp_not_continuous},
      {"afpp-interval", afpp_interval},
      {"afpp-gap", afpp_gap},
      {"bu-diamond", bu_diamond},
  };
  return table;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

FixtureReport run_fixture(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw error("unknown fixture '" + name + "'");
  return it->second();
}

std::vector<FixtureReport> run_all_fixtures() {
  std::vector<FixtureReport> reports;
  for (const auto& [name, fn] : registry()) reports.push_back(fn());
  return reports;
}

const std::map<std::string, DigitalImage>& builtin_images() {
  static const std::map<std::string, DigitalImage> images = {
      {"interval01", interval(0, 1)},
      {"interval02", interval(0, 2)},
      {"interval03", interval(0, 3)},
      {"gap02", DigitalImage(PointSet{{0}, {2}}, AdjacencySpec::cu(1, 1))},
      {"curve4", curve4_image()},
      {"curve8", curve8_image()},
      {"diamond", diamond_image()},
      {"square22", box({{0, 1}, {0, 1}}, 2)},
  };
  return images;
}

}  // namespace digitop

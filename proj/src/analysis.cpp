#include "digitop/analysis.hpp"

#include <algorithm>

#include "digitop/connectivity.hpp"

namespace digitop {

bool is_surjective(const DigitalMap& f) {
  PointSet image;
  for (const auto& [x, y] : f.table()) image.insert(y);
  return image == f.codomain().points();
}

MultiMap inverse_multimap(const DigitalMap& f) {
  if (!is_surjective(f)) throw error("inverse_multimap: map is not surjective");
  std::map<Point, PointSet> table;
  for (const auto& [x, y] : f.table()) table[y].insert(x);
  return MultiMap(f.codomain(), f.domain(), std::move(table));
}

namespace {

PointSet fiber(const DigitalMap& f, const Point& y) {
  PointSet out;
  for (const auto& [x, v] : f.table())
    if (v == y) out.insert(x);
  return out;
}

}  // namespace

bool is_shy(const DigitalMap& f, std::string* reason) {
  if (!is_continuous(f)) {
    if (reason) *reason = "map is not continuous";
    return false;
  }
  if (!is_surjective(f)) {
    if (reason) *reason = "map is not surjective";
    return false;
  }
  for (const Point& y : f.codomain().points()) {
    if (!is_connected_subset(f.domain(), fiber(f, y))) {
      if (reason) *reason = "a fiber is disconnected";
      return false;
    }
  }
  for (const auto& [y0, y1] : f.codomain().edges()) {
    PointSet pre = fiber(f, y0);
    PointSet other = fiber(f, y1);
    pre.insert(other.begin(), other.end());
    if (!is_connected_subset(f.domain(), pre)) {
      if (reason) *reason = "an adjacent-pair preimage is disconnected";
      return false;
    }
  }
  return true;
}

ShyCharacterizations shy_characterizations(const DigitalMap& f) {
  if (!is_continuous(f) || !is_surjective(f))
    throw error("shy_characterizations: needs a continuous surjection");
  ShyCharacterizations out{};
  out.fibers_and_pairs = is_shy(f);

  // Preimages of connected subsets of the codomain.
  std::vector<Point> ys(f.codomain().points().begin(), f.codomain().points().end());
  if (ys.size() > 20) throw error("shy_characterizations: codomain too large for subset sweep");
  out.connected_preimages = true;
  for (std::size_t mask = 1; mask < (1u << ys.size()); ++mask) {
    PointSet subset;
    for (std::size_t i = 0; i < ys.size(); ++i)
      if (mask & (1u << i)) subset.insert(ys[i]);
    if (!is_connected_subset(f.codomain(), subset)) continue;
    PointSet pre;
    for (const Point& y : subset) {
      PointSet fib = fiber(f, y);
      pre.insert(fib.begin(), fib.end());
    }
    if (!is_connected_subset(f.domain(), pre)) {
      out.connected_preimages = false;
      break;
    }
  }

  MultiMap inverse = inverse_multimap(f);
  out.inverse_cp = is_connectivity_preserving(inverse);
  bool fibers_connected = true;
  for (const Point& y : f.codomain().points())
    if (!is_connected_subset(f.domain(), inverse(y))) fibers_connected = false;
  out.inverse_weak_with_fibers = has_weak_continuity(inverse) && fibers_connected;
  return out;
}

PointSet approximate_fixed_points(const DigitalMap& f) {
  if (f.domain() != f.codomain()) throw error("approximate_fixed_points: needs a self-map");
  PointSet out;
  for (const auto& [x, y] : f.table())
    if (x == y || adjacent(x, y, f.domain().adjacency())) out.insert(x);
  return out;
}

AfppResult has_afpp(const DigitalImage& image, const SearchBudget& budget) {
  BudgetCounter counter(budget);
  AfppResult result;
  result.holds = true;
  enumerate_continuous_maps(
      image, image,
      [&](const DigitalMap& f) {
        if (approximate_fixed_points(f).empty()) {
          result.holds = false;
          result.counterexample = f;
          return false;
        }
        return true;
      },
      nullptr, &counter);
  return result;
}

std::optional<Point> bu_witness(const DigitalMap& f,
                                const std::optional<AdjacencySpec>& codomain_spec) {
  if (!is_symmetric_origin(f.domain()))
    throw error("bu_witness: domain must be symmetric about the origin");
  const AdjacencySpec& lambda =
      codomain_spec ? *codomain_spec : f.codomain().adjacency();
  for (const Point& x : f.domain().points()) {
    const Point& a = f(x);
    const Point& b = f(negate(x));
    if (a == b || adjacent(a, b, lambda)) return x;
  }
  return std::nullopt;
}

BuResult has_bu_property(const DigitalImage& s, int m, int box_radius,
                         const AdjacencySpec& lambda, const SearchBudget& budget) {
  if (!is_symmetric_origin(s))
    throw error("has_bu_property: image must be symmetric about the origin");
  if (m < 1 || lambda.dim() != m) throw error("has_bu_property: adjacency must live on Z^m");
  if (box_radius < 1) throw error("has_bu_property: box radius must be positive");

  std::vector<std::pair<int, int>> ranges(static_cast<std::size_t>(m),
                                          {-box_radius, box_radius});
  DigitalImage target(box(ranges, 1).points(), lambda);

  BudgetCounter counter(budget);
  BuResult result;
  result.holds = true;
  enumerate_continuous_maps(
      s, target,
      [&](const DigitalMap& f) {
        if (!bu_witness(f, lambda)) {
          result.holds = false;
          result.counterexample = f;
          return false;
        }
        return true;
      },
      nullptr, &counter);
  return result;
}

namespace {

// g restricted to a neighborhood upstairs, landing in one downstairs; nullopt
// when the image escapes or the restriction fails to be an isomorphism.
bool restriction_is_iso(const DigitalMap& g, const PointSet& from, const PointSet& to) {
  if (from.size() != to.size()) return false;
  std::map<Point, Point> table;
  for (const Point& e : from) {
    const Point& b = g(e);
    if (!to.count(b)) return false;
    table[e] = b;
  }
  DigitalMap restricted(subimage(g.domain(), from), subimage(g.codomain(), to),
                        std::move(table));
  return is_isomorphism(restricted);
}

}  // namespace

bool is_covering_map(const DigitalMap& g, std::string* reason) {
  if (!is_continuous(g)) {
    if (reason) *reason = "map is not continuous";
    return false;
  }
  if (!is_surjective(g)) {
    if (reason) *reason = "map is not surjective";
    return false;
  }
  for (const Point& b : g.codomain().points()) {
    PointSet down = neighborhood(g.codomain(), b, 1);
    PointSet preimage;
    for (const auto& [e, v] : g.table())
      if (down.count(v)) preimage.insert(e);

    std::vector<PointSet> sheets;
    for (const Point& e : fiber(g, b)) sheets.push_back(neighborhood(g.domain(), e, 1));

    PointSet sheet_union;
    std::size_t total = 0;
    for (const PointSet& sheet : sheets) {
      total += sheet.size();
      sheet_union.insert(sheet.begin(), sheet.end());
    }
    if (sheet_union != preimage) {
      if (reason) *reason = "fiber neighborhoods do not cover the preimage";
      return false;
    }
    if (total != sheet_union.size()) {
      if (reason) *reason = "fiber neighborhoods overlap";
      return false;
    }
    for (const PointSet& sheet : sheets) {
      if (!restriction_is_iso(g, sheet, down)) {
        if (reason) *reason = "a fiber neighborhood is not mapped isomorphically";
        return false;
      }
    }
  }
  return true;
}

bool is_radius_n_local_iso(const DigitalMap& g, int n) {
  if (n < 0) throw error("is_radius_n_local_iso: radius must be nonnegative");
  if (!is_covering_map(g)) throw error("is_radius_n_local_iso: map is not a covering map");
  for (const Point& b : g.codomain().points()) {
    PointSet down = neighborhood(g.codomain(), b, n);
    for (const Point& e : fiber(g, b))
      if (!restriction_is_iso(g, neighborhood(g.domain(), e, n), down)) return false;
  }
  return true;
}

}  // namespace digitop

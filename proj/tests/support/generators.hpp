#pragma once

// Seeded random generators and brute-force oracles shared by the test suites.
// Everything here is deterministic for a fixed seed.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "digitop/mapcore.hpp"
#include "digitop/multimap.hpp"

namespace testgen {

using Rng = std::mt19937_64;
using namespace digitop;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Random image: up to max_points points inside [-2,2]^dim with a random c_u
// adjacency (occasionally an explicit random edge set).
inline DigitalImage random_image(Rng& rng, int max_points = 4, int max_dim = 2,
                                 bool allow_explicit = true) {
  const int dim = pick(rng, 1, max_dim);
  const int count = pick(rng, 1, max_points);
  PointSet pts;
  while (static_cast<int>(pts.size()) < count) {
    Point p(static_cast<std::size_t>(dim));
    for (auto& c : p) c = pick(rng, -2, 2);
    pts.insert(p);
  }
  if (allow_explicit && chance(rng, 0.15)) {
    std::vector<Point> v(pts.begin(), pts.end());
    std::vector<std::pair<Point, Point>> edges;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (chance(rng, 0.5)) edges.emplace_back(v[i], v[j]);
    return DigitalImage(pts, AdjacencySpec::explicit_edges(dim, edges));
  }
  return DigitalImage(pts, AdjacencySpec::cu(dim, pick(rng, 1, dim)));
}

inline DigitalImage random_connected_image(Rng& rng, int max_points = 4, int max_dim = 2) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    DigitalImage image = random_image(rng, max_points, max_dim, false);
    if (is_connected(image)) return image;
  }
  return interval(0, std::max(1, max_points - 1));
}

// Arbitrary (not necessarily continuous) function.
inline DigitalMap random_map(Rng& rng, const DigitalImage& domain, const DigitalImage& codomain) {
  std::vector<Point> values(codomain.points().begin(), codomain.points().end());
  std::map<Point, Point> table;
  for (const Point& p : domain.points())
    table[p] = values[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(values.size()) - 1))];
  return DigitalMap(domain, codomain, std::move(table));
}

// Random continuous map, built by a randomized backtracking assignment.
inline DigitalMap random_continuous_map(Rng& rng, const DigitalImage& domain,
                                        const DigitalImage& codomain) {
  std::vector<Point> pts(domain.points().begin(), domain.points().end());
  std::vector<Point> values(codomain.points().begin(), codomain.points().end());
  const std::size_t n = pts.size();
  std::vector<std::vector<std::size_t>> earlier(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (adjacent(pts[i], pts[j], domain.adjacency())) earlier[i].push_back(j);

  std::vector<Point> assigned(n);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    std::vector<Point> order = values;
    std::shuffle(order.begin(), order.end(), rng);
    for (const Point& y : order) {
      bool ok = true;
      for (std::size_t j : earlier[i]) {
        if (assigned[j] != y && !adjacent(assigned[j], y, codomain.adjacency())) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assigned[i] = y;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) {
    // A constant map always exists.
    return constant_map(domain, codomain, *codomain.points().begin());
  }
  std::map<Point, Point> table;
  for (std::size_t i = 0; i < n; ++i) table[pts[i]] = assigned[i];
  return DigitalMap(domain, codomain, std::move(table));
}

// Random total multivalued function with nonempty value sets.
inline MultiMap random_multimap(Rng& rng, const DigitalImage& domain,
                                const DigitalImage& codomain) {
  std::vector<Point> values(codomain.points().begin(), codomain.points().end());
  std::map<Point, PointSet> table;
  for (const Point& p : domain.points()) {
    PointSet ys;
    for (const Point& y : values)
      if (chance(rng, 0.4)) ys.insert(y);
    if (ys.empty()) ys.insert(values[static_cast<std::size_t>(
        pick(rng, 0, static_cast<int>(values.size()) - 1))]);
    table[p] = std::move(ys);
  }
  return MultiMap(domain, codomain, std::move(table));
}

// Random multimap with connected point images (via BFS-grown blobs).
inline MultiMap random_multimap_connected_images(Rng& rng, const DigitalImage& domain,
                                                 const DigitalImage& codomain) {
  std::vector<Point> values(codomain.points().begin(), codomain.points().end());
  std::map<Point, PointSet> table;
  for (const Point& p : domain.points()) {
    Point seed = values[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(values.size()) - 1))];
    PointSet blob{seed};
    int grow = pick(rng, 0, static_cast<int>(values.size()) - 1);
    for (int step = 0; step < grow; ++step) {
      std::vector<Point> frontier;
      for (const Point& q : blob)
        for (const Point& nb : codomain.neighbors(q))
          if (!blob.count(nb)) frontier.push_back(nb);
      if (frontier.empty()) break;
      blob.insert(frontier[static_cast<std::size_t>(
          pick(rng, 0, static_cast<int>(frontier.size()) - 1))]);
    }
    table[p] = std::move(blob);
  }
  return MultiMap(domain, codomain, std::move(table));
}

// Every function X -> Y, continuity not required. Oracle for enumeration
// tests; intentionally naive.
inline std::vector<DigitalMap> all_functions(const DigitalImage& domain,
                                             const DigitalImage& codomain) {
  std::vector<Point> pts(domain.points().begin(), domain.points().end());
  std::vector<Point> values(codomain.points().begin(), codomain.points().end());
  std::vector<DigitalMap> out;
  std::vector<std::size_t> idx(pts.size(), 0);
  while (true) {
    std::map<Point, Point> table;
    for (std::size_t i = 0; i < pts.size(); ++i) table[pts[i]] = values[idx[i]];
    out.emplace_back(domain, codomain, std::move(table));
    std::size_t i = pts.size();
    while (i > 0) {
      --i;
      if (++idx[i] < values.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (pts.empty()) return out;
  }
}

// All continuous surjections X -> Y.
inline std::vector<DigitalMap> continuous_surjections(const DigitalImage& domain,
                                                      const DigitalImage& codomain) {
  std::vector<DigitalMap> out;
  enumerate_continuous_maps(domain, codomain, [&](const DigitalMap& f) {
    PointSet image;
    for (const auto& [x, y] : f.table()) image.insert(y);
    if (image == codomain.points()) out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace testgen

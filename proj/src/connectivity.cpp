#include "digitop/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace digitop {

namespace {

// BFS component of `seed` within `subset`, using the image's neighbor cache
// when the subset is the full point set and pairwise tests otherwise.
PointSet component_of(const DigitalImage& image, const PointSet& subset, const Point& seed) {
  const bool whole_image = subset.size() == image.size();
  PointSet seen{seed};
  std::deque<Point> queue{seed};
  while (!queue.empty()) {
    Point p = queue.front();
    queue.pop_front();
    if (whole_image) {
      for (const Point& q : image.neighbors(p)) {
        if (!seen.count(q)) {
          seen.insert(q);
          queue.push_back(q);
        }
      }
    } else {
      for (const Point& q : subset) {
        if (!seen.count(q) && adjacent(p, q, image.adjacency())) {
          seen.insert(q);
          queue.push_back(q);
        }
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<PointSet> components_of_subset(const DigitalImage& image, const PointSet& subset) {
  for (const Point& p : subset)
    if (!image.contains(p)) throw error("components: point not in image");
  std::vector<PointSet> result;
  PointSet remaining = subset;
  while (!remaining.empty()) {
    PointSet comp = component_of(image, subset, *remaining.begin());
    for (const Point& p : comp) remaining.erase(p);
    result.push_back(std::move(comp));
  }
  return result;
}

std::vector<PointSet> components(const DigitalImage& image) {
  return components_of_subset(image, image.points());
}

bool is_connected_subset(const DigitalImage& image, const PointSet& subset) {
  if (subset.empty()) throw error("is_connected: empty point set");
  return component_of(image, subset, *subset.begin()).size() == subset.size();
}

bool is_connected(const DigitalImage& image) {
  return is_connected_subset(image, image.points());
}

std::optional<std::vector<Point>> find_path(const DigitalImage& image, const Point& a,
                                            const Point& b) {
  if (!image.contains(a) || !image.contains(b)) throw error("find_path: endpoint not in image");
  if (a == b) return std::vector<Point>{a};
  std::map<Point, Point> parent;
  parent[a] = a;
  std::deque<Point> queue{a};
  while (!queue.empty()) {
    Point p = queue.front();
    queue.pop_front();
    for (const Point& q : image.neighbors(p)) {
      if (parent.count(q)) continue;
      parent[q] = p;
      if (q == b) {
        std::vector<Point> path{b};
        Point cur = b;
        while (cur != a) {
          cur = parent[cur];
          path.push_back(cur);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(q);
    }
  }
  return std::nullopt;
}

bool sets_adjacent(const PointSet& a, const PointSet& b, const AdjacencySpec& spec) {
  if (a.empty() || b.empty()) throw error("sets_adjacent: empty point set");
  for (const Point& p : a)
    for (const Point& q : b)
      if (p == q || adjacent(p, q, spec)) return true;
  return false;
}

PointSet neighborhood(const DigitalImage& image, const Point& x, int n, bool ambient) {
  if (n < 0) throw error("neighborhood: radius must be nonnegative");
  if (ambient) {
    if (n > 1) throw error("neighborhood: ambient mode supports radius <= 1 only");
    if (!image.adjacency().lattice_evaluable())
      throw error("neighborhood: ambient mode needs a lattice-evaluable adjacency");
    if (static_cast<int>(x.size()) != image.dim())
      throw error("neighborhood: point dimension mismatch");
    PointSet result{x};
    if (n == 0) return result;
    // Every lattice-evaluable adjacency moves each coordinate by at most 1,
    // so candidates live in the Chebyshev unit ball around x.
    Point candidate = x;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == x.size()) {
        if (candidate != x && adjacent(x, candidate, image.adjacency()))
          result.insert(candidate);
        return;
      }
      for (int d = -1; d <= 1; ++d) {
        candidate[i] = x[i] + d;
        self(self, i + 1);
      }
      candidate[i] = x[i];
    };
    rec(rec, 0);
    return result;
  }

  if (!image.contains(x)) throw error("neighborhood: point not in image");
  PointSet seen{x};
  std::deque<std::pair<Point, int>> queue{{x, 0}};
  while (!queue.empty()) {
    auto [p, depth] = queue.front();
    queue.pop_front();
    if (depth == n) continue;
    for (const Point& q : image.neighbors(p)) {
      if (!seen.count(q)) {
        seen.insert(q);
        queue.emplace_back(q, depth + 1);
      }
    }
  }
  return seen;
}

}  // namespace digitop

#include "digitop/multimap.hpp"

#include <algorithm>
#include <deque>

#include "digitop/connectivity.hpp"

namespace digitop {

namespace {

int floordiv(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Point floordiv(const Point& p, int b) {
  Point q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = floordiv(p[i], b);
  return q;
}

// Numerator cells of each point, one denominator step finer.
DigitalImage subdivide_cells(const DigitalImage& x, int s) {
  PointSet pts;
  Point cur(static_cast<std::size_t>(x.dim()));
  for (const Point& p : x.points()) {
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == cur.size()) {
        pts.insert(cur);
        return;
      }
      for (int d = 0; d < s; ++d) {
        cur[i] = s * p[i] + d;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  return DigitalImage(std::move(pts), x.adjacency(), x.denom() * s);
}

}  // namespace

MultiMap::MultiMap(DigitalImage domain, DigitalImage codomain, std::map<Point, PointSet> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_.size())
    throw error("multimap: table must be defined on exactly the domain points");
  for (const auto& [x, ys] : table_) {
    if (!domain_.contains(x)) throw error("multimap: table key not in domain");
    if (ys.empty()) throw error("multimap: point image must be nonempty");
    for (const Point& y : ys)
      if (!codomain_.contains(y)) throw error("multimap: value not in codomain");
  }
}

const PointSet& MultiMap::operator()(const Point& x) const {
  auto it = table_.find(x);
  if (it == table_.end()) throw error("multimap: point not in domain");
  return it->second;
}

MultiMap as_multimap(const DigitalMap& f) {
  std::map<Point, PointSet> table;
  for (const auto& [x, y] : f.table()) table[x] = PointSet{y};
  return MultiMap(f.domain(), f.codomain(), std::move(table));
}

PointSet image_of_set(const MultiMap& f, const PointSet& a) {
  PointSet out;
  for (const Point& x : a) {
    if (!f.domain().contains(x)) throw error("image_of_set: point not in domain");
    const PointSet& ys = f(x);
    out.insert(ys.begin(), ys.end());
  }
  return out;
}

bool has_weak_continuity(const MultiMap& f) {
  for (const auto& [a, b] : f.domain().edges())
    if (!sets_adjacent(f(a), f(b), f.codomain().adjacency())) return false;
  return true;
}

bool has_strong_continuity(const MultiMap& f) {
  const AdjacencySpec& lambda = f.codomain().adjacency();
  auto covered = [&](const PointSet& from, const PointSet& to) {
    for (const Point& p : from) {
      bool ok = false;
      for (const Point& q : to) {
        if (p == q || adjacent(p, q, lambda)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };
  for (const auto& [a, b] : f.domain().edges())
    if (!covered(f(a), f(b)) || !covered(f(b), f(a))) return false;
  return true;
}

bool is_connectivity_preserving(const MultiMap& f) {
  for (const auto& [x, ys] : f.table())
    if (!is_connected_subset(f.codomain(), ys)) return false;
  return has_weak_continuity(f);
}

bool is_connectivity_preserving_by_subsets(const MultiMap& f) {
  std::vector<Point> pts(f.domain().points().begin(), f.domain().points().end());
  const std::size_t n = pts.size();
  if (n > 20) throw error("is_connectivity_preserving_by_subsets: domain too large");
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    PointSet subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.insert(pts[i]);
    if (!is_connected_subset(f.domain(), subset)) continue;
    if (!is_connected_subset(f.codomain(), image_of_set(f, subset))) return false;
  }
  return true;
}

DigitalImage subdivide(const DigitalImage& x, int r) {
  if (r < 1) throw error("subdivide: r must be positive");
  if (x.denom() != 1) throw error("subdivide: image already subdivided");
  if (!x.adjacency().lattice_evaluable())
    throw error("subdivide: adjacency must be lattice-evaluable");
  if (r == 1) return x;
  return subdivide_cells(x, r);
}

DigitalMap collapse_map(const DigitalImage& s, const DigitalImage& x) {
  const int r = s.denom() / std::max(1, x.denom());
  if (x.denom() != 1 || r < 1 || subdivide(x, r) != s)
    throw error("collapse_map: image is not a subdivision of the given base");
  std::map<Point, Point> table;
  for (const Point& p : s.points()) table[p] = floordiv(p, r);
  return DigitalMap(s, x, std::move(table));
}

MultiMap induce(const DigitalMap& f) {
  const int r = f.domain().denom();
  PointSet base_points;
  for (const Point& p : f.domain().points()) base_points.insert(floordiv(p, r));
  DigitalImage base(base_points, f.domain().adjacency(), 1);
  if (subdivide_cells(base, r).points() != f.domain().points())
    throw error("induce: map domain is not a full subdivision");
  std::map<Point, PointSet> table;
  for (const Point& p : f.domain().points()) table[floordiv(p, r)].insert(f(p));
  return MultiMap(std::move(base), f.codomain(), std::move(table));
}

DigitalMap refine(const DigitalMap& f, int s) {
  if (s < 1) throw error("refine: s must be positive");
  if (s == 1) return f;
  DigitalImage finer = subdivide_cells(f.domain(), s);
  std::map<Point, Point> table;
  for (const Point& q : finer.points()) table[q] = f(floordiv(q, s));
  return DigitalMap(std::move(finer), f.codomain(), std::move(table));
}

namespace {

// Variable order for the witness search: BFS outward from the most central
// point, so that cell-boundary constraints bind as early as possible.
std::vector<Point> search_order(const DigitalImage& s) {
  std::vector<Point> pts(s.points().begin(), s.points().end());
  const std::size_t n = static_cast<std::size_t>(s.dim());
  std::vector<int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = (*pts.begin())[i];
  }
  for (const Point& p : pts)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  auto score = [&](const Point& p) {
    int worst = 0;
    for (std::size_t i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(2 * p[i] - lo[i] - hi[i]));
    return worst;
  };
  Point start = pts.front();
  for (const Point& p : pts)
    if (score(p) < score(start) || (score(p) == score(start) && p < start)) start = p;

  std::vector<Point> order;
  PointSet seen;
  std::deque<Point> queue;
  auto push = [&](const Point& p) {
    if (seen.insert(p).second) queue.push_back(p);
  };
  push(start);
  auto next_unseen = [&]() -> std::optional<Point> {
    for (const Point& p : s.points())
      if (!seen.count(p)) return p;
    return std::nullopt;
  };
  while (true) {
    if (queue.empty()) {
      auto p = next_unseen();
      if (!p) break;
      push(*p);
    }
    Point p = queue.front();
    queue.pop_front();
    order.push_back(p);
    for (const Point& q : s.neighbors(p)) push(q);
  }
  return order;
}

}  // namespace

std::optional<std::pair<int, DigitalMap>> is_continuous_multimap(const MultiMap& f, int r_max) {
  if (r_max < 1) throw error("is_continuous_multimap: r_max must be positive");
  const DigitalImage& x = f.domain();

  for (int r = 1; r <= r_max; ++r) {
    // A cell of r^n points cannot cover a larger value set.
    bool feasible = true;
    long long cell = 1;
    for (int i = 0; i < x.dim(); ++i) cell *= r;
    for (const auto& [p, ys] : f.table())
      if (static_cast<long long>(ys.size()) > cell) feasible = false;
    if (!feasible) continue;

    DigitalImage s = subdivide(x, r);
    std::vector<Point> order = search_order(s);
    const std::size_t n = order.size();
    std::map<Point, std::size_t> position;
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

    std::vector<std::vector<std::size_t>> earlier(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const Point& q : s.neighbors(order[i])) {
        std::size_t j = position.at(q);
        if (j < i) earlier[i].push_back(j);
      }

    // Per-variable candidates and per-cell coverage bookkeeping.
    std::vector<Point> bases;
    std::map<Point, std::size_t> base_index;
    for (const Point& p : x.points()) {
      base_index[p] = bases.size();
      bases.push_back(p);
    }
    std::vector<std::size_t> cell_of(n);
    std::vector<std::vector<Point>> candidates(n);
    std::vector<int> remaining(bases.size(), 0);
    std::vector<std::map<Point, int>> cover_count(bases.size());
    std::vector<int> uncovered(bases.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      Point base = floordiv(order[i], r);
      cell_of[i] = base_index.at(base);
      ++remaining[cell_of[i]];
      const PointSet& ys = f(base);
      candidates[i].assign(ys.begin(), ys.end());
    }
    for (std::size_t c = 0; c < bases.size(); ++c) {
      for (const Point& y : f(bases[c])) cover_count[c][y] = 0;
      uncovered[c] = static_cast<int>(f(bases[c]).size());
    }

    std::vector<Point> assigned(n);
    std::optional<DigitalMap> witness;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
      if (i == n) {
        std::map<Point, Point> table;
        for (std::size_t k = 0; k < n; ++k) table[order[k]] = assigned[k];
        witness = DigitalMap(s, f.codomain(), std::move(table));
        return true;
      }
      const std::size_t c = cell_of[i];
      --remaining[c];
      for (const Point& y : candidates[i]) {
        bool ok = true;
        for (std::size_t j : earlier[i]) {
          const Point& z = assigned[j];
          if (z != y && !adjacent(z, y, f.codomain().adjacency())) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        int& count = cover_count[c][y];
        if (count == 0) --uncovered[c];
        ++count;
        if (uncovered[c] <= remaining[c]) {
          assigned[i] = y;
          if (self(self, i + 1)) return true;
        }
        --count;
        if (count == 0) ++uncovered[c];
      }
      ++remaining[c];
      return false;
    };
    if (rec(rec, 0)) return std::make_pair(r, std::move(*witness));
  }
  return std::nullopt;
}

MultiMap product_multimap(const std::vector<MultiMap>& factors, int u) {
  if (factors.empty()) throw error("product_multimap: empty factor list");
  std::vector<DigitalImage> domains, codomains;
  for (const auto& f : factors) {
    domains.push_back(f.domain());
    codomains.push_back(f.codomain());
  }
  DigitalImage domain = product_image(domains, u);
  DigitalImage codomain = product_image(codomains, u);
  std::map<Point, PointSet> table;
  for (const Point& p : domain.points()) {
    std::vector<const PointSet*> parts;
    std::size_t offset = 0;
    std::vector<PointSet> storage;
    storage.reserve(factors.size());
    for (const auto& f : factors) {
      const std::size_t d = static_cast<std::size_t>(f.domain().dim());
      Point block(p.begin() + offset, p.begin() + offset + d);
      offset += d;
      storage.push_back(f(block));
    }
    for (const auto& set : storage) parts.push_back(&set);
    table[p] = cartesian_points(parts);
  }
  return MultiMap(std::move(domain), std::move(codomain), std::move(table));
}

namespace {

bool multimap_continuous_in(const MultiMap& f, const MultiRetractionOptions& options) {
  if (options.notion == MultiContinuityNotion::connectivity_preserving)
    return is_connectivity_preserving(f);
  return is_continuous_multimap(f, options.r_max).has_value();
}

}  // namespace

bool is_multivalued_retraction(const MultiMap& f, const PointSet& a,
                               const MultiRetractionOptions& options) {
  if (f.codomain().points() != a)
    throw error("is_multivalued_retraction: A must equal the codomain points");
  for (const Point& p : a)
    if (!f.domain().contains(p))
      throw error("is_multivalued_retraction: A not contained in the domain");
  for (const Point& p : a)
    if (f(p) != PointSet{p}) return false;
  return multimap_continuous_in(f, options);
}

bool is_n_retraction(const MultiMap& f, const PointSet& a,
                     const MultiRetractionOptions& options) {
  for (const Point& x : f.domain().points()) {
    if (a.count(x)) continue;
    for (const Point& y : f(x)) {
      if (y.size() != x.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(y[i] - x[i]) > 1) return false;
    }
  }
  return is_multivalued_retraction(f, a, options);
}

}  // namespace digitop

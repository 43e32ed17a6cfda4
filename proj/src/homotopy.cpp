#include "digitop/homotopy.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <thread>

namespace digitop {

Homotopy::Homotopy(std::vector<DigitalMap> frames, std::optional<PointSet> fixed_points)
    : frames_(std::move(frames)), fixed_points_(std::move(fixed_points)) {
  if (frames_.empty()) throw error("homotopy: empty frame list");
  for (const auto& fr : frames_) {
    if (fr.domain() != frames_.front().domain() || fr.codomain() != frames_.front().codomain())
      throw error("homotopy: frames must share domain and codomain");
  }
  if (fixed_points_) {
    for (const Point& p : *fixed_points_)
      if (!frames_.front().domain().contains(p))
        throw error("homotopy: fixed point not in domain");
  }
}

const DigitalImage& Homotopy::domain() const { return frames_.front().domain(); }
const DigitalImage& Homotopy::codomain() const { return frames_.front().codomain(); }

bool Homotopy::is_valid() const {
  for (const auto& fr : frames_)
    if (!is_continuous(fr)) return false;
  const AdjacencySpec& lambda = codomain().adjacency();
  for (std::size_t t = 0; t + 1 < frames_.size(); ++t) {
    for (const Point& x : domain().points()) {
      const Point& a = frames_[t](x);
      const Point& b = frames_[t + 1](x);
      if (a != b && !adjacent(a, b, lambda)) return false;
    }
  }
  if (fixed_points_) {
    for (const Point& x : *fixed_points_) {
      const Point& base = frames_.front()(x);
      for (const auto& fr : frames_)
        if (fr(x) != base) return false;
    }
  }
  return true;
}

bool is_homotopy(const Homotopy& h, const DigitalMap& f, const DigitalMap& g) {
  if (f.domain() != h.domain() || f.codomain() != h.codomain() || g.domain() != h.domain() ||
      g.codomain() != h.codomain())
    throw error("is_homotopy: endpoint maps must share the homotopy's images");
  return h.frames().front() == f && h.frames().back() == g && h.is_valid();
}

DigitalMap flatten_np1(const Homotopy& h) {
  const DigitalImage& x = h.domain();
  if (x.denom() != 1) throw error("flatten_np1: requires an unsubdivided domain");
  DigitalImage time = interval(0, h.steps());
  DigitalImage prod = product_image({x, time}, 1);
  std::map<Point, Point> table;
  for (const Point& p : x.points()) {
    for (int t = 0; t <= h.steps(); ++t) {
      Point key = p;
      key.push_back(t);
      table[std::move(key)] = h.frames()[static_cast<std::size_t>(t)](p);
    }
  }
  return DigitalMap(std::move(prod), h.codomain(), std::move(table));
}

namespace {

// Map tables are encoded as value indices in canonical domain order; the
// codomain is assumed small enough for 16-bit indices.
using MapKey = std::vector<std::uint16_t>;

struct MapSpace {
  DigitalImage domain;
  DigitalImage codomain;
  std::vector<Point> pts;
  std::vector<Point> vals;
  std::map<Point, std::uint16_t> val_index;
  // For each value index, the indices of equal-or-adjacent values, sorted.
  std::vector<std::vector<std::uint16_t>> star;
  // For each domain position, earlier positions adjacent to it.
  std::vector<std::vector<std::size_t>> earlier;

  MapSpace(const DigitalImage& dom, const DigitalImage& cod) : domain(dom), codomain(cod) {
    pts.assign(dom.points().begin(), dom.points().end());
    vals.assign(cod.points().begin(), cod.points().end());
    if (vals.size() > 65535) throw error("map search: codomain too large");
    for (std::size_t i = 0; i < vals.size(); ++i)
      val_index[vals[i]] = static_cast<std::uint16_t>(i);
    star.resize(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
      star[i].push_back(static_cast<std::uint16_t>(i));
      for (const Point& q : cod.neighbors(vals[i])) star[i].push_back(val_index.at(q));
      std::sort(star[i].begin(), star[i].end());
    }
    earlier.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (adjacent(pts[i], pts[j], dom.adjacency())) earlier[i].push_back(j);
  }

  MapKey key_of(const DigitalMap& f) const {
    MapKey k;
    k.reserve(pts.size());
    for (const Point& p : pts) k.push_back(val_index.at(f(p)));
    return k;
  }

  DigitalMap map_of(const MapKey& k) const {
    std::map<Point, Point> table;
    for (std::size_t i = 0; i < pts.size(); ++i) table[pts[i]] = vals[k[i]];
    return DigitalMap(domain, codomain, std::move(table));
  }

  bool value_pair_ok(std::uint16_t a, std::uint16_t b) const {
    return std::binary_search(star[a].begin(), star[a].end(), b);
  }

  // All continuous maps pointwise equal-or-adjacent to `from`, lexicographic,
  // `from` itself included. Positions listed in `pinned` keep their value.
  std::vector<MapKey> neighbors_of(const MapKey& from, const std::vector<bool>& pinned) const {
    std::vector<MapKey> out;
    MapKey cur(pts.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == pts.size()) {
        out.push_back(cur);
        return;
      }
      if (pinned[i]) {
        cur[i] = from[i];
        for (std::size_t j : earlier[i])
          if (!value_pair_ok(cur[j], cur[i])) return;
        self(self, i + 1);
        return;
      }
      for (std::uint16_t v : star[from[i]]) {
        bool ok = true;
        for (std::size_t j : earlier[i]) {
          if (!value_pair_ok(cur[j], v)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        cur[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    return out;
  }
};

// Level-synchronous BFS over the continuous-map graph. Deterministic for any
// thread count: workers only generate candidate lists, and all visited-set
// updates happen in frontier order on the merging thread.
std::optional<std::vector<MapKey>> bfs_map_graph(
    const MapSpace& space, const MapKey& start,
    const std::function<bool(const MapKey&)>& is_target, const std::vector<bool>& pinned,
    BudgetCounter& counter, int threads, std::size_t max_frames) {
  std::set<MapKey> visited{start};
  std::map<MapKey, MapKey> parent;
  std::vector<MapKey> frontier{start};
  counter.charge();

  auto reconstruct = [&](MapKey k) {
    std::vector<MapKey> path{k};
    while (k != start) {
      k = parent.at(k);
      path.push_back(k);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  if (is_target(start)) return reconstruct(start);

  std::size_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    if (max_frames != 0 && depth >= max_frames)
      throw budget_error("homotopy search exceeded the frame-length budget");

    std::vector<std::vector<MapKey>> produced(frontier.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i)
        produced[i] = space.neighbors_of(frontier[i], pinned);
    };
    const int nthreads = std::max(1, threads);
    if (nthreads == 1 || frontier.size() < 2) {
      work(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + nthreads - 1) / nthreads;
      for (std::size_t begin = 0; begin < frontier.size(); begin += chunk)
        pool.emplace_back(work, begin, std::min(begin + chunk, frontier.size()));
      for (auto& t : pool) t.join();
    }

    std::vector<MapKey> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (MapKey& cand : produced[i]) {
        counter.charge();
        if (visited.count(cand)) continue;
        visited.insert(cand);
        parent[cand] = frontier[i];
        if (is_target(cand)) return reconstruct(cand);
        next.push_back(std::move(cand));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

Homotopy path_to_homotopy(const MapSpace& space, const std::vector<MapKey>& path,
                          std::optional<PointSet> fixed) {
  std::vector<DigitalMap> frames;
  frames.reserve(path.size());
  for (const MapKey& k : path) frames.push_back(space.map_of(k));
  return Homotopy(std::move(frames), std::move(fixed));
}

std::optional<Homotopy> homotopic_impl(const DigitalMap& f, const DigitalMap& g,
                                       BudgetCounter& counter, int threads,
                                       std::size_t max_frames,
                                       const std::optional<PointSet>& fixed) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    throw error("are_homotopic: maps must share domain and codomain");
  if (!is_continuous(f) || !is_continuous(g))
    throw error("are_homotopic: both maps must be continuous");

  MapSpace space(f.domain(), f.codomain());
  std::vector<bool> pinned(space.pts.size(), false);
  if (fixed) {
    for (const Point& p : *fixed) {
      if (!f.domain().contains(p)) throw error("are_homotopic: fixed point not in domain");
      if (f(p) != g(p)) return std::nullopt;  // cannot hold the point and still reach g
    }
    for (std::size_t i = 0; i < space.pts.size(); ++i)
      if (fixed->count(space.pts[i])) pinned[i] = true;
  }

  MapKey start = space.key_of(f);
  MapKey goal = space.key_of(g);
  auto path = bfs_map_graph(
      space, start, [&](const MapKey& k) { return k == goal; }, pinned, counter, threads,
      max_frames);
  if (!path) return std::nullopt;
  return path_to_homotopy(space, *path, fixed);
}

}  // namespace

std::optional<Homotopy> are_homotopic(const DigitalMap& f, const DigitalMap& g,
                                      const SearchBudget& budget,
                                      const std::optional<PointSet>& fixed) {
  BudgetCounter counter(budget);
  return homotopic_impl(f, g, counter, budget.threads, budget.max_frames, fixed);
}

bool is_contractible(const DigitalImage& image, const SearchBudget& budget) {
  BudgetCounter counter(budget);
  MapSpace space(image, image);
  std::vector<bool> pinned(space.pts.size(), false);
  MapKey start = space.key_of(identity_map(image));
  auto constant = [](const MapKey& k) {
    for (std::uint16_t v : k)
      if (v != k.front()) return false;
    return true;
  };
  return bfs_map_graph(space, start, constant, pinned, counter, budget.threads,
                       budget.max_frames)
      .has_value();
}

std::optional<HomotopyEquivalence> homotopy_equivalent(const DigitalImage& x,
                                                       const DigitalImage& y,
                                                       const SearchBudget& budget) {
  BudgetCounter counter(budget);
  DigitalMap id_x = identity_map(x);
  DigitalMap id_y = identity_map(y);
  std::optional<HomotopyEquivalence> found;
  enumerate_continuous_maps(
      x, y,
      [&](const DigitalMap& f) {
        enumerate_continuous_maps(
            y, x,
            [&](const DigitalMap& g) {
              auto h1 = homotopic_impl(compose(g, f), id_x, counter, budget.threads,
                                       budget.max_frames, std::nullopt);
              if (!h1) return true;
              auto h2 = homotopic_impl(compose(f, g), id_y, counter, budget.threads,
                                       budget.max_frames, std::nullopt);
              if (!h2) return true;
              found = HomotopyEquivalence{f, g, std::move(*h1), std::move(*h2)};
              return false;
            },
            nullptr, &counter);
        return !found;
      },
      nullptr, &counter);
  return found;
}

Homotopy product_homotopy(const std::vector<Homotopy>& factors) {
  if (factors.empty()) throw error("product_homotopy: empty factor list");
  const int u = static_cast<int>(factors.size());
  int max_steps = 0;
  for (const auto& h : factors) max_steps = std::max(max_steps, h.steps());

  std::vector<DigitalMap> frames;
  for (int t = 0; t <= max_steps; ++t) {
    std::vector<DigitalMap> slice;
    for (const auto& h : factors)
      slice.push_back(h.frames()[static_cast<std::size_t>(std::min(t, h.steps()))]);
    if (factors.size() == 1) {
      frames.push_back(slice.front());
    } else {
      frames.push_back(product_map(slice, u));
    }
  }

  std::optional<PointSet> fixed;
  bool all_pointed = true;
  for (const auto& h : factors)
    if (!h.fixed_points()) all_pointed = false;
  if (all_pointed && factors.size() > 1) {
    std::vector<const PointSet*> sets;
    for (const auto& h : factors) sets.push_back(&*h.fixed_points());
    fixed = cartesian_points(sets);
  } else if (all_pointed) {
    fixed = factors.front().fixed_points();
  }
  return Homotopy(std::move(frames), std::move(fixed));
}

namespace {

bool deformation_retract_impl(const DigitalImage& x, const PointSet& a, const Homotopy& h,
                              bool strong) {
  if (a.empty()) throw error("deformation retract: empty subset");
  for (const Point& p : a)
    if (!x.contains(p)) throw error("deformation retract: subset not contained in image");
  if (h.domain() != x || h.codomain() != x)
    throw error("deformation retract: homotopy must run on the image itself");
  if (!h.is_valid()) return false;
  if (h.frames().front() != identity_map(x)) return false;
  const DigitalMap& last = h.frames().back();
  for (const Point& p : x.points())
    if (!a.count(last(p))) return false;
  for (const Point& p : a)
    if (last(p) != p) return false;
  if (strong) {
    for (const auto& fr : h.frames())
      for (const Point& p : a)
        if (fr(p) != p) return false;
  }
  return true;
}

}  // namespace

bool is_deformation_retract(const DigitalImage& x, const PointSet& a, const Homotopy& h) {
  return deformation_retract_impl(x, a, h, false);
}

bool is_strong_deformation_retract(const DigitalImage& x, const PointSet& a, const Homotopy& h) {
  return deformation_retract_impl(x, a, h, true);
}

}  // namespace digitop

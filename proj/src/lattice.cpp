#include "digitop/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace digitop {

Point negate(const Point& x) {
  Point r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

Point concat_coords(const Point& a, const Point& b) {
  Point r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

AdjacencySpec AdjacencySpec::cu(int dim, int u) {
  if (dim < 1) throw error("cu adjacency: dimension must be positive");
  if (u < 1 || u > dim) throw error("cu adjacency: u out of range [1, dim]");
  return AdjacencySpec(CuSpec{dim, u});
}

AdjacencySpec AdjacencySpec::np(int u, std::vector<AdjacencySpec> factors) {
  const int v = static_cast<int>(factors.size());
  if (v < 2) throw error("np adjacency: needs at least two factors");
  if (u < 1 || u > v) throw error("np adjacency: u out of range [1, v]");
  return AdjacencySpec(NpSpec{u, std::move(factors)});
}

AdjacencySpec AdjacencySpec::explicit_edges(int dim,
                                            const std::vector<std::pair<Point, Point>>& edges) {
  if (dim < 1) throw error("explicit adjacency: dimension must be positive");
  ExplicitSpec s;
  s.dim = dim;
  for (const auto& [a, b] : edges) {
    if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
      throw error("explicit adjacency: edge endpoint has wrong dimension");
    if (a == b) throw error("explicit adjacency: self-loop not allowed");
    s.edges.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  }
  return AdjacencySpec(std::move(s));
}

int AdjacencySpec::dim() const {
  if (is_cu()) return as_cu().dim;
  if (is_explicit()) return as_explicit().dim;
  int total = 0;
  for (const auto& f : as_np().factors) total += f.dim();
  return total;
}

const CuSpec& AdjacencySpec::as_cu() const {
  if (!is_cu()) throw error("adjacency is not cu");
  return std::get<CuSpec>(v_);
}

const NpSpec& AdjacencySpec::as_np() const {
  if (!is_np()) throw error("adjacency is not np");
  return std::get<NpSpec>(v_);
}

const ExplicitSpec& AdjacencySpec::as_explicit() const {
  if (!is_explicit()) throw error("adjacency is not explicit");
  return std::get<ExplicitSpec>(v_);
}

bool AdjacencySpec::lattice_evaluable() const {
  if (is_cu()) return true;
  if (is_explicit()) return false;
  for (const auto& f : as_np().factors)
    if (!f.lattice_evaluable()) return false;
  return true;
}

bool AdjacencySpec::operator==(const AdjacencySpec& other) const {
  if (v_.index() != other.v_.index()) return false;
  if (is_cu()) {
    const auto& a = as_cu();
    const auto& b = other.as_cu();
    return a.dim == b.dim && a.u == b.u;
  }
  if (is_explicit()) {
    const auto& a = as_explicit();
    const auto& b = other.as_explicit();
    return a.dim == b.dim && a.edges == b.edges;
  }
  const auto& a = as_np();
  const auto& b = other.as_np();
  if (a.u != b.u || a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (a.factors[i] != b.factors[i]) return false;
  return true;
}

bool cu_adjacent(const Point& x, const Point& y, int n, int u) {
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw error("cu_adjacent: point dimension mismatch");
  if (u < 1 || u > n) throw error("cu_adjacent: u out of range [1, n]");
  int changed = 0;
  for (int i = 0; i < n; ++i) {
    int d = std::abs(x[i] - y[i]);
    if (d == 1) {
      ++changed;
    } else if (d != 0) {
      return false;
    }
  }
  return changed >= 1 && changed <= u;
}

bool adjacent(const Point& x, const Point& y, const AdjacencySpec& spec) {
  const int n = spec.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw error("adjacent: point dimension mismatch");
  if (spec.is_cu()) return cu_adjacent(x, y, n, spec.as_cu().u);
  if (spec.is_explicit()) {
    if (x == y) return false;
    const auto& edges = spec.as_explicit().edges;
    auto e = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
    return edges.count(e) > 0;
  }
  const auto& np = spec.as_np();
  int adjacent_blocks = 0;
  std::size_t offset = 0;
  for (const auto& f : np.factors) {
    const std::size_t d = static_cast<std::size_t>(f.dim());
    Point xb(x.begin() + offset, x.begin() + offset + d);
    Point yb(y.begin() + offset, y.begin() + offset + d);
    offset += d;
    if (xb == yb) continue;
    if (!adjacent(xb, yb, f)) return false;  // block neither equal nor adjacent
    ++adjacent_blocks;
  }
  return adjacent_blocks >= 1 && adjacent_blocks <= np.u;
}

struct DigitalImage::Data {
  PointSet points;
  AdjacencySpec adjacency;
  int dim;
  int denom;
  std::map<Point, std::vector<Point>> neighbors;
  std::vector<std::pair<Point, Point>> edges;

  Data(PointSet pts, AdjacencySpec adj, int dn)
      : points(std::move(pts)), adjacency(std::move(adj)), dim(adjacency.dim()), denom(dn) {}
};

DigitalImage::DigitalImage(PointSet points, AdjacencySpec adjacency, int denom) {
  if (points.empty()) throw error("digital image: point set must be nonempty");
  if (denom < 1) throw error("digital image: denominator must be positive");
  const int n = adjacency.dim();
  for (const Point& p : points)
    if (static_cast<int>(p.size()) != n)
      throw error("digital image: point dimension does not match adjacency dimension");

  auto d = std::make_shared<Data>(std::move(points), std::move(adjacency), denom);
  for (const Point& p : d->points) d->neighbors[p];  // ensure every key exists
  for (auto a = d->points.begin(); a != d->points.end(); ++a) {
    for (auto b = std::next(a); b != d->points.end(); ++b) {
      if (adjacent(*a, *b, d->adjacency)) {
        d->neighbors[*a].push_back(*b);
        d->neighbors[*b].push_back(*a);
        d->edges.emplace_back(*a, *b);
      }
    }
  }
  for (auto& [p, nb] : d->neighbors) std::sort(nb.begin(), nb.end());
  std::sort(d->edges.begin(), d->edges.end());
  d_ = std::move(d);
}

int DigitalImage::dim() const { return d_->dim; }
int DigitalImage::denom() const { return d_->denom; }
std::size_t DigitalImage::size() const { return d_->points.size(); }
const PointSet& DigitalImage::points() const { return d_->points; }
const AdjacencySpec& DigitalImage::adjacency() const { return d_->adjacency; }

bool DigitalImage::contains(const Point& p) const { return d_->points.count(p) > 0; }

const std::vector<Point>& DigitalImage::neighbors(const Point& p) const {
  auto it = d_->neighbors.find(p);
  if (it == d_->neighbors.end()) throw error("neighbors: point not in image");
  return it->second;
}

const std::vector<std::pair<Point, Point>>& DigitalImage::edges() const { return d_->edges; }

bool DigitalImage::operator==(const DigitalImage& other) const {
  if (d_ == other.d_) return true;
  return d_->dim == other.d_->dim && d_->denom == other.d_->denom &&
         d_->adjacency == other.d_->adjacency && d_->points == other.d_->points;
}

PointSet cartesian_points(const std::vector<const PointSet*>& factors) {
  PointSet result;
  Point current;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == factors.size()) {
      result.insert(current);
      return;
    }
    for (const Point& p : *factors[i]) {
      std::size_t mark = current.size();
      current.insert(current.end(), p.begin(), p.end());
      self(self, i + 1);
      current.resize(mark);
    }
  };
  rec(rec, 0);
  return result;
}

DigitalImage product_image(const std::vector<DigitalImage>& factors, int u) {
  if (factors.empty()) throw error("product_image: empty factor list");
  const int v = static_cast<int>(factors.size());
  if (u < 1 || u > v) throw error("product_image: u out of range [1, v]");
  const int denom = factors.front().denom();
  for (const auto& f : factors)
    if (f.denom() != denom) throw error("product_image: mixed denominators");

  std::vector<const PointSet*> sets;
  std::vector<AdjacencySpec> specs;
  sets.reserve(factors.size());
  specs.reserve(factors.size());
  for (const auto& f : factors) {
    sets.push_back(&f.points());
    specs.push_back(f.adjacency());
  }
  if (v == 1) return DigitalImage(factors.front().points(), specs.front(), denom);
  return DigitalImage(cartesian_points(sets), AdjacencySpec::np(u, std::move(specs)), denom);
}

DigitalImage subimage(const DigitalImage& image, const PointSet& points) {
  for (const Point& p : points)
    if (!image.contains(p)) throw error("subimage: point not in image");
  return DigitalImage(points, image.adjacency(), image.denom());
}

bool is_symmetric_origin(const DigitalImage& image) {
  for (const Point& p : image.points())
    if (!image.contains(negate(p))) return false;
  return true;
}

DigitalImage interval(int lo, int hi) {
  if (lo > hi) throw error("interval: empty range");
  PointSet pts;
  for (int z = lo; z <= hi; ++z) pts.insert(Point{z});
  return DigitalImage(std::move(pts), AdjacencySpec::cu(1, 1));
}

DigitalImage box(const std::vector<std::pair<int, int>>& ranges, int u) {
  if (ranges.empty()) throw error("box: needs at least one range");
  PointSet pts;
  Point current;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ranges.size()) {
      pts.insert(current);
      return;
    }
    if (ranges[i].first > ranges[i].second) throw error("box: empty range");
    for (int z = ranges[i].first; z <= ranges[i].second; ++z) {
      current.push_back(z);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return DigitalImage(std::move(pts), AdjacencySpec::cu(static_cast<int>(ranges.size()), u));
}

}  // namespace digitop

#pragma once

#include <map>
#include <memory>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "digitop/errors.hpp"

namespace digitop {

// A lattice point. When it belongs to a subdivided image the entries are
// numerators over the image's shared denominator.
using Point = std::vector<int>;

// std::set gives lexicographic iteration order for free; every enumeration
// in the library walks points in this canonical order.
using PointSet = std::set<Point>;

Point negate(const Point& x);
Point concat_coords(const Point& a, const Point& b);

class AdjacencySpec;

struct CuSpec {
  int dim = 1;
  int u = 1;
};

struct NpSpec {
  int u = 1;
  std::vector<AdjacencySpec> factors;  // block dimensions are the factor dims
};

struct ExplicitSpec {
  int dim = 1;
  std::set<std::pair<Point, Point>> edges;  // normalized so first < second
};

// Declarative adjacency relation: c_u on Z^n, a normal product of factor
// relations, or an explicit edge set.
class AdjacencySpec {
 public:
  static AdjacencySpec cu(int dim, int u);
  static AdjacencySpec np(int u, std::vector<AdjacencySpec> factors);
  static AdjacencySpec explicit_edges(int dim, const std::vector<std::pair<Point, Point>>& edges);

  int dim() const;

  bool is_cu() const { return std::holds_alternative<CuSpec>(v_); }
  bool is_np() const { return std::holds_alternative<NpSpec>(v_); }
  bool is_explicit() const { return std::holds_alternative<ExplicitSpec>(v_); }

  const CuSpec& as_cu() const;
  const NpSpec& as_np() const;
  const ExplicitSpec& as_explicit() const;

  // True when the relation is defined by coordinates alone (c_u, or a normal
  // product of such), so it can be evaluated on arbitrary lattice points and
  // survives subdivision. Explicit edge sets are not.
  bool lattice_evaluable() const;

  bool operator==(const AdjacencySpec& other) const;
  bool operator!=(const AdjacencySpec& other) const { return !(*this == other); }

 private:
  explicit AdjacencySpec(std::variant<CuSpec, NpSpec, ExplicitSpec> v) : v_(std::move(v)) {}
  std::variant<CuSpec, NpSpec, ExplicitSpec> v_;
};

// c_u adjacency on Z^n: at least one and at most u coordinates differ by
// exactly 1, all remaining coordinates agree. Irreflexive.
bool cu_adjacent(const Point& x, const Point& y, int n, int u);

bool adjacent(const Point& x, const Point& y, const AdjacencySpec& spec);

// Finite set of lattice points carrying its own adjacency relation.
// Immutable after construction; copies share state and are cheap. The edge
// and neighbor caches are built eagerly so instances can be shared across
// threads without synchronization.
class DigitalImage {
 public:
  DigitalImage(PointSet points, AdjacencySpec adjacency, int denom = 1);

  int dim() const;
  int denom() const;
  std::size_t size() const;
  const PointSet& points() const;
  const AdjacencySpec& adjacency() const;

  bool contains(const Point& p) const;

  // Points of the image adjacent to p (p itself excluded), in canonical order.
  const std::vector<Point>& neighbors(const Point& p) const;

  // All adjacent pairs {a,b} with a < b, in canonical order.
  const std::vector<std::pair<Point, Point>>& edges() const;

  bool operator==(const DigitalImage& other) const;
  bool operator!=(const DigitalImage& other) const { return !(*this == other); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// Cartesian product with concatenated coordinates and NP_u adjacency over the
// factor specs. All factors must share one denominator.
DigitalImage product_image(const std::vector<DigitalImage>& factors, int u);

// Same adjacency and denominator on a subset of the points.
DigitalImage subimage(const DigitalImage& image, const PointSet& points);

bool is_symmetric_origin(const DigitalImage& image);

// Convenience builders.
DigitalImage interval(int lo, int hi);  // [lo,hi] in Z with c_1
DigitalImage box(const std::vector<std::pair<int, int>>& ranges, int u);

// Cartesian product of point sets, coordinates concatenated.
PointSet cartesian_points(const std::vector<const PointSet*>& factors);

}  // namespace digitop

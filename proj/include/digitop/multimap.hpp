#pragma once

#include <map>
#include <optional>
#include <utility>

#include "digitop/mapcore.hpp"

namespace digitop {

// Total multivalued function: every domain point carries a nonempty set of
// codomain points.
class MultiMap {
 public:
  MultiMap(DigitalImage domain, DigitalImage codomain, std::map<Point, PointSet> table);

  const DigitalImage& domain() const { return domain_; }
  const DigitalImage& codomain() const { return codomain_; }
  const std::map<Point, PointSet>& table() const { return table_; }
  const PointSet& operator()(const Point& x) const;

  bool operator==(const MultiMap& other) const { return table_ == other.table_; }
  bool operator!=(const MultiMap& other) const { return !(*this == other); }

 private:
  DigitalImage domain_;
  DigitalImage codomain_;
  std::map<Point, PointSet> table_;
};

// A single-valued map seen as a multivalued one.
MultiMap as_multimap(const DigitalMap& f);

// Union of the point images over A.
PointSet image_of_set(const MultiMap& f, const PointSet& a);

// Adjacent points have adjacent image sets.
bool has_weak_continuity(const MultiMap& f);

// Additionally every point of either image set is equal-or-adjacent to some
// point of the other.
bool has_strong_continuity(const MultiMap& f);

// Connected point images and adjacent image sets for adjacent points.
bool is_connectivity_preserving(const MultiMap& f);

// Direct formulation: the image of every connected subset is connected.
// Exponential in |domain|; cross-check for small images.
bool is_connectivity_preserving_by_subsets(const MultiMap& f);

// r-th subdivision: each point of X becomes the r^n cell of numerator vectors
// over denominator r, adjacency evaluated on numerators. X must be
// unsubdivided and carry a lattice-evaluable adjacency.
DigitalImage subdivide(const DigitalImage& x, int r);

// The natural collapse S(X,r) -> X, floor-dividing numerators by r.
DigitalMap collapse_map(const DigitalImage& s, const DigitalImage& x);

// The multivalued function induced by f on the base image of f's subdivided
// domain: F(x) = union of f over the cell of x.
MultiMap induce(const DigitalMap& f);

// Composes f with the containment map S(X, r*s) -> S(X, r); the result is
// continuous whenever f is and induces the same multivalued function.
DigitalMap refine(const DigitalMap& f, int s);

// Bounded search for a continuous single-valued witness: for r = 1..r_max,
// look for a continuous f on S(X,r) whose cell unions reproduce F exactly.
// nullopt means no witness up to r_max, which is evidence, not proof of
// discontinuity.
std::optional<std::pair<int, DigitalMap>> is_continuous_multimap(const MultiMap& f, int r_max);

// Cartesian products of value sets between NP_u products.
MultiMap product_multimap(const std::vector<MultiMap>& factors, int u);

enum class MultiContinuityNotion {
  subdivision,             // witness found by is_continuous_multimap
  connectivity_preserving  // the cheaper relaxation
};

struct MultiRetractionOptions {
  MultiContinuityNotion notion = MultiContinuityNotion::subdivision;
  int r_max = 4;
};

// F(a) = {a} on A, codomain points equal to A, and F continuous in the chosen
// sense. Under the subdivision notion a false answer is bounded by r_max.
bool is_multivalued_retraction(const MultiMap& f, const PointSet& a,
                               const MultiRetractionOptions& options = {});

// Additionally F(x) stays inside the Chebyshev unit ball around x off A.
bool is_n_retraction(const MultiMap& f, const PointSet& a,
                     const MultiRetractionOptions& options = {});

}  // namespace digitop

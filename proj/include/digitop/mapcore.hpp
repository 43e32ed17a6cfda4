#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "digitop/lattice.hpp"

namespace digitop {

// Caps on search effort. max_steps counts maps touched by a search (visited
// states in BFS, table assignments in enumeration); exceeding it raises
// budget_error, never a wrong answer. threads > 1 enables parallel frontier
// expansion where supported.
struct SearchBudget {
  std::size_t max_steps = 10'000'000;
  std::size_t max_frames = 0;  // 0 = unlimited homotopy length
  int threads = 1;
};

// Running counter shared by the phases of one search.
class BudgetCounter {
 public:
  explicit BudgetCounter(const SearchBudget& budget) : budget_(budget) {}
  void charge(std::size_t n = 1);
  const SearchBudget& budget() const { return budget_; }

 private:
  SearchBudget budget_;
  std::size_t used_ = 0;
};

// Total single-valued function between two digital images, stored as a table.
// The table must be defined on exactly the domain's points with values in the
// codomain; construction rejects anything else.
class DigitalMap {
 public:
  DigitalMap(DigitalImage domain, DigitalImage codomain, std::map<Point, Point> table);

  const DigitalImage& domain() const { return domain_; }
  const DigitalImage& codomain() const { return codomain_; }
  const std::map<Point, Point>& table() const { return table_; }

  const Point& operator()(const Point& x) const;

  // Values in canonical domain-point order.
  std::vector<Point> values() const;

  // Map equality is table equality.
  bool operator==(const DigitalMap& other) const { return table_ == other.table_; }
  bool operator!=(const DigitalMap& other) const { return !(*this == other); }

 private:
  DigitalImage domain_;
  DigitalImage codomain_;
  std::map<Point, Point> table_;
};

// Adjacent points map to equal or adjacent points.
bool is_continuous(const DigitalMap& f);

// Equivalent formulation: images of connected subsets are connected.
// Exponential in |domain|; used as a cross-check on small images.
bool is_continuous_by_connectivity(const DigitalMap& f);

DigitalMap identity_map(const DigitalImage& image);
DigitalMap constant_map(const DigitalImage& domain, const DigitalImage& codomain, const Point& y);

// g after f. Requires f's codomain points to lie in g's domain with the same
// adjacency.
DigitalMap compose(const DigitalMap& g, const DigitalMap& f);

// Block projection / inclusion for images carrying an NP product adjacency.
DigitalMap projection(const DigitalImage& product, int index);
DigitalMap inclusion(const std::vector<DigitalImage>& factors, int index,
                     const std::vector<Point>& basepoints, int u);

// (x_1,...,x_v) -> (f_1(x_1),...,f_v(x_v)) between NP_u products.
DigitalMap product_map(const std::vector<DigitalMap>& maps, int u);

// Bijective, continuous, with continuous inverse.
bool is_isomorphism(const DigitalMap& f);
std::optional<DigitalMap> inverse_of_isomorphism(const DigitalMap& f);

// r is continuous, its image lies in A, and it fixes A pointwise. A must be
// the codomain's point set, a subset of the domain carrying its adjacency.
bool is_retraction(const DigitalMap& r, const PointSet& a);

// Yields every continuous map X -> Y exactly once, in lexicographic order of
// tables. The visitor returns false to stop; `filter` (when set) screens
// completed maps before they are yielded. A budget counter, when supplied,
// is charged per table-entry assignment.
void enumerate_continuous_maps(const DigitalImage& domain, const DigitalImage& codomain,
                               const std::function<bool(const DigitalMap&)>& visit,
                               const std::function<bool(const DigitalMap&)>& filter = nullptr,
                               BudgetCounter* counter = nullptr);

std::vector<DigitalMap> continuous_maps(const DigitalImage& domain, const DigitalImage& codomain,
                                        BudgetCounter* counter = nullptr);

}  // namespace digitop

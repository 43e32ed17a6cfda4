#pragma once

#include <optional>
#include <vector>

#include "digitop/lattice.hpp"

namespace digitop {

// Connected components of the image, each a point set, ordered by their
// smallest point.
std::vector<PointSet> components(const DigitalImage& image);

bool is_connected(const DigitalImage& image);

// Components / connectedness of a subset of the image's points, under the
// adjacency restricted to that subset. Connectedness of the empty set is
// undefined and errors.
std::vector<PointSet> components_of_subset(const DigitalImage& image, const PointSet& subset);
bool is_connected_subset(const DigitalImage& image, const PointSet& subset);

// Shortest path a -> b by BFS over the image adjacency, or nullopt when the
// endpoints lie in different components. Returns {a} when a == b.
std::optional<std::vector<Point>> find_path(const DigitalImage& image, const Point& a,
                                            const Point& b);

// Two point sets are adjacent when some a in A and b in B are equal or
// adjacent; overlapping sets qualify.
bool sets_adjacent(const PointSet& a, const PointSet& b, const AdjacencySpec& spec);

// N*(x, n): points reachable from x by a path of length <= n. With
// ambient=false the search stays inside the image; with ambient=true it
// ranges over the whole lattice, which is only supported for n <= 1 and
// lattice-evaluable adjacencies.
PointSet neighborhood(const DigitalImage& image, const Point& x, int n, bool ambient = false);

}  // namespace digitop

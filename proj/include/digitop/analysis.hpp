#pragma once

#include <optional>
#include <string>

#include "digitop/multimap.hpp"

namespace digitop {

// Continuous surjection with connected fibers whose adjacent-pair preimages
// are connected. A failed precondition (not continuous / not surjective)
// yields false, with the reason when requested.
bool is_shy(const DigitalMap& f, std::string* reason = nullptr);

bool is_surjective(const DigitalMap& f);

// The inverse y -> f^{-1}(y) of a surjection.
MultiMap inverse_multimap(const DigitalMap& f);

// The four equivalent descriptions of shyness, each evaluated independently.
struct ShyCharacterizations {
  bool fibers_and_pairs;          // connected fibers and adjacent-pair preimages
  bool connected_preimages;       // preimage of every connected subset connected
  bool inverse_cp;                // f^{-1} connectivity preserving
  bool inverse_weak_with_fibers;  // f^{-1} weakly continuous with connected fibers
  bool all_agree() const {
    return fibers_and_pairs == connected_preimages && inverse_cp == fibers_and_pairs &&
           inverse_weak_with_fibers == fibers_and_pairs;
  }
};

ShyCharacterizations shy_characterizations(const DigitalMap& f);

// Points the self-map f moves by at most one adjacency step.
PointSet approximate_fixed_points(const DigitalMap& f);

struct AfppResult {
  bool holds = false;
  std::optional<DigitalMap> counterexample;  // a self-map with no approximate fixed point
};

// Enumerates every continuous self-map of the image.
AfppResult has_afpp(const DigitalImage& image, const SearchBudget& budget = {});

// Some x with f(x) and f(-x) equal or adjacent in the codomain. The domain
// must be symmetric about the origin.
std::optional<Point> bu_witness(const DigitalMap& f,
                                const std::optional<AdjacencySpec>& codomain_spec = std::nullopt);

struct BuResult {
  bool holds = false;
  std::optional<DigitalMap> counterexample;  // a continuous map with no witness
};

// Whether every continuous map from the symmetric image into the box
// [-box_radius, box_radius]^m (with the given adjacency) admits a witness.
// The box is a desk-scale stand-in for the full lattice: a negative answer is
// exact for the box, a positive one is evidence.
BuResult has_bu_property(const DigitalImage& s, int m, int box_radius,
                         const AdjacencySpec& lambda, const SearchBudget& budget = {});

// Continuous surjection whose fibers' unit neighborhoods partition the
// preimage of each unit neighborhood downstairs, each mapped isomorphically.
bool is_covering_map(const DigitalMap& g, std::string* reason = nullptr);

// A covering whose restrictions to radius-n neighborhoods of fiber points are
// isomorphisms. Errors when g is not a covering map.
bool is_radius_n_local_iso(const DigitalMap& g, int n);

}  // namespace digitop

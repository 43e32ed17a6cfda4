#pragma once

#include <optional>
#include <vector>

#include "digitop/mapcore.hpp"

namespace digitop {

// Time-indexed sequence of maps F_0..F_m between one fixed pair of images.
// Construction checks structure only (nonempty, matching images); the
// semantic conditions live in is_valid so that invalid frame data can still
// be represented and tested.
class Homotopy {
 public:
  explicit Homotopy(std::vector<DigitalMap> frames,
                    std::optional<PointSet> fixed_points = std::nullopt);

  const DigitalImage& domain() const;
  const DigitalImage& codomain() const;
  const std::vector<DigitalMap>& frames() const { return frames_; }
  int steps() const { return static_cast<int>(frames_.size()) - 1; }  // m
  const std::optional<PointSet>& fixed_points() const { return fixed_points_; }

  // Every frame continuous, consecutive frames pointwise equal-or-adjacent,
  // and (when set) every fixed point held at its initial value throughout.
  bool is_valid() const;

 private:
  std::vector<DigitalMap> frames_;
  std::optional<PointSet> fixed_points_;
};

// H is a homotopy from f to g: valid, F_0 = f and F_m = g.
bool is_homotopy(const Homotopy& h, const DigitalMap& f, const DigitalMap& g);

// The same data as one map on X x [0,m] carrying NP_1(kappa, c_1), whose
// continuity is equivalent to H being a homotopy.
DigitalMap flatten_np1(const Homotopy& h);

// Exact decision by BFS over the graph of continuous maps X -> Y, where two
// maps are joined when pointwise equal-or-adjacent. Absence is a proof of
// non-homotopy. `fixed` restricts the search to maps agreeing with f there
// (pointed homotopy). Throws budget_error when the budget runs out.
std::optional<Homotopy> are_homotopic(const DigitalMap& f, const DigitalMap& g,
                                      const SearchBudget& budget = {},
                                      const std::optional<PointSet>& fixed = std::nullopt);

// Identity homotopic to some constant map.
bool is_contractible(const DigitalImage& image, const SearchBudget& budget = {});

struct HomotopyEquivalence {
  DigitalMap forward;   // f : X -> Y
  DigitalMap backward;  // g : Y -> X
  Homotopy gf_to_id;    // g o f ~ 1_X
  Homotopy fg_to_id;    // f o g ~ 1_Y
};

// Exhaustive search over continuous map pairs, lexicographic tie-break.
std::optional<HomotopyEquivalence> homotopy_equivalent(const DigitalImage& x,
                                                       const DigitalImage& y,
                                                       const SearchBudget& budget = {});

// Pads every factor to the longest length by repeating its last frame, then
// takes frame-wise product maps on the NP_v products. Pointedness survives:
// when all factors carry fixed points the product fixes their product.
Homotopy product_homotopy(const std::vector<Homotopy>& factors);

// H runs from the identity of X to a retraction of X onto A; the strong
// variant additionally requires every frame to fix A pointwise.
bool is_deformation_retract(const DigitalImage& x, const PointSet& a, const Homotopy& h);
bool is_strong_deformation_retract(const DigitalImage& x, const PointSet& a, const Homotopy& h);

}  // namespace digitop

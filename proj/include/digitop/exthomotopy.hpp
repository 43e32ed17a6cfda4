#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "digitop/homotopy.hpp"
#include "digitop/rational.hpp"

namespace digitop {

// Z-indexed homotopy with finite support: frames for t = -N..N, constant
// outside. On finite images a single global N witnesses every point's
// eventual constancy.
class LongHomotopy {
 public:
  // frames.size() must be 2N+1; frame 0 is t = -N.
  LongHomotopy(std::vector<DigitalMap> frames,
               std::optional<PointSet> fixed_points = std::nullopt);

  int half_width() const { return static_cast<int>(frames_.size() / 2); }  // N
  const std::vector<DigitalMap>& frames() const { return frames_; }
  const DigitalMap& frame_at(int t) const;  // clamped outside [-N, N]
  const DigitalMap& from() const { return frames_.front(); }
  const DigitalMap& to() const { return frames_.back(); }
  const std::optional<PointSet>& fixed_points() const { return fixed_points_; }

  const DigitalImage& domain() const { return frames_.front().domain(); }
  const DigitalImage& codomain() const { return frames_.front().codomain(); }

 private:
  std::vector<DigitalMap> frames_;
  std::optional<PointSet> fixed_points_;
};

bool is_long_homotopy(const LongHomotopy& l);

// N = max of the factor Ns, factors padded at both ends by their terminal
// frames, frame-wise product maps on the NP_v products.
LongHomotopy product_long_homotopy(const std::vector<LongHomotopy>& factors);

// Reindex [-N, N] to [0, 2N] and back; ordinary homotopies of even length
// convert exactly, odd lengths are padded by one repeated terminal frame.
Homotopy to_homotopy(const LongHomotopy& l);
LongHomotopy to_long_homotopy(const Homotopy& h);

// Piecewise-constant path [0,1] -> X. `cuts` are the interior breakpoints
// (strictly increasing, strictly inside (0,1)); interval_values holds the
// constant value on each open subinterval between consecutive members of
// {0, cuts..., 1}; point_values holds the values at 0, at each cut, at 1.
// A change at t = 0 or t = 1 is expressed through the point values, so no
// cut is ever placed at an endpoint.
class RealPath {
 public:
  RealPath(DigitalImage image, std::vector<Rational> cuts, std::vector<Point> interval_values,
           std::vector<Point> point_values);

  const DigitalImage& image() const { return image_; }
  const std::vector<Rational>& cuts() const { return cuts_; }
  const std::vector<Point>& interval_values() const { return interval_values_; }
  const std::vector<Point>& point_values() const { return point_values_; }

 private:
  DigitalImage image_;
  std::vector<Rational> cuts_;
  std::vector<Point> interval_values_;
  std::vector<Point> point_values_;
};

bool is_real_path(const RealPath& p);

// Breakpoints where the flanking constant values differ, plus an endpoint
// whenever its value differs from the adjoining interval value.
std::vector<Rational> jump_points(const RealPath& p);

// Piecewise-constant homotopy X x [0,1] -> Y. Breakpoints include both
// endpoints: 0 = t_0 < ... < t_k = 1, with a frame per open interval and a
// frame per breakpoint.
class RealHomotopy {
 public:
  RealHomotopy(std::vector<Rational> breakpoints, std::vector<DigitalMap> interval_frames,
               std::vector<DigitalMap> breakpoint_frames);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<DigitalMap>& interval_frames() const { return interval_frames_; }
  const std::vector<DigitalMap>& breakpoint_frames() const { return breakpoint_frames_; }

  const DigitalImage& domain() const { return breakpoint_frames_.front().domain(); }
  const DigitalImage& codomain() const { return breakpoint_frames_.front().codomain(); }

  // The per-point trace, a RealPath in the codomain.
  RealPath trace(const Point& x) const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<DigitalMap> interval_frames_;
  std::vector<DigitalMap> breakpoint_frames_;
};

bool is_real_homotopy(const RealHomotopy& r, const DigitalMap& f, const DigitalMap& g);

// Merges the union of the factor breakpoints and takes frame-wise NP_v
// products.
RealHomotopy product_real_homotopy(const std::vector<RealHomotopy>& factors);

// One stage of a homotopic-similarity system: a homotopy equivalence between
// the j-th members of two nested image chains.
struct SimilarityStage {
  DigitalImage x;
  DigitalImage y;
  DigitalMap forward;   // f_j : X_j -> Y_j
  DigitalMap backward;  // g_j : Y_j -> X_j
  Homotopy gf_to_id;
  Homotopy fg_to_id;
};

// Homotopies certifying that the later map restricts to the earlier one:
// f_n|X_m ~ f_m within Y_m and g_n|Y_m ~ g_m within X_m, for m < n.
struct RestrictionWitness {
  Homotopy forward;
  Homotopy backward;
};

// Finite prefix (k stages) of a homotopic-similarity system. Construction
// requires nested chains and a witness for every pair m < n.
class SimilarityPrefix {
 public:
  SimilarityPrefix(std::vector<SimilarityStage> stages,
                   std::map<std::pair<int, int>, RestrictionWitness> restrictions);

  int stage_count() const { return static_cast<int>(stages_.size()); }
  const std::vector<SimilarityStage>& stages() const { return stages_; }
  const std::map<std::pair<int, int>, RestrictionWitness>& restrictions() const {
    return restrictions_;
  }

 private:
  std::vector<SimilarityStage> stages_;
  std::map<std::pair<int, int>, RestrictionWitness> restrictions_;
};

bool verify_similarity_prefix(const SimilarityPrefix& s);

// Stage-wise NP_v products; shorter prefixes are padded by repeating their
// last stage.
SimilarityPrefix product_similarity_prefix(const std::vector<SimilarityPrefix>& factors);

}  // namespace digitop

#include "digitop/exthomotopy.hpp"

#include <algorithm>

namespace digitop {

LongHomotopy::LongHomotopy(std::vector<DigitalMap> frames, std::optional<PointSet> fixed_points)
    : frames_(std::move(frames)), fixed_points_(std::move(fixed_points)) {
  if (frames_.empty() || frames_.size() % 2 == 0)
    throw error("long homotopy: needs 2N+1 frames for t = -N..N");
  for (const auto& fr : frames_)
    if (fr.domain() != frames_.front().domain() || fr.codomain() != frames_.front().codomain())
      throw error("long homotopy: frames must share domain and codomain");
  if (fixed_points_) {
    for (const Point& p : *fixed_points_)
      if (!frames_.front().domain().contains(p))
        throw error("long homotopy: fixed point not in domain");
  }
}

const DigitalMap& LongHomotopy::frame_at(int t) const {
  const int n = half_width();
  const int clamped = std::clamp(t, -n, n);
  return frames_[static_cast<std::size_t>(clamped + n)];
}

bool is_long_homotopy(const LongHomotopy& l) {
  for (const auto& fr : l.frames())
    if (!is_continuous(fr)) return false;
  const AdjacencySpec& lambda = l.codomain().adjacency();
  for (std::size_t t = 0; t + 1 < l.frames().size(); ++t) {
    for (const Point& x : l.domain().points()) {
      const Point& a = l.frames()[t](x);
      const Point& b = l.frames()[t + 1](x);
      if (a != b && !adjacent(a, b, lambda)) return false;
    }
  }
  if (l.fixed_points()) {
    for (const Point& x : *l.fixed_points()) {
      const Point& base = l.from()(x);
      for (const auto& fr : l.frames())
        if (fr(x) != base) return false;
    }
  }
  return true;
}

LongHomotopy product_long_homotopy(const std::vector<LongHomotopy>& factors) {
  if (factors.empty()) throw error("product_long_homotopy: empty factor list");
  if (factors.size() == 1) return factors.front();
  const int u = static_cast<int>(factors.size());
  int n = 0;
  for (const auto& l : factors) n = std::max(n, l.half_width());

  std::vector<DigitalMap> frames;
  for (int t = -n; t <= n; ++t) {
    std::vector<DigitalMap> slice;
    for (const auto& l : factors) slice.push_back(l.frame_at(t));
    frames.push_back(product_map(slice, u));
  }

  std::optional<PointSet> fixed;
  bool all_pointed = true;
  for (const auto& l : factors)
    if (!l.fixed_points()) all_pointed = false;
  if (all_pointed) {
    std::vector<const PointSet*> sets;
    for (const auto& l : factors) sets.push_back(&*l.fixed_points());
    fixed = cartesian_points(sets);
  }
  return LongHomotopy(std::move(frames), std::move(fixed));
}

Homotopy to_homotopy(const LongHomotopy& l) {
  return Homotopy(l.frames(), l.fixed_points());
}

LongHomotopy to_long_homotopy(const Homotopy& h) {
  std::vector<DigitalMap> frames = h.frames();
  if (frames.size() % 2 == 0) frames.push_back(frames.back());
  return LongHomotopy(std::move(frames), h.fixed_points());
}

RealPath::RealPath(DigitalImage image, std::vector<Rational> cuts,
                   std::vector<Point> interval_values, std::vector<Point> point_values)
    : image_(std::move(image)),
      cuts_(std::move(cuts)),
      interval_values_(std::move(interval_values)),
      point_values_(std::move(point_values)) {
  const Rational zero(0, 1), one(1, 1);
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (cuts_[i] <= zero || cuts_[i] >= one)
      throw error("real path: breakpoints must lie strictly inside (0,1)");
    if (i > 0 && !(cuts_[i - 1] < cuts_[i]))
      throw error("real path: breakpoints must be strictly increasing");
  }
  if (interval_values_.size() != cuts_.size() + 1)
    throw error("real path: one value per open subinterval required");
  if (point_values_.size() != cuts_.size() + 2)
    throw error("real path: values at 0, each breakpoint and 1 required");
  for (const Point& p : interval_values_)
    if (!image_.contains(p)) throw error("real path: value not in image");
  for (const Point& p : point_values_)
    if (!image_.contains(p)) throw error("real path: value not in image");
}

bool is_real_path(const RealPath& p) {
  const AdjacencySpec& kappa = p.image().adjacency();
  auto near = [&](const Point& a, const Point& b) { return a == b || adjacent(a, b, kappa); };
  const auto& iv = p.interval_values();
  const auto& pv = p.point_values();
  if (!near(pv.front(), iv.front())) return false;
  if (!near(pv.back(), iv.back())) return false;
  for (std::size_t i = 0; i < p.cuts().size(); ++i) {
    if (!near(iv[i], iv[i + 1])) return false;
    if (pv[i + 1] != iv[i] && pv[i + 1] != iv[i + 1]) return false;
  }
  return true;
}

std::vector<Rational> jump_points(const RealPath& p) {
  std::vector<Rational> jumps;
  const auto& iv = p.interval_values();
  const auto& pv = p.point_values();
  if (pv.front() != iv.front()) jumps.emplace_back(0, 1);
  for (std::size_t i = 0; i < p.cuts().size(); ++i)
    if (iv[i] != iv[i + 1]) jumps.push_back(p.cuts()[i]);
  if (pv.back() != iv.back()) jumps.emplace_back(1, 1);
  return jumps;
}

RealHomotopy::RealHomotopy(std::vector<Rational> breakpoints,
                           std::vector<DigitalMap> interval_frames,
                           std::vector<DigitalMap> breakpoint_frames)
    : breakpoints_(std::move(breakpoints)),
      interval_frames_(std::move(interval_frames)),
      breakpoint_frames_(std::move(breakpoint_frames)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != Rational(0, 1) ||
      breakpoints_.back() != Rational(1, 1))
    throw error("real homotopy: breakpoints must run from 0 to 1");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw error("real homotopy: breakpoints must be strictly increasing");
  if (interval_frames_.size() + 1 != breakpoints_.size())
    throw error("real homotopy: one frame per open interval required");
  if (breakpoint_frames_.size() != breakpoints_.size())
    throw error("real homotopy: one frame per breakpoint required");
  auto check = [&](const DigitalMap& f) {
    if (f.domain() != breakpoint_frames_.front().domain() ||
        f.codomain() != breakpoint_frames_.front().codomain())
      throw error("real homotopy: frames must share domain and codomain");
  };
  for (const auto& f : interval_frames_) check(f);
  for (const auto& f : breakpoint_frames_) check(f);
}

RealPath RealHomotopy::trace(const Point& x) const {
  std::vector<Rational> cuts(breakpoints_.begin() + 1, breakpoints_.end() - 1);
  std::vector<Point> iv, pv;
  for (const auto& f : interval_frames_) iv.push_back(f(x));
  for (const auto& f : breakpoint_frames_) pv.push_back(f(x));
  return RealPath(codomain(), std::move(cuts), std::move(iv), std::move(pv));
}

bool is_real_homotopy(const RealHomotopy& r, const DigitalMap& f, const DigitalMap& g) {
  if (f.domain() != r.domain() || f.codomain() != r.codomain() || g.domain() != r.domain() ||
      g.codomain() != r.codomain())
    throw error("is_real_homotopy: endpoint maps must share the homotopy's images");
  if (r.breakpoint_frames().front() != f || r.breakpoint_frames().back() != g) return false;
  for (const auto& fr : r.interval_frames())
    if (!is_continuous(fr)) return false;
  for (const auto& fr : r.breakpoint_frames())
    if (!is_continuous(fr)) return false;
  for (const Point& x : r.domain().points())
    if (!is_real_path(r.trace(x))) return false;
  return true;
}

RealHomotopy product_real_homotopy(const std::vector<RealHomotopy>& factors) {
  if (factors.empty()) throw error("product_real_homotopy: empty factor list");
  if (factors.size() == 1) return factors.front();
  const int u = static_cast<int>(factors.size());

  std::vector<Rational> merged;
  for (const auto& r : factors)
    merged.insert(merged.end(), r.breakpoints().begin(), r.breakpoints().end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  // Frame of one factor on a merged open interval / at a merged breakpoint.
  auto interval_frame = [](const RealHomotopy& r, const Rational& lo) -> const DigitalMap& {
    const auto& bp = r.breakpoints();
    std::size_t j = 0;
    while (j + 2 < bp.size() && bp[j + 1] <= lo) ++j;
    return r.interval_frames()[j];
  };
  auto point_frame = [&](const RealHomotopy& r, const Rational& t) -> const DigitalMap& {
    const auto& bp = r.breakpoints();
    for (std::size_t j = 0; j < bp.size(); ++j)
      if (bp[j] == t) return r.breakpoint_frames()[j];
    return interval_frame(r, t);  // constant through t
  };

  std::vector<DigitalMap> iv, pv;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    std::vector<DigitalMap> slice;
    for (const auto& r : factors) slice.push_back(interval_frame(r, merged[i]));
    iv.push_back(product_map(slice, u));
  }
  for (const Rational& t : merged) {
    std::vector<DigitalMap> slice;
    for (const auto& r : factors) slice.push_back(point_frame(r, t));
    pv.push_back(product_map(slice, u));
  }
  return RealHomotopy(std::move(merged), std::move(iv), std::move(pv));
}

SimilarityPrefix::SimilarityPrefix(std::vector<SimilarityStage> stages,
                                   std::map<std::pair<int, int>, RestrictionWitness> restrictions)
    : stages_(std::move(stages)), restrictions_(std::move(restrictions)) {
  if (stages_.empty()) throw error("similarity prefix: needs at least one stage");
  for (const auto& st : stages_) {
    if (st.forward.domain() != st.x || st.forward.codomain() != st.y ||
        st.backward.domain() != st.y || st.backward.codomain() != st.x)
      throw error("similarity prefix: stage maps must run between the stage images");
  }
  for (std::size_t j = 0; j + 1 < stages_.size(); ++j) {
    const auto& cur = stages_[j];
    const auto& nxt = stages_[j + 1];
    auto nested = [](const DigitalImage& small, const DigitalImage& big) {
      if (small.adjacency() != big.adjacency() || small.denom() != big.denom()) return false;
      for (const Point& p : small.points())
        if (!big.contains(p)) return false;
      return true;
    };
    if (!nested(cur.x, nxt.x) || !nested(cur.y, nxt.y))
      throw error("similarity prefix: image chains must be nested");
  }
  for (int m = 0; m < static_cast<int>(stages_.size()); ++m)
    for (int n = m + 1; n < static_cast<int>(stages_.size()); ++n)
      if (!restrictions_.count({m, n}))
        throw error("similarity prefix: missing restriction witness");
}

namespace {

// f restricted to a nested domain, landing in a nested codomain; nullopt when
// some value escapes it.
std::optional<DigitalMap> restrict_map(const DigitalMap& f, const DigitalImage& domain,
                                       const DigitalImage& codomain) {
  std::map<Point, Point> table;
  for (const Point& p : domain.points()) {
    const Point& y = f(p);
    if (!codomain.contains(y)) return std::nullopt;
    table[p] = y;
  }
  return DigitalMap(domain, codomain, std::move(table));
}

}  // namespace

bool verify_similarity_prefix(const SimilarityPrefix& s) {
  for (const auto& st : s.stages()) {
    if (!is_continuous(st.forward) || !is_continuous(st.backward)) return false;
    if (!is_homotopy(st.gf_to_id, compose(st.backward, st.forward), identity_map(st.x)))
      return false;
    if (!is_homotopy(st.fg_to_id, compose(st.forward, st.backward), identity_map(st.y)))
      return false;
  }
  for (const auto& [mn, witness] : s.restrictions()) {
    const auto& [m, n] = mn;
    const auto& small = s.stages()[static_cast<std::size_t>(m)];
    const auto& big = s.stages()[static_cast<std::size_t>(n)];
    auto f_res = restrict_map(big.forward, small.x, small.y);
    auto g_res = restrict_map(big.backward, small.y, small.x);
    if (!f_res || !g_res) return false;
    if (!is_homotopy(witness.forward, *f_res, small.forward)) return false;
    if (!is_homotopy(witness.backward, *g_res, small.backward)) return false;
  }
  return true;
}

SimilarityPrefix product_similarity_prefix(const std::vector<SimilarityPrefix>& factors) {
  if (factors.empty()) throw error("product_similarity_prefix: empty factor list");
  if (factors.size() == 1) return factors.front();
  const int u = static_cast<int>(factors.size());
  int k = 0;
  for (const auto& s : factors) k = std::max(k, s.stage_count());

  auto stage_of = [&](const SimilarityPrefix& s, int j) -> const SimilarityStage& {
    return s.stages()[static_cast<std::size_t>(std::min(j, s.stage_count() - 1))];
  };
  // Restriction witness of one factor for padded indices m < n: when both
  // clamp to the same stage the restriction is the map itself, certified by a
  // single constant frame.
  auto witness_of = [&](const SimilarityPrefix& s, int m, int n) -> RestrictionWitness {
    const int mc = std::min(m, s.stage_count() - 1);
    const int nc = std::min(n, s.stage_count() - 1);
    if (mc < nc) return s.restrictions().at({mc, nc});
    const auto& st = stage_of(s, mc);
    return RestrictionWitness{Homotopy({st.forward}), Homotopy({st.backward})};
  };

  std::vector<SimilarityStage> stages;
  for (int j = 0; j < k; ++j) {
    std::vector<DigitalImage> xs, ys;
    std::vector<DigitalMap> fs, gs;
    std::vector<Homotopy> gf, fg;
    for (const auto& s : factors) {
      const auto& st = stage_of(s, j);
      xs.push_back(st.x);
      ys.push_back(st.y);
      fs.push_back(st.forward);
      gs.push_back(st.backward);
      gf.push_back(st.gf_to_id);
      fg.push_back(st.fg_to_id);
    }
    stages.push_back(SimilarityStage{product_image(xs, u), product_image(ys, u),
                                     product_map(fs, u), product_map(gs, u),
                                     product_homotopy(gf), product_homotopy(fg)});
  }

  std::map<std::pair<int, int>, RestrictionWitness> restrictions;
  for (int m = 0; m < k; ++m) {
    for (int n = m + 1; n < k; ++n) {
      std::vector<Homotopy> fw, bw;
      for (const auto& s : factors) {
        RestrictionWitness w = witness_of(s, m, n);
        fw.push_back(std::move(w.forward));
        bw.push_back(std::move(w.backward));
      }
      restrictions.emplace(std::make_pair(m, n),
                           RestrictionWitness{product_homotopy(fw), product_homotopy(bw)});
    }
  }
  return SimilarityPrefix(std::move(stages), std::move(restrictions));
}

}  // namespace digitop

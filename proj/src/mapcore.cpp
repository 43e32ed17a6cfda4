#include "digitop/mapcore.hpp"

#include <algorithm>

#include "digitop/connectivity.hpp"

namespace digitop {

void BudgetCounter::charge(std::size_t n) {
  used_ += n;
  if (used_ > budget_.max_steps)
    throw budget_error("search budget exceeded (" + std::to_string(budget_.max_steps) +
                       " steps)");
}

DigitalMap::DigitalMap(DigitalImage domain, DigitalImage codomain, std::map<Point, Point> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_.size())
    throw error("digital map: table must be defined on exactly the domain points");
  for (const auto& [x, y] : table_) {
    if (!domain_.contains(x)) throw error("digital map: table key not in domain");
    if (!codomain_.contains(y)) throw error("digital map: table value not in codomain");
  }
}

const Point& DigitalMap::operator()(const Point& x) const {
  auto it = table_.find(x);
  if (it == table_.end()) throw error("digital map: point not in domain");
  return it->second;
}

std::vector<Point> DigitalMap::values() const {
  std::vector<Point> v;
  v.reserve(table_.size());
  for (const auto& [x, y] : table_) v.push_back(y);
  return v;
}

bool is_continuous(const DigitalMap& f) {
  for (const auto& [a, b] : f.domain().edges()) {
    const Point& fa = f(a);
    const Point& fb = f(b);
    if (fa != fb && !adjacent(fa, fb, f.codomain().adjacency())) return false;
  }
  return true;
}

bool is_continuous_by_connectivity(const DigitalMap& f) {
  std::vector<Point> pts(f.domain().points().begin(), f.domain().points().end());
  const std::size_t n = pts.size();
  if (n > 20) throw error("is_continuous_by_connectivity: domain too large for subset sweep");
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    PointSet subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.insert(pts[i]);
    if (!is_connected_subset(f.domain(), subset)) continue;
    PointSet image;
    for (const Point& p : subset) image.insert(f(p));
    if (!is_connected_subset(f.codomain(), image)) return false;
  }
  return true;
}

DigitalMap identity_map(const DigitalImage& image) {
  std::map<Point, Point> table;
  for (const Point& p : image.points()) table[p] = p;
  return DigitalMap(image, image, std::move(table));
}

DigitalMap constant_map(const DigitalImage& domain, const DigitalImage& codomain,
                        const Point& y) {
  if (!codomain.contains(y)) throw error("constant_map: value not in codomain");
  std::map<Point, Point> table;
  for (const Point& p : domain.points()) table[p] = y;
  return DigitalMap(domain, codomain, std::move(table));
}

DigitalMap compose(const DigitalMap& g, const DigitalMap& f) {
  if (f.codomain().adjacency() != g.domain().adjacency() ||
      f.codomain().denom() != g.domain().denom())
    throw error("compose: codomain/domain adjacency mismatch");
  for (const Point& p : f.codomain().points())
    if (!g.domain().contains(p)) throw error("compose: codomain not contained in domain");
  std::map<Point, Point> table;
  for (const auto& [x, y] : f.table()) table[x] = g(y);
  return DigitalMap(f.domain(), g.codomain(), std::move(table));
}

namespace {

// Coordinate blocks of an NP product image, with per-block point sets
// obtained by projecting the product's points.
struct BlockInfo {
  std::vector<AdjacencySpec> specs;
  std::vector<std::size_t> offsets;
  std::vector<PointSet> point_sets;
};

BlockInfo split_blocks(const DigitalImage& product) {
  if (!product.adjacency().is_np())
    throw error("projection/inclusion: image does not carry an NP product adjacency");
  BlockInfo info;
  std::size_t offset = 0;
  for (const auto& f : product.adjacency().as_np().factors) {
    info.specs.push_back(f);
    info.offsets.push_back(offset);
    offset += static_cast<std::size_t>(f.dim());
  }
  info.point_sets.resize(info.specs.size());
  for (const Point& p : product.points()) {
    for (std::size_t i = 0; i < info.specs.size(); ++i) {
      const std::size_t d = static_cast<std::size_t>(info.specs[i].dim());
      info.point_sets[i].insert(
          Point(p.begin() + info.offsets[i], p.begin() + info.offsets[i] + d));
    }
  }
  return info;
}

}  // namespace

DigitalMap projection(const DigitalImage& product, int index) {
  BlockInfo info = split_blocks(product);
  if (index < 0 || index >= static_cast<int>(info.specs.size()))
    throw error("projection: block index out of range");
  DigitalImage factor(info.point_sets[index], info.specs[index], product.denom());
  const std::size_t off = info.offsets[index];
  const std::size_t d = static_cast<std::size_t>(info.specs[index].dim());
  std::map<Point, Point> table;
  for (const Point& p : product.points())
    table[p] = Point(p.begin() + off, p.begin() + off + d);
  return DigitalMap(product, factor, std::move(table));
}

DigitalMap inclusion(const std::vector<DigitalImage>& factors, int index,
                     const std::vector<Point>& basepoints, int u) {
  if (factors.empty()) throw error("inclusion: empty factor list");
  if (index < 0 || index >= static_cast<int>(factors.size()))
    throw error("inclusion: block index out of range");
  if (basepoints.size() != factors.size())
    throw error("inclusion: one basepoint per factor required");
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!factors[i].contains(basepoints[i])) throw error("inclusion: basepoint not in factor");
  DigitalImage product = product_image(factors, u);
  std::map<Point, Point> table;
  for (const Point& x : factors[index].points()) {
    Point target;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Point& part = (static_cast<int>(i) == index) ? x : basepoints[i];
      target.insert(target.end(), part.begin(), part.end());
    }
    table[x] = std::move(target);
  }
  return DigitalMap(factors[index], product, std::move(table));
}

DigitalMap product_map(const std::vector<DigitalMap>& maps, int u) {
  if (maps.empty()) throw error("product_map: empty map list");
  std::vector<DigitalImage> domains, codomains;
  for (const auto& f : maps) {
    domains.push_back(f.domain());
    codomains.push_back(f.codomain());
  }
  DigitalImage domain = product_image(domains, u);
  DigitalImage codomain = product_image(codomains, u);
  std::map<Point, Point> table;
  for (const Point& p : domain.points()) {
    Point image;
    std::size_t offset = 0;
    for (const auto& f : maps) {
      const std::size_t d = static_cast<std::size_t>(f.domain().dim());
      Point block(p.begin() + offset, p.begin() + offset + d);
      offset += d;
      const Point& y = f(block);
      image.insert(image.end(), y.begin(), y.end());
    }
    table[p] = std::move(image);
  }
  return DigitalMap(std::move(domain), std::move(codomain), std::move(table));
}

std::optional<DigitalMap> inverse_of_isomorphism(const DigitalMap& f) {
  if (f.domain().size() != f.codomain().size()) return std::nullopt;
  std::map<Point, Point> inverse;
  for (const auto& [x, y] : f.table()) {
    if (!inverse.emplace(y, x).second) return std::nullopt;  // not injective
  }
  if (inverse.size() != f.codomain().size()) return std::nullopt;
  return DigitalMap(f.codomain(), f.domain(), std::move(inverse));
}

bool is_isomorphism(const DigitalMap& f) {
  auto inv = inverse_of_isomorphism(f);
  return inv && is_continuous(f) && is_continuous(*inv);
}

bool is_retraction(const DigitalMap& r, const PointSet& a) {
  if (r.codomain().points() != a) throw error("is_retraction: A must equal the codomain points");
  if (r.codomain().adjacency() != r.domain().adjacency())
    throw error("is_retraction: codomain must carry the domain's adjacency");
  for (const Point& p : a) {
    if (!r.domain().contains(p)) throw error("is_retraction: A not contained in the domain");
    if (r(p) != p) return false;
  }
  return is_continuous(r);
}

void enumerate_continuous_maps(const DigitalImage& domain, const DigitalImage& codomain,
                               const std::function<bool(const DigitalMap&)>& visit,
                               const std::function<bool(const DigitalMap&)>& filter,
                               BudgetCounter* counter) {
  std::vector<Point> pts(domain.points().begin(), domain.points().end());
  std::vector<Point> values(codomain.points().begin(), codomain.points().end());
  const std::size_t n = pts.size();

  // Earlier domain points adjacent to each point; the only continuity
  // constraints a new assignment can violate.
  std::vector<std::vector<std::size_t>> earlier(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (adjacent(pts[i], pts[j], domain.adjacency())) earlier[i].push_back(j);

  std::vector<Point> assigned(n);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == n) {
      std::map<Point, Point> table;
      for (std::size_t k = 0; k < n; ++k) table[pts[k]] = assigned[k];
      DigitalMap f(domain, codomain, std::move(table));
      if (filter && !filter(f)) return;
      if (!visit(f)) stop = true;
      return;
    }
    for (const Point& y : values) {
      if (counter) counter->charge();
      bool ok = true;
      for (std::size_t j : earlier[i]) {
        if (assigned[j] != y && !adjacent(assigned[j], y, codomain.adjacency())) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assigned[i] = y;
      self(self, i + 1);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

std::vector<DigitalMap> continuous_maps(const DigitalImage& domain, const DigitalImage& codomain,
                                        BudgetCounter* counter) {
  std::vector<DigitalMap> out;
  enumerate_continuous_maps(
      domain, codomain,
      [&](const DigitalMap& f) {
        out.push_back(f);
        return true;
      },
      nullptr, counter);
  return out;
}

}  // namespace digitop

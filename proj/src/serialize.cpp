#include "digitop/serialize.hpp"

#include <nlohmann/json.hpp>

#include "digitop/fixtures.hpp"

namespace digitop {

using nlohmann::json;

namespace {

json point_to_json(const Point& p) { return json(p); }

Point point_from_json(const json& j) {
  if (!j.is_array()) throw error("schema: point must be an array of integers");
  return j.get<Point>();
}

json points_to_json(const PointSet& pts) {
  json out = json::array();
  for (const Point& p : pts) out.push_back(point_to_json(p));
  return out;
}

PointSet points_from_json(const json& j) {
  PointSet out;
  for (const auto& e : j) out.insert(point_from_json(e));
  return out;
}

json table_to_json(const std::map<Point, Point>& table) {
  json out = json::array();
  for (const auto& [x, y] : table) out.push_back(json::array({x, y}));
  return out;
}

std::map<Point, Point> table_from_json(const json& j) {
  std::map<Point, Point> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw error("schema: table entry must be [[x],[y]]");
    out[point_from_json(e[0])] = point_from_json(e[1]);
  }
  return out;
}

json rational_to_json(const Rational& r) { return json::array({r.num, r.den}); }

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw error("schema: rational must be [num, den]");
  return Rational(j[0].get<long long>(), j[1].get<long long>());
}

DigitalImage image_or_ref(const json& j) {
  if (j.is_string()) {
    const auto& registry = builtin_images();
    auto it = registry.find(j.get<std::string>());
    if (it == registry.end())
      throw error("schema: unknown image ref '" + j.get<std::string>() + "'");
    return it->second;
  }
  return image_from_json(j);
}

}  // namespace

json to_json(const AdjacencySpec& spec) {
  json out;
  if (spec.is_cu()) {
    out["kind"] = "cu";
    out["u"] = spec.as_cu().u;
  } else if (spec.is_np()) {
    out["kind"] = "np";
    out["u"] = spec.as_np().u;
    json factors = json::array();
    for (const auto& f : spec.as_np().factors) {
      json fj = to_json(f);
      fj["dim"] = f.dim();
      factors.push_back(std::move(fj));
    }
    out["factors"] = std::move(factors);
  } else {
    out["kind"] = "explicit";
    json edges = json::array();
    for (const auto& [a, b] : spec.as_explicit().edges) edges.push_back(json::array({a, b}));
    out["edges"] = std::move(edges);
  }
  return out;
}

AdjacencySpec adjacency_from_json(const json& j, int expected_dim) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cu") return AdjacencySpec::cu(expected_dim, j.at("u").get<int>());
  if (kind == "explicit") {
    std::vector<std::pair<Point, Point>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw error("schema: edge must be [[a],[b]]");
      edges.emplace_back(point_from_json(e[0]), point_from_json(e[1]));
    }
    return AdjacencySpec::explicit_edges(expected_dim, edges);
  }
  if (kind == "np") {
    std::vector<AdjacencySpec> factors;
    int total = 0;
    for (const auto& fj : j.at("factors")) {
      const int d = fj.at("dim").get<int>();
      factors.push_back(adjacency_from_json(fj, d));
      total += d;
    }
    if (total != expected_dim) throw error("schema: np factor dims do not sum to image dim");
    return AdjacencySpec::np(j.at("u").get<int>(), std::move(factors));
  }
  throw error("schema: unknown adjacency kind '" + kind + "'");
}

json to_json(const DigitalImage& image) {
  json out;
  out["dim"] = image.dim();
  out["denom"] = image.denom();
  out["points"] = points_to_json(image.points());
  out["adjacency"] = to_json(image.adjacency());
  return out;
}

DigitalImage image_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  const int denom = j.contains("denom") ? j.at("denom").get<int>() : 1;
  return DigitalImage(points_from_json(j.at("points")),
                      adjacency_from_json(j.at("adjacency"), dim), denom);
}

json to_json(const DigitalMap& f) {
  json out;
  out["domain"] = to_json(f.domain());
  out["codomain"] = to_json(f.codomain());
  out["table"] = table_to_json(f.table());
  return out;
}

DigitalMap map_from_json(const json& j) {
  return DigitalMap(image_or_ref(j.at("domain")), image_or_ref(j.at("codomain")),
                    table_from_json(j.at("table")));
}

json to_json(const MultiMap& f) {
  json out;
  out["domain"] = to_json(f.domain());
  out["codomain"] = to_json(f.codomain());
  json table = json::array();
  for (const auto& [x, ys] : f.table()) table.push_back(json::array({x, points_to_json(ys)}));
  out["table"] = std::move(table);
  return out;
}

MultiMap multimap_from_json(const json& j) {
  DigitalImage domain = image_or_ref(j.at("domain"));
  DigitalImage codomain = image_or_ref(j.at("codomain"));
  std::map<Point, PointSet> table;
  for (const auto& e : j.at("table")) {
    if (!e.is_array() || e.size() != 2) throw error("schema: multimap entry must be [[x],[[y]..]]");
    table[point_from_json(e[0])] = points_from_json(e[1]);
  }
  return MultiMap(std::move(domain), std::move(codomain), std::move(table));
}

json to_json(const Homotopy& h) {
  json out;
  out["domain"] = to_json(h.domain());
  out["codomain"] = to_json(h.codomain());
  json frames = json::array();
  for (const auto& fr : h.frames()) frames.push_back(table_to_json(fr.table()));
  out["frames"] = std::move(frames);
  if (h.fixed_points()) out["fixed_points"] = points_to_json(*h.fixed_points());
  return out;
}

Homotopy homotopy_from_json(const json& j) {
  DigitalImage domain = image_or_ref(j.at("domain"));
  DigitalImage codomain = image_or_ref(j.at("codomain"));
  std::vector<DigitalMap> frames;
  for (const auto& t : j.at("frames"))
    frames.emplace_back(domain, codomain, table_from_json(t));
  std::optional<PointSet> fixed;
  if (j.contains("fixed_points")) fixed = points_from_json(j.at("fixed_points"));
  return Homotopy(std::move(frames), std::move(fixed));
}

json to_json(const RealPath& p) {
  json out;
  out["image"] = to_json(p.image());
  json cuts = json::array();
  for (const auto& c : p.cuts()) cuts.push_back(rational_to_json(c));
  out["breakpoints"] = std::move(cuts);
  json iv = json::array();
  for (const auto& v : p.interval_values()) iv.push_back(point_to_json(v));
  out["interval_values"] = std::move(iv);
  json pv = json::array();
  for (const auto& v : p.point_values()) pv.push_back(point_to_json(v));
  out["point_values"] = std::move(pv);
  return out;
}

RealPath real_path_from_json(const json& j) {
  DigitalImage image = image_or_ref(j.at("image"));
  std::vector<Rational> cuts;
  for (const auto& c : j.at("breakpoints")) cuts.push_back(rational_from_json(c));
  std::vector<Point> iv, pv;
  for (const auto& v : j.at("interval_values")) iv.push_back(point_from_json(v));
  for (const auto& v : j.at("point_values")) pv.push_back(point_from_json(v));
  return RealPath(std::move(image), std::move(cuts), std::move(iv), std::move(pv));
}

json to_json(const RealHomotopy& r) {
  json out;
  out["domain"] = to_json(r.domain());
  out["codomain"] = to_json(r.codomain());
  json bps = json::array();
  for (const auto& b : r.breakpoints()) bps.push_back(rational_to_json(b));
  out["breakpoints"] = std::move(bps);
  json iv = json::array();
  for (const auto& fr : r.interval_frames()) iv.push_back(table_to_json(fr.table()));
  out["interval_frames"] = std::move(iv);
  json pv = json::array();
  for (const auto& fr : r.breakpoint_frames()) pv.push_back(table_to_json(fr.table()));
  out["breakpoint_frames"] = std::move(pv);
  return out;
}

RealHomotopy real_homotopy_from_json(const json& j) {
  DigitalImage domain = image_or_ref(j.at("domain"));
  DigitalImage codomain = image_or_ref(j.at("codomain"));
  std::vector<Rational> bps;
  for (const auto& b : j.at("breakpoints")) bps.push_back(rational_from_json(b));
  std::vector<DigitalMap> iv, pv;
  for (const auto& t : j.at("interval_frames")) iv.emplace_back(domain, codomain, table_from_json(t));
  for (const auto& t : j.at("breakpoint_frames")) pv.emplace_back(domain, codomain, table_from_json(t));
  return RealHomotopy(std::move(bps), std::move(iv), std::move(pv));
}

}  // namespace digitop

#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "digitop/exthomotopy.hpp"
#include "digitop/multimap.hpp"

// JSON schemas:
//   image     { "dim": n, "denom": r, "points": [[ints]...], "adjacency": A }
//   adjacency A = {"kind":"cu","u":u}
//             | {"kind":"np","u":u,"factors":[A + {"dim":d} ...]}
//             | {"kind":"explicit","edges":[[[ints],[ints]]...]}
//   map       { "domain": image|ref, "codomain": image|ref, "table": [[[x],[y]]...] }
//   multimap  { "domain": ..., "codomain": ..., "table": [[[x],[[y]...]]...] }
//   homotopy  { "domain": ..., "codomain": ..., "frames": [table...],
//               "fixed_points": [[x]...]? }
//   realpath  { "image": ..., "breakpoints": [[num,den]...], "interval_values": ...,
//               "point_values": ... }
//   realhomotopy { "domain": ..., "codomain": ..., "breakpoints": [[num,den]...],
//               "interval_frames": [table...], "breakpoint_frames": [table...] }
// A ref is a string naming a built-in image (see fixtures).

namespace digitop {

nlohmann::json to_json(const AdjacencySpec& spec);
nlohmann::json to_json(const DigitalImage& image);
nlohmann::json to_json(const DigitalMap& f);
nlohmann::json to_json(const MultiMap& f);
nlohmann::json to_json(const Homotopy& h);
nlohmann::json to_json(const RealPath& p);
nlohmann::json to_json(const RealHomotopy& r);

AdjacencySpec adjacency_from_json(const nlohmann::json& j, int expected_dim);
DigitalImage image_from_json(const nlohmann::json& j);
DigitalMap map_from_json(const nlohmann::json& j);
MultiMap multimap_from_json(const nlohmann::json& j);
Homotopy homotopy_from_json(const nlohmann::json& j);
RealPath real_path_from_json(const nlohmann::json& j);
RealHomotopy real_homotopy_from_json(const nlohmann::json& j);

}  // namespace digitop

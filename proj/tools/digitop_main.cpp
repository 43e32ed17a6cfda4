#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "digitop/analysis.hpp"
#include "digitop/connectivity.hpp"
#include "digitop/fixtures.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/serialize.hpp"

using json = nlohmann::json;
using namespace digitop;

namespace {

json load_json(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return json::parse(in);
}

struct Output {
  bool as_json = false;
  bool strict = false;
  json report;
  std::ostringstream text;
  // Exit 0 unless --strict demotes a failed property to 1.
  bool property_holds = true;

  int finish() {
    if (as_json) {
      report["holds"] = property_holds;
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
    return (strict && !property_holds) ? 1 : 0;
  }
};

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Point parse_point(const std::string& text) {
  return json::parse(text).get<Point>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digitop: decision procedures for finite digital images"};
  app.require_subcommand(1);

  Output out;
  SearchBudget budget;
  app.add_flag("--json", out.as_json, "emit a machine-readable report");
  app.add_flag("--strict", out.strict, "exit 1 when the checked property fails");
  app.add_option("--budget", budget.max_steps, "search step budget (default 10^7)");
  app.add_option("--threads", budget.threads, "worker threads for homotopy search")
      ->check(CLI::PositiveNumber);

  std::string file_a, file_b, from_text, to_text, notion = "cp";
  int u = 2, r = 2, rmax = 4, m = 1, box_radius = 0, lambda_u = 1, radius = -1;
  std::vector<std::string> files;
  bool run_all = false;

  auto* cmd_components = app.add_subcommand("components", "connected components of an image");
  cmd_components->add_option("image", file_a)->required();

  auto* cmd_path = app.add_subcommand("path", "shortest path between two points");
  cmd_path->add_option("image", file_a)->required();
  cmd_path->add_option("--from", from_text, "start point, e.g. [0,0]")->required();
  cmd_path->add_option("--to", to_text, "end point")->required();

  auto* cmd_product = app.add_subcommand("product", "NP_u product of images");
  cmd_product->add_option("images", files)->required()->expected(-2);
  cmd_product->add_option("--u", u, "adjacency parameter u");

  auto* cmd_cont = app.add_subcommand("check-continuity", "continuity of a map");
  cmd_cont->add_option("map", file_a)->required();

  auto* cmd_iso = app.add_subcommand("check-iso", "isomorphism check");
  cmd_iso->add_option("map", file_a)->required();

  auto* cmd_ret = app.add_subcommand("check-retraction", "retraction onto the codomain subset");
  cmd_ret->add_option("map", file_a)->required();

  auto* cmd_homotopy = app.add_subcommand(
      "check-homotopy", "validate a homotopy, or decide whether two maps are homotopic");
  cmd_homotopy->add_option("input", file_a, "homotopy file, or first map")->required();
  cmd_homotopy->add_option("second", file_b, "second map (switches to the decision mode)");

  auto* cmd_contractible = app.add_subcommand("contractible", "contractibility of an image");
  cmd_contractible->add_option("image", file_a)->required();

  auto* cmd_multi = app.add_subcommand("check-multimap", "multivalued continuity notions");
  cmd_multi->add_option("multimap", file_a)->required();
  cmd_multi->add_option("--notion", notion, "weak | strong | cp | continuous");
  cmd_multi->add_option("--rmax", rmax, "subdivision bound for --notion continuous");

  auto* cmd_subdivide = app.add_subcommand("subdivide", "r-th subdivision of an image");
  cmd_subdivide->add_option("image", file_a)->required();
  cmd_subdivide->add_option("--r", r, "subdivision denominator")->required();

  auto* cmd_shy = app.add_subcommand("check-shy", "shyness of a continuous surjection");
  cmd_shy->add_option("map", file_a)->required();

  auto* cmd_afpp = app.add_subcommand("check-afpp", "approximate fixed point property");
  cmd_afpp->add_option("image", file_a)->required();

  auto* cmd_bu = app.add_subcommand("check-bu", "Borsuk-Ulam property over a finite box");
  cmd_bu->add_option("image", file_a)->required();
  cmd_bu->add_option("--m", m, "codomain dimension")->required();
  cmd_bu->add_option("--box", box_radius, "box radius (default 2x coordinate spread)");
  cmd_bu->add_option("--lambda-u", lambda_u, "u of the codomain c_u adjacency");

  auto* cmd_cover = app.add_subcommand("check-covering", "covering map check");
  cmd_cover->add_option("map", file_a)->required();
  cmd_cover->add_option("--radius", radius, "also require a radius-n local isomorphism");

  auto* cmd_fixtures = app.add_subcommand("fixtures", "built-in fixture library");
  auto* cmd_fix_list = cmd_fixtures->add_subcommand("list", "list fixture names");
  auto* cmd_fix_run = cmd_fixtures->add_subcommand("run", "run fixtures");
  cmd_fix_run->add_option("name", file_a, "fixture name");
  cmd_fix_run->add_flag("--all", run_all, "run every fixture");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_components->parsed()) {
      DigitalImage image = image_from_json(load_json(file_a));
      auto comps = components(image);
      out.report["command"] = "components";
      out.report["count"] = comps.size();
      json list = json::array();
      for (const auto& c : comps) {
        json pts = json::array();
        for (const Point& p : c) pts.push_back(p);
        list.push_back(std::move(pts));
      }
      out.report["components"] = std::move(list);
      out.property_holds = comps.size() == 1;
      out.text << comps.size() << " component(s); connected: " << (comps.size() == 1 ? "yes" : "no")
               << "\n";
    } else if (cmd_path->parsed()) {
      DigitalImage image = image_from_json(load_json(file_a));
      auto path = find_path(image, parse_point(from_text), parse_point(to_text));
      out.report["command"] = "path";
      out.property_holds = path.has_value();
      if (path) {
        json steps = json::array();
        for (const Point& p : *path) steps.push_back(p);
        out.report["path"] = std::move(steps);
        out.text << "path of length " << path->size() - 1 << ":";
        for (const Point& p : *path) out.text << " " << point_str(p);
        out.text << "\n";
      } else {
        out.text << "no path: endpoints lie in different components\n";
      }
    } else if (cmd_product->parsed()) {
      std::vector<DigitalImage> factors;
      for (const auto& f : files) factors.push_back(image_from_json(load_json(f)));
      DigitalImage prod = product_image(factors, u);
      out.report = to_json(prod);
      out.text << to_json(prod).dump(2) << "\n";
    } else if (cmd_cont->parsed()) {
      DigitalMap f = map_from_json(load_json(file_a));
      bool holds = is_continuous(f);
      out.report["command"] = "check-continuity";
      out.property_holds = holds;
      out.text << "continuous: " << (holds ? "yes" : "no") << "\n";
    } else if (cmd_iso->parsed()) {
      DigitalMap f = map_from_json(load_json(file_a));
      bool holds = is_isomorphism(f);
      out.report["command"] = "check-iso";
      out.property_holds = holds;
      out.text << "isomorphism: " << (holds ? "yes" : "no") << "\n";
    } else if (cmd_ret->parsed()) {
      DigitalMap f = map_from_json(load_json(file_a));
      bool holds = is_retraction(f, f.codomain().points());
      out.report["command"] = "check-retraction";
      out.property_holds = holds;
      out.text << "retraction: " << (holds ? "yes" : "no") << "\n";
    } else if (cmd_homotopy->parsed()) {
      out.report["command"] = "check-homotopy";
      if (file_b.empty()) {
        Homotopy h = homotopy_from_json(load_json(file_a));
        bool holds = is_homotopy(h, h.frames().front(), h.frames().back());
        out.property_holds = holds;
        out.report["frames"] = h.frames().size();
        out.text << "valid homotopy (" << h.steps() << " steps): " << (holds ? "yes" : "no")
                 << "\n";
      } else {
        DigitalMap f = map_from_json(load_json(file_a));
        DigitalMap g = map_from_json(load_json(file_b));
        auto h = are_homotopic(f, g, budget);
        out.property_holds = h.has_value();
        if (h) {
          out.report["witness"] = to_json(*h);
          out.text << "homotopic: yes (" << h->steps() << " steps)\n";
        } else {
          out.text << "homotopic: no\n";
        }
      }
    } else if (cmd_contractible->parsed()) {
      DigitalImage image = image_from_json(load_json(file_a));
      bool holds = is_contractible(image, budget);
      out.report["command"] = "contractible";
      out.property_holds = holds;
      out.text << "contractible: " << (holds ? "yes" : "no") << "\n";
    } else if (cmd_multi->parsed()) {
      MultiMap f = multimap_from_json(load_json(file_a));
      out.report["command"] = "check-multimap";
      out.report["notion"] = notion;
      if (notion == "weak") {
        out.property_holds = has_weak_continuity(f);
      } else if (notion == "strong") {
        out.property_holds = has_strong_continuity(f);
      } else if (notion == "cp") {
        out.property_holds = is_connectivity_preserving(f);
      } else if (notion == "continuous") {
        auto witness = is_continuous_multimap(f, rmax);
        out.property_holds = witness.has_value();
        if (witness) {
          out.report["subdivision"] = witness->first;
          out.report["witness"] = to_json(witness->second);
        } else {
          out.report["bound"] = rmax;
        }
      } else {
        throw error("unknown notion '" + notion + "'");
      }
      out.text << notion << ": " << (out.property_holds ? "yes" : "no");
      if (notion == "continuous" && !out.property_holds)
        out.text << " (no witness up to r = " << rmax << ")";
      out.text << "\n";
    } else if (cmd_subdivide->parsed()) {
      DigitalImage image = image_from_json(load_json(file_a));
      DigitalImage s = subdivide(image, r);
      out.report = to_json(s);
      out.text << to_json(s).dump(2) << "\n";
    } else if (cmd_shy->parsed()) {
      DigitalMap f = map_from_json(load_json(file_a));
      std::string why;
      bool holds = is_shy(f, &why);
      out.report["command"] = "check-shy";
      out.property_holds = holds;
      if (!holds) out.report["reason"] = why;
      out.text << "shy: " << (holds ? "yes" : "no");
      if (!holds) out.text << " (" << why << ")";
      out.text << "\n";
    } else if (cmd_afpp->parsed()) {
      DigitalImage image = image_from_json(load_json(file_a));
      auto result = has_afpp(image, budget);
      out.report["command"] = "check-afpp";
      out.property_holds = result.holds;
      out.text << "afpp: " << (result.holds ? "yes" : "no") << "\n";
      if (result.counterexample) {
        out.report["counterexample"] = to_json(*result.counterexample);
        out.text << "counterexample map:";
        for (const auto& [x, y] : result.counterexample->table())
          out.text << " " << point_str(x) << "->" << point_str(y);
        out.text << "\n";
      }
    } else if (cmd_bu->parsed()) {
      DigitalImage image = image_from_json(load_json(file_a));
      if (box_radius <= 0) {
        int spread = 0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(image.dim()); ++i) {
          int lo = 0, hi = 0;
          bool first = true;
          for (const Point& p : image.points()) {
            lo = first ? p[i] : std::min(lo, p[i]);
            hi = first ? p[i] : std::max(hi, p[i]);
            first = false;
          }
          spread = std::max(spread, hi - lo);
        }
        box_radius = std::max(1, 2 * spread);
      }
      auto result = has_bu_property(image, m, box_radius, AdjacencySpec::cu(m, lambda_u), budget);
      out.report["command"] = "check-bu";
      out.report["box_radius"] = box_radius;
      out.property_holds = result.holds;
      out.text << "borsuk-ulam property on [-" << box_radius << "," << box_radius << "]^" << m
               << ": " << (result.holds ? "yes" : "no") << "\n";
      if (result.counterexample) out.report["counterexample"] = to_json(*result.counterexample);
    } else if (cmd_cover->parsed()) {
      DigitalMap g = map_from_json(load_json(file_a));
      std::string why;
      bool holds = is_covering_map(g, &why);
      out.report["command"] = "check-covering";
      out.property_holds = holds;
      if (!holds) out.report["reason"] = why;
      out.text << "covering map: " << (holds ? "yes" : "no");
      if (!holds) out.text << " (" << why << ")";
      out.text << "\n";
      if (holds && radius >= 0) {
        bool local = is_radius_n_local_iso(g, radius);
        out.report["radius"] = radius;
        out.report["radius_local_iso"] = local;
        out.property_holds = out.property_holds && local;
        out.text << "radius-" << radius << " local isomorphism: " << (local ? "yes" : "no")
                 << "\n";
      }
    } else if (cmd_fixtures->parsed()) {
      if (cmd_fix_list->parsed()) {
        json names = json::array();
        for (const auto& n : fixture_names()) {
          names.push_back(n);
          out.text << n << "\n";
        }
        out.report["fixtures"] = std::move(names);
      } else if (cmd_fix_run->parsed()) {
        std::vector<FixtureReport> reports;
        if (run_all) {
          reports = run_all_fixtures();
        } else if (!file_a.empty()) {
          reports.push_back(run_fixture(file_a));
        } else {
          throw error("fixtures run: give a fixture name or --all");
        }
        json all = json::array();
        for (const auto& rep : reports) {
          json checks = json::array();
          out.text << rep.fixture << ": " << (rep.ok() ? "ok" : "MISMATCH") << "\n";
          for (const auto& ch : rep.checks) {
            checks.push_back({{"check", ch.name},
                              {"expected", ch.expected},
                              {"actual", ch.actual}});
            out.text << "  " << ch.name << ": " << (ch.actual ? "yes" : "no")
                     << (ch.ok() ? "" : "  [expected " + std::string(ch.expected ? "yes" : "no") + "]")
                     << "\n";
          }
          all.push_back({{"fixture", rep.fixture}, {"ok", rep.ok()}, {"checks", checks}});
          out.property_holds = out.property_holds && rep.ok();
        }
        out.report["command"] = "fixtures";
        out.report["reports"] = std::move(all);
      } else {
        throw error("fixtures: expected 'list' or 'run'");
      }
    }
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const json::parse_error& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return out.finish();
}

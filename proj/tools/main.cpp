#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphedra/discrepancy.hpp"
#include "sphedra/errors.hpp"
#include "sphedra/ideal.hpp"
#include "sphedra/polyhedron.hpp"
#include "sphedra/search.hpp"
#include "sphedra/xyz_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

std::string format_number(double x) {
  std::ostringstream out;
  out.precision(15);
  out << x;
  return out.str();
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  std::string file;
  bool no_renormalize = false;
  bool as_json = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  std::ifstream in(opt.file);
  if (!in) {
    std::cerr << "cannot open '" << opt.file << "'\n";
    return kExitUsage;
  }
  std::vector<sphedra::Vec3> points = sphedra::read_xyz(in);
  if (!opt.no_renormalize) {
    for (auto& p : points) p = sphedra::UnitPoint(p).vec();
  }
  const sphedra::Polyhedron hull = sphedra::convex_hull(points);
  const sphedra::DiscrepancyReport report =
      sphedra::discrepancy_report(hull, !opt.no_renormalize);

  if (opt.as_json) {
    json j;
    j["vertices"] = report.type.vertex_count;
    j["edges"] = report.type.edge_count;
    j["facets"] = report.type.facet_count;
    j["type"] = sphedra::family_label(report.type);
    j["area"] = report.observed_area;
    j["volume"] = report.observed_volume;
    if (report.ideal_known) {
      j["surface_discrepancy"] = report.surface_discrepancy;
      j["volume_discrepancy"] = report.volume_discrepancy;
    } else {
      j["surface_discrepancy"] = nullptr;
      j["volume_discrepancy"] = nullptr;
    }
    j["ideal_known"] = report.ideal_known;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "vertices: " << report.type.vertex_count << "\n"
            << "edges: " << report.type.edge_count << "\n"
            << "facets: " << report.type.facet_count << "\n"
            << "type: " << sphedra::family_label(report.type) << "\n"
            << "area: " << format_number(report.observed_area) << "\n"
            << "volume: " << format_number(report.observed_volume) << "\n";
  if (report.ideal_known) {
    std::cout << "surface discrepancy: "
              << format_number(report.surface_discrepancy) << "\n"
              << "volume discrepancy: "
              << format_number(report.volume_discrepancy) << "\n";
  } else {
    std::cout << "surface discrepancy: n/a\n"
              << "volume discrepancy: n/a\n";
  }
  std::cout << "ideal known: " << (report.ideal_known ? "yes" : "no") << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// ideal

struct IdealOptions {
  std::string family;
  int v = 5;
  bool as_json = false;
  bool as_xyz = false;
};

int run_ideal_table(const IdealOptions& opt) {
  if (opt.as_xyz) {
    std::cerr << "the table has no xyz form\n";
    return kExitUsage;
  }
  struct Row {
    int v;
    double bound;
    bool known;
    double best;
  };
  std::vector<Row> rows;
  for (int v = 4; v <= 12; ++v) {
    Row row{v, sphedra::g_bound(v), false, 0.0};
    // Maximizers proved to attain their value: the regular simplex, the
    // five-vertex triangular bipyramid, the octahedron, the icosahedron.
    switch (v) {
      case 4:
        row.known = true;
        row.best = sphedra::toth_bound(4, 6, 4);
        break;
      case 5:
        row.known = true;
        row.best = sphedra::bipyramid_max_area(5);
        break;
      case 6:
        row.known = true;
        row.best = sphedra::bipyramid_max_area(6);
        break;
      case 12:
        row.known = true;
        row.best = sphedra::toth_bound(12, 30, 20);
        break;
      default:
        break;
    }
    rows.push_back(row);
  }

  if (opt.as_json) {
    json list = json::array();
    for (const Row& row : rows) {
      json j;
      j["v"] = row.v;
      j["g_bound"] = row.bound;
      if (row.known) {
        j["best_known_area"] = row.best;
      } else {
        j["best_known_area"] = nullptr;
      }
      list.push_back(j);
    }
    std::cout << list.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "v  g_bound            best_known_area\n";
  for (const Row& row : rows) {
    std::cout << row.v << (row.v < 10 ? "  " : " ") << format_number(row.bound);
    if (row.known) {
      std::cout << "  " << format_number(row.best);
    } else {
      std::cout << "  -";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_ideal(const IdealOptions& opt) {
  if (opt.family == "table") return run_ideal_table(opt);

  double height = 0.0;
  double area = 0.0;
  sphedra::Polyhedron poly;
  if (opt.family == "pyramid") {
    height = sphedra::optimal_pyramid_height(opt.v);
    area = sphedra::pyramid_max_area(opt.v);
    poly = sphedra::build_ideal_pyramid(opt.v);
  } else if (opt.family == "bipyramid") {
    height = 1.0;  // profile is symmetric in the cap height and peaks here
    area = sphedra::bipyramid_max_area(opt.v);
    poly = sphedra::build_ideal_bipyramid(opt.v);
  } else {
    std::cerr << "unknown family '" << opt.family
              << "' (expected pyramid, bipyramid or table)\n";
    return kExitUsage;
  }

  if (opt.as_xyz) {
    sphedra::write_xyz(std::cout, poly.vertices);
    return kExitOk;
  }
  if (opt.as_json) {
    json j;
    j["family"] = opt.family;
    j["v"] = opt.v;
    j["height"] = height;
    j["area"] = area;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "family: " << opt.family << "\n"
            << "v: " << opt.v << "\n"
            << "height: " << format_number(height) << "\n"
            << "area: " << format_number(area) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchOptions {
  int v = 5;
  std::string objective = "area";
  int restarts = 100;
  uint64_t seed = 0;
  bool as_json = false;
};

int run_search(const SearchOptions& opt) {
  const sphedra::Objective kind = opt.objective == "volume"
                                      ? sphedra::Objective::kVolume
                                      : sphedra::Objective::kArea;
  const sphedra::SearchResult result =
      sphedra::multi_start(opt.v, kind, opt.restarts, opt.seed);

  const auto points = result.best_config.to_points();
  std::vector<sphedra::Vec3> vertices;
  vertices.reserve(points.size());
  for (const auto& p : points) vertices.push_back(p.vec());
  std::string type = "degenerate";
  if (result.best_value > 0.0) {
    type = sphedra::family_label(sphedra::classify(sphedra::convex_hull(vertices)));
  }

  if (opt.as_json) {
    json j;
    j["v"] = opt.v;
    j["objective"] = opt.objective;
    j["restarts"] = result.restarts_used;
    j["seed"] = opt.seed;
    j["best_value"] = result.best_value;
    j["type"] = type;
    j["converged_fraction"] = result.converged_fraction;
    json verts = json::array();
    for (const auto& p : vertices) verts.push_back({p.x, p.y, p.z});
    j["vertices"] = verts;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "best value: " << format_number(result.best_value) << "\n"
            << "type: " << type << "\n"
            << "converged fraction: "
            << format_number(result.converged_fraction) << "\n"
            << "vertices:\n";
  sphedra::write_xyz(std::cout, vertices);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct, audit and search polyhedra inscribed in the unit sphere"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "report hull counts, type and discrepancies for an xyz file");
  analyze->add_option("file", analyze_opt.file, "xyz input file")->required();
  analyze->add_flag("--no-renormalize", analyze_opt.no_renormalize,
                    "keep raw coordinates; disables discrepancy evaluation");
  analyze->add_flag("--json", analyze_opt.as_json, "emit a json report");

  IdealOptions ideal_opt;
  CLI::App* ideal = app.add_subcommand(
      "ideal", "print a maximal-area polyhedron family or the bounds table");
  ideal->add_option("family", ideal_opt.family,
                    "pyramid, bipyramid or table")->required();
  ideal->add_option("v", ideal_opt.v, "vertex count");
  ideal->add_flag("--json", ideal_opt.as_json, "emit json");
  ideal->add_flag("--xyz", ideal_opt.as_xyz, "emit vertices in xyz format");

  SearchOptions search_opt;
  CLI::App* search = app.add_subcommand(
      "search", "multi-start maximization over inscribed configurations");
  search->add_option("v", search_opt.v, "number of points")->required();
  search->add_option("--objective", search_opt.objective, "area or volume")
      ->check(CLI::IsMember({"area", "volume"}));
  search->add_option("--restarts", search_opt.restarts, "number of restarts")
      ->check(CLI::PositiveNumber);
  search->add_option("--seed", search_opt.seed, "random seed");
  search->add_flag("--json", search_opt.as_json, "emit json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_opt);
    if (ideal->parsed()) return run_ideal(ideal_opt);
    if (search->parsed()) return run_search(search_opt);
  } catch (const sphedra::XyzParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const sphedra::DegenerateInput& e) {
    std::cerr << "degenerate geometry: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const sphedra::DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const sphedra::InvalidCounts& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// crbelt: Beltrami coefficients of strongly pseudoconvex hypersurfaces in C^2.
//
// Subcommands: eval, scan, find-umbilics, winding, transform-check, rossi,
// verify. See README.md for the surface DSL and the catalog file format.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crbelt/beltrami.hpp"
#include "crbelt/catalog.hpp"
#include "crbelt/circular.hpp"
#include "crbelt/ellipse.hpp"
#include "crbelt/errors.hpp"
#include "crbelt/reports.hpp"
#include "crbelt/verification.hpp"
#include "crbelt/winding.hpp"

namespace {

using namespace crbelt;

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotOnSurface = 3;
constexpr int kExitLeviDegenerate = 4;
constexpr int kExitNotCircular = 5;

struct SurfaceFlags {
  std::string fixture_name;
  std::vector<double> params;
  std::string expression;
  std::string catalog_path;
  std::string catalog_label;
};

void add_surface_flags(CLI::App* cmd, SurfaceFlags& flags) {
  cmd->add_option("--fixture", flags.fixture_name,
                  "Built-in surface: sphere, heisenberg, lp, bulge, torus, deformed_sphere");
  cmd->add_option("--param", flags.params, "Fixture parameter(s), e.g. p for lp, eps for torus");
  cmd->add_option("--expr", flags.expression, "Defining expression in the surface DSL");
  cmd->add_option("--catalog", flags.catalog_path, "JSON surface-catalog file");
  cmd->add_option("--surface", flags.catalog_label, "Entry name inside the catalog file");
}

SurfaceSpec to_spec(const SurfaceFlags& flags) {
  if (!flags.catalog_path.empty()) {
    std::ifstream in(flags.catalog_path);
    if (!in) throw BadParams("cannot open catalog file '" + flags.catalog_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_catalog_entry(buffer.str(), flags.catalog_label);
  }
  SurfaceSpec spec;
  spec.fixture_name = flags.fixture_name;
  spec.params = flags.params;
  spec.expression = flags.expression;
  return spec;
}

CPoint parse_point(const std::vector<double>& coords) {
  if (coords.size() != 4)
    throw BadParams("--point takes four reals: Re z1, Im z1, Re z2, Im z2");
  return {Complex(coords[0], coords[1]), Complex(coords[2], coords[3])};
}

void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    if (!payload.empty() && payload.back() != '\n') std::fputc('\n', stdout);
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw BadParams("cannot open output file '" + output_path + "'");
  out << payload;
}

int error_exit(const std::exception& e, int code, const char* kind) {
  nlohmann::ordered_json j;
  j["error"] = {{"kind", kind}, {"message", e.what()}, {"exit_code", code}};
  std::cout << j.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beltrami coefficients, projective-umbilic points and ellipse fields of "
               "strongly pseudoconvex hypersurfaces in C^2"};
  app.require_subcommand(1);

  double on_surface_tol = 1e-4;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  std::string output_path;
  app.add_option("--tolerance", on_surface_tol, "On-surface tolerance |r(p)| for eval")
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for all sampling")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for scans")->capture_default_str();
  app.add_option("--output", output_path, "Write the primary output to this file");

  // eval ------------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("eval", "Beltrami coefficient and classification at a point");
  eval_cmd->fallthrough();
  SurfaceFlags eval_surface;
  add_surface_flags(eval_cmd, eval_surface);
  std::vector<double> point_coords;
  eval_cmd->add_option("--point", point_coords, "Re z1, Im z1, Re z2, Im z2")
      ->required()
      ->delimiter(',');

  // scan ------------------------------------------------------------------
  auto* scan_cmd = app.add_subcommand("scan", "CSV of b over a grid in the zeta chart");
  scan_cmd->fallthrough();
  SurfaceFlags scan_surface;
  add_surface_flags(scan_cmd, scan_surface);
  double scan_halfwidth = 2.0;
  int scan_resolution = 101;
  std::vector<double> scan_center = {0.0, 0.0};
  scan_cmd->add_option("--halfwidth", scan_halfwidth, "Half-width of the square region")
      ->capture_default_str();
  scan_cmd->add_option("--resolution", scan_resolution, "Grid points per side")
      ->capture_default_str();
  scan_cmd->add_option("--center", scan_center, "Region center: Re zeta, Im zeta")
      ->delimiter(',');

  // find-umbilics -----------------------------------------------------------
  auto* find_cmd =
      app.add_subcommand("find-umbilics", "Certified zero cells of b with winding indices");
  find_cmd->fallthrough();
  SurfaceFlags find_surface;
  add_surface_flags(find_cmd, find_surface);
  double find_halfwidth = 4.0;
  double find_min_halfwidth = 1e-2;
  double find_confirm_tol = 1e-5;
  double find_circle_radius = 20.0;
  std::vector<double> find_center = {0.0, 0.0};
  find_cmd->add_option("--halfwidth", find_halfwidth, "Search-square half-width")
      ->capture_default_str();
  find_cmd->add_option("--min-halfwidth", find_min_halfwidth, "Leaf cell half-width")
      ->capture_default_str();
  find_cmd->add_option("--confirm-tol", find_confirm_tol,
                       "Refined |b| at or below this confirms a zero")
      ->capture_default_str();
  find_cmd->add_option("--radius", find_circle_radius, "Large-circle radius")
      ->capture_default_str();
  find_cmd->add_option("--center", find_center, "Search center: Re zeta, Im zeta")
      ->delimiter(',');

  // winding -----------------------------------------------------------------
  auto* winding_cmd = app.add_subcommand("winding", "Winding of b on |zeta| = M");
  winding_cmd->fallthrough();
  SurfaceFlags winding_surface;
  add_surface_flags(winding_cmd, winding_surface);
  double winding_radius = 20.0;
  bool winding_stable = false;
  winding_cmd->add_option("--radius", winding_radius, "Circle radius M")->capture_default_str();
  winding_cmd->add_flag("--stable", winding_stable,
                        "Double M until two consecutive windings agree (enforces the axis "
                        "hypothesis)");

  // transform-check -----------------------------------------------------------
  auto* transform_cmd =
      app.add_subcommand("transform-check", "Projective transformation-law residuals");
  transform_cmd->fallthrough();
  SurfaceFlags transform_surface;
  add_surface_flags(transform_cmd, transform_surface);
  int transform_maps = 20;
  int transform_points = 3;
  transform_cmd->add_option("--maps", transform_maps, "Number of random near-identity maps")
      ->capture_default_str();
  transform_cmd->add_option("--points", transform_points, "Sample points per map")
      ->capture_default_str();

  // rossi -----------------------------------------------------------------
  auto* rossi_cmd = app.add_subcommand("rossi", "Ellipse fields of the Rossi CR structures on S^3");
  rossi_cmd->fallthrough();
  double rossi_t = 0.3;
  int rossi_samples = 200;
  std::vector<double> rossi_point;
  rossi_cmd->add_option("--t", rossi_t, "Structure parameter in (-1, 1)")->capture_default_str();
  rossi_cmd->add_option("--samples", rossi_samples, "Random sphere points to test")
      ->capture_default_str();
  rossi_cmd->add_option("--point", rossi_point,
                        "Single sphere point (Re z1, Im z1, Re z2, Im z2) to report")
      ->delimiter(',');

  // verify -----------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Run the full verification suite");
  verify_cmd->fallthrough();
  std::string verify_only;
  verify_cmd->add_option("--only", verify_only,
                         "Run a single group (vanishing, lp, bulge, torus, defining, transform, "
                         "charts, theorem, rossi, properties)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval_cmd) {
      const Fixture f = resolve_surface(to_spec(eval_surface));
      emit(eval_report_json(f, parse_point(point_coords), on_surface_tol), output_path);
      return 0;
    }
    if (*scan_cmd) {
      const Fixture f = resolve_surface(to_spec(scan_surface));
      const CircularSurface s(f.defining, {.seed = seed});
      if (scan_center.size() != 2) throw BadParams("--center takes two reals");
      const ScanRequest request{Complex(scan_center[0], scan_center[1]), scan_halfwidth,
                                scan_resolution, threads};
      emit(scan_csv(s, request), output_path);
      return 0;
    }
    if (*find_cmd) {
      const Fixture f = resolve_surface(to_spec(find_surface));
      const CircularSurface s(f.defining, {.seed = seed});
      if (find_center.size() != 2) throw BadParams("--center takes two reals");
      const UmbilicSearchRequest request{Complex(find_center[0], find_center[1]), find_halfwidth,
                                         find_min_halfwidth, find_confirm_tol,
                                         find_circle_radius};
      emit(find_umbilics_report_json(s, request), output_path);
      return 0;
    }
    if (*winding_cmd) {
      const Fixture f = resolve_surface(to_spec(winding_surface));
      const CircularSurface s(f.defining, {.seed = seed});
      if (winding_stable) {
        const int w = stable_large_circle_winding(s, winding_radius);
        nlohmann::ordered_json j;
        j["initial_radius"] = winding_radius;
        j["winding"] = w;
        j["stable"] = true;
        emit(j.dump(2), output_path);
      } else {
        emit(winding_report_json(s, winding_radius), output_path);
      }
      return 0;
    }
    if (*transform_cmd) {
      const Fixture f = resolve_surface(to_spec(transform_surface));
      emit(transform_report_json(f, transform_maps, transform_points, seed), output_path);
      return 0;
    }
    if (*rossi_cmd) {
      if (!rossi_point.empty()) {
        const CPoint p = parse_point(rossi_point);
        const EllipseField e = rossi_frame(p, rossi_t);
        nlohmann::ordered_json j;
        j["t"] = rossi_t;
        j["point"] = {{p.z1.real(), p.z1.imag()}, {p.z2.real(), p.z2.imag()}};
        j["axis_ratio"] = e.axis_ratio;
        j["gamma"] = {e.gamma.real(), e.gamma.imag()};
        j["minor_vector"] = {{e.minor_vector[0].real(), e.minor_vector[0].imag()},
                             {e.minor_vector[1].real(), e.minor_vector[1].imag()}};
        emit(j.dump(2), output_path);
      } else {
        emit(rossi_report_json(rossi_t, rossi_samples, seed), output_path);
      }
      return 0;
    }
    if (*verify_cmd) {
      VerifyOptions opts;
      opts.seed = seed;
      opts.only_group = verify_only;
      const auto results = run_verification(opts);
      if (results.empty()) {
        std::cerr << "no checks match group '" << verify_only << "'\n";
        return kExitFailure;
      }
      std::string lines;
      bool all_passed = true;
      int passed = 0;
      for (const CheckResult& r : results) {
        all_passed = all_passed && r.passed;
        passed += r.passed ? 1 : 0;
        lines += std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.group + "/" + r.name +
                 " (criterion " + std::to_string(r.criterion) + "): " + r.detail + "\n";
      }
      lines += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
      emit(lines, output_path);
      return all_passed ? 0 : kExitFailure;
    }
  } catch (const ParseError& e) {
    return error_exit(e, kExitParse, "parse_error");
  } catch (const NotOnSurface& e) {
    return error_exit(e, kExitNotOnSurface, "not_on_surface");
  } catch (const LeviDegenerate& e) {
    return error_exit(e, kExitLeviDegenerate, "levi_degenerate");
  } catch (const NotCircular& e) {
    return error_exit(e, kExitNotCircular, "not_circular");
  } catch (const NoCrossing& e) {
    return error_exit(e, kExitNotCircular, "no_crossing");
  } catch (const Error& e) {
    return error_exit(e, kExitFailure, "error");
  } catch (const std::exception& e) {
    return error_exit(e, kExitFailure, "internal_error");
  }
  return kExitFailure;
}

#pragma once

#include <string>
#include <vector>

#include "crbelt/catalog.hpp"
#include "crbelt/circular.hpp"
#include "crbelt/types.hpp"

namespace crbelt {

/// Surface selection shared by the CLI subcommands: a named fixture with
/// parameters, or a raw defining expression.
struct SurfaceSpec {
  std::string fixture_name;
  std::vector<double> params;
  std::string expression;
};

Fixture resolve_surface(const SurfaceSpec& spec);

/// Reads one entry of a JSON surface catalog (an array of
/// {"name": ..., "params": [...]} or {"name": optional, "expression": ...}).
/// An empty label selects the only entry.
SurfaceSpec load_catalog_entry(const std::string& json_text, const std::string& label);

struct ScanRequest {
  Complex center{};
  double halfwidth = 2.0;
  int resolution = 101;
  int threads = 1;
};

/// "re_zeta,im_zeta,re_b,im_b,abs_b" rows over the chart grid, row-major
/// with Im increasing over rows and Re over columns; 17-significant-digit
/// formatting; inadmissible grid points emit nan. Deterministic for any
/// thread count.
std::string scan_csv(const CircularSurface& surface, const ScanRequest& request);

/// BeltramiValue + PointClassification with stable field order.
std::string eval_report_json(const Fixture& f, const CPoint& p,
                             double on_surface_tol = tol::kOnSurface);

std::string winding_report_json(const CircularSurface& s, double radius);

struct UmbilicSearchRequest {
  Complex center{};
  double halfwidth = 4.0;
  double min_halfwidth = 1e-2;
  double confirm_tol = 1e-5;       // refined |b| at or below this confirms a zero
  double large_circle_radius = 20.0;
};

/// Zero-cell report: localized cells with refined zeros, index sum, Stokes
/// consistency, the axis-umbilic hypothesis and the large-circle winding.
/// Cells whose refined coefficient stays above confirm_tol are reported as
/// rejected (phase vortices without zeros) with a warning.
std::string find_umbilics_report_json(const CircularSurface& s, const UmbilicSearchRequest& req);

std::string rossi_report_json(double t, int samples, std::uint64_t seed = kDefaultSeed);

std::string transform_report_json(const Fixture& f, int random_maps, int points_per_map,
                                  std::uint64_t seed = kDefaultSeed);

}  // namespace crbelt

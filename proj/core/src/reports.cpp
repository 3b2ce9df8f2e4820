#include "crbelt/reports.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <thread>

#include <json.hpp>

#include "crbelt/beltrami.hpp"
#include "crbelt/ellipse.hpp"
#include "crbelt/errors.hpp"
#include "crbelt/projective.hpp"
#include "crbelt/winding.hpp"

namespace crbelt {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ordered_json complex_json(Complex v) { return ordered_json::array({v.real(), v.imag()}); }

}  // namespace

Fixture resolve_surface(const SurfaceSpec& spec) {
  if (!spec.expression.empty()) {
    Fixture f;
    f.name = spec.fixture_name.empty() ? "expression" : spec.fixture_name;
    f.defining = parse(spec.expression);
    f.jets = std::make_shared<JetEvaluator>(f.defining);
    f.admissible = [](const CPoint&) { return true; };
    // Generic expressions get the chart sampler; it requires complete
    // circularity, which CircularSurface verifies when needed.
    auto jets = f.jets;
    f.sampler = [jets](std::mt19937_64& rng) -> CPoint {
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const Complex zeta =
          std::polar(std::exp(-1.2 + 2.4 * unit(rng)), 2.0 * std::numbers::pi * unit(rng));
      const double s = ray_crossing(*jets, {zeta, Complex(1.0)});
      return {zeta * s, Complex(s)};
    };
    return f;
  }
  if (spec.fixture_name.empty())
    throw BadParams("no surface given: pass a fixture name or an expression");
  return fixture(spec.fixture_name, spec.params);
}

SurfaceSpec load_catalog_entry(const std::string& json_text, const std::string& label) {
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_array() || doc.empty())
    throw BadParams("surface catalog must be a non-empty JSON array");
  const auto to_spec = [](const nlohmann::json& entry) {
    SurfaceSpec spec;
    if (entry.contains("name")) spec.fixture_name = entry["name"].get<std::string>();
    // An explicit "fixture" key lets an entry carry a label distinct from the
    // fixture it instantiates.
    if (entry.contains("fixture")) spec.fixture_name = entry["fixture"].get<std::string>();
    if (entry.contains("expression")) spec.expression = entry["expression"].get<std::string>();
    if (entry.contains("params"))
      for (const auto& v : entry["params"]) spec.params.push_back(v.get<double>());
    return spec;
  };
  if (label.empty()) {
    if (doc.size() != 1)
      throw BadParams("catalog has several entries: select one with --surface");
    return to_spec(doc[0]);
  }
  for (const auto& entry : doc)
    if (entry.contains("name") && entry["name"].get<std::string>() == label)
      return to_spec(entry);
  throw BadParams("no catalog entry named '" + label + "'");
}

std::string scan_csv(const CircularSurface& surface, const ScanRequest& request) {
  if (request.resolution < 2) throw BadParams("scan resolution must be at least 2");
  const int n = request.resolution;
  const double h = request.halfwidth;
  const auto grid_point = [&](int row, int col) -> Complex {
    return request.center + Complex(-h + 2.0 * h * col / (n - 1), -h + 2.0 * h * row / (n - 1));
  };

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<Complex> values(static_cast<std::size_t>(n) * n, Complex(nan, nan));
  const int threads = std::max(1, request.threads);
  const auto worker = [&](int first_row, int last_row) {
    for (int row = first_row; row < last_row; ++row)
      for (int col = 0; col < n; ++col) {
        try {
          values[static_cast<std::size_t>(row) * n + col] = surface.b_chart(grid_point(row, col));
        } catch (const Error&) {
          // sentinel stays nan
        }
      }
  };
  if (threads == 1) {
    worker(0, n);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int first = t * chunk;
      const int last = std::min(n, first + chunk);
      if (first < last) pool.emplace_back(worker, first, last);
    }
    for (auto& th : pool) th.join();
  }

  std::string out = "re_zeta,im_zeta,re_b,im_b,abs_b\n";
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      const Complex zeta = grid_point(row, col);
      const Complex b = values[static_cast<std::size_t>(row) * n + col];
      out += fmt17(zeta.real());
      out += ',';
      out += fmt17(zeta.imag());
      out += ',';
      out += fmt17(b.real());
      out += ',';
      out += fmt17(b.imag());
      out += ',';
      out += fmt17(std::abs(b));
      out += '\n';
    }
  return out;
}

std::string eval_report_json(const Fixture& f, const CPoint& p, double on_surface_tol) {
  const BeltramiValue value = beltrami_coeff(*f.jets, p, on_surface_tol);
  const PointClassification cls = classify(value);
  ordered_json j;
  j["surface"] = f.name;
  j["point"] = {complex_json(p.z1), complex_json(p.z2)};
  j["coeff"] = complex_json(value.coeff);
  j["numerator"] = complex_json(value.numerator);
  j["denominator"] = complex_json(value.denominator);
  j["beta"] = cls.beta;
  j["contact_order"] = cls.contact_order == ContactOrder::AtLeast3 ? "at_least_3" : "exactly_2";
  j["projective_umbilic"] = cls.contact_order == ContactOrder::AtLeast3;
  j["strongly_c_convex_here"] = cls.strongly_c_convex_here;
  return j.dump(2);
}

std::string winding_report_json(const CircularSurface& s, double radius) {
  const LargeCircleWinding w = large_circle_winding(s, radius);
  ordered_json j;
  j["radius"] = radius;
  j["winding"] = w.winding;
  if (std::isnan(w.axis_coeff_mag)) {
    j["axis_coeff_mag"] = nullptr;
  } else {
    j["axis_coeff_mag"] = w.axis_coeff_mag;
  }
  j["axis_hypothesis"] = w.axis_hypothesis;
  return j.dump(2);
}

std::string find_umbilics_report_json(const CircularSurface& s, const UmbilicSearchRequest& req) {
  ordered_json j;
  j["region"] = {{"center", complex_json(req.center)},
                 {"halfwidth", req.halfwidth},
                 {"min_halfwidth", req.min_halfwidth}};
  std::vector<std::string> warnings;

  // Axis coefficients: b(0) covers the z2-axis, b~(0) the z1-axis.
  ordered_json axis;
  try {
    const Complex b0 = s.b_chart(Complex(0.0));
    axis["finite_chart"] = complex_json(b0);
    if (std::abs(b0) <= tol::kUmbilic)
      warnings.push_back("projective-umbilic along the z2-axis (b(0) = 0)");
  } catch (const Error& e) {
    axis["finite_chart"] = nullptr;
    warnings.push_back(std::string("finite-chart axis value unavailable: ") + e.what());
  }
  bool axis_hypothesis = false;
  try {
    const Complex bt0 = s.b_chart_infinity(Complex(0.0));
    axis["infinity_chart"] = complex_json(bt0);
    axis_hypothesis = std::abs(bt0) > tol::kUmbilic;
    if (!axis_hypothesis)
      warnings.push_back(
          "projective-umbilic along the z1-axis (b~(0) = 0): large-circle asymptotics "
          "do not apply");
  } catch (const Error& e) {
    axis["infinity_chart"] = nullptr;
    warnings.push_back(std::string("infinity-chart axis value unavailable: ") + e.what());
  }
  axis["axis_hypothesis"] = axis_hypothesis;
  j["axis"] = axis;

  const SearchRegion region{req.center, req.halfwidth};
  const std::vector<ZeroCell> cells = locate_zero_cells(s, region, req.min_halfwidth);
  int index_sum = 0;
  ordered_json confirmed = ordered_json::array();
  ordered_json rejected = ordered_json::array();
  for (const ZeroCell& cell : cells) {
    index_sum += cell.index;
    const Complex zero = refine_zero(s, cell);
    double refined_abs = std::numeric_limits<double>::infinity();
    try {
      refined_abs = std::abs(s.b_chart(zero));
    } catch (const Error&) {
    }
    ordered_json entry;
    entry["cell"] = ordered_json::parse(to_json(cell));
    entry["refined_zero"] = complex_json(zero);
    entry["refined_abs_b"] = refined_abs;
    if (refined_abs <= req.confirm_tol) {
      confirmed.push_back(entry);
    } else {
      rejected.push_back(entry);
    }
  }
  if (!rejected.empty())
    warnings.push_back(
        "coefficient winds without vanishing in some cells: surface is likely not smooth "
        "or not strongly pseudoconvex there");

  const int outer =
      winding_number([&s](Complex z) { return s.b_chart(z); },
                     Contour::rect_boundary(req.center, req.halfwidth));
  j["outer_winding"] = outer;
  j["index_sum"] = index_sum;
  j["stokes_consistent"] = index_sum == outer;
  j["cells"] = confirmed;
  j["rejected_cells"] = rejected;

  try {
    const LargeCircleWinding lcw = large_circle_winding(s, req.large_circle_radius);
    j["large_circle"] = {{"radius", req.large_circle_radius}, {"winding", lcw.winding}};
  } catch (const Error& e) {
    j["large_circle"] = nullptr;
    warnings.push_back(std::string("large-circle winding unavailable: ") + e.what());
  }
  j["warnings"] = warnings;
  return j.dump(2);
}

std::string rossi_report_json(double t, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const double expected_ratio = (1.0 + std::abs(t)) / (1.0 - std::abs(t));
  double max_ratio_dev = 0.0, max_dir_dev = 0.0;
  for (int k = 0; k < samples; ++k) {
    CPoint p;
    if (k % 4 == 0) {
      // Degenerate locus for f: both coordinates real multiples of each other.
      const double u = 2.0 * std::numbers::pi * (k + 1.0) / samples;
      const Complex phase = std::polar(1.0, gauss(rng));
      p = {std::cos(u) * phase, std::sin(u) * phase};
    } else {
      const Complex a{gauss(rng), gauss(rng)}, b{gauss(rng), gauss(rng)};
      const double n = std::sqrt(std::norm(a) + std::norm(b));
      p = {a / n, b / n};
    }
    const EllipseField e = rossi_frame(p, t);
    max_ratio_dev = std::max(max_ratio_dev, std::abs(e.axis_ratio - expected_ratio));
    if (t == 0.0) continue;  // circles carry no distinguished direction
    // Expected minor field gamma*(z2b, -z1b) with gamma = i for t > 0 and
    // gamma = 1 for t < 0, up to real scale; both vectors are unit, so the
    // hermitian inner product must be +-1.
    const Complex gamma_expected = t > 0.0 ? Complex(0, 1) : Complex(1, 0);
    const std::array<Complex, 2> w = {gamma_expected * std::conj(p.z2),
                                      -gamma_expected * std::conj(p.z1)};
    const Complex inner =
        e.minor_vector[0] * std::conj(w[0]) + e.minor_vector[1] * std::conj(w[1]);
    max_dir_dev =
        std::max(max_dir_dev, std::min(std::abs(inner - 1.0), std::abs(inner + 1.0)));
  }
  ordered_json j;
  j["t"] = t;
  j["samples"] = samples;
  j["expected_axis_ratio"] = expected_ratio;
  j["max_ratio_deviation"] = max_ratio_dev;
  j["max_direction_deviation"] = max_dir_dev;
  return j.dump(2);
}

std::string transform_report_json(const Fixture& f, int random_maps, int points_per_map,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-0.05, 0.05);
  double max_residual = 0.0;
  int checks = 0;
  for (int m = 0; m < random_maps; ++m) {
    std::array<Complex, 9> entries;
    for (int k = 0; k < 9; ++k) {
      const double base = (k == 0 || k == 4 || k == 8) ? 1.0 : 0.0;
      entries[k] = Complex(base + noise(rng), noise(rng));
    }
    const ProjectiveMap map(entries);
    for (int p = 0; p < points_per_map; ++p) {
      const CPoint z = f.sampler(rng);
      if (!f.admissible(z)) continue;
      max_residual = std::max(max_residual, check_transformation_law(map, f.defining, z));
      ++checks;
    }
  }
  ordered_json j;
  j["surface"] = f.name;
  j["random_maps"] = random_maps;
  j["checks"] = checks;
  j["max_residual"] = max_residual;
  j["tolerance"] = tol::kTransformLaw;
  return j.dump(2);
}

}  // namespace crbelt

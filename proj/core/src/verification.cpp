#include "crbelt/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "crbelt/beltrami.hpp"
#include "crbelt/catalog.hpp"
#include "crbelt/circular.hpp"
#include "crbelt/ellipse.hpp"
#include "crbelt/errors.hpp"
#include "crbelt/projective.hpp"
#include "crbelt/reports.hpp"
#include "crbelt/winding.hpp"

namespace crbelt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<CPoint> sample_points(const Fixture& f, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CPoint> out;
  while (static_cast<int>(out.size()) < n) {
    const CPoint p = f.sampler(rng);
    if (f.admissible(p)) out.push_back(p);
  }
  return out;
}

Complex annulus_sample(std::mt19937_64& rng) {
  return std::polar(std::exp(uniform(rng, std::log(0.2), std::log(5.0))),
                    uniform(rng, 0.0, kTwoPi));
}

using CheckBody = std::function<std::pair<bool, std::string>(const VerifyOptions&)>;

struct Check {
  int criterion;
  std::string group;
  std::string name;
  CheckBody body;
};

// --- criterion 1 --------------------------------------------------------

std::pair<bool, std::string> vanishing_check(const std::string& fixture_name,
                                             const VerifyOptions& opts) {
  const Fixture f = fixture(fixture_name);
  double worst = 0.0;
  for (const CPoint& p : sample_points(f, 200, opts.seed))
    worst = std::max(worst, std::abs(beltrami_coeff(*f.jets, p).coeff));
  return {worst <= 1e-10, "max|b| = " + fmt(worst) + " (limit 1e-10)"};
}

// --- criterion 2 --------------------------------------------------------

std::pair<bool, std::string> lp_check(double p_exp, const VerifyOptions& opts) {
  const Fixture f = fixture("lp", {p_exp});
  double worst_dev = 0.0;
  double min_mag = 1e300;
  for (const CPoint& p : sample_points(f, 200, opts.seed)) {
    const Complex b = beltrami_coeff(*f.jets, p).coeff;
    worst_dev = std::max(worst_dev, std::abs(b - f.closed_form_b(p)));
    min_mag = std::min(min_mag, std::abs(b));
  }
  const double lower = std::abs(2.0 - p_exp) / p_exp - 1e-8;
  const bool ok = worst_dev <= 1e-8 && min_mag >= lower;
  return {ok, "max dev = " + fmt(worst_dev) + " (limit 1e-8), min|b| = " + fmt(min_mag) +
                  " (floor " + fmt(lower) + ")"};
}

// --- criterion 3 --------------------------------------------------------

std::pair<bool, std::string> bulge_closed_form(const VerifyOptions& opts) {
  const FixtureReport r = verify_fixture(fixture("bulge"), 200, opts.seed);
  return {r.max_deviation <= 1e-8, "max dev = " + fmt(r.max_deviation) + " (limit 1e-8)"};
}

std::pair<bool, std::string> bulge_zero_cells(const VerifyOptions&) {
  const CircularSurface s(fixture("bulge").defining);
  const auto cells = locate_zero_cells(s, {Complex(0.0), 0.5}, 1e-3);
  if (cells.empty()) return {false, "no cells found"};
  int sum = 0;
  double worst_center = 0.0, worst_zero = 0.0;
  for (const ZeroCell& c : cells) {
    sum += c.index;
    worst_center = std::max(worst_center, std::abs(c.center));
    worst_zero = std::max(worst_zero, std::abs(refine_zero(s, c)));
  }
  const bool ok = sum == -2 && worst_center <= 0.01 && worst_zero <= 1e-3;
  return {ok, "index sum = " + std::to_string(sum) + " (want -2), cells at |zeta| <= " +
                  fmt(worst_center) + ", refined zero |zeta| = " + fmt(worst_zero)};
}

std::pair<bool, std::string> bulge_contact(bool z1_axis, const VerifyOptions&) {
  const ContactReport r = fourth_order_contact_check();
  const double slope = z1_axis ? r.slope_z1_axis : r.slope_z2_axis;
  const bool ok = slope >= 3.8 && slope <= 4.2 && r.sphere_self_gap <= 1e-12;
  return {ok, "log-log slope = " + fmt(slope) + " (window [3.8, 4.2]), sphere self-gap = " +
                  fmt(r.sphere_self_gap)};
}

// --- criterion 4 --------------------------------------------------------

std::pair<bool, std::string> torus_closed_form(const VerifyOptions& opts) {
  const double eps = 0.01;
  const Fixture f = fixture("torus", {eps});
  double worst_dev = 0.0, min_mag = 1e300;
  for (const CPoint& p : sample_points(f, 200, opts.seed)) {
    const Complex b = beltrami_coeff(*f.jets, p).coeff;
    worst_dev = std::max(worst_dev, std::abs(b - f.closed_form_b(p)));
    min_mag = std::min(min_mag, std::abs(b));
  }
  const bool ok = worst_dev <= 5.0 * eps && min_mag >= 0.9;
  return {ok, "max|b - closed form| = " + fmt(worst_dev) + " (limit " + fmt(5.0 * eps) +
                  "), min|b| = " + fmt(min_mag) + " (floor 0.9)"};
}

std::pair<bool, std::string> torus_c_convexity(const VerifyOptions& opts) {
  const double eps = 0.01;
  const Fixture f = fixture("torus", {eps});
  double max_mag = 0.0;
  for (const CPoint& p : sample_points(f, 200, opts.seed))
    max_mag = std::max(max_mag, std::abs(beltrami_coeff(*f.jets, p).coeff));
  // The explicit point (e^eps, 1) carries |b| = 1 exactly.
  const CPoint edge{Complex(std::exp(eps)), Complex(1.0)};
  const PointClassification cls = classify_point(*f.jets, edge);
  max_mag = std::max(max_mag, cls.beta);
  const bool ok = max_mag >= 1.0 - 10.0 * eps && !cls.strongly_c_convex_here;
  return {ok, "max|b| = " + fmt(max_mag) + " (needs >= " + fmt(1.0 - 10.0 * eps) +
                  "), c-convexity at (e^eps, 1): " +
                  (cls.strongly_c_convex_here ? "holds (unexpected)" : "fails as expected")};
}

// --- criterion 5 --------------------------------------------------------

std::pair<bool, std::string> eta_independence(const std::string& eta_src,
                                              const VerifyOptions& opts) {
  const ExprPtr eta = parse(eta_src);
  double worst = 0.0;
  for (const auto& name : std::vector<std::string>{"sphere", "heisenberg", "lp", "bulge",
                                                   "torus", "deformed_sphere"}) {
    std::vector<double> params;
    if (name == "lp") params = {4.0};
    if (name == "torus") params = {0.01};
    if (name == "deformed_sphere") params = {0.05};
    const Fixture f = fixture(name, params);
    for (const CPoint& p : sample_points(f, 15, opts.seed)) {
      const double base = std::abs(beltrami_coeff(*f.jets, p).coeff);
      const double dev = rescaling_invariance_check(f.defining, eta, p);
      worst = std::max(worst, dev / (1.0 + base));
    }
  }
  return {worst <= 1e-9, "max normalized deviation = " + fmt(worst) + " (limit 1e-9)"};
}

// --- criterion 6 --------------------------------------------------------

std::pair<bool, std::string> transform_random(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  double worst = 0.0;
  std::string worst_at;
  for (const auto& name : std::vector<std::string>{"sphere", "heisenberg", "lp", "bulge",
                                                   "torus", "deformed_sphere"}) {
    std::vector<double> params;
    if (name == "lp") params = {4.0};
    if (name == "torus") params = {0.01};
    if (name == "deformed_sphere") params = {0.05};
    const Fixture f = fixture(name, params);
    for (int m = 0; m < 50; ++m) {
      std::array<Complex, 9> entries;
      for (int k = 0; k < 9; ++k) {
        const double base = (k == 0 || k == 4 || k == 8) ? 1.0 : 0.0;
        entries[k] = Complex(base + uniform(rng, -0.05, 0.05), uniform(rng, -0.05, 0.05));
      }
      const ProjectiveMap map(entries);
      CPoint p = f.sampler(rng);
      while (!f.admissible(p)) p = f.sampler(rng);
      const double base_mag = std::abs(beltrami_coeff(*f.jets, p).coeff);
      const double res = check_transformation_law(map, f.defining, p) / (1.0 + base_mag);
      if (res > worst) {
        worst = res;
        worst_at = name;
      }
    }
  }
  return {worst <= tol::kTransformLaw,
          "max normalized residual = " + fmt(worst) + " on " + worst_at + " (limit 1e-7)"};
}

std::pair<bool, std::string> transform_cayley(const VerifyOptions& opts) {
  const Fixture heis = fixture("heisenberg");
  const ProjectiveMap psi = ProjectiveMap::cayley();
  const ExprPtr sphere_image = pullback_surface(inverse(psi), heis.defining);
  double worst_law = 0.0, worst_vanish = 0.0;
  for (const CPoint& p : sample_points(heis, 20, opts.seed)) {
    worst_law = std::max(worst_law, check_transformation_law(psi, heis.defining, p));
    const CPoint q = apply(psi, p);
    worst_vanish = std::max(worst_vanish, std::abs(beltrami_coeff(*heis.jets, p).coeff));
    worst_vanish = std::max(worst_vanish, std::abs(beltrami_coeff(sphere_image, q).coeff));
    // The image point lands on the unit sphere.
    const double sphere_resid = std::abs(std::norm(q.z1) + std::norm(q.z2) - 1.0);
    worst_vanish = std::max(worst_vanish, sphere_resid);
  }
  const bool ok = worst_law <= tol::kTransformLaw && worst_vanish <= 1e-10;
  return {ok, "law residual = " + fmt(worst_law) + ", vanishing/on-sphere residual = " +
                  fmt(worst_vanish)};
}

std::pair<bool, std::string> transform_generator(const VerifyOptions& opts) {
  const ProjectiveMap gen = ProjectiveMap::inversion_generator();
  double worst = 0.0;
  for (const auto& name : std::vector<std::string>{"sphere", "bulge"}) {
    const Fixture f = fixture(name);
    std::mt19937_64 rng(opts.seed);
    int done = 0;
    while (done < 20) {
      const CPoint p = f.sampler(rng);
      if (std::abs(p.z1) < 0.3) continue;  // stay away from the map's line at infinity
      const double base = std::abs(beltrami_coeff(*f.jets, p).coeff);
      worst = std::max(worst, check_transformation_law(gen, f.defining, p) / (1.0 + base));
      ++done;
    }
  }
  return {worst <= tol::kTransformLaw,
          "max normalized residual = " + fmt(worst) + " (limit 1e-7)"};
}

// --- criterion 7 --------------------------------------------------------

std::pair<bool, std::string> chart_compatibility(const VerifyOptions& opts) {
  double worst = 0.0;
  std::string worst_at;
  for (const auto& [name, params] :
       std::vector<std::pair<std::string, std::vector<double>>>{
           {"sphere", {}}, {"lp", {4.0}}, {"bulge", {}}, {"deformed_sphere", {0.05}}}) {
    const Fixture f = fixture(name, params);
    const CircularSurface s(f.defining);
    std::mt19937_64 rng(opts.seed);
    for (int k = 0; k < 60; ++k) {
      const Complex zeta = annulus_sample(rng);
      const double mag = std::abs(s.b_chart(zeta));
      const double res = s.chart_compatibility_residual(zeta) / (1.0 + mag);
      if (res > worst) {
        worst = res;
        worst_at = name;
      }
    }
  }
  return {worst <= tol::kChartCompat,
          "max normalized residual = " + fmt(worst) + " on " + worst_at + " (limit 1e-8)"};
}

std::pair<bool, std::string> chart_large_circle(const VerifyOptions&) {
  const CircularSurface s(fixture("deformed_sphere", {0.05}).defining);
  std::string windings;
  bool ok = true;
  for (double M : {20.0, 40.0, 80.0}) {
    const LargeCircleWinding w = large_circle_winding(s, M);
    ok = ok && w.winding == -4 && w.axis_hypothesis;
    windings += (windings.empty() ? "" : ", ") + std::to_string(w.winding);
  }
  return {ok, "windings at M in {20, 40, 80}: " + windings + " (want -4, -4, -4)"};
}

// --- criterion 8 --------------------------------------------------------

std::pair<bool, std::string> theorem_desk_scale(const VerifyOptions&) {
  const CircularSurface s(fixture("deformed_sphere", {0.05}).defining);
  const SearchRegion region{Complex(0.0), 4.0};
  const auto cells = locate_zero_cells(s, region, 1e-2);
  if (cells.empty()) return {false, "no zero cells found"};
  int sum = 0;
  for (const ZeroCell& c : cells) sum += c.index;
  const int outer = winding_number([&s](Complex z) { return s.b_chart(z); },
                                   Contour::rect_boundary(Complex(0.0), 4.0));
  // Independent resampling of refined zeros through a freshly built surface.
  const CircularSurface fresh(fixture("deformed_sphere", {0.05}).defining);
  double worst_mag = 0.0;
  for (const ZeroCell& c : cells)
    worst_mag = std::max(worst_mag, std::abs(fresh.b_chart(refine_zero(s, c))));
  const bool ok = sum == -4 && sum == outer && worst_mag <= 1e-5;
  return {ok, std::to_string(cells.size()) + " cells, index sum = " + std::to_string(sum) +
                  " (want -4), outer winding = " + std::to_string(outer) +
                  ", max resampled |b| at refined zeros = " + fmt(worst_mag) + " (limit 1e-5)"};
}

// --- criterion 9 --------------------------------------------------------

std::pair<bool, std::string> rossi_suite(double t, const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;
  const double expected = (1.0 + t) / (1.0 - t);
  double ratio_dev = 0.0, dir_dev = 0.0, kappa_dev = 0.0;
  for (int k = 0; k < 200; ++k) {
    CPoint p;
    if (k % 4 == 0) {
      // Fallback locus: coordinates are real multiples of a common phase.
      const double u = kTwoPi * (k + 1.0) / 200.0;
      const Complex phase = std::polar(1.0, gauss(rng));
      p = {std::cos(u) * phase, std::sin(u) * phase};
    } else {
      const Complex a{gauss(rng), gauss(rng)}, b{gauss(rng), gauss(rng)};
      const double n = std::sqrt(std::norm(a) + std::norm(b));
      p = {a / n, b / n};
    }
    const EllipseField e = rossi_frame(p, t);
    ratio_dev = std::max(ratio_dev, std::abs(e.axis_ratio - expected));
    kappa_dev = std::max(kappa_dev, std::abs(e.kappa() - t));
    const std::array<Complex, 2> w = {Complex(0, 1) * std::conj(p.z2),
                                      Complex(0, -1) * std::conj(p.z1)};
    const Complex inner = e.minor_vector[0] * std::conj(w[0]) + e.minor_vector[1] * std::conj(w[1]);
    dir_dev = std::max(dir_dev, std::min(std::abs(inner - 1.0), std::abs(inner + 1.0)));
  }
  const bool ok = ratio_dev <= 1e-9 && dir_dev <= 1e-9 && kappa_dev <= 1e-9;
  return {ok, "ratio dev = " + fmt(ratio_dev) + ", direction dev = " + fmt(dir_dev) +
                  ", |b|-vs-t dev = " + fmt(kappa_dev) + " (limits 1e-9)"};
}

std::pair<bool, std::string> rossi_sweep_oracle(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  double value_dev = 0.0, dir_dev = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Complex A = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, 0.0, kTwoPi));
    const Complex B = std::polar(uniform(rng, 0.0, 0.45), uniform(rng, 0.0, kTwoPi));
    const EllipseField e = rlinear_ellipse(A, B);
    double sweep_max = 0.0, sweep_min = 1e300;
    Complex argmax;
    for (int j = 0; j < 10000; ++j) {
      const Complex g = std::polar(1.0, kTwoPi * j / 10000.0);
      const double v = std::abs(g * A + std::conj(g) * B);
      if (v > sweep_max) {
        sweep_max = v;
        argmax = g;
      }
      sweep_min = std::min(sweep_min, v);
    }
    const double scale = std::abs(A) + std::abs(B);
    value_dev = std::max(value_dev, std::abs(sweep_max - (std::abs(A) + std::abs(B))) / scale);
    value_dev = std::max(value_dev, std::abs(sweep_min - (std::abs(A) - std::abs(B))) / scale);
    if (std::abs(B) > 0.05) {
      // Directions match modulo sign at sweep resolution.
      const double d = std::min(std::abs(argmax - e.gamma), std::abs(argmax + e.gamma));
      dir_dev = std::max(dir_dev, d);
    }
  }
  const bool ok = value_dev <= 1e-6 && dir_dev <= 1e-3;
  return {ok, "extreme-value dev = " + fmt(value_dev) + " (limit 1e-6), direction dev = " +
                  fmt(dir_dev) + " (limit 1e-3)"};
}

// --- criterion 10 -------------------------------------------------------

std::pair<bool, std::string> wirtinger_fd(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;
  const double h = tol::kFiniteDiffStep;
  double worst = 0.0;
  int done = 0;
  while (done < 100) {
    const ExprPtr e = random_expression(rng, 4);
    const CPoint p{Complex(0.7 * gauss(rng), 0.7 * gauss(rng)),
                   Complex(0.7 * gauss(rng), 0.7 * gauss(rng))};
    try {
      const auto shifted = [&](int coord, Complex dz) {
        CPoint q = p;
        (coord == 0 ? q.z1 : q.z2) += dz;
        return eval(e, q);
      };
      bool tame = std::abs(eval(e, p)) <= 1e3;
      for (int coord = 0; coord < 2 && tame; ++coord) {
        const Complex dx = (shifted(coord, {h, 0}) - shifted(coord, {-h, 0})) / (2.0 * h);
        const Complex dy = (shifted(coord, {0, h}) - shifted(coord, {0, -h})) / (2.0 * h);
        const Complex fd_z = 0.5 * (dx - Complex(0, 1) * dy);
        const Complex fd_zb = 0.5 * (dx + Complex(0, 1) * dy);
        const Complex sym_z = eval(wirtinger_derive(e, coord == 0 ? Var::Z1 : Var::Z2), p);
        const Complex sym_zb = eval(wirtinger_derive(e, coord == 0 ? Var::Z1B : Var::Z2B), p);
        if (std::abs(sym_z) > 1e3 || std::abs(sym_zb) > 1e3) {
          tame = false;
          break;
        }
        worst = std::max(worst, std::abs(sym_z - fd_z) / (1.0 + std::abs(sym_z) + std::abs(fd_z)));
        worst = std::max(worst,
                         std::abs(sym_zb - fd_zb) / (1.0 + std::abs(sym_zb) + std::abs(fd_zb)));
      }
      if (!tame) continue;
      ++done;
    } catch (const BranchError&) {
      continue;
    }
  }
  return {worst <= tol::kFiniteDiff, "max relative deviation = " + fmt(worst) + " (limit 1e-6)"};
}

std::pair<bool, std::string> jet_symmetry(const VerifyOptions& opts) {
  double worst = 0.0;
  for (const auto& [name, params] : std::vector<std::pair<std::string, std::vector<double>>>{
           {"bulge", {}}, {"torus", {0.01}}}) {
    const Fixture f = fixture(name, params);
    for (const CPoint& p : sample_points(f, 100, opts.seed))
      worst = std::max(worst, conjugate_symmetry_defect(f.jets->jet(p)));
  }
  return {worst <= tol::kConjSymmetry, "max defect = " + fmt(worst) + " (limit 1e-10)"};
}

std::pair<bool, std::string> winding_additivity(const VerifyOptions&) {
  const CircularSurface s(fixture("deformed_sphere", {0.05}).defining);
  const auto f = [&s](Complex z) { return s.b_chart(z); };
  const int whole = winding_number(f, Contour::rect_boundary(Complex(0.0), 2.0));
  int quadrants = 0;
  std::string parts;
  for (const Complex c : {Complex(1.0, 1.0), Complex(-1.0, 1.0), Complex(1.0, -1.0),
                          Complex(-1.0, -1.0)}) {
    const int w = winding_number(f, Contour::rect_boundary(c, 1.0));
    quadrants += w;
    parts += (parts.empty() ? "" : ", ") + std::to_string(w);
  }
  const bool ok = whole == quadrants;
  return {ok, "whole square = " + std::to_string(whole) + ", quadrants = " + parts +
                  " (sum " + std::to_string(quadrants) + ")"};
}

std::pair<bool, std::string> winding_sample_independence(const VerifyOptions&) {
  const CircularSurface lp4(fixture("lp", {4.0}).defining);
  const CircularSurface bulge(fixture("bulge").defining);
  const CircularSurface def(fixture("deformed_sphere", {0.05}).defining);
  const auto f1 = [&lp4](Complex z) { return lp4.b_chart(z); };
  const auto f2 = [&bulge](Complex z) { return bulge.b_chart(z); };
  const auto f3 = [&def](Complex z) { return def.b_chart(z); };
  const int a64 = winding_number(f1, Contour::circle(Complex(0.0), 1.0, 64));
  const int a256 = winding_number(f1, Contour::circle(Complex(0.0), 1.0, 256));
  const int c64 = winding_number(f2, Contour::circle(Complex(0.0), 20.0, 64));
  const int c256 = winding_number(f2, Contour::circle(Complex(0.0), 20.0, 256));
  const int b64 = winding_number(f3, Contour::circle(Complex(0.0), 20.0, 64));
  const int b256 = winding_number(f3, Contour::circle(Complex(0.0), 20.0, 256));
  const bool ok = a64 == a256 && b64 == b256 && c64 == c256 && a64 == -2 && c64 == -2 && b64 == -4;
  return {ok, "lp(4): " + std::to_string(a64) + "/" + std::to_string(a256) + ", bulge: " +
                  std::to_string(c64) + "/" + std::to_string(c256) + ", deformed sphere: " +
                  std::to_string(b64) + "/" + std::to_string(b256)};
}

std::pair<bool, std::string> synthetic_rotation_winding(const VerifyOptions&) {
  // Any continuous coefficient with c*conj(zeta)^2/zeta^2 asymptotics winds
  // -4 on large circles, independent of any hypersurface.
  const auto f = [](Complex z) {
    const Complex zb = std::conj(z);
    return (zb * zb + Complex(0.2, 0.1)) / (z * z + Complex(-0.3, 0.05));
  };
  const int w20 = winding_number(f, Contour::circle(Complex(0.0), 20.0));
  const int w40 = winding_number(f, Contour::circle(Complex(0.0), 40.0));
  const bool ok = w20 == -4 && w40 == -4;
  return {ok, "windings: " + std::to_string(w20) + ", " + std::to_string(w40) + " (want -4)"};
}

std::pair<bool, std::string> deterministic_outputs(const VerifyOptions&) {
  const Fixture def = fixture("deformed_sphere", {0.05});
  const CircularSurface s1(def.defining);
  const CircularSurface s2(def.defining);
  ScanRequest scan{Complex(0.0), 2.0, 41, 1};
  const std::string csv_a = scan_csv(s1, scan);
  scan.threads = 4;
  const std::string csv_b = scan_csv(s2, scan);
  const Fixture sphere = fixture("sphere");
  const CPoint p{Complex(1.0 / std::sqrt(2.0)), Complex(1.0 / std::sqrt(2.0))};
  const std::string eval_a = eval_report_json(sphere, p);
  const std::string eval_b = eval_report_json(sphere, p);
  const CircularSurface bulge1(fixture("bulge").defining);
  const CircularSurface bulge2(fixture("bulge").defining);
  const UmbilicSearchRequest req{Complex(0.0), 0.5, 1e-2, 1e-5, 20.0};
  const std::string cells_a = find_umbilics_report_json(bulge1, req);
  const std::string cells_b = find_umbilics_report_json(bulge2, req);
  const bool ok = csv_a == csv_b && eval_a == eval_b && cells_a == cells_b;
  return {ok, std::string("scan(1 vs 4 threads): ") + (csv_a == csv_b ? "identical" : "DIFFER") +
                  ", eval: " + (eval_a == eval_b ? "identical" : "DIFFER") +
                  ", find-umbilics: " + (cells_a == cells_b ? "identical" : "DIFFER")};
}

std::vector<Check> all_checks() {
  std::vector<Check> checks;
  const auto add = [&checks](int crit, std::string group, std::string name, CheckBody body) {
    checks.push_back({crit, std::move(group), std::move(name), std::move(body)});
  };
  add(1, "vanishing", "sphere", [](const VerifyOptions& o) { return vanishing_check("sphere", o); });
  add(1, "vanishing", "heisenberg",
      [](const VerifyOptions& o) { return vanishing_check("heisenberg", o); });
  add(2, "lp", "p3", [](const VerifyOptions& o) { return lp_check(3.0, o); });
  add(2, "lp", "p4", [](const VerifyOptions& o) { return lp_check(4.0, o); });
  add(2, "lp", "p6", [](const VerifyOptions& o) { return lp_check(6.0, o); });
  add(3, "bulge", "closed_form", bulge_closed_form);
  add(3, "bulge", "zero_cells", bulge_zero_cells);
  add(3, "bulge", "contact_z1_axis",
      [](const VerifyOptions& o) { return bulge_contact(true, o); });
  add(3, "bulge", "contact_z2_axis",
      [](const VerifyOptions& o) { return bulge_contact(false, o); });
  add(4, "torus", "closed_form", torus_closed_form);
  add(4, "torus", "c_convexity_failure", torus_c_convexity);
  add(5, "defining", "eta_one_plus_abs2",
      [](const VerifyOptions& o) { return eta_independence("1+abs2(z1)", o); });
  add(5, "defining", "eta_exp_re",
      [](const VerifyOptions& o) { return eta_independence("exp(re(z1))", o); });
  add(6, "transform", "random_near_identity", transform_random);
  add(6, "transform", "cayley_heisenberg", transform_cayley);
  add(6, "transform", "inversion_generator", transform_generator);
  add(7, "charts", "compatibility", chart_compatibility);
  add(7, "charts", "large_circle_stability", chart_large_circle);
  add(8, "theorem", "deformed_sphere_umbilic_circles", theorem_desk_scale);
  add(9, "rossi", "t01", [](const VerifyOptions& o) { return rossi_suite(0.1, o); });
  add(9, "rossi", "t03", [](const VerifyOptions& o) { return rossi_suite(0.3, o); });
  add(9, "rossi", "t07", [](const VerifyOptions& o) { return rossi_suite(0.7, o); });
  add(9, "rossi", "sweep_oracle", rossi_sweep_oracle);
  add(10, "properties", "wirtinger_finite_difference", wirtinger_fd);
  add(10, "properties", "jet_conjugate_symmetry", jet_symmetry);
  add(10, "properties", "winding_additivity", winding_additivity);
  add(10, "properties", "winding_sample_independence", winding_sample_independence);
  add(10, "properties", "synthetic_rotation_winding", synthetic_rotation_winding);
  add(10, "properties", "deterministic_outputs", deterministic_outputs);
  return checks;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  for (const Check& c : all_checks()) {
    if (!opts.only_group.empty() && c.group != opts.only_group) continue;
    CheckResult r;
    r.criterion = c.criterion;
    r.group = c.group;
    r.name = c.name;
    try {
      const auto [passed, detail] = c.body(opts);
      r.passed = passed;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<std::string> verification_groups() {
  std::vector<std::string> groups;
  for (const Check& c : all_checks())
    if (groups.empty() || groups.back() != c.group) groups.push_back(c.group);
  return groups;
}

ExprPtr random_expression(std::mt19937_64& rng, int max_depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::normal_distribution<double> gauss;
  if (max_depth <= 0) {
    if (pick(rng) < 6) {
      return variable(static_cast<Var>(std::uniform_int_distribution<int>(0, 3)(rng)));
    }
    return constant(Complex(gauss(rng), gauss(rng)));
  }
  switch (pick(rng)) {
    case 0:
    case 1: return add(random_expression(rng, max_depth - 1), random_expression(rng, max_depth - 1));
    case 2:
    case 3: return mul(random_expression(rng, max_depth - 1), random_expression(rng, max_depth - 1));
    case 4: return neg(random_expression(rng, max_depth - 1));
    case 5: {
      // Keep divisors away from zero: denominator = subtree + offset of
      // magnitude 3.
      const ExprPtr den = add(random_expression(rng, max_depth - 1),
                              constant(std::polar(3.0, uniform(rng, 0.0, kTwoPi))));
      return div(random_expression(rng, max_depth - 1), den);
    }
    case 6: {
      const ExprPtr base = random_expression(rng, max_depth - 1);
      return powi(base, std::uniform_int_distribution<int>(-2, 3)(rng));
    }
    case 7: {
      const ExprPtr arg = random_expression(rng, max_depth - 1);
      const ExprPtr positive = add(mul(arg, conjugate(arg)), constant(uniform(rng, 0.5, 2.0)));
      return powr(positive, uniform(rng, 0.5, 2.5));
    }
    case 8: {
      const ExprPtr arg = random_expression(rng, max_depth - 1);
      const ExprPtr positive = add(mul(arg, conjugate(arg)), constant(uniform(rng, 0.5, 2.0)));
      return log(positive);
    }
    default:
      return exp(mul(constant(0.3), random_expression(rng, max_depth - 1)));
  }
}

}  // namespace crbelt

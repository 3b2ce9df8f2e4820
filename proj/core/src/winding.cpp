#include "crbelt/winding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "crbelt/errors.hpp"

namespace crbelt {

Contour Contour::circle(Complex center, double radius, int samples) {
  if (radius <= 0.0) throw InvalidExpression("contour radius must be positive");
  return {Kind::Circle, center, radius, samples};
}

Contour Contour::rect_boundary(Complex center, double halfwidth, int samples) {
  if (halfwidth <= 0.0) throw InvalidExpression("contour half-width must be positive");
  return {Kind::RectBoundary, center, halfwidth, samples};
}

namespace {

constexpr int kMaxContourSamples = 1 << 20;
constexpr double kPi = std::numbers::pi;

// Counterclockwise boundary of [cx-hx, cx+hx] x [cy-hy, cy+hy].
Complex rect_point(double cx, double cy, double hx, double hy, double t) {
  const double u = 4.0 * t;
  if (u < 1.0) return {cx - hx + 2.0 * hx * u, cy - hy};
  if (u < 2.0) return {cx + hx, cy - hy + 2.0 * hy * (u - 1.0)};
  if (u < 3.0) return {cx + hx - 2.0 * hx * (u - 2.0), cy + hy};
  return {cx - hx, cy + hy - 2.0 * hy * (u - 3.0)};
}

template <typename PointAt>
int winding_impl(const CoefficientFn& f, const PointAt& point_at, int initial_samples) {
  int n = std::max(64, initial_samples);
  std::vector<Complex> vals(n);
  for (int k = 0; k < n; ++k) vals[k] = f(point_at(static_cast<double>(k) / n));
  for (;;) {
    double max_abs = 0.0, min_abs = std::numeric_limits<double>::infinity();
    for (const Complex& v : vals) {
      const double a = std::abs(v);
      max_abs = std::max(max_abs, a);
      min_abs = std::min(min_abs, a);
    }
    if (max_abs <= tol::kContourFloor) throw IdenticallyZero("coefficient vanishes on the contour");
    if (min_abs <= tol::kContourFloor * std::max(1.0, max_abs))
      throw ZeroOnContour("coefficient magnitude dips below the contour floor");

    double total = 0.0;
    bool nyquist_ok = true;
    for (int k = 0; k < n; ++k) {
      const double step = std::arg(vals[(k + 1) % n] * std::conj(vals[k]));
      if (std::abs(step) > 0.5 * kPi) {
        nyquist_ok = false;
        break;
      }
      total += step;
    }
    if (nyquist_ok) {
      const double w = total / (2.0 * kPi);
      const double rounded = std::round(w);
      if (std::abs(w - rounded) <= tol::kWindingResidual) return static_cast<int>(rounded);
      throw NonConvergent("winding residual exceeds the integer-rounding threshold");
    }
    if (2 * n > kMaxContourSamples)
      throw NonConvergent("phase steps exceed pi/2 at the contour sample cap");
    std::vector<Complex> next(2 * n);
    for (int k = 0; k < n; ++k) {
      next[2 * k] = vals[k];
      next[2 * k + 1] = f(point_at((2.0 * k + 1.0) / (2.0 * n)));
    }
    vals = std::move(next);
    n *= 2;
  }
}

}  // namespace

Complex Contour::point_at(double t) const {
  if (kind == Kind::Circle) return center + std::polar(extent, 2.0 * kPi * t);
  return rect_point(center.real(), center.imag(), extent, extent, t);
}

int winding_number(const CoefficientFn& f, const Contour& c) {
  return winding_impl(f, [&c](double t) { return c.point_at(t); }, c.samples);
}

namespace {

struct Rect {
  double cx, cy, hx, hy;
};

int rect_winding(const CoefficientFn& f, const Rect& r, int samples = 256) {
  return winding_impl(
      f, [&r](double t) { return rect_point(r.cx, r.cy, r.hx, r.hy, t); }, samples);
}

double interior_min_abs(const CoefficientFn& f, const Rect& r) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      const double u = -0.8 + 0.2 * i;
      const double v = -0.8 + 0.2 * j;
      try {
        best = std::min(best, std::abs(f({r.cx + u * r.hx, r.cy + v * r.hy})));
      } catch (const Error&) {
        // inadmissible interior sample; skip
      }
    }
  return best;
}

void subdivide(const CoefficientFn& f, const Rect& rect, int w, double min_halfwidth,
               std::vector<ZeroCell>& out) {
  if (w == 0) return;
  if (std::max(rect.hx, rect.hy) <= min_halfwidth) {
    out.push_back({Complex(rect.cx, rect.cy), std::max(rect.hx, rect.hy), w,
                   interior_min_abs(f, rect)});
    return;
  }
  for (int retry = 0; retry <= 5; ++retry) {
    const double sx = rect.cx + retry * 1e-3 * rect.hx;
    const double sy = rect.cy + retry * 1e-3 * rect.hy;
    const double x0 = rect.cx - rect.hx, x1 = rect.cx + rect.hx;
    const double y0 = rect.cy - rect.hy, y1 = rect.cy + rect.hy;
    const Rect children[4] = {
        {0.5 * (x0 + sx), 0.5 * (y0 + sy), 0.5 * (sx - x0), 0.5 * (sy - y0)},
        {0.5 * (sx + x1), 0.5 * (y0 + sy), 0.5 * (x1 - sx), 0.5 * (sy - y0)},
        {0.5 * (x0 + sx), 0.5 * (sy + y1), 0.5 * (sx - x0), 0.5 * (y1 - sy)},
        {0.5 * (sx + x1), 0.5 * (sy + y1), 0.5 * (x1 - sx), 0.5 * (y1 - sy)},
    };
    int cw[4];
    bool split_ok = true;
    int sum = 0;
    try {
      for (int k = 0; k < 4; ++k) {
        cw[k] = rect_winding(f, children[k]);
        sum += cw[k];
      }
      if (sum != w) split_ok = false;  // a zero sits too close to a split line
    } catch (const ZeroOnContour&) {
      split_ok = false;
    } catch (const BranchError&) {
      split_ok = false;  // split line crossed an inadmissible locus
    }
    if (!split_ok) continue;
    std::vector<ZeroCell> collected;
    for (int k = 0; k < 4; ++k) subdivide(f, children[k], cw[k], min_halfwidth, collected);
    out.insert(out.end(), collected.begin(), collected.end());
    return;
  }
  throw BoundaryZero("no zero-free split line found after jitter retries");
}

}  // namespace

std::vector<ZeroCell> locate_zero_cells(const CoefficientFn& f, const SearchRegion& region,
                                        double min_halfwidth) {
  if (min_halfwidth <= 0.0 || min_halfwidth >= region.halfwidth)
    throw InvalidExpression("min_halfwidth must lie in (0, region half-width)");
  const Rect root{region.center.real(), region.center.imag(), region.halfwidth,
                  region.halfwidth};

  // Certify the search boundary before recursing.
  double max_abs = 0.0, min_abs = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 1024; ++k) {
    const double a =
        std::abs(f(rect_point(root.cx, root.cy, root.hx, root.hy, k / 1024.0)));
    max_abs = std::max(max_abs, a);
    min_abs = std::min(min_abs, a);
  }
  if (max_abs <= tol::kContourFloor)
    throw IdenticallyZero("coefficient vanishes identically on the search boundary");
  if (min_abs <= tol::kBoundaryMargin)
    throw ZeroOnContour("coefficient is within the margin of zero on the search boundary");

  const int w = rect_winding(f, root);
  std::vector<ZeroCell> cells;
  if (w != 0) subdivide(f, root, w, min_halfwidth, cells);
  std::sort(cells.begin(), cells.end(), [](const ZeroCell& a, const ZeroCell& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return cells;
}

std::vector<ZeroCell> locate_zero_cells(const CircularSurface& s, const SearchRegion& region,
                                        double min_halfwidth) {
  return locate_zero_cells([&s](Complex z) { return s.b_chart(z); }, region, min_halfwidth);
}

Complex refine_zero(const CoefficientFn& f, const ZeroCell& cell) {
  const auto value = [&f](Complex z) -> double {
    try {
      return std::abs(f(z));
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  Complex best = cell.center;
  double best_val = value(best);
  for (int i = -7; i <= 7; ++i)
    for (int j = -7; j <= 7; ++j) {
      const Complex z = cell.center + Complex(i / 7.0, j / 7.0) * cell.halfwidth;
      const double v = value(z);
      if (v < best_val) {
        best_val = v;
        best = z;
      }
    }
  double step = cell.halfwidth / 7.0;
  for (int iter = 0; iter < 400 && step > 1e-13; ++iter) {
    bool moved = false;
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j) {
        if (i == 0 && j == 0) continue;
        const Complex z = best + Complex(i * step, j * step);
        const double v = value(z);
        if (v < best_val) {
          best_val = v;
          best = z;
          moved = true;
        }
      }
    if (!moved) step *= 0.5;
  }
  return best;
}

Complex refine_zero(const CircularSurface& s, const ZeroCell& cell) {
  return refine_zero([&s](Complex z) { return s.b_chart(z); }, cell);
}

LargeCircleWinding large_circle_winding(const CircularSurface& s, double M) {
  LargeCircleWinding out;
  try {
    out.axis_coeff_mag = std::abs(s.b_chart_infinity(Complex(0.0)));
  } catch (const Error&) {
    out.axis_coeff_mag = std::numeric_limits<double>::quiet_NaN();
  }
  out.axis_hypothesis = out.axis_coeff_mag > tol::kUmbilic;
  out.winding = winding_number([&s](Complex z) { return s.b_chart(z); }, Contour::circle({}, M));
  return out;
}

int stable_large_circle_winding(const CircularSurface& s, double initial_M, int max_doublings) {
  const LargeCircleWinding first = large_circle_winding(s, initial_M);
  if (!first.axis_hypothesis)
    throw AxisUmbilic("surface is projective-umbilic on the z1-axis: the large-circle "
                      "asymptotics do not apply");
  int prev = first.winding;
  double M = initial_M;
  for (int k = 0; k < max_doublings; ++k) {
    M *= 2.0;
    const int w =
        winding_number([&s](Complex z) { return s.b_chart(z); }, Contour::circle({}, M));
    if (w == prev) return w;
    prev = w;
  }
  throw NonConvergent("large-circle winding did not stabilize under doubling");
}

std::string to_json(const ZeroCell& cell) {
  nlohmann::ordered_json j;
  j["center"] = {cell.center.real(), cell.center.imag()};
  j["halfwidth"] = cell.halfwidth;
  j["index"] = cell.index;
  j["min_abs_b"] = cell.min_abs_b;
  return j.dump();
}

std::string to_json(const std::vector<ZeroCell>& cells) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ZeroCell& c : cells) arr.push_back(nlohmann::ordered_json::parse(to_json(c)));
  return arr.dump();
}

}  // namespace crbelt

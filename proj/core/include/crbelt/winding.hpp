#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crbelt/circular.hpp"
#include "crbelt/types.hpp"

namespace crbelt {

using CoefficientFn = std::function<Complex(Complex)>;

/// A closed contour in the zeta-plane: a circle or the boundary of an
/// axis-aligned square, traversed counterclockwise.
struct Contour {
  enum class Kind { Circle, RectBoundary };
  Kind kind = Kind::Circle;
  Complex center{};
  double extent = 1.0;  // radius, or half-width for RectBoundary
  int samples = 256;    // initial sample count, >= 64

  static Contour circle(Complex center, double radius, int samples = 256);
  static Contour rect_boundary(Complex center, double halfwidth, int samples = 256);
  Complex point_at(double t) const;  // t in [0, 1)
};

/// Argument-principle winding of f along the contour: principal-branch phase
/// increments are summed, doubling the sample count whenever one exceeds
/// pi/2 (up to 2^20 samples). ZeroOnContour if |f| dips below
/// kContourFloor * max(1, max |f|); NonConvergent when the Nyquist criterion
/// or the 0.05 integer residual cannot be met.
int winding_number(const CoefficientFn& f, const Contour& c);

/// A square in the zeta-plane with certified nonzero boundary winding.
struct ZeroCell {
  Complex center{};
  double halfwidth = 0.0;
  int index = 0;         // boundary winding
  double min_abs_b = 0.0;  // smallest |b| sampled inside
};

struct SearchRegion {
  Complex center{};
  double halfwidth = 1.0;
};

/// Quadtree localization: recursively splits cells with nonzero boundary
/// winding until half-width <= min_halfwidth. A zero hit on a split line
/// triggers a deterministic jitter of the split point (1e-3 of the
/// half-width per retry, at most 5 retries), then BoundaryZero. The sum of
/// returned indices equals the boundary winding of the search square.
/// IdenticallyZero when the coefficient's boundary maximum is below 1e-9;
/// ZeroOnContour when the search boundary violates the 1e-6 margin.
std::vector<ZeroCell> locate_zero_cells(const CoefficientFn& f, const SearchRegion& region,
                                        double min_halfwidth);
std::vector<ZeroCell> locate_zero_cells(const CircularSurface& s, const SearchRegion& region,
                                        double min_halfwidth);

/// Best-effort minimizer of |b| inside the cell (coarse grid, then pattern
/// descent); returns the located zeta.
Complex refine_zero(const CoefficientFn& f, const ZeroCell& cell);
Complex refine_zero(const CircularSurface& s, const ZeroCell& cell);

struct LargeCircleWinding {
  int winding = 0;
  double axis_coeff_mag = 0.0;  // |b~(0)|, NaN when the axis chart is inadmissible
  bool axis_hypothesis = false;  // axis_coeff_mag > kUmbilic
};

/// Winding of b_S on |zeta| = M together with the z1-axis coefficient that
/// the large-circle asymptotics require to be nonzero. Reports the axis
/// hypothesis instead of enforcing it; contour errors propagate.
LargeCircleWinding large_circle_winding(const CircularSurface& s, double M);

/// Enforced, stabilized form: doubles M until two consecutive windings
/// agree. AxisUmbilic when the hypothesis fails (the theorem's precondition).
int stable_large_circle_winding(const CircularSurface& s, double initial_M = 20.0,
                                int max_doublings = 6);

/// {"center": [re, im], "halfwidth": h, "index": n, "min_abs_b": m}
std::string to_json(const ZeroCell& cell);
std::string to_json(const std::vector<ZeroCell>& cells);

}  // namespace crbelt

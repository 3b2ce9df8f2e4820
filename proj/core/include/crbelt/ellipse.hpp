#pragma once

#include <array>

#include "crbelt/jet.hpp"
#include "crbelt/types.hpp"

namespace crbelt {

/// Which bundle the coefficient lives on. Standard is b against
/// dz1^dz2/dz1b^dz2b (non-matching orientations, the hypersurface tensor);
/// Conjugate is b against dz1b^dz2b/dz1^dz2 (matching orientations, the
/// Rossi family).
enum class BeltramiFrame { Standard, Conjugate };

/// The ellipse field of a competing CR structure on the maximal complex
/// subspace H_pS. gamma parametrizes directions X = (gamma*z2b, -gamma*z1b)
/// on S^3 (or X = gamma*V for the basis V of ker of the tangential complex
/// differential on a general surface); minor_vector is the real tangent
/// vector in C^2 when one is available.
struct EllipseField {
  double axis_ratio = 1.0;  // major/minor, >= 1
  Complex gamma{1.0, 0.0};
  std::array<Complex, 2> minor_vector{};
  BeltramiFrame frame = BeltramiFrame::Standard;

  double kappa() const { return (axis_ratio - 1.0) / (axis_ratio + 1.0); }
};

/// Level-set ellipses of gamma -> |gamma*A + conj(gamma)*B| for |B| < |A|:
/// axis_ratio = (|A|+|B|)/(|A|-|B|) and the minor axis lies along the unit
/// gamma maximizing the modulus (the level set has smallest radius where the
/// map is largest), computed in closed form from arg(A) - arg(B).
/// DegenerateEllipse when |B| >= |A|; B = 0 yields a circle with the
/// convention gamma = 1.
EllipseField rlinear_ellipse(Complex A, Complex B);

/// Ellipse field of the alternate CR structure on S^3 whose CR functions are
/// annihilated by Lbar + t L, computed from the differential of
/// f = z1^2 + z2^2 + t(conj(z1)^2 + conj(z2)^2) restricted to H_pS^3, falling
/// back to g = z1^2 - z2^2 - t(...) and h = z1 z2 - t conj(z1 z2) on the
/// degenerate locus where one coordinate is a real multiple of the other.
EllipseField rossi_frame(const CPoint& p, double t);

/// Minor-axis direction and axis ratio determined by a Beltrami coefficient
/// with 0 < |b| < 1: the X in H_pS (unique up to positive scale and sign)
/// making b * omega/conj(omega) real positive, where
/// omega = (dz1^dz2)(X, Y) = X1 Y2 - X2 Y1 for a transverse Y in T_pS \ H_pS.
/// The Conjugate frame tests b * conj(omega)/omega instead. UmbilicPoint when
/// |b| <= kUmbilic; NotCConvex when |b| >= 1.
EllipseField minor_axis_from_beltrami(Complex b, const CPoint& p, const JetEvaluator& surface,
                                      BeltramiFrame frame = BeltramiFrame::Standard);
EllipseField minor_axis_from_beltrami(Complex b, const CPoint& p, const ExprPtr& surface,
                                      BeltramiFrame frame = BeltramiFrame::Standard);

/// (dz1^dz2)(X, Y) for real tangent vectors identified with their complex
/// coordinates.
inline Complex wedge_pairing(const std::array<Complex, 2>& X, const std::array<Complex, 2>& Y) {
  return X[0] * Y[1] - X[1] * Y[0];
}

}  // namespace crbelt

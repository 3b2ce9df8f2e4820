#pragma once

#include <array>
#include <string>

#include "crbelt/expr.hpp"
#include "crbelt/types.hpp"

namespace crbelt {

/// An automorphism of CP^2 in the affine chart, acting by
///   (z1, z2) -> ((D + E z1 + F z2)/w, (G + H z1 + I z2)/w),
///   w = A + B z1 + C z2,
/// for the invertible row-major matrix [[A,B,C],[D,E,F],[G,H,I]].
class ProjectiveMap {
 public:
  explicit ProjectiveMap(const std::array<Complex, 9>& entries);

  static ProjectiveMap identity();
  /// (z1, z2) -> (2 z1/(i+z2), (i-z2)/(i+z2)); maps the Heisenberg
  /// hypersurface onto the unit sphere.
  static ProjectiveMap cayley();
  /// The non-affine generator (z1, z2) -> (1/z1, z2/z1).
  static ProjectiveMap inversion_generator();

  const std::array<Complex, 9>& matrix() const { return m_; }
  Complex det() const { return det_; }

  Complex denominator_at(const CPoint& p) const;

 private:
  std::array<Complex, 9> m_;
  Complex det_;
};

/// The fractional-linear image; AtInfinity when p lies on the map's line at
/// infinity.
CPoint apply(const ProjectiveMap& m, const CPoint& p);

ProjectiveMap inverse(const ProjectiveMap& m);

/// det of the 2x2 holomorphic Jacobian of the chart action; equals
/// det(matrix) / w^3.
Complex holomorphic_jacobian_det(const ProjectiveMap& m, const CPoint& p);

/// The expression r(psi(z)): substitutes the two rational component
/// expressions (and their structural conjugates) for the four variables. The
/// result is a defining expression of psi^{-1}(S).
ExprPtr pullback_surface(const ProjectiveMap& m, const ExprPtr& surface);

/// |b_S(p) - b_{psi(S)}(psi(p)) * J/conj(J)| with J the holomorphic Jacobian
/// determinant at p and psi(S) defined by pullback_surface(inverse(m), .).
/// Both sides must be strongly pseudoconvex where evaluated.
double check_transformation_law(const ProjectiveMap& m, const ExprPtr& surface, const CPoint& p,
                                double on_surface_tol = tol::kOnSurface);

/// Row-major 9-tuple of [re, im] pairs.
std::string to_json(const ProjectiveMap& m);
ProjectiveMap projective_map_from_json(const std::string& text);

}  // namespace crbelt

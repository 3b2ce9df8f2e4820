#pragma once

#include <utility>

#include "crbelt/jet.hpp"
#include "crbelt/types.hpp"

namespace crbelt {

/// The Beltrami coefficient b at a point, read against the frame
/// dz1^dz2 / dz1b^dz2b, together with the two bordered determinants it came
/// from (coeff = -numerator/denominator).
struct BeltramiValue {
  CPoint point;
  Complex coeff;
  Complex numerator;
  Complex denominator;
};

enum class ContactOrder { AtLeast3, Exactly2 };

struct PointClassification {
  double beta = 0.0;  // |coeff|
  ContactOrder contact_order = ContactOrder::AtLeast3;
  bool strongly_c_convex_here = true;
};

/// N = det[[0,r1,r2],[r1,r11,r21],[r2,r12,r22]] and
/// D = det[[0,r1,r2],[r1b,r11b,r21b],[r2b,r12b,r22b]], with r21 = r12.
std::pair<Complex, Complex> bordered_determinants(const Jet2& j);

/// Evaluates b = -N/D at p. Requires |r(p)| <= on_surface_tol and a strongly
/// pseudoconvex denominator. The sign convention expects defining
/// expressions that are negative inside the domain, making D < 0; a positive
/// real D raises LeviDegenerate with a hint to negate the defining function.
BeltramiValue beltrami_coeff(const JetEvaluator& surface, const CPoint& p,
                             double on_surface_tol = tol::kOnSurface);
BeltramiValue beltrami_coeff(const ExprPtr& surface, const CPoint& p,
                             double on_surface_tol = tol::kOnSurface);

/// |coeff(eta*r, p) - coeff(r, p)| for a real nonvanishing eta; the
/// coefficient does not depend on the choice of defining function, so this
/// is <= kRescaling*(1+|coeff|) in exact arithmetic.
double rescaling_invariance_check(const ExprPtr& surface, const ExprPtr& eta, const CPoint& p,
                                  double on_surface_tol = tol::kOnSurface);

PointClassification classify(const BeltramiValue& value, double umbilic_tol = tol::kUmbilic);
PointClassification classify_point(const JetEvaluator& surface, const CPoint& p,
                                   double on_surface_tol = tol::kOnSurface,
                                   double umbilic_tol = tol::kUmbilic);
PointClassification classify_point(const ExprPtr& surface, const CPoint& p,
                                   double on_surface_tol = tol::kOnSurface,
                                   double umbilic_tol = tol::kUmbilic);

}  // namespace crbelt

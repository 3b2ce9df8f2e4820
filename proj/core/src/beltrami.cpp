#include "crbelt/beltrami.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "crbelt/errors.hpp"

namespace crbelt {

std::pair<Complex, Complex> bordered_determinants(const Jet2& j) {
  const Complex r1 = j.r1(), r2 = j.r2();
  const Complex r12 = j.r12();  // r21 = r12, computed once
  const Complex n = -r1 * r1 * j.r22() + 2.0 * r1 * r2 * r12 - r2 * r2 * j.r11();
  const Complex d = -r1 * j.r1b() * j.r22b() + r1 * j.r2b() * j.r21b() +
                    r2 * j.r1b() * j.r12b() - r2 * j.r2b() * j.r11b();
  return {n, d};
}

namespace {

double entry_scale(const Jet2& j) {
  double s = 0.0;
  for (Complex v : {j.r1(), j.r2(), j.r1b(), j.r2b(), j.r11b(), j.r21b(), j.r12b(), j.r22b()})
    s = std::max(s, std::abs(v));
  return s;
}

}  // namespace

BeltramiValue beltrami_coeff(const JetEvaluator& surface, const CPoint& p, double on_surface_tol) {
  const Complex rv = surface.value(p);
  if (std::abs(rv) > on_surface_tol) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "|r(p)| = %.3g exceeds the on-surface tolerance %.3g",
                  std::abs(rv), on_surface_tol);
    throw NotOnSurface(buf);
  }
  if (std::abs(rv.imag()) > tol::kReality * (1.0 + std::abs(rv)))
    throw InvalidExpression("defining expression is not real-valued at the point");

  const Jet2 j = surface.jet(p);
  const auto [n, d] = bordered_determinants(j);
  const double scale = entry_scale(j);
  if (scale == 0.0 || std::abs(d) <= tol::kLeviFloor * scale * scale * scale)
    throw LeviDegenerate("Levi determinant vanishes: surface is not strongly pseudoconvex here");
  if (std::abs(d.imag()) > tol::kDenomReality * std::abs(d))
    throw LeviDegenerate("Levi determinant is not real: defining expression is not real-valued");
  if (d.real() >= 0.0)
    throw LeviDegenerate(
        "Levi determinant is positive: defining expression should be negative inside the "
        "domain (try negating it)");
  return {p, -n / d, n, d};
}

BeltramiValue beltrami_coeff(const ExprPtr& surface, const CPoint& p, double on_surface_tol) {
  return beltrami_coeff(JetEvaluator(surface), p, on_surface_tol);
}

double rescaling_invariance_check(const ExprPtr& surface, const ExprPtr& eta, const CPoint& p,
                                  double on_surface_tol) {
  const Complex ev = eval(eta, p);
  if (std::abs(ev.imag()) > tol::kReality * (1.0 + std::abs(ev)))
    throw InvalidExpression("rescaling factor is not real-valued at the point");
  if (std::abs(ev) < 1e-12) throw InvalidExpression("rescaling factor vanishes at the point");
  const BeltramiValue base = beltrami_coeff(surface, p, on_surface_tol);
  const BeltramiValue scaled = beltrami_coeff(mul(eta, surface), p, on_surface_tol);
  return std::abs(scaled.coeff - base.coeff);
}

PointClassification classify(const BeltramiValue& value, double umbilic_tol) {
  PointClassification out;
  out.beta = std::abs(value.coeff);
  out.contact_order = out.beta <= umbilic_tol ? ContactOrder::AtLeast3 : ContactOrder::Exactly2;
  out.strongly_c_convex_here = out.beta < 1.0;
  return out;
}

PointClassification classify_point(const JetEvaluator& surface, const CPoint& p,
                                   double on_surface_tol, double umbilic_tol) {
  return classify(beltrami_coeff(surface, p, on_surface_tol), umbilic_tol);
}

PointClassification classify_point(const ExprPtr& surface, const CPoint& p, double on_surface_tol,
                                   double umbilic_tol) {
  return classify(beltrami_coeff(surface, p, on_surface_tol), umbilic_tol);
}

}  // namespace crbelt

#pragma once

#include <memory>
#include <utility>

#include "crbelt/beltrami.hpp"
#include "crbelt/jet.hpp"
#include "crbelt/types.hpp"

namespace crbelt {

struct CircularOptions {
  std::uint64_t seed = kDefaultSeed;
  int circularity_samples = 200;
  double circularity_tol = tol::kCircularity;
  double radial_tol = tol::kRadialSolve;
  double on_surface_tol = tol::kOnSurface;
};

/// Root of t -> r(t*direction) on the positive ray, bracketed from (1e-3, 10)
/// with s_max doubling up to 1e6, then bisected and Newton-polished. Requires
/// r < 0 at the inner end (origin inside the domain); NoCrossing otherwise.
double ray_crossing(const JetEvaluator& surface, const CPoint& direction,
                    double radial_tol = tol::kRadialSolve);

/// Boundary of a bounded strongly pseudoconvex complete circular domain,
/// reduced to the zeta = z1/z2 chart. Construction verifies rotation
/// invariance statistically and starlikeness along sampled rays.
class CircularSurface {
 public:
  explicit CircularSurface(ExprPtr defining, CircularOptions opts = {});

  const ExprPtr& defining() const { return jets_->expression(); }
  const JetEvaluator& jets() const { return *jets_; }
  double circularity_residual() const { return circularity_residual_; }
  std::pair<double, double> radial_bracket() const { return bracket_; }

  /// The s > 0 with (zeta*s, s) on S.
  double radial_solve(Complex zeta) const;
  /// The s > 0 with (s, xi*s) on S (roles of z1 and z2 swapped).
  double radial_solve_infinity(Complex xi) const;

  CPoint chart_point(Complex zeta) const;
  CPoint chart_point_infinity(Complex xi) const;

  /// b_S(zeta): the coefficient at the chart point (zeta*s, s) with s real
  /// positive, where (z2b/z2)^2 = 1 so the raw coefficient is the chart one.
  Complex b_chart(Complex zeta) const;
  /// b~_S(xi) at the chart point (s, xi*s).
  Complex b_chart_infinity(Complex xi) const;

  /// |b(zeta) - b~(1/zeta) * conj(zeta)^2/zeta^2|; vanishes identically in
  /// exact arithmetic.
  double chart_compatibility_residual(Complex zeta) const;

 private:
  std::shared_ptr<const JetEvaluator> jets_;
  CircularOptions opts_;
  std::pair<double, double> bracket_{0.0, 0.0};
  double circularity_residual_ = 0.0;
};

}  // namespace crbelt

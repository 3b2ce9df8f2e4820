#include "crbelt/circular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "crbelt/errors.hpp"

namespace crbelt {

namespace {

constexpr double kBracketInner = 1e-3;
constexpr double kBracketCap = 1e6;

double surface_value(const JetEvaluator& surface, const CPoint& p) {
  return eval(surface.expression(), p).real();
}

}  // namespace

double ray_crossing(const JetEvaluator& surface, const CPoint& direction, double radial_tol) {
  const auto at = [&](double t) -> CPoint { return {direction.z1 * t, direction.z2 * t}; };
  double lo = kBracketInner;
  double f_lo = surface_value(surface, at(lo));
  for (int shrink = 0; f_lo >= 0.0 && shrink < 20; ++shrink) {
    lo *= 0.5;
    f_lo = surface_value(surface, at(lo));
  }
  if (f_lo >= 0.0)
    throw NoCrossing("defining function is not negative near the origin along the ray");
  // March outward to the first sign change; a fixed outer bracket would skip
  // past it on expressions whose far branches go negative again.
  double hi = lo;
  double f_hi = f_lo;
  while (f_hi <= 0.0) {
    lo = hi;
    f_lo = f_hi;
    hi *= 1.5;
    if (hi > kBracketCap)
      throw NoCrossing("no radial sign change found: surface is not complete circular");
    f_hi = surface_value(surface, at(hi));
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = surface_value(surface, at(mid));
    if (f_mid <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double s = 0.5 * (lo + hi);
  // Newton polish on t -> r(t*direction).
  for (int it = 0; it < 3; ++it) {
    const CPoint p = at(s);
    const Jet2 j = surface.jet(p);
    const double fs = j.value.real();
    const double dfs =
        2.0 * (direction.z1 * j.r1() + direction.z2 * j.r2()).real();
    if (dfs == 0.0) break;
    const double next = s - fs / dfs;
    if (next > 0.0) s = next;
  }
  const double resid = std::abs(surface_value(surface, at(s)));
  const double scale = 1.0 + std::norm(direction.z1) + std::norm(direction.z2);
  if (resid > radial_tol * scale)
    throw NonConvergent("radial solve failed to reach the residual target");
  return s;
}

CircularSurface::CircularSurface(ExprPtr defining, CircularOptions opts)
    : jets_(std::make_shared<JetEvaluator>(std::move(defining))), opts_(opts) {
  std::mt19937_64 rng(opts_.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto random_direction = [&]() -> Complex {
    const double mag = std::exp(-1.5 + 3.0 * unit(rng));
    const double phase = 2.0 * std::numbers::pi * unit(rng);
    return std::polar(mag, phase);
  };

  // Radial probes: establish the bracket and check starlikeness (exactly one
  // sign change along each sampled ray).
  double s_min = 1e300, s_max = 0.0;
  for (int k = 0; k < 32; ++k) {
    const Complex zeta = random_direction();
    const CPoint dir{zeta, Complex(1.0)};
    const double s = ray_crossing(*jets_, dir, opts_.radial_tol);
    s_min = std::min(s_min, s);
    s_max = std::max(s_max, s);
    int sign_changes = 0;
    double prev = surface_value(*jets_, {dir.z1 * (0.25 * s), dir.z2 * (0.25 * s)});
    for (int g = 1; g <= 64; ++g) {
      const double t = 0.25 * s * std::pow(16.0, static_cast<double>(g) / 64.0);
      const double v = surface_value(*jets_, {dir.z1 * t, dir.z2 * t});
      if ((prev <= 0.0) != (v <= 0.0)) ++sign_changes;
      prev = v;
    }
    if (sign_changes != 1)
      throw NotCircular("ray meets the surface more than once: domain is not starlike");
  }
  bracket_ = {s_min, s_max};

  // Statistical circularity: |r(e^{i theta} z) - r(z)| on near-surface points.
  double worst = 0.0;
  int accepted = 0, attempts = 0;
  while (accepted < opts_.circularity_samples) {
    if (++attempts > opts_.circularity_samples + 50)
      throw NotCircular("too many inadmissible samples during the circularity check");
    try {
      const Complex zeta = random_direction();
      const double s = radial_solve(zeta);
      const double radial_jitter = 0.9 + 0.2 * unit(rng);
      const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
      const CPoint z{zeta * s * radial_jitter * phase, s * radial_jitter * phase};
      const Complex rot = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
      const Complex r0 = eval(jets_->expression(), z);
      const Complex r1 = eval(jets_->expression(), {z.z1 * rot, z.z2 * rot});
      worst = std::max(worst, std::abs(r1 - r0) / (1.0 + std::abs(r0)));
      ++accepted;
    } catch (const BranchError&) {
      continue;  // sampled outside the expression's admissible region
    }
  }
  circularity_residual_ = worst;
  if (worst > opts_.circularity_tol)
    throw NotCircular("defining expression is not invariant under simultaneous rotation");
}

double CircularSurface::radial_solve(Complex zeta) const {
  return ray_crossing(*jets_, {zeta, Complex(1.0)}, opts_.radial_tol);
}

double CircularSurface::radial_solve_infinity(Complex xi) const {
  return ray_crossing(*jets_, {Complex(1.0), xi}, opts_.radial_tol);
}

CPoint CircularSurface::chart_point(Complex zeta) const {
  const double s = radial_solve(zeta);
  return {zeta * s, Complex(s)};
}

CPoint CircularSurface::chart_point_infinity(Complex xi) const {
  const double s = radial_solve_infinity(xi);
  return {Complex(s), xi * s};
}

Complex CircularSurface::b_chart(Complex zeta) const {
  return beltrami_coeff(*jets_, chart_point(zeta), opts_.on_surface_tol).coeff;
}

Complex CircularSurface::b_chart_infinity(Complex xi) const {
  return beltrami_coeff(*jets_, chart_point_infinity(xi), opts_.on_surface_tol).coeff;
}

double CircularSurface::chart_compatibility_residual(Complex zeta) const {
  if (std::abs(zeta) == 0.0)
    throw InvalidExpression("chart compatibility requires zeta != 0");
  const Complex lhs = b_chart(zeta);
  const Complex zbar2 = std::conj(zeta) * std::conj(zeta);
  const Complex rhs = b_chart_infinity(1.0 / zeta) * zbar2 / (zeta * zeta);
  return std::abs(lhs - rhs);
}

}  // namespace crbelt

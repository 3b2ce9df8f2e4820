#include "crbelt/ellipse.hpp"

#include <cmath>
#include <numbers>

#include "crbelt/errors.hpp"

namespace crbelt {

namespace {

constexpr double kDegenerate = 1e-8;
constexpr double kSignTie = 1e-12;

// Unit modulus; sign fixed so Re > 0, with Im > 0 breaking the tie.
Complex canonical_unit(Complex g) {
  g /= std::abs(g);
  if (g.real() < -kSignTie || (std::abs(g.real()) <= kSignTie && g.imag() < 0.0)) g = -g;
  return g;
}

}  // namespace

EllipseField rlinear_ellipse(Complex A, Complex B) {
  const double a = std::abs(A), b = std::abs(B);
  if (b >= a) throw DegenerateEllipse("|B| >= |A|: level sets are not ellipses");
  EllipseField out;
  out.axis_ratio = (a + b) / (a - b);
  if (b == 0.0) {
    out.gamma = Complex(1.0);  // circle; every direction is minor
    return out;
  }
  // |gamma A + conj(gamma) B|^2 = a^2 + b^2 + 2 Re(gamma^2 A conj(B)) is
  // maximal where gamma^2 A conj(B) is real positive.
  const double phi = 0.5 * (std::arg(B) - std::arg(A));
  out.gamma = canonical_unit(std::polar(1.0, phi));
  return out;
}

EllipseField rossi_frame(const CPoint& p, double t) {
  const double norm2 = std::norm(p.z1) + std::norm(p.z2);
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw NotOnSurface("rossi_frame requires a point of the unit sphere");
  if (!(t > -1.0 && t < 1.0)) throw BadParams("Rossi parameter t must lie in (-1, 1)");

  const Complex z1 = p.z1, z2 = p.z2;
  const Complex z1b = std::conj(z1), z2b = std::conj(z2);
  // d f, d g, d h restricted to X = (gamma z2b, -gamma z1b) all take the form
  // gamma*A - t*conj(gamma)*A.
  const Complex candidates[3] = {
      z1 * z2b - z1b * z2,        // f = z1^2 + z2^2 + t(conj^2 + conj^2)
      z1 * z2b + z1b * z2,        // g = z1^2 - z2^2 - t(...)
      Complex(std::norm(z2) - std::norm(z1)),  // h = z1 z2 - t conj(z1 z2)
  };
  for (const Complex& A : candidates) {
    if (std::abs(A) <= kDegenerate) continue;
    EllipseField out = rlinear_ellipse(A, -t * A);
    out.frame = BeltramiFrame::Conjugate;
    out.minor_vector = {out.gamma * z2b, -out.gamma * z1b};
    return out;
  }
  throw AllDegenerate("all three Rossi defining functions degenerate (impossible on S^3)");
}

EllipseField minor_axis_from_beltrami(Complex b, const CPoint& p, const JetEvaluator& surface,
                                      BeltramiFrame frame) {
  const double mag = std::abs(b);
  if (mag <= tol::kUmbilic)
    throw UmbilicPoint("coefficient vanishes: no distinguished ellipse direction");
  if (mag >= 1.0) throw NotCConvex("|b| >= 1: outside the strong C-convexity regime");

  const Jet2 j = surface.jet(p);
  const Complex g1 = j.r1(), g2 = j.r2();
  const double gnorm = std::max(std::abs(g1), std::abs(g2));
  if (gnorm == 0.0) throw InvalidExpression("defining-function gradient vanishes at the point");

  // H_pS = {gamma*V}, V = (-r2, r1); Y = i*(conj r1, conj r2) is tangent and
  // transverse to H_pS. Then omega((gamma V), Y) = -i*gamma*(|r1|^2+|r2|^2),
  // so omega/conj(omega) = -gamma/conj(gamma).
  const std::array<Complex, 2> V = {-g2, g1};
  double phi;
  if (frame == BeltramiFrame::Standard) {
    // b * (-e^{2 i phi}) real positive
    phi = 0.5 * (std::numbers::pi - std::arg(b));
  } else {
    // b * (-e^{-2 i phi}) real positive
    phi = 0.5 * (std::arg(b) - std::numbers::pi);
  }
  Complex gamma = std::polar(1.0, phi);
  std::array<Complex, 2> X = {gamma * V[0], gamma * V[1]};
  const double xnorm = std::sqrt(std::norm(X[0]) + std::norm(X[1]));
  X[0] /= xnorm;
  X[1] /= xnorm;

  // Canonical sign: nonnegative real part of the leading coordinate.
  const int lead = std::abs(X[0]) > kSignTie ? 0 : 1;
  if (X[lead].real() < -kSignTie ||
      (std::abs(X[lead].real()) <= kSignTie && X[lead].imag() < 0.0)) {
    X[0] = -X[0];
    X[1] = -X[1];
    gamma = -gamma;
  }

  EllipseField out;
  out.axis_ratio = (1.0 + mag) / (1.0 - mag);
  out.gamma = gamma;
  out.minor_vector = X;
  out.frame = frame;
  return out;
}

EllipseField minor_axis_from_beltrami(Complex b, const CPoint& p, const ExprPtr& surface,
                                      BeltramiFrame frame) {
  return minor_axis_from_beltrami(b, p, JetEvaluator(surface), frame);
}

}  // namespace crbelt

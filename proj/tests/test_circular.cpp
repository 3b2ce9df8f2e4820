#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "crbelt/catalog.hpp"
#include "crbelt/circular.hpp"
#include "crbelt/errors.hpp"

using namespace crbelt;

TEST_CASE("radial solve on the sphere and the bulge") {
  const CircularSurface sphere(fixture("sphere").defining);
  CHECK(sphere.radial_solve(Complex(1.0)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  const CircularSurface bulge(fixture("bulge").defining);
  CHECK(bulge.radial_solve(Complex(0.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bulge.radial_solve(Complex(1.0)) ==
        doctest::Approx(std::pow(3.0, -0.25)).epsilon(1e-12));
}

TEST_CASE("the torus is not complete circular") {
  const ExprPtr torus = fixture("torus", {0.05}).defining;
  CHECK_THROWS_AS(CircularSurface{torus}, NoCrossing);
}

TEST_CASE("b_chart closed forms") {
  const CircularSurface sphere(fixture("sphere").defining);
  for (const Complex zeta : {Complex(0.5), Complex(-1.2, 0.7), Complex(0.0)})
    CHECK(std::abs(sphere.b_chart(zeta)) <= 1e-10);

  const CircularSurface lp4(fixture("lp", {4.0}).defining);
  for (double phi : {0.0, 0.4, 2.2}) {
    const Complex zeta = std::polar(1.0, phi);
    const Complex expected = -0.5 * std::polar(1.0, -2.0 * phi);
    CHECK(std::abs(lp4.b_chart(zeta) - expected) <= 1e-10);
  }

  const CircularSurface bulge(fixture("bulge").defining);
  for (const Complex zeta : {Complex(1.0), Complex(0.3, -0.8), Complex(-1.4, 0.2)}) {
    const Complex zb = std::conj(zeta);
    const double q = std::norm(zeta);
    const Complex expected = -1.5 * zb * zb / (q * q + 4.0 * q + 1.0);
    CHECK(std::abs(bulge.b_chart(zeta) - expected) <= 1e-10);
  }
  CHECK(std::abs(bulge.b_chart(Complex(1.0)) - Complex(-0.25)) <= 1e-12);
}

TEST_CASE("b_chart_infinity") {
  const CircularSurface sphere(fixture("sphere").defining);
  CHECK(std::abs(sphere.b_chart_infinity(Complex(0.7, 0.2))) <= 1e-10);

  const double eps = 0.05;
  const CircularSurface deformed(fixture("deformed_sphere", {eps}).defining);
  const Complex axis_value = deformed.b_chart_infinity(Complex(0.0));
  CHECK(std::abs(axis_value) >= 1e-3);
  CHECK(std::abs(axis_value - Complex(-eps)) <= 1e-12);

  const CircularSurface lp4(fixture("lp", {4.0}).defining);
  for (double phi : {0.3, 1.9}) {
    const Complex xi = std::polar(1.0, phi);
    const Complex expected = -0.5 * std::polar(1.0, -2.0 * phi);
    CHECK(std::abs(lp4.b_chart_infinity(xi) - expected) <= 1e-10);
  }
}

TEST_CASE("chart compatibility identity") {
  const CircularSurface lp4(fixture("lp", {4.0}).defining);
  CHECK(lp4.chart_compatibility_residual(2.0 * std::polar(1.0, 0.3)) <= 1e-8);

  const CircularSurface bulge(fixture("bulge").defining);
  CHECK(bulge.chart_compatibility_residual(Complex(1.0, 1.0)) <= 1e-8);

  const CircularSurface sphere(fixture("sphere").defining);
  CHECK(sphere.chart_compatibility_residual(Complex(0.4, -1.1)) <= 1e-12);
}

TEST_CASE("b_chart is independent of the chart-point phase") {
  const CircularSurface bulge(fixture("bulge").defining);
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const Complex zeta = std::polar(0.3 + 2.0 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
    const Complex reference = bulge.b_chart(zeta);
    const double s = bulge.radial_solve(zeta);
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    const Complex phase = std::polar(1.0, theta);
    // Rotate the chart point and undo the (z2b/z2)^2 frame factor.
    const CPoint rotated{zeta * s * phase, s * phase};
    const Complex raw = beltrami_coeff(bulge.jets(), rotated).coeff;
    const Complex corrected = raw * std::polar(1.0, 4.0 * theta);
    CHECK(std::abs(corrected - reference) <= 1e-9 * (1.0 + std::abs(reference)));
  }
}

TEST_CASE("radial solve varies continuously in zeta") {
  const CircularSurface deformed(fixture("deformed_sphere", {0.05}).defining);
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const Complex zeta = std::polar(0.2 + 3.0 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
    const Complex h = 1e-6 * std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
    const double s0 = deformed.radial_solve(zeta);
    const double s1 = deformed.radial_solve(zeta + h);
    CHECK(std::abs(s1 - s0) <= 10.0 * std::abs(h));
  }
}

TEST_CASE("construction rejects non-circular expressions") {
  // A displaced sphere is starlike around the origin but not invariant under
  // simultaneous rotation.
  const ExprPtr not_circular = parse("abs2(z1)+abs2(z2)+re(z1)-1");
  CHECK_THROWS_AS(CircularSurface{not_circular}, NotCircular);
}

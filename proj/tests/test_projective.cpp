#include <doctest.h>

#include <cmath>
#include <random>

#include "crbelt/beltrami.hpp"
#include "crbelt/catalog.hpp"
#include "crbelt/errors.hpp"
#include "crbelt/projective.hpp"

using namespace crbelt;

namespace {

std::mt19937_64 make_rng(std::uint64_t s) { return std::mt19937_64(s); }

ProjectiveMap random_well_conditioned(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> noise(-0.3, 0.3);
  std::array<Complex, 9> m;
  for (int k = 0; k < 9; ++k) {
    const double base = (k % 4 == 0) ? 1.0 : 0.0;
    m[k] = Complex(base + noise(rng), noise(rng));
  }
  return ProjectiveMap(m);
}

}  // namespace

TEST_CASE("apply: identity and the Cayley map") {
  const CPoint p{Complex(0.3), Complex(0.0, 0.4)};
  const CPoint q = apply(ProjectiveMap::identity(), p);
  CHECK(std::abs(q.z1 - p.z1) < 1e-15);
  CHECK(std::abs(q.z2 - p.z2) < 1e-15);

  const CPoint origin_image = apply(ProjectiveMap::cayley(), {Complex(0.0), Complex(0.0)});
  CHECK(std::abs(origin_image.z1) < 1e-15);
  CHECK(std::abs(origin_image.z2 - Complex(1.0)) < 1e-15);
}

TEST_CASE("Cayley maps Heisenberg points onto the unit sphere") {
  // (1/2, i/4) satisfies Im z2 = |z1|^2.
  const CPoint p{Complex(0.5), Complex(0.0, 0.25)};
  const CPoint q = apply(ProjectiveMap::cayley(), p);
  CHECK(std::abs(std::norm(q.z1) + std::norm(q.z2) - 1.0) <= 1e-12);

  const Fixture heis = fixture("heisenberg");
  auto rng = make_rng(41);
  for (int k = 0; k < 100; ++k) {
    const CPoint h = heis.sampler(rng);
    const CPoint s = apply(ProjectiveMap::cayley(), h);
    CHECK(std::abs(std::norm(s.z1) + std::norm(s.z2) - 1.0) <= 1e-12);
  }
}

TEST_CASE("inverse") {
  const ProjectiveMap id = ProjectiveMap::identity();
  const ProjectiveMap id_inv = inverse(id);
  for (int k = 0; k < 9; ++k) CHECK(std::abs(id_inv.matrix()[k] - id.matrix()[k]) < 1e-15);

  const ProjectiveMap diag(
      {Complex(1), 0, 0, 0, Complex(2), 0, 0, 0, Complex(3)});
  const ProjectiveMap diag_inv = inverse(diag);
  // Inverse up to scale: ratios of diagonal entries are 1, 1/2, 1/3.
  const Complex scale = diag_inv.matrix()[0];
  CHECK(std::abs(diag_inv.matrix()[4] / scale - Complex(0.5)) < 1e-12);
  CHECK(std::abs(diag_inv.matrix()[8] / scale - Complex(1.0 / 3.0)) < 1e-12);

  auto rng = make_rng(43);
  std::normal_distribution<double> g;
  for (int k = 0; k < 100; ++k) {
    const ProjectiveMap m = random_well_conditioned(rng);
    const ProjectiveMap mi = inverse(m);
    const CPoint p{Complex(0.4 * g(rng), 0.4 * g(rng)), Complex(0.4 * g(rng), 0.4 * g(rng))};
    const CPoint round_trip = apply(mi, apply(m, p));
    CHECK(std::abs(round_trip.z1 - p.z1) <= 1e-10);
    CHECK(std::abs(round_trip.z2 - p.z2) <= 1e-10);
  }

  const std::array<Complex, 9> singular = {Complex(1), Complex(2), 0, Complex(2), Complex(4),
                                           0,          0,          0, Complex(1)};
  CHECK_THROWS_AS(ProjectiveMap{singular}, SingularMatrix);
}

TEST_CASE("holomorphic jacobian determinant") {
  const CPoint p{Complex(0.2, 0.1), Complex(-0.4, 0.3)};
  CHECK(std::abs(holomorphic_jacobian_det(ProjectiveMap::identity(), p) - Complex(1.0)) < 1e-15);

  const ProjectiveMap scale2({Complex(1), 0, 0, 0, Complex(2), 0, 0, 0, Complex(2)});
  CHECK(std::abs(holomorphic_jacobian_det(scale2, p) - Complex(4.0)) < 1e-14);

  // Finite-difference oracle.
  auto rng = make_rng(47);
  const double h = 1e-5;
  for (int k = 0; k < 40; ++k) {
    const ProjectiveMap m = random_well_conditioned(rng);
    std::normal_distribution<double> g;
    const CPoint z{Complex(0.3 * g(rng), 0.3 * g(rng)), Complex(0.3 * g(rng), 0.3 * g(rng))};
    const auto shift = [&](Complex dz1, Complex dz2) {
      return apply(m, {z.z1 + dz1, z.z2 + dz2});
    };
    const CPoint px = shift(Complex(h), 0), mx = shift(Complex(-h), 0);
    const CPoint py = shift(0, Complex(h)), my = shift(0, Complex(-h));
    const Complex d11 = (px.z1 - mx.z1) / (2.0 * h), d21 = (px.z2 - mx.z2) / (2.0 * h);
    const Complex d12 = (py.z1 - my.z1) / (2.0 * h), d22 = (py.z2 - my.z2) / (2.0 * h);
    const Complex fd = d11 * d22 - d12 * d21;
    const Complex closed = holomorphic_jacobian_det(m, z);
    CHECK(std::abs(fd - closed) <= 1e-6 * (1.0 + std::abs(closed)));
  }
}

TEST_CASE("pullback under the identity is the same expression") {
  const ExprPtr bulge = fixture("bulge").defining;
  const ExprPtr back = pullback_surface(ProjectiveMap::identity(), bulge);
  auto rng = make_rng(53);
  std::normal_distribution<double> g;
  for (int k = 0; k < 30; ++k) {
    const CPoint p{Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
    CHECK(std::abs(eval(back, p) - eval(bulge, p)) <= 1e-12 * (1.0 + std::abs(eval(bulge, p))));
  }
}

TEST_CASE("pullback of the sphere under the inverse Cayley map vanishes on Heisenberg") {
  const ExprPtr sphere = fixture("sphere").defining;
  const ExprPtr pulled = pullback_surface(ProjectiveMap::cayley(), sphere);
  const Fixture heis = fixture("heisenberg");
  auto rng = make_rng(59);
  for (int k = 0; k < 100; ++k) {
    const CPoint h = heis.sampler(rng);
    CHECK(std::abs(eval(pulled, h)) <= 1e-10);
  }
}

TEST_CASE("pullback under the inversion generator substitutes rationally") {
  const ExprPtr sphere = fixture("sphere").defining;
  const ExprPtr pulled = pullback_surface(ProjectiveMap::inversion_generator(), sphere);
  const CPoint p{Complex(2.0), Complex(0.5)};
  // r(1/2, 1/4) = |1/2|^2 + |1/4|^2 - 1
  const double expected = 0.25 + 0.0625 - 1.0;
  CHECK(std::abs(eval(pulled, p) - Complex(expected)) <= 1e-14);
}

TEST_CASE("transformation law: identity, scaling, rotation") {
  const Fixture bulge = fixture("bulge");
  auto rng = make_rng(61);
  const CPoint p = bulge.sampler(rng);
  CHECK(check_transformation_law(ProjectiveMap::identity(), bulge.defining, p) <= 1e-12);

  // Real scaling by 2 maps the sphere onto the radius-2 sphere; both sides
  // vanish, so the law holds exactly.
  const ProjectiveMap scale2({Complex(1), 0, 0, 0, Complex(2), 0, 0, 0, Complex(2)});
  const Fixture sphere = fixture("sphere");
  const CPoint sp = sphere.sampler(rng);
  CHECK(check_transformation_law(scale2, sphere.defining, sp) <= 1e-10);

  // Rotation (z1, z2) -> (e^{i theta} z1, z2) keeps the bulge invariant and
  // multiplies b by e^{2 i theta} at the rotated point.
  const double theta = 0.7;
  const Complex phase = std::polar(1.0, theta);
  const ProjectiveMap rot({Complex(1), 0, 0, 0, phase, 0, 0, 0, Complex(1)});
  const CPoint q = bulge.sampler(rng);
  CHECK(check_transformation_law(rot, bulge.defining, q) <= 1e-8);
  const Complex b_here = beltrami_coeff(*bulge.jets, q).coeff;
  const Complex b_image = beltrami_coeff(*bulge.jets, apply(rot, q)).coeff;
  CHECK(std::abs(b_here - b_image * phase * phase) <= 1e-8 * (1.0 + std::abs(b_here)));
}

TEST_CASE("|b| is invariant under near-identity projective maps") {
  const Fixture bulge = fixture("bulge");
  auto rng = make_rng(67);
  std::uniform_real_distribution<double> noise(-0.05, 0.05);
  for (int k = 0; k < 10; ++k) {
    std::array<Complex, 9> entries;
    for (int j = 0; j < 9; ++j) {
      const double base = (j % 4 == 0) ? 1.0 : 0.0;
      entries[j] = Complex(base + noise(rng), noise(rng));
    }
    const ProjectiveMap m(entries);
    const CPoint p = bulge.sampler(rng);
    const double b_here = std::abs(beltrami_coeff(*bulge.jets, p).coeff);
    const ExprPtr image = pullback_surface(inverse(m), bulge.defining);
    const double b_image = std::abs(beltrami_coeff(image, apply(m, p)).coeff);
    CHECK(std::abs(b_here - b_image) <= 1e-7 * (1.0 + b_here));
  }
}

TEST_CASE("projective map JSON round-trip") {
  const ProjectiveMap m = ProjectiveMap::cayley();
  const ProjectiveMap back = projective_map_from_json(to_json(m));
  for (int k = 0; k < 9; ++k) CHECK(m.matrix()[k] == back.matrix()[k]);
}

TEST_CASE("apply at the line at infinity") {
  const ProjectiveMap gen = ProjectiveMap::inversion_generator();
  const CPoint z1_zero{Complex(0.0), Complex(0.7)};
  CHECK_THROWS_AS(apply(gen, z1_zero), AtInfinity);
}

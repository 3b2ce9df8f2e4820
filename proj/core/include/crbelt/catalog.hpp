#pragma once

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "crbelt/jet.hpp"
#include "crbelt/types.hpp"

namespace crbelt {

/// A built-in hypersurface with (when known) the closed form of its Beltrami
/// coefficient, an on-surface sampler and a smooth-locus predicate.
struct Fixture {
  std::string name;
  ExprPtr defining;
  std::shared_ptr<const JetEvaluator> jets;
  std::function<Complex(const CPoint&)> closed_form_b;  // empty when unknown
  std::function<CPoint(std::mt19937_64&)> sampler;
  std::function<bool(const CPoint&)> admissible;
  bool complete_circular = false;
};

/// Builds a fixture by name:
///   sphere            |z1|^2 + |z2|^2 - 1
///   heisenberg        |z1|^2 - Im z2
///   lp                |z1|^p + |z2|^p - 1 (param p > 0; smooth locus only)
///   bulge             (|z1|^2+|z2|^2)^2 + |z1|^4 + |z2|^4 - 2
///   torus             (log|z1|)^2 + (log|z2|)^2 - eps^2 (param 0 < eps < 0.2)
///   deformed_sphere   sphere + eps*Re(z1^2 conj(z2)^2)  (param 0 < eps < 0.2)
Fixture fixture(const std::string& name, const std::vector<double>& params = {});

std::vector<std::string> fixture_names();

struct FixtureReport {
  double max_deviation = 0.0;
  CPoint worst_point;
  int samples = 0;
};

/// Max |numeric b - closed_form_b| over sampled surface points.
FixtureReport verify_fixture(const Fixture& f, int n_samples,
                             std::uint64_t seed = kDefaultSeed);

struct ContactReport {
  double slope_z1_axis = 0.0;   // log-log slope of the radial gap to 2|z1|^2+|z2|^2=2
  double slope_z2_axis = 0.0;   // same against |z1|^2+2|z2|^2=2
  double sphere_self_gap = 0.0; // degenerate sanity case
};

/// Fits the contact order of the bulge against its axis ellipsoids: the
/// radial gap scales like d^4 in the arc distance d, so both slopes land in
/// [3.8, 4.2].
ContactReport fourth_order_contact_check();

}  // namespace crbelt

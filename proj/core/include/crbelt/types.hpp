#pragma once

#include <complex>
#include <cstdint>

namespace crbelt {

using Complex = std::complex<double>;

/// A point of C^2.
struct CPoint {
  Complex z1{};
  Complex z2{};
};

inline CPoint conj(const CPoint& p) { return {std::conj(p.z1), std::conj(p.z2)}; }

/// Default seed for every pseudo-random sampler in the library. All sampling
/// is reproducible; callers may pass their own seed.
inline constexpr std::uint64_t kDefaultSeed = 987654321u;

/// Numeric thresholds. These are the module constants of the contracts;
/// every function that depends on one accepts it as a defaulted parameter.
namespace tol {
inline constexpr double kReality = 1e-12;       // |Im r| <= kReality*(1+|r|)
inline constexpr double kConjSymmetry = 1e-10;  // jet conjugate-symmetry
inline constexpr double kFiniteDiff = 1e-6;     // symbolic vs finite difference
inline constexpr double kFiniteDiffStep = 1e-5;
inline constexpr double kOnSurface = 1e-8;      // |r(p)| for "p lies on S"
inline constexpr double kLeviFloor = 1e-10;     // |D| floor vs entry-scale^3
inline constexpr double kDenomReality = 1e-8;   // |Im D| <= kDenomReality*|D|
inline constexpr double kUmbilic = 1e-8;        // |b| below this is umbilic
inline constexpr double kRescaling = 1e-9;      // defining-function independence
inline constexpr double kTransformLaw = 1e-7;   // projective transformation law
inline constexpr double kChartCompat = 1e-8;    // chart compatibility residual
inline constexpr double kCircularity = 1e-9;    // rotation-invariance residual
inline constexpr double kRadialSolve = 1e-12;   // |r| after the radial solve
inline constexpr double kContourFloor = 1e-9;   // |f| floor on contours
inline constexpr double kWindingResidual = 0.05;
inline constexpr double kBoundaryMargin = 1e-6; // search-boundary |b| margin
inline constexpr double kMatrixInvertibility = 1e-12;
}  // namespace tol

}  // namespace crbelt

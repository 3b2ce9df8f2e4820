#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crbelt {

/// Base class of every domain error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in the expression DSL; carries the byte offset.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

/// Structural violation (literal-zero denominator, bad argument counts, ...).
struct InvalidExpression : Error {
  using Error::Error;
};

/// A log/powr argument failed the positive-real branch requirement.
struct BranchError : Error {
  using Error::Error;
};

struct NotOnSurface : Error {
  using Error::Error;
};

/// Strong pseudoconvexity failed at the point (or the defining function has
/// the wrong sign / is not real-valued).
struct LeviDegenerate : Error {
  using Error::Error;
};

struct AtInfinity : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

/// The radial bracket could not be established: input is not the boundary of
/// a complete circular domain.
struct NoCrossing : Error {
  using Error::Error;
};

/// Rotation-invariance (or starlikeness) check failed at construction.
struct NotCircular : Error {
  using Error::Error;
};

struct ZeroOnContour : Error {
  using Error::Error;
};

/// The sampled coefficient vanishes identically at contour resolution.
struct IdenticallyZero : Error {
  using Error::Error;
};

struct NonConvergent : Error {
  using Error::Error;
};

/// A cell boundary kept hitting zeros after the retry budget.
struct BoundaryZero : Error {
  using Error::Error;
};

/// The hypersurface is projective-umbilic on the z1-axis, so the large-circle
/// asymptotics of the winding argument do not apply.
struct AxisUmbilic : Error {
  using Error::Error;
};

/// |B| >= |A| in the R-linear ellipse construction.
struct DegenerateEllipse : Error {
  using Error::Error;
};

struct UmbilicPoint : Error {
  using Error::Error;
};

struct NotCConvex : Error {
  using Error::Error;
};

/// All three Rossi defining functions degenerated (cannot occur on S^3).
struct AllDegenerate : Error {
  using Error::Error;
};

struct UnknownFixture : Error {
  using Error::Error;
};

struct BadParams : Error {
  using Error::Error;
};

}  // namespace crbelt

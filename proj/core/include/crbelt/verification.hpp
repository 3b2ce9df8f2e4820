#pragma once

#include <random>
#include <string>
#include <vector>

#include "crbelt/expr.hpp"
#include "crbelt/types.hpp"

namespace crbelt {

struct CheckResult {
  int criterion = 0;  // acceptance criterion this check belongs to (1..10)
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::string only_group;  // empty runs everything
};

/// Runs the full verification suite (or one group): fixture closed forms,
/// defining-function independence, the projective transformation law, chart
/// machinery, winding-based umbilic localization, the Rossi ellipse suite
/// and the property checks. Pure and deterministic for a fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

std::vector<std::string> verification_groups();

/// Random expression tree over the four variables, structured to stay
/// admissible and numerically tame (log/powr arguments are wrapped as
/// abs2(.)+c). Used by the property suites.
ExprPtr random_expression(std::mt19937_64& rng, int max_depth);

}  // namespace crbelt

#pragma once

#include <array>

#include "crbelt/expr.hpp"
#include "crbelt/types.hpp"

namespace crbelt {

/// Value, first and second Wirtinger derivatives of a defining function at a
/// point. Variable order is z1, z2, z1b, z2b; hess is symmetric and stores
/// the ten independent second derivatives mirrored across the diagonal.
struct Jet2 {
  Complex value{};
  std::array<Complex, 4> grad{};
  std::array<std::array<Complex, 4>, 4> hess{};

  Complex r1() const { return grad[0]; }
  Complex r2() const { return grad[1]; }
  Complex r1b() const { return grad[2]; }
  Complex r2b() const { return grad[3]; }
  Complex r11() const { return hess[0][0]; }
  Complex r12() const { return hess[0][1]; }
  Complex r22() const { return hess[1][1]; }
  Complex r11b() const { return hess[0][2]; }
  Complex r12b() const { return hess[0][3]; }
  Complex r21b() const { return hess[1][2]; }
  Complex r22b() const { return hess[1][3]; }
  Complex r1b1b() const { return hess[2][2]; }
  Complex r1b2b() const { return hess[2][3]; }
  Complex r2b2b() const { return hess[3][3]; }
};

/// Max relative defect of the conjugate-symmetry relations that hold for a
/// real-valued defining function (r1b = conj(r1), r1b1b = conj(r11),
/// r21b = conj(r12b), ... and reality of r11b, r22b).
double conjugate_symmetry_defect(const Jet2& j);

/// Caches the 4 first- and 10 second-derivative ASTs of a defining
/// expression. Immutable after construction; evaluation is pure and safe for
/// unrestricted concurrent use.
class JetEvaluator {
 public:
  explicit JetEvaluator(ExprPtr defining);

  const ExprPtr& expression() const { return expr_; }
  const ExprPtr& derivative(Var v) const { return grad_[index(v)]; }

  Complex value(const CPoint& p) const { return eval(expr_, p); }
  Jet2 jet(const CPoint& p) const;

 private:
  ExprPtr expr_;
  std::array<ExprPtr, 4> grad_;
  std::array<std::array<ExprPtr, 4>, 4> hess_;  // upper triangle (i <= j)
};

/// One-shot jet of e at p (builds the derivative tables; prefer JetEvaluator
/// when evaluating a surface more than once).
Jet2 jet2(const ExprPtr& e, const CPoint& p);

}  // namespace crbelt

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "crbelt/types.hpp"

namespace crbelt {

/// The four formal variables of the DSL. Z1B/Z2B are the conjugate variables;
/// evaluation binds them to the conjugates of the point's coordinates.
enum class Var : int { Z1 = 0, Z2 = 1, Z1B = 2, Z2B = 3 };

constexpr int index(Var v) { return static_cast<int>(v); }
Var conjugate(Var v);
std::string_view name(Var v);

enum class ExprKind { Const, Variable, Add, Mul, Neg, Div, PowI, PowR, Log, Exp };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node. Build through the factory functions below,
/// which fold constants and keep trees in a canonical-enough form.
class Expr {
 public:
  ExprKind kind;
  Complex value{};    // Const
  Var var{Var::Z1};   // Variable
  ExprPtr a;          // first child
  ExprPtr b;          // second child (Add, Mul, Div)
  long ipow = 0;      // PowI exponent
  double rpow = 0.0;  // PowR exponent

  explicit Expr(ExprKind k) : kind(k) {}
};

// Node factories. Division by the literal zero constant and log/powr of the
// literal zero constant are rejected with InvalidExpression.
ExprPtr constant(Complex c);
ExprPtr constant(double c);
ExprPtr variable(Var v);
ExprPtr add(ExprPtr x, ExprPtr y);
ExprPtr sub(ExprPtr x, ExprPtr y);
ExprPtr mul(ExprPtr x, ExprPtr y);
ExprPtr neg(ExprPtr x);
ExprPtr div(ExprPtr x, ExprPtr y);
ExprPtr powi(ExprPtr x, long k);
ExprPtr powr(ExprPtr x, double a);
ExprPtr log(ExprPtr x);
ExprPtr exp(ExprPtr x);

/// Parses the surface DSL:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' ['-'] integer)?
///   atom   := number | 'i' | 'z1' | 'z2' | call | '(' expr ')'
///   call   := ident '(' expr [',' number] ')',
///             ident in {conj, abs2, re, im, log, exp, powr}
/// Sugar is expanded at parse time: conj -> structural conjugation,
/// abs2(e) -> e*conj(e), re(e) -> (e+conj(e))/2, im(e) -> (e-conj(e))/(2i).
ExprPtr parse(std::string_view source);

/// Structural conjugation: swaps Z1<->Z1B, Z2<->Z2B, conjugates constants and
/// maps every operator node-for-node. For Log/PowR this relies on the
/// positive-real branch contract enforced at evaluation.
ExprPtr conjugate(const ExprPtr& e);

/// Exact symbolic Wirtinger derivative, treating the four variables as
/// independent.
ExprPtr wirtinger_derive(const ExprPtr& e, Var v);

/// Evaluates at p, binding z1b/z2b to conj(z1)/conj(z2). Throws BranchError
/// when a log/powr argument is not a positive real (|Im| <= kReality*|arg|,
/// Re > 0).
Complex eval(const ExprPtr& e, const CPoint& p);

/// Prints in the grammar above; parse(to_string(e)) rebuilds e node-for-node.
std::string to_string(const ExprPtr& e);

bool structurally_equal(const ExprPtr& x, const ExprPtr& y);

/// |Im value| measured against kReality*(1+|value|); used by the defining-
/// expression reality checks at use sites.
bool is_real_valued_at(const ExprPtr& e, const CPoint& p, double tolerance = tol::kReality);

}  // namespace crbelt

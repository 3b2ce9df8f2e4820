#include "crbelt/projective.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <json.hpp>

#include "crbelt/beltrami.hpp"
#include "crbelt/errors.hpp"

namespace crbelt {

namespace {

Complex det3(const std::array<Complex, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

double max_entry(const std::array<Complex, 9>& m) {
  double s = 0.0;
  for (const Complex& v : m) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace

ProjectiveMap::ProjectiveMap(const std::array<Complex, 9>& entries) : m_(entries), det_(det3(entries)) {
  const double scale = max_entry(m_);
  if (std::abs(det_) <= tol::kMatrixInvertibility * scale * scale * scale)
    throw SingularMatrix("projective map matrix is singular");
}

ProjectiveMap ProjectiveMap::identity() {
  return ProjectiveMap({Complex(1), 0, 0, 0, Complex(1), 0, 0, 0, Complex(1)});
}

ProjectiveMap ProjectiveMap::cayley() {
  const Complex i(0.0, 1.0);
  return ProjectiveMap({i, 0, Complex(1), 0, Complex(2), 0, i, 0, Complex(-1)});
}

ProjectiveMap ProjectiveMap::inversion_generator() {
  return ProjectiveMap({0, Complex(1), 0, Complex(1), 0, 0, 0, 0, Complex(1)});
}

Complex ProjectiveMap::denominator_at(const CPoint& p) const {
  return m_[0] + m_[1] * p.z1 + m_[2] * p.z2;
}

namespace {

Complex checked_denominator(const ProjectiveMap& m, const CPoint& p) {
  const auto& a = m.matrix();
  const Complex w = m.denominator_at(p);
  const double scale = std::max({std::abs(a[0]), std::abs(a[1] * p.z1), std::abs(a[2] * p.z2)});
  if (scale == 0.0 || std::abs(w) <= tol::kMatrixInvertibility * scale)
    throw AtInfinity("point lies on the map's line at infinity");
  return w;
}

}  // namespace

CPoint apply(const ProjectiveMap& m, const CPoint& p) {
  const auto& a = m.matrix();
  const Complex w = checked_denominator(m, p);
  return {(a[3] + a[4] * p.z1 + a[5] * p.z2) / w, (a[6] + a[7] * p.z1 + a[8] * p.z2) / w};
}

ProjectiveMap inverse(const ProjectiveMap& m) {
  const auto& a = m.matrix();
  const Complex d = m.det();
  std::array<Complex, 9> inv;
  inv[0] = (a[4] * a[8] - a[5] * a[7]) / d;
  inv[1] = (a[2] * a[7] - a[1] * a[8]) / d;
  inv[2] = (a[1] * a[5] - a[2] * a[4]) / d;
  inv[3] = (a[5] * a[6] - a[3] * a[8]) / d;
  inv[4] = (a[0] * a[8] - a[2] * a[6]) / d;
  inv[5] = (a[2] * a[3] - a[0] * a[5]) / d;
  inv[6] = (a[3] * a[7] - a[4] * a[6]) / d;
  inv[7] = (a[1] * a[6] - a[0] * a[7]) / d;
  inv[8] = (a[0] * a[4] - a[1] * a[3]) / d;
  return ProjectiveMap(inv);
}

Complex holomorphic_jacobian_det(const ProjectiveMap& m, const CPoint& p) {
  const Complex w = checked_denominator(m, p);
  return m.det() / (w * w * w);
}

namespace {

// Substitutes replacement expressions for the four variables, memoizing on
// node identity so shared subtrees stay shared.
ExprPtr substitute(const ExprPtr& e, const std::array<ExprPtr, 4>& repl,
                   std::unordered_map<const Expr*, ExprPtr>& memo) {
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  ExprPtr out;
  switch (e->kind) {
    case ExprKind::Const: out = e; break;
    case ExprKind::Variable: out = repl[index(e->var)]; break;
    case ExprKind::Add: out = add(substitute(e->a, repl, memo), substitute(e->b, repl, memo)); break;
    case ExprKind::Mul: out = mul(substitute(e->a, repl, memo), substitute(e->b, repl, memo)); break;
    case ExprKind::Neg: out = neg(substitute(e->a, repl, memo)); break;
    case ExprKind::Div: out = div(substitute(e->a, repl, memo), substitute(e->b, repl, memo)); break;
    case ExprKind::PowI: out = powi(substitute(e->a, repl, memo), e->ipow); break;
    case ExprKind::PowR: out = powr(substitute(e->a, repl, memo), e->rpow); break;
    case ExprKind::Log: out = log(substitute(e->a, repl, memo)); break;
    case ExprKind::Exp: out = exp(substitute(e->a, repl, memo)); break;
  }
  memo.emplace(e.get(), out);
  return out;
}

}  // namespace

ExprPtr pullback_surface(const ProjectiveMap& m, const ExprPtr& surface) {
  const auto& a = m.matrix();
  const ExprPtr z1 = variable(Var::Z1);
  const ExprPtr z2 = variable(Var::Z2);
  const ExprPtr w = add(constant(a[0]), add(mul(constant(a[1]), z1), mul(constant(a[2]), z2)));
  const ExprPtr u = add(constant(a[3]), add(mul(constant(a[4]), z1), mul(constant(a[5]), z2)));
  const ExprPtr v = add(constant(a[6]), add(mul(constant(a[7]), z1), mul(constant(a[8]), z2)));
  const ExprPtr comp1 = div(u, w);
  const ExprPtr comp2 = div(v, w);
  const std::array<ExprPtr, 4> repl = {comp1, comp2, conjugate(comp1), conjugate(comp2)};
  std::unordered_map<const Expr*, ExprPtr> memo;
  return substitute(surface, repl, memo);
}

double check_transformation_law(const ProjectiveMap& m, const ExprPtr& surface, const CPoint& p,
                                double on_surface_tol) {
  const Complex b_here = beltrami_coeff(surface, p, on_surface_tol).coeff;
  const ExprPtr image_surface = pullback_surface(inverse(m), surface);
  const CPoint q = apply(m, p);
  const Complex b_image = beltrami_coeff(image_surface, q, on_surface_tol).coeff;
  const Complex jac = holomorphic_jacobian_det(m, p);
  return std::abs(b_here - b_image * jac / std::conj(jac));
}

std::string to_json(const ProjectiveMap& m) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const Complex& v : m.matrix()) j.push_back({v.real(), v.imag()});
  return j.dump();
}

ProjectiveMap projective_map_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_array() || j.size() != 9)
    throw InvalidExpression("projective map JSON must be an array of nine [re, im] pairs");
  std::array<Complex, 9> m;
  for (std::size_t k = 0; k < 9; ++k) {
    const auto& entry = j[k];
    if (!entry.is_array() || entry.size() != 2)
      throw InvalidExpression("projective map entries must be [re, im] pairs");
    m[k] = Complex(entry[0].get<double>(), entry[1].get<double>());
  }
  return ProjectiveMap(m);
}

}  // namespace crbelt

#include "crbelt/jet.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace crbelt {

namespace {

double pair_defect(Complex lhs, Complex rhs_conj) {
  return std::abs(lhs - std::conj(rhs_conj)) / (1.0 + std::max(std::abs(lhs), std::abs(rhs_conj)));
}

}  // namespace

double conjugate_symmetry_defect(const Jet2& j) {
  double d = pair_defect(j.r1b(), j.r1());
  d = std::max(d, pair_defect(j.r2b(), j.r2()));
  d = std::max(d, pair_defect(j.r1b1b(), j.r11()));
  d = std::max(d, pair_defect(j.r2b2b(), j.r22()));
  d = std::max(d, pair_defect(j.r1b2b(), j.r12()));
  d = std::max(d, pair_defect(j.r21b(), j.r12b()));
  // r11b and r22b are real for a real-valued defining function.
  d = std::max(d, std::abs(j.r11b().imag()) / (1.0 + std::abs(j.r11b())));
  d = std::max(d, std::abs(j.r22b().imag()) / (1.0 + std::abs(j.r22b())));
  return d;
}

JetEvaluator::JetEvaluator(ExprPtr defining) : expr_(std::move(defining)) {
  for (int i = 0; i < 4; ++i) grad_[i] = wirtinger_derive(expr_, static_cast<Var>(i));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) hess_[i][j] = wirtinger_derive(grad_[i], static_cast<Var>(j));
}

Jet2 JetEvaluator::jet(const CPoint& p) const {
  Jet2 out;
  out.value = eval(expr_, p);
  for (int i = 0; i < 4; ++i) out.grad[i] = eval(grad_[i], p);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const Complex v = eval(hess_[i][j], p);
      out.hess[i][j] = v;
      out.hess[j][i] = v;
    }
  return out;
}

Jet2 jet2(const ExprPtr& e, const CPoint& p) { return JetEvaluator(e).jet(p); }

}  // namespace crbelt

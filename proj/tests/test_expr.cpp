#include <doctest.h>

#include <cmath>
#include <random>

#include "crbelt/errors.hpp"
#include "crbelt/expr.hpp"
#include "crbelt/verification.hpp"

using namespace crbelt;

namespace {

const CPoint kDiag{Complex(1.0 / std::sqrt(2.0)), Complex(1.0 / std::sqrt(2.0))};

CPoint random_point(std::mt19937_64& rng, double scale = 0.7) {
  std::normal_distribution<double> g;
  return {Complex(scale * g(rng), scale * g(rng)), Complex(scale * g(rng), scale * g(rng))};
}

}  // namespace

TEST_CASE("parse expands sugar into the expected trees") {
  const ExprPtr sphere = parse("abs2(z1)+abs2(z2)-1");
  const ExprPtr by_hand =
      add(add(mul(variable(Var::Z1), variable(Var::Z1B)), mul(variable(Var::Z2), variable(Var::Z2B))),
          constant(-1.0));
  CHECK(structurally_equal(sphere, by_hand));

  // re/im expansions evaluate correctly.
  const ExprPtr re_expr = parse("re(z1)");
  const ExprPtr im_expr = parse("im(z2)");
  const CPoint p{Complex(0.3, -0.8), Complex(-1.1, 0.25)};
  CHECK(std::abs(eval(re_expr, p) - Complex(0.3)) < 1e-15);
  CHECK(std::abs(eval(im_expr, p) - Complex(0.25)) < 1e-15);
}

TEST_CASE("bulge defining expression parses and vanishes on the surface") {
  const ExprPtr bulge = parse("(abs2(z1)+abs2(z2))^2+abs2(z1)^2+abs2(z2)^2-2");
  const double s = std::pow(3.0, -0.25);
  CHECK(std::abs(eval(bulge, {Complex(s), Complex(s)})) < 1e-14);
  CHECK(std::abs(eval(bulge, {Complex(0.0), Complex(1.0)})) < 1e-14);
}

TEST_CASE("powr and integer powers agree on a random sample") {
  const ExprPtr a = parse("powr(abs2(z1),2)");
  const ExprPtr b = parse("abs2(z1)^2");
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    CPoint p = random_point(rng);
    if (std::abs(p.z1) < 1e-3) continue;
    CHECK(std::abs(eval(a, p) - eval(b, p)) <= 1e-12 * (1.0 + std::abs(eval(b, p))));
  }
}

TEST_CASE("parse reports positions and unknown identifiers") {
  CHECK_THROWS_AS(parse("z1+"), ParseError);
  CHECK_THROWS_AS(parse("zeta"), ParseError);
  CHECK_THROWS_AS(parse("(z1"), ParseError);
  CHECK_THROWS_AS(parse("powr(z1, z2)"), ParseError);
  try {
    parse("z1*foo(z2)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
}

TEST_CASE("literal-zero denominators and arguments are rejected") {
  CHECK_THROWS_AS(parse("z1/0"), InvalidExpression);
  CHECK_THROWS_AS(parse("log(0)"), InvalidExpression);
  CHECK_THROWS_AS(parse("powr(0, 1.5)"), InvalidExpression);
}

TEST_CASE("conjugate swaps variables and conjugates constants") {
  CHECK(structurally_equal(conjugate(variable(Var::Z1)), variable(Var::Z1B)));
  CHECK(structurally_equal(conjugate(constant(Complex(2.0, 3.0))), constant(Complex(2.0, -3.0))));
}

TEST_CASE("conjugation is an involution on random trees") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const ExprPtr e = random_expression(rng, 4);
    CHECK(structurally_equal(conjugate(conjugate(e)), e));
  }
}

TEST_CASE("wirtinger derivative of the sphere is the conjugate coordinate") {
  const ExprPtr sphere = parse("abs2(z1)+abs2(z2)-1");
  CHECK(structurally_equal(wirtinger_derive(sphere, Var::Z1), variable(Var::Z1B)));
  CHECK(structurally_equal(wirtinger_derive(sphere, Var::Z2B), variable(Var::Z2)));
}

TEST_CASE("powr chain rule") {
  const ExprPtr e = parse("powr(abs2(z1), 2)");
  const ExprPtr d = wirtinger_derive(e, Var::Z1);
  // d/dz1 (z1 z1b)^2 = 2 (z1 z1b) z1b
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const CPoint p = random_point(rng);
    if (std::abs(p.z1) < 1e-2) continue;
    const Complex expected = 2.0 * p.z1 * std::conj(p.z1) * std::conj(p.z1);
    CHECK(std::abs(eval(d, p) - expected) <= 1e-12 * (1.0 + std::abs(expected)));
  }
}

TEST_CASE("eval basics") {
  const ExprPtr sphere = parse("abs2(z1)+abs2(z2)-1");
  CHECK(std::abs(eval(sphere, kDiag)) < 1e-15);

  const ExprPtr log_abs = parse("log(abs2(z1))");
  CHECK(std::abs(eval(log_abs, {Complex(std::exp(1.0)), Complex(0.5, 0.5)}) - Complex(2.0)) <
        1e-13);

  // torus value at (1, 1) with eps = 0.1: (log 1)^2 + (log 1)^2 - 0.01
  const ExprPtr torus = parse("(log(abs2(z1))/2)^2+(log(abs2(z2))/2)^2-0.1^2");
  CHECK(eval(torus, {Complex(1.0), Complex(1.0)}).real() == doctest::Approx(-0.01).epsilon(1e-12));
}

TEST_CASE("branch errors outside the positive-real domain") {
  const CPoint axis{Complex(0.0), Complex(1.0)};
  const CPoint imag_pt{Complex(0.0, 1.0), Complex(0.0)};
  const CPoint neg_pt{Complex(-2.0, 0.0), Complex(0.0)};
  CHECK_THROWS_AS(eval(parse("log(abs2(z1))"), axis), BranchError);
  CHECK_THROWS_AS(eval(parse("powr(abs2(z1), 1.5)"), axis), BranchError);
  CHECK_THROWS_AS(eval(parse("log(z1)"), imag_pt), BranchError);
  CHECK_THROWS_AS(eval(parse("log(z1)"), neg_pt), BranchError);
}

TEST_CASE("real-valued defining expressions stay real on admissible points") {
  std::mt19937_64 rng(19);
  const ExprPtr fixtures[] = {
      parse("abs2(z1)+abs2(z2)-1"),
      parse("(abs2(z1)+abs2(z2))^2+abs2(z1)^2+abs2(z2)^2-2"),
      parse("(log(abs2(z1))/2)^2+(log(abs2(z2))/2)^2-0.01"),
      parse("abs2(z1)+abs2(z2)-1+0.05*re(z1^2*conj(z2)^2)"),
  };
  for (const ExprPtr& e : fixtures)
    for (int k = 0; k < 50; ++k) {
      CPoint p = random_point(rng);
      if (std::abs(p.z1) < 1e-2 || std::abs(p.z2) < 1e-2) continue;
      CHECK(is_real_valued_at(e, p));
    }
}

TEST_CASE("mixed second derivatives commute as evaluated functions") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 60) {
    const ExprPtr e = random_expression(rng, 4);
    const ExprPtr d12 = wirtinger_derive(wirtinger_derive(e, Var::Z1), Var::Z2B);
    const ExprPtr d21 = wirtinger_derive(wirtinger_derive(e, Var::Z2B), Var::Z1);
    const CPoint p = random_point(rng);
    try {
      const Complex a = eval(d12, p), b = eval(d21, p);
      if (std::abs(a) > 1e6) continue;
      CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
      ++done;
    } catch (const BranchError&) {
      continue;
    }
  }
}

TEST_CASE("printer round-trips to a structurally identical tree") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    const ExprPtr e = random_expression(rng, 4);
    const ExprPtr reparsed = parse(to_string(e));
    CHECK(structurally_equal(e, reparsed));
  }
  for (const char* src : {"abs2(z1)+abs2(z2)-1",
                          "(abs2(z1)+abs2(z2))^2+abs2(z1)^2+abs2(z2)^2-2",
                          "powr(abs2(z1), 1.5)+powr(abs2(z2), 1.5)-1",
                          "abs2(z1)+abs2(z2)-1+0.05*re(z1^2*conj(z2)^2)"}) {
    const ExprPtr e = parse(src);
    CHECK(structurally_equal(e, parse(to_string(e))));
  }
}

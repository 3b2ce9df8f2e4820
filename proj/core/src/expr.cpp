#include "crbelt/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "crbelt/errors.hpp"

namespace crbelt {

Var conjugate(Var v) {
  switch (v) {
    case Var::Z1: return Var::Z1B;
    case Var::Z2: return Var::Z2B;
    case Var::Z1B: return Var::Z1;
    case Var::Z2B: return Var::Z2;
  }
  return Var::Z1;
}

std::string_view name(Var v) {
  switch (v) {
    case Var::Z1: return "z1";
    case Var::Z2: return "z2";
    case Var::Z1B: return "conj(z1)";
    case Var::Z2B: return "conj(z2)";
  }
  return "";
}

namespace {

bool is_const(const ExprPtr& e) { return e->kind == ExprKind::Const; }

bool is_const_value(const ExprPtr& e, Complex c) {
  return e->kind == ExprKind::Const && e->value == c;
}

ExprPtr make(ExprKind k) { return std::make_shared<Expr>(k); }

}  // namespace

ExprPtr constant(Complex c) {
  auto e = std::make_shared<Expr>(ExprKind::Const);
  e->value = c;
  return e;
}

ExprPtr constant(double c) { return constant(Complex(c, 0.0)); }

ExprPtr variable(Var v) {
  auto e = std::make_shared<Expr>(ExprKind::Variable);
  e->var = v;
  return e;
}

ExprPtr add(ExprPtr x, ExprPtr y) {
  if (is_const(x) && is_const(y)) return constant(x->value + y->value);
  if (is_const_value(x, 0.0)) return y;
  if (is_const_value(y, 0.0)) return x;
  auto e = std::make_shared<Expr>(ExprKind::Add);
  e->a = std::move(x);
  e->b = std::move(y);
  return e;
}

ExprPtr sub(ExprPtr x, ExprPtr y) { return add(std::move(x), neg(std::move(y))); }

ExprPtr mul(ExprPtr x, ExprPtr y) {
  if (is_const(x) && is_const(y)) return constant(x->value * y->value);
  if (is_const_value(x, 0.0) || is_const_value(y, 0.0)) return constant(0.0);
  if (is_const_value(x, 1.0)) return y;
  if (is_const_value(y, 1.0)) return x;
  auto e = std::make_shared<Expr>(ExprKind::Mul);
  e->a = std::move(x);
  e->b = std::move(y);
  return e;
}

ExprPtr neg(ExprPtr x) {
  if (is_const(x)) return constant(-x->value);
  if (x->kind == ExprKind::Neg) return x->a;
  auto e = std::make_shared<Expr>(ExprKind::Neg);
  e->a = std::move(x);
  return e;
}

ExprPtr div(ExprPtr x, ExprPtr y) {
  if (is_const_value(y, 0.0)) throw InvalidExpression("division by the literal zero constant");
  if (is_const(x) && is_const(y)) return constant(x->value / y->value);
  if (is_const_value(y, 1.0)) return x;
  if (is_const_value(x, 0.0)) return constant(0.0);
  auto e = std::make_shared<Expr>(ExprKind::Div);
  e->a = std::move(x);
  e->b = std::move(y);
  return e;
}

namespace {

Complex pow_int(Complex base, long k) {
  if (k < 0) return 1.0 / pow_int(base, -k);
  Complex r = 1.0;
  Complex p = base;
  for (long n = k; n > 0; n >>= 1) {
    if (n & 1) r *= p;
    p *= p;
  }
  return r;
}

}  // namespace

ExprPtr powi(ExprPtr x, long k) {
  if (k < 0 && is_const_value(x, 0.0))
    throw InvalidExpression("negative power of the literal zero constant");
  if (k == 0) return constant(1.0);
  if (k == 1) return x;
  if (is_const(x)) return constant(pow_int(x->value, k));
  auto e = std::make_shared<Expr>(ExprKind::PowI);
  e->a = std::move(x);
  e->ipow = k;
  return e;
}

ExprPtr powr(ExprPtr x, double a) {
  if (is_const_value(x, 0.0)) throw InvalidExpression("powr of the literal zero constant");
  if (a == 0.0) return constant(1.0);
  if (a == 1.0) return x;
  auto e = std::make_shared<Expr>(ExprKind::PowR);
  e->a = std::move(x);
  e->rpow = a;
  return e;
}

ExprPtr log(ExprPtr x) {
  if (is_const_value(x, 0.0)) throw InvalidExpression("log of the literal zero constant");
  auto e = std::make_shared<Expr>(ExprKind::Log);
  e->a = std::move(x);
  return e;
}

ExprPtr exp(ExprPtr x) {
  auto e = std::make_shared<Expr>(ExprKind::Exp);
  e->a = std::move(x);
  return e;
}

ExprPtr conjugate(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Const: return constant(std::conj(e->value));
    case ExprKind::Variable: return variable(conjugate(e->var));
    case ExprKind::Add: return add(conjugate(e->a), conjugate(e->b));
    case ExprKind::Mul: return mul(conjugate(e->a), conjugate(e->b));
    case ExprKind::Neg: return neg(conjugate(e->a));
    case ExprKind::Div: return div(conjugate(e->a), conjugate(e->b));
    case ExprKind::PowI: return powi(conjugate(e->a), e->ipow);
    case ExprKind::PowR: return powr(conjugate(e->a), e->rpow);
    case ExprKind::Log: return log(conjugate(e->a));
    case ExprKind::Exp: return exp(conjugate(e->a));
  }
  throw InvalidExpression("unreachable expression kind");
}

ExprPtr wirtinger_derive(const ExprPtr& e, Var v) {
  switch (e->kind) {
    case ExprKind::Const: return constant(0.0);
    case ExprKind::Variable: return constant(e->var == v ? 1.0 : 0.0);
    case ExprKind::Add: return add(wirtinger_derive(e->a, v), wirtinger_derive(e->b, v));
    case ExprKind::Neg: return neg(wirtinger_derive(e->a, v));
    case ExprKind::Mul:
      return add(mul(wirtinger_derive(e->a, v), e->b), mul(e->a, wirtinger_derive(e->b, v)));
    case ExprKind::Div:
      return div(sub(mul(wirtinger_derive(e->a, v), e->b), mul(e->a, wirtinger_derive(e->b, v))),
                 mul(e->b, e->b));
    case ExprKind::PowI:
      return mul(mul(constant(static_cast<double>(e->ipow)), powi(e->a, e->ipow - 1)),
                 wirtinger_derive(e->a, v));
    case ExprKind::PowR:
      return mul(mul(constant(e->rpow), powr(e->a, e->rpow - 1.0)), wirtinger_derive(e->a, v));
    case ExprKind::Log: return div(wirtinger_derive(e->a, v), e->a);
    case ExprKind::Exp: return mul(e, wirtinger_derive(e->a, v));
  }
  throw InvalidExpression("unreachable expression kind");
}

namespace {

// Positive-real branch check shared by Log and PowR.
double branch_argument(Complex w, const char* op) {
  if (!(w.real() > 0.0) || std::abs(w.imag()) > tol::kReality * std::abs(w)) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s argument (%.6g%+.6gi) is not a positive real", op,
                  w.real(), w.imag());
    throw BranchError(buf);
  }
  return w.real();
}

}  // namespace

Complex eval(const ExprPtr& e, const CPoint& p) {
  switch (e->kind) {
    case ExprKind::Const: return e->value;
    case ExprKind::Variable:
      switch (e->var) {
        case Var::Z1: return p.z1;
        case Var::Z2: return p.z2;
        case Var::Z1B: return std::conj(p.z1);
        case Var::Z2B: return std::conj(p.z2);
      }
      return {};
    case ExprKind::Add: return eval(e->a, p) + eval(e->b, p);
    case ExprKind::Mul: return eval(e->a, p) * eval(e->b, p);
    case ExprKind::Neg: return -eval(e->a, p);
    case ExprKind::Div: return eval(e->a, p) / eval(e->b, p);
    case ExprKind::PowI: return pow_int(eval(e->a, p), e->ipow);
    case ExprKind::PowR: return Complex(std::pow(branch_argument(eval(e->a, p), "powr"), e->rpow));
    case ExprKind::Log: return Complex(std::log(branch_argument(eval(e->a, p), "log")));
    case ExprKind::Exp: return std::exp(eval(e->a, p));
  }
  throw InvalidExpression("unreachable expression kind");
}

bool is_real_valued_at(const ExprPtr& e, const CPoint& p, double tolerance) {
  const Complex v = eval(e, p);
  return std::abs(v.imag()) <= tolerance * (1.0 + std::abs(v));
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr run() {
    auto e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  ExprPtr parse_expr() {
    ExprPtr e;
    if (consume('-')) {
      e = neg(parse_term());
    } else {
      e = parse_term();
    }
    for (;;) {
      if (consume('+')) {
        e = add(e, parse_term());
      } else if (consume('-')) {
        e = sub(e, parse_term());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    for (;;) {
      if (consume('*')) {
        e = mul(e, parse_factor());
      } else if (consume('/')) {
        e = div(e, parse_factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_factor() {
    ExprPtr e = parse_atom();
    if (consume('^')) {
      e = powi(e, parse_integer());
    }
    return e;
  }

  long parse_integer() {
    skip_ws();
    bool negative = consume('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer exponent");
    long k = 0;
    std::from_chars(src_.data() + start, src_.data() + pos_, k);
    return negative ? -k : k;
  }

  double parse_number() {
    skip_ws();
    bool negative = consume('-');
    skip_ws();
    std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[end])) || src_[end] == '.'))
      ++end;
    if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      std::size_t after = end + 1;
      if (after < src_.size() && (src_[after] == '+' || src_[after] == '-')) ++after;
      std::size_t digits = after;
      while (digits < src_.size() && std::isdigit(static_cast<unsigned char>(src_[digits])))
        ++digits;
      if (digits > after) end = digits;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + end, value);
    if (ec != std::errc() || ptr == src_.data() + start) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - src_.data());
    return negative ? -value : value;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return constant(parse_number());
    }
    if (c == '(') {
      ++pos_;
      auto e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])))) ++pos_;
      std::string_view ident = src_.substr(start, pos_ - start);
      if (ident == "i") return constant(Complex(0.0, 1.0));
      if (ident == "z1") return variable(Var::Z1);
      if (ident == "z2") return variable(Var::Z2);
      if (ident == "conj" || ident == "abs2" || ident == "re" || ident == "im" ||
          ident == "log" || ident == "exp") {
        expect('(');
        auto arg = parse_expr();
        expect(')');
        return expand_call(ident, arg);
      }
      if (ident == "powr") {
        expect('(');
        auto arg = parse_expr();
        expect(',');
        double a = parse_number();
        expect(')');
        return powr(arg, a);
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(ident) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  static ExprPtr expand_call(std::string_view ident, const ExprPtr& arg) {
    if (ident == "conj") return conjugate(arg);
    if (ident == "abs2") return mul(arg, conjugate(arg));
    if (ident == "re") return mul(constant(0.5), add(arg, conjugate(arg)));
    if (ident == "im") return mul(constant(Complex(0.0, -0.5)), sub(arg, conjugate(arg)));
    if (ident == "log") return log(arg);
    return exp(arg);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view source) { return Parser(source).run(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_constant(Complex c) {
  if (c.imag() == 0.0) {
    if (c.real() < 0.0 || std::signbit(c.real())) return "(" + format_double(c.real()) + ")";
    return format_double(c.real());
  }
  std::string s = "(" + format_double(c.real());
  s += c.imag() < 0.0 ? "-" : "+";
  s += format_double(std::abs(c.imag()));
  s += "*i)";
  return s;
}

// Precedence levels: 1 additive (incl. Neg), 2 multiplicative, 3 power/atom.
void print(const ExprPtr& e, int parent_prec, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    if (prec < parent_prec) {
      out += '(';
      body();
      out += ')';
    } else {
      body();
    }
  };
  switch (e->kind) {
    case ExprKind::Const:
      out += format_constant(e->value);
      return;
    case ExprKind::Variable:
      out += name(e->var);
      return;
    case ExprKind::Add:
      wrap(1, [&] {
        print(e->a, 1, out);
        if (e->b->kind == ExprKind::Neg) {
          out += '-';
          print(e->b->a, 2, out);
        } else {
          out += '+';
          print(e->b, 2, out);
        }
      });
      return;
    case ExprKind::Neg:
      wrap(1, [&] {
        out += '-';
        print(e->a, 2, out);
      });
      return;
    case ExprKind::Mul:
      wrap(2, [&] {
        print(e->a, 2, out);
        out += '*';
        print(e->b, 3, out);
      });
      return;
    case ExprKind::Div:
      wrap(2, [&] {
        print(e->a, 2, out);
        out += '/';
        print(e->b, 4, out);  // force parens around any non-atom divisor
      });
      return;
    case ExprKind::PowI:
      wrap(3, [&] {
        print(e->a, 4, out);
        out += '^';
        out += std::to_string(e->ipow);
      });
      return;
    case ExprKind::PowR:
      out += "powr(";
      print(e->a, 1, out);
      out += ", ";
      out += format_double(e->rpow);
      out += ')';
      return;
    case ExprKind::Log:
      out += "log(";
      print(e->a, 1, out);
      out += ')';
      return;
    case ExprKind::Exp:
      out += "exp(";
      print(e->a, 1, out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const ExprPtr& e) {
  std::string out;
  print(e, 1, out);
  return out;
}

bool structurally_equal(const ExprPtr& x, const ExprPtr& y) {
  if (x.get() == y.get()) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case ExprKind::Const: return x->value == y->value;
    case ExprKind::Variable: return x->var == y->var;
    case ExprKind::Neg:
    case ExprKind::Log:
    case ExprKind::Exp: return structurally_equal(x->a, y->a);
    case ExprKind::PowI: return x->ipow == y->ipow && structurally_equal(x->a, y->a);
    case ExprKind::PowR: return x->rpow == y->rpow && structurally_equal(x->a, y->a);
    case ExprKind::Add:
    case ExprKind::Mul:
    case ExprKind::Div:
      return structurally_equal(x->a, y->a) && structurally_equal(x->b, y->b);
  }
  return false;
}

}  // namespace crbelt

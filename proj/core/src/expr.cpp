#include "klsc/expr.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace klsc {

namespace {

ExprPtr node(ExprKind k) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  return e;
}

ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

ExprPtr unary(ExprKind k, ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = std::move(a);
  return e;
}

}  // namespace

ExprPtr make_number(Rational v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Number;
  e->number = std::move(v);
  return e;
}

ExprPtr make_number(long v) { return make_number(Rational(v)); }

ExprPtr make_real(double v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::RealConst;
  e->real_value = v;
  return e;
}

ExprPtr make_pi() { return node(ExprKind::Pi); }
ExprPtr make_var() { return node(ExprKind::Var); }
ExprPtr make_add(ExprPtr a, ExprPtr b) { return binary(ExprKind::Add, std::move(a), std::move(b)); }
ExprPtr make_sub(ExprPtr a, ExprPtr b) { return binary(ExprKind::Sub, std::move(a), std::move(b)); }
ExprPtr make_mul(ExprPtr a, ExprPtr b) { return binary(ExprKind::Mul, std::move(a), std::move(b)); }
ExprPtr make_div(ExprPtr a, ExprPtr b) { return binary(ExprKind::Div, std::move(a), std::move(b)); }
ExprPtr make_neg(ExprPtr a) { return unary(ExprKind::Neg, std::move(a)); }

ExprPtr make_pow(ExprPtr base, Rational exp) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Pow;
  e->a = std::move(base);
  e->exponent = std::move(exp);
  return e;
}

ExprPtr make_log(ExprPtr a) { return unary(ExprKind::Log, std::move(a)); }
ExprPtr make_exp(ExprPtr a) { return unary(ExprKind::Exp, std::move(a)); }
ExprPtr make_atan(ExprPtr a) { return unary(ExprKind::Atan, std::move(a)); }
ExprPtr make_abs(ExprPtr a) { return unary(ExprKind::Abs, std::move(a)); }

ExprPtr make_antideriv(ExprPtr integrand, double basepoint) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Antideriv;
  e->a = std::move(integrand);
  e->basepoint = basepoint;
  e->cache = std::make_shared<AntiderivCache>();
  return e;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::Number:
      return a->number == b->number;
    case ExprKind::Pi:
    case ExprKind::Var:
      return true;
    case ExprKind::RealConst:
      return a->real_value == b->real_value;
    case ExprKind::Pow:
      return a->exponent == b->exponent && structurally_equal(a->a, b->a);
    case ExprKind::Antideriv:
      return a->basepoint == b->basepoint && structurally_equal(a->a, b->a);
    case ExprKind::Neg:
    case ExprKind::Log:
    case ExprKind::Exp:
    case ExprKind::Atan:
    case ExprKind::Abs:
      return structurally_equal(a->a, b->a);
    default:
      return structurally_equal(a->a, b->a) && structurally_equal(a->b, b->b);
  }
}

namespace {

// Precedence levels for printing: additive 1, multiplicative 2, unary 3,
// power 4, atoms 5.
int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Neg:
      return 3;
    case ExprKind::Pow:
      return 4;
    case ExprKind::Number:
      return (e.number < 0 || !is_integer(e.number)) ? 2 : 5;
    default:
      return 5;
  }
}

void print_to(const ExprPtr& e, std::string& out, int parent_prec);

void print_child(const ExprPtr& e, std::string& out, int parent_prec) {
  bool need = precedence(*e) < parent_prec;
  if (need) out += '(';
  print_to(e, out, 0);
  if (need) out += ')';
}

void print_to(const ExprPtr& e, std::string& out, int) {
  switch (e->kind) {
    case ExprKind::Number:
      out += to_string(e->number);
      break;
    case ExprKind::Pi:
      out += "pi";
      break;
    case ExprKind::RealConst: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", e->real_value);
      out += buf;
      break;
    }
    case ExprKind::Var:
      out += 'z';
      break;
    case ExprKind::Add:
      print_child(e->a, out, 1);
      out += " + ";
      print_child(e->b, out, 2);
      break;
    case ExprKind::Sub:
      print_child(e->a, out, 1);
      out += " - ";
      print_child(e->b, out, 2);
      break;
    case ExprKind::Mul:
      print_child(e->a, out, 2);
      out += "*";
      print_child(e->b, out, 3);
      break;
    case ExprKind::Div:
      print_child(e->a, out, 2);
      out += "/";
      print_child(e->b, out, 3);
      break;
    case ExprKind::Neg:
      out += '-';
      print_child(e->a, out, 3);
      break;
    case ExprKind::Pow:
      print_child(e->a, out, 5);
      out += '^';
      if (is_integer(e->exponent) && e->exponent >= 0) {
        out += to_string(e->exponent);
      } else {
        out += '(';
        out += to_string(e->exponent);
        out += ')';
      }
      break;
    case ExprKind::Log:
      out += "log(";
      print_to(e->a, out, 0);
      out += ')';
      break;
    case ExprKind::Exp:
      out += "exp(";
      print_to(e->a, out, 0);
      out += ')';
      break;
    case ExprKind::Atan:
      out += "atan(";
      print_to(e->a, out, 0);
      out += ')';
      break;
    case ExprKind::Abs:
      out += "abs(";
      print_to(e->a, out, 0);
      out += ')';
      break;
    case ExprKind::Antideriv: {
      out += "antideriv(";
      print_to(e->a, out, 0);
      char buf[48];
      std::snprintf(buf, sizeof buf, ", %.17g", e->basepoint);
      out += buf;
      out += ')';
      break;
    }
  }
}

bool is_number(const ExprPtr& e, long v) {
  return e->kind == ExprKind::Number && e->number == v;
}

ExprPtr simplify_node(const ExprPtr& e);

ExprPtr simplify_rec(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Number:
    case ExprKind::Pi:
    case ExprKind::Var:
    case ExprKind::RealConst:
      return e;
    case ExprKind::Pow: {
      ExprPtr a = simplify_rec(e->a);
      return simplify_node(a == e->a ? e : make_pow(a, e->exponent));
    }
    case ExprKind::Antideriv: {
      ExprPtr a = simplify_rec(e->a);
      if (a == e->a) return e;
      // Preserve the cache: the integrand value is unchanged by
      // simplification.
      auto n = std::make_shared<Expr>(*e);
      n->a = a;
      return n;
    }
    case ExprKind::Neg:
    case ExprKind::Log:
    case ExprKind::Exp:
    case ExprKind::Atan:
    case ExprKind::Abs: {
      ExprPtr a = simplify_rec(e->a);
      if (a == e->a) return simplify_node(e);
      auto n = std::make_shared<Expr>(*e);
      n->a = a;
      return simplify_node(n);
    }
    default: {
      ExprPtr a = simplify_rec(e->a);
      ExprPtr b = simplify_rec(e->b);
      if (a == e->a && b == e->b) return simplify_node(e);
      auto n = std::make_shared<Expr>(*e);
      n->a = a;
      n->b = b;
      return simplify_node(n);
    }
  }
}

ExprPtr simplify_node(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Add:
      if (e->a->kind == ExprKind::Number && e->b->kind == ExprKind::Number)
        return make_number(e->a->number + e->b->number);
      if (is_number(e->a, 0)) return e->b;
      if (is_number(e->b, 0)) return e->a;
      return e;
    case ExprKind::Sub:
      if (e->a->kind == ExprKind::Number && e->b->kind == ExprKind::Number)
        return make_number(e->a->number - e->b->number);
      if (is_number(e->b, 0)) return e->a;
      return e;
    case ExprKind::Mul:
      if (e->a->kind == ExprKind::Number && e->b->kind == ExprKind::Number)
        return make_number(e->a->number * e->b->number);
      if (is_number(e->a, 1)) return e->b;
      if (is_number(e->b, 1)) return e->a;
      return e;
    case ExprKind::Div:
      if (e->a->kind == ExprKind::Number && e->b->kind == ExprKind::Number &&
          e->b->number != 0)
        return make_number(e->a->number / e->b->number);
      if (is_number(e->b, 1)) return e->a;
      return e;
    case ExprKind::Neg:
      if (e->a->kind == ExprKind::Number) return make_number(-e->a->number);
      return e;
    case ExprKind::Pow: {
      if (e->exponent == 1) return e->a;
      if (e->a->kind == ExprKind::Number && is_integer(e->exponent) &&
          !(e->a->number == 0 && e->exponent < 0)) {
        long k = static_cast<long>(floor_int(e->exponent).convert_to<long long>());
        return make_number(pow_rational(e->a->number, k));
      }
      // Integer power merging: (x^a)^b = x^(ab) for integer a, b.
      if (e->a->kind == ExprKind::Pow && is_integer(e->exponent) &&
          is_integer(e->a->exponent)) {
        return make_pow(e->a->a, e->a->exponent * e->exponent);
      }
      return e;
    }
    case ExprKind::Log:
      if (is_number(e->a, 1)) return make_number(0L);
      return e;
    case ExprKind::Exp:
      if (is_number(e->a, 0)) return make_number(1L);
      return e;
    case ExprKind::Atan:
      if (is_number(e->a, 0)) return make_number(0L);
      return e;
    case ExprKind::Abs:
      if (e->a->kind == ExprKind::Number) return make_number(abs(e->a->number));
      return e;
    default:
      return e;
  }
}

}  // namespace

std::string print(const ExprPtr& e) {
  std::string out;
  print_to(e, out, 0);
  return out;
}

ExprPtr simplify(const ExprPtr& e) { return simplify_rec(e); }

ExprPtr derivative(const ExprPtr& e) {
  ExprPtr d;
  switch (e->kind) {
    case ExprKind::Number:
    case ExprKind::Pi:
    case ExprKind::RealConst:
      d = make_number(0L);
      break;
    case ExprKind::Var:
      d = make_number(1L);
      break;
    case ExprKind::Add:
      d = make_add(derivative(e->a), derivative(e->b));
      break;
    case ExprKind::Sub:
      d = make_sub(derivative(e->a), derivative(e->b));
      break;
    case ExprKind::Neg:
      d = make_neg(derivative(e->a));
      break;
    case ExprKind::Mul:
      d = make_add(make_mul(derivative(e->a), e->b), make_mul(e->a, derivative(e->b)));
      break;
    case ExprKind::Div:
      d = make_div(make_sub(make_mul(derivative(e->a), e->b), make_mul(e->a, derivative(e->b))),
                   make_pow(e->b, Rational(2)));
      break;
    case ExprKind::Pow:
      d = make_mul(make_number(e->exponent),
                   make_mul(make_pow(e->a, e->exponent - 1), derivative(e->a)));
      break;
    case ExprKind::Log:
      d = make_div(derivative(e->a), e->a);
      break;
    case ExprKind::Exp:
      d = make_mul(ExprPtr(e), derivative(e->a));
      break;
    case ExprKind::Atan:
      d = make_div(derivative(e->a),
                   make_add(make_number(1L), make_pow(e->a, Rational(2))));
      break;
    case ExprKind::Abs:
      // d|f| = (|f|/f) f'; errors at f = 0.
      d = make_mul(make_div(ExprPtr(e), e->a), derivative(e->a));
      break;
    case ExprKind::Antideriv:
      d = e->a;
      break;
  }
  return simplify(d);
}

}  // namespace klsc

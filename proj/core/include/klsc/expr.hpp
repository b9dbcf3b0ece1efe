#pragma once

#include "klsc/errors.hpp"
#include "klsc/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

namespace klsc {

enum class ExprKind {
  Number,     // exact rational constant
  Pi,
  RealConst,  // double constant produced by constructions, not parseable
  Var,        // the radial variable z
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  Pow,        // rational exponent
  Log,        // natural log
  Exp,
  Atan,
  Abs,
  Antideriv,  // numeric antiderivative of the child from a fixed basepoint
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Shared, internally synchronized value table for an Antideriv node.
struct AntiderivCache {
  std::mutex mutex;
  std::map<double, double> values;
};

struct Expr {
  ExprKind kind;
  Rational number;        // Number
  double real_value = 0;  // RealConst
  Rational exponent;      // Pow
  double basepoint = 0;   // Antideriv; may be +infinity
  ExprPtr a, b;
  std::shared_ptr<AntiderivCache> cache;  // Antideriv
};

ExprPtr make_number(Rational v);
ExprPtr make_number(long v);
ExprPtr make_real(double v);
ExprPtr make_pi();
ExprPtr make_var();
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_div(ExprPtr a, ExprPtr b);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_pow(ExprPtr base, Rational exp);
ExprPtr make_log(ExprPtr a);
ExprPtr make_exp(ExprPtr a);
ExprPtr make_atan(ExprPtr a);
ExprPtr make_abs(ExprPtr a);
ExprPtr make_antideriv(ExprPtr integrand, double basepoint);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

/// Recursive-descent parser for the expression grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := atom ("^" factor)?
///   atom   := number | "pi" | "z" | func "(" expr ")" | "(" expr ")" | "-" atom
///   func   := "log" | "exp" | "atan" | "abs"
/// Exponents must constant-fold to rationals.  Throws SyntaxError /
/// UnknownIdentifier with byte offsets.
ExprPtr parse(std::string_view text);

/// Parseable round-trip form for grammar expressions; Antideriv and
/// RealConst nodes print in a diagnostic-only notation.
std::string print(const ExprPtr& e);

/// Conservative normal form: constant folding, x*1, x+0, x-0, pow(x,1),
/// integer power merging.  Idempotent.
ExprPtr simplify(const ExprPtr& e);

/// Exact symbolic derivative with respect to z; the expression class is
/// closed under differentiation (abs differentiates to the sign factor
/// abs(f)/f, which errors at f = 0).
ExprPtr derivative(const ExprPtr& e);

/// IEEE double evaluation at z.  Never returns NaN/Inf; throws DomainError
/// instead.
double eval(const ExprPtr& e, double z);

/// a^r with real-root semantics: negative bases require odd-denominator
/// exponents (real odd root), 0^r is 0 for r > 0 and 1 for r = 0.
double eval_real_power(double base, const Rational& r);

}  // namespace klsc

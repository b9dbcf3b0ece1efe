#include "klsc/rational.hpp"

#include "klsc/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace klsc {

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

BigInt floor_int(const Rational& r) {
  BigInt n = numerator(r);
  BigInt d = denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw DomainError("0 raised to a negative power");
    return Rational(0);
  }
  bool invert = exp < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Rational acc(1), b = base;
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (invert) acc = Rational(1) / acc;
  return acc;
}

Rational rational_from_decimal(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  BigInt mant = 0;
  long scale = 0;
  bool any_digit = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    mant = mant * 10 + (text[i] - '0');
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      mant = mant * 10 + (text[i] - '0');
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) throw std::invalid_argument("not a decimal literal: " + text);
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed exponent in: " + text);
    long e = 0;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i)
      e = e * 10 + (text[i] - '0');
    scale += eneg ? -e : e;
  }
  if (i != text.size()) throw std::invalid_argument("trailing characters in: " + text);
  Rational r(mant);
  if (scale > 0) {
    BigInt p10 = 1;
    for (long k = 0; k < scale; ++k) p10 *= 10;
    r *= Rational(p10);
  } else if (scale < 0) {
    BigInt p10 = 1;
    for (long k = 0; k < -scale; ++k) p10 *= 10;
    r /= Rational(p10);
  }
  return neg ? -r : r;
}

Rational rational_from_double(double v) { return Rational(v); }

std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

bool has_odd_denominator(const Rational& r) { return denominator(r) % 2 != 0; }

bool numerator_is_odd(const Rational& r) { return numerator(r) % 2 != 0; }

}  // namespace klsc

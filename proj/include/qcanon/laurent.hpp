/// @file laurent.hpp
/// @brief Z[q,q^-1], its fraction field Q(q), quantum integers and the bar involution.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcanon {

using Int = mpz_class;
using Rat = mpq_class;

enum class ArithKind { add, sub, mul, div };

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Int& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Int& c, int e);
  /// q^e
  static LaurentPoly q(int e = 1) { return monomial(1, e); }

  const std::map<int, Int>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(int e) const;
  // Only meaningful for nonzero values.
  int min_exp() const { return c_.begin()->first; }
  int max_exp() const { return c_.rbegin()->first; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly bar() const;
  bool is_bar_invariant() const { return bar() == *this; }
  LaurentPoly shifted(int e) const;
  LaurentPoly pow(unsigned n) const;
  /// Drop every coefficient to Z/p; used by the congruence report.
  LaurentPoly mod(unsigned long p) const;
  Rat eval(const Rat& x) const;

  /// `q^2 + 2 + q^-2`: descending exponents, unit coefficients omitted.
  std::string str() const;

 private:
  void add_term(int e, const Int& c);
  std::map<int, Int> c_;
};

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithKind kind);
inline LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }

/// [n] evaluated at q^d.
LaurentPoly qint(int n, int d);
/// [n]! evaluated at q^d.
LaurentPoly qfact(int n, int d);

struct BarParts {
  LaurentPoly plus;
  Int zero;
  LaurentPoly minus;
};
BarParts split_bar_parts(const LaurentPoly& a);

namespace detail {
// Dense polynomial in q, coefficient i at index i, no trailing zeros.
using Poly = std::vector<Int>;
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_divexact(const Poly& a, const Poly& b);
}  // namespace detail

/// Element of Q(q), stored as q^shift * num / den with num, den in Z[q],
/// num(0) != 0, den(0) != 0, gcd(num, den) = 1 over Q, lc(den) > 0 and the
/// combined integer content of num and den equal to 1. Zero is 0/1.
class RationalFn {
 public:
  RationalFn() : den_{Int(1)} {}
  RationalFn(long c);  // NOLINT(google-explicit-constructor)
  RationalFn(const LaurentPoly& a);  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero if den is zero.
  static RationalFn fraction(const LaurentPoly& num, const LaurentPoly& den);

  bool is_zero() const { return num_.empty(); }
  /// q^shift * num as a Laurent polynomial.
  LaurentPoly numerator() const;
  LaurentPoly denominator() const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& b) { return *this = *this + b; }
  RationalFn& operator-=(const RationalFn& b) { return *this = *this - b; }
  RationalFn& operator*=(const RationalFn& b) { return *this = *this * b; }
  RationalFn& operator/=(const RationalFn& b) { return *this = *this / b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  RationalFn inverse() const;
  RationalFn pow(int n) const;
  RationalFn bar() const;
  std::optional<LaurentPoly> to_laurent() const;
  Rat eval(const Rat& x) const;

  /// `num / den`; a Laurent value prints without the slash.
  std::string str() const;

 private:
  RationalFn(int shift, detail::Poly num, detail::Poly den, bool reduce);
  void normalize(bool reduce);

  int shift_ = 0;
  detail::Poly num_;
  detail::Poly den_;
};

RationalFn rf_arith(const RationalFn& a, const RationalFn& b, ArithKind kind);
std::optional<LaurentPoly> rf_to_laurent(const RationalFn& a);

/// Parses expressions in q over + - * / ^, integers and parentheses, e.g.
/// `(1+q^2)/((1-q^2)^5*(1+q^2)^2)`. Juxtaposition multiplies: `2q`, `(1+q)(1-q)`.
RationalFn parse_rational(const std::string& s);
/// As parse_rational, and throws ParseError unless the value lies in Z[q,q^-1].
LaurentPoly parse_laurent(const std::string& s);

}  // namespace qcanon

#include "qcanon/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "qcanon/errors.hpp"

namespace qcanon {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.emplace(0, Int(c));
}

LaurentPoly::LaurentPoly(const Int& c) {
  if (c != 0) c_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Int& c, int e) {
  LaurentPoly r;
  if (c != 0) r.c_.emplace(e, c);
  return r;
}

Int LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = c_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  for (const auto& [e, c] : b.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  for (const auto& [e, c] : b.c_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  Int t;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) {
      t = ca * cb;
      r.add_term(ea + eb, t);
    }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) { return *this = *this * b; }

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace_hint(r.c_.end(), e + s, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(1), b = *this;
  while (n) {
    if (n & 1u) r *= b;
    n >>= 1u;
    if (n) b *= b;
  }
  return r;
}

LaurentPoly LaurentPoly::mod(unsigned long p) const {
  LaurentPoly r;
  Int m(static_cast<unsigned long>(p)), t;
  for (const auto& [e, c] : c_) {
    mpz_fdiv_r(t.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    r.add_term(e, t);
  }
  return r;
}

Rat LaurentPoly::eval(const Rat& x) const {
  Rat s = 0;
  for (const auto& [e, c] : c_) {
    Rat p = 1;
    Rat b = e < 0 ? Rat(1) / x : x;
    for (int k = 0; k < std::abs(e); ++k) p *= b;
    s += Rat(c) * p;
  }
  return s;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const int e = it->first;
    Int c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
    case ArithKind::div:
      break;
  }
  throw ConfigError("lp_arith: division is not defined on Laurent polynomials; use RationalFn");
}

LaurentPoly qint(int n, int d) {
  // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}, [-n] = -[n]
  LaurentPoly r;
  const int m = std::abs(n);
  for (int k = 0; k < m; ++k) r += LaurentPoly::q((m - 1 - 2 * k) * d);
  return n < 0 ? -r : r;
}

LaurentPoly qfact(int n, int d) {
  LaurentPoly r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k, d);
  return r;
}

BarParts split_bar_parts(const LaurentPoly& a) {
  BarParts r;
  for (const auto& [e, c] : a.terms()) {
    if (e > 0)
      r.plus += LaurentPoly::monomial(c, e);
    else if (e < 0)
      r.minus += LaurentPoly::monomial(c, e);
    else
      r.zero = c;
  }
  return r;
}

// ------------------------------------------------------------ dense polynomials

namespace detail {
namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Int content(const Poly& a) {
  Int g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_content(Poly& a, const Int& g) {
  if (g == 1 || g == 0) return;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Poly primitive(Poly a) {
  divide_content(a, content(a));
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// lc(b)^(deg a - deg b + 1) * a mod b
Poly prem(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  const Int& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Int la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.empty()) return {};
  if (b.size() == 1) {
    Poly r = a;
    for (auto& c : r) {
      if (!mpz_divisible_p(c.get_mpz_t(), b[0].get_mpz_t())) throw InvariantError("inexact polynomial division");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b[0].get_mpz_t());
    }
    return r;
  }
  if (a.size() < b.size()) throw InvariantError("inexact polynomial division");
  Poly rem = a;
  Poly quo(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Int& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) throw InvariantError("inexact polynomial division");
    Int t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) mpz_submul(rem[k + i].get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t());
    quo[k] = t;
  }
  trim(rem);
  if (!rem.empty()) throw InvariantError("inexact polynomial division");
  trim(quo);
  return quo;
}

// Primitive polynomial remainder sequence. Returns a primitive gcd with
// positive leading coefficient (so {1} for coprime inputs).
Poly poly_gcd(const Poly& a0, const Poly& b0) {
  if (a0.empty()) return primitive(b0);
  if (b0.empty()) return primitive(a0);
  if (a0.size() == 1 || b0.size() == 1) return {Int(1)};
  Poly a = primitive(a0), b = primitive(b0);
  if (a == b) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return {Int(1)};
    Poly r = prem(a, b);
    a = std::move(b);
    b = primitive(std::move(r));
  }
  return primitive(a);
}

}  // namespace detail

// ------------------------------------------------------------------ RationalFn

using detail::Poly;

namespace {

// Splits a nonzero Laurent polynomial into q^s * p with p(0) != 0.
std::pair<int, Poly> to_poly(const LaurentPoly& a) {
  const int s = a.min_exp();
  Poly p(static_cast<std::size_t>(a.max_exp() - s + 1));
  for (const auto& [e, c] : a.terms()) p[static_cast<std::size_t>(e - s)] = c;
  return {s, std::move(p)};
}

LaurentPoly from_poly(const Poly& p, int shift) {
  LaurentPoly r;
  for (std::size_t i = 0; i < p.size(); ++i) r += LaurentPoly::monomial(p[i], static_cast<int>(i) + shift);
  return r;
}

bool is_one(const Poly& p) { return p.size() == 1 && p[0] == 1; }

// Strips the q-adic valuation of p into shift.
void strip_q(Poly& p, int& shift, int sign) {
  std::size_t z = 0;
  while (z < p.size() && p[z] == 0) ++z;
  if (z) {
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(z));
    shift += sign * static_cast<int>(z);
  }
}

}  // namespace

RationalFn::RationalFn(long c) : den_{Int(1)} {
  if (c != 0) num_ = {Int(c)};
}

RationalFn::RationalFn(const LaurentPoly& a) : den_{Int(1)} {
  if (a.is_zero()) return;
  auto [s, p] = to_poly(a);
  shift_ = s;
  num_ = std::move(p);
}

RationalFn::RationalFn(int shift, Poly num, Poly den, bool reduce)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  normalize(reduce);
}

void RationalFn::normalize(bool reduce) {
  using detail::poly_divexact;
  using detail::poly_gcd;
  if (den_.empty()) throw DivisionByZero("rational function with zero denominator");
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  if (num_.empty()) {
    shift_ = 0;
    den_ = {Int(1)};
    return;
  }
  strip_q(num_, shift_, +1);
  strip_q(den_, shift_, -1);
  if (reduce && den_.size() > 1) {
    Poly g = poly_gcd(num_, den_);
    if (!is_one(g)) {
      num_ = poly_divexact(num_, g);
      den_ = poly_divexact(den_, g);
    }
  }
  Int g = 0;
  for (const auto& c : num_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (const auto& c : den_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (den_.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : den_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

RationalFn RationalFn::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("division by zero");
  if (num.is_zero()) return {};
  auto [sn, pn] = to_poly(num);
  auto [sd, pd] = to_poly(den);
  return RationalFn(sn - sd, std::move(pn), std::move(pd), true);
}

LaurentPoly RationalFn::numerator() const { return from_poly(num_, shift_); }
LaurentPoly RationalFn::denominator() const { return from_poly(den_, 0); }

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  using detail::poly_divexact;
  using detail::poly_gcd;
  using detail::poly_mul;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Align shifts: q^sa na / da + q^sb nb / db with s = min shift.
  const int s = std::min(a.shift_, b.shift_);
  auto lift = [s](const RationalFn& x) {
    Poly p(static_cast<std::size_t>(x.shift_ - s), Int(0));
    p.insert(p.end(), x.num_.begin(), x.num_.end());
    return p;
  };
  Poly na = lift(a), nb = lift(b);
  if (a.den_ == b.den_) {
    Poly n(std::max(na.size(), nb.size()));
    for (std::size_t i = 0; i < na.size(); ++i) n[i] += na[i];
    for (std::size_t i = 0; i < nb.size(); ++i) n[i] += nb[i];
    return RationalFn(s, std::move(n), a.den_, true);
  }
  Poly g = poly_gcd(a.den_, b.den_);
  Poly da = poly_divexact(a.den_, g), db = poly_divexact(b.den_, g);
  Poly t1 = poly_mul(na, db), t2 = poly_mul(nb, da);
  Poly n(std::max(t1.size(), t2.size()));
  for (std::size_t i = 0; i < t1.size(); ++i) n[i] += t1[i];
  for (std::size_t i = 0; i < t2.size(); ++i) n[i] += t2[i];
  return RationalFn(s, std::move(n), poly_mul(a.den_, db), true);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  using detail::poly_divexact;
  using detail::poly_gcd;
  using detail::poly_mul;
  if (a.is_zero() || b.is_zero()) return {};
  // Both inputs are reduced, so cross-cancelling suffices.
  Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
  Poly an = is_one(g1) ? a.num_ : poly_divexact(a.num_, g1);
  Poly bd = is_one(g1) ? b.den_ : poly_divexact(b.den_, g1);
  Poly bn = is_one(g2) ? b.num_ : poly_divexact(b.num_, g2);
  Poly ad = is_one(g2) ? a.den_ : poly_divexact(a.den_, g2);
  return RationalFn(a.shift_ + b.shift_, poly_mul(an, bn), poly_mul(ad, bd), false);
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero");
  return RationalFn(-shift_, den_, num_, false);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

RationalFn RationalFn::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RationalFn r(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

RationalFn RationalFn::bar() const {
  if (is_zero()) return {};
  return fraction(numerator().bar(), denominator().bar());
}

std::optional<LaurentPoly> RationalFn::to_laurent() const {
  if (den_.size() != 1) return std::nullopt;
  // den is a positive constant here; content normalization makes it 1
  // unless num carries a genuine fraction.
  if (den_[0] != 1) return std::nullopt;
  return numerator();
}

Rat RationalFn::eval(const Rat& x) const { return numerator().eval(x) / denominator().eval(x); }

std::string RationalFn::str() const {
  if (is_one(den_)) return numerator().str();
  auto paren = [](const LaurentPoly& p) {
    std::string s = p.str();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return paren(numerator()) + " / " + paren(denominator());
}

RationalFn rf_arith(const RationalFn& a, const RationalFn& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
    case ArithKind::div:
      return a / b;
  }
  return {};
}

std::optional<LaurentPoly> rf_to_laurent(const RationalFn& a) { return a.to_laurent(); }

// --------------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RationalFn run() {
    RationalFn v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw ParseError(std::string(what) + " at offset " + std::to_string(i_) + " in '" + s_ + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  RationalFn expr() {
    RationalFn v = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++i_;
        v += term();
      } else if (c == '-') {
        ++i_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  RationalFn term() {
    RationalFn v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++i_;
        v *= unary();
      } else if (c == '/') {
        ++i_;
        v /= unary();
      } else if (c == '(' || c == 'q') {
        v *= power();
      } else {
        return v;
      }
    }
  }

  RationalFn unary() {
    char c = peek();
    if (c == '-') {
      ++i_;
      return -unary();
    }
    if (c == '+') {
      ++i_;
      return unary();
    }
    return power();
  }

  RationalFn power() {
    RationalFn base = atom();
    if (peek() != '^') return base;
    ++i_;
    long e = 0;
    if (peek() == '(') {
      ++i_;
      e = integer_signed();
      if (peek() != ')') fail("expected ')'");
      ++i_;
    } else {
      e = integer_signed();
    }
    if (e > 100000 || e < -100000) fail("exponent out of range");
    return base.pow(static_cast<int>(e));
  }

  long integer_signed() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    } else if (peek() == '+') {
      ++i_;
    }
    skip();
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) fail("expected integer");
    long v = std::stol(s_.substr(i_, j - i_));
    i_ = j;
    return neg ? -v : v;
  }

  RationalFn atom() {
    char c = peek();
    if (c == '(') {
      ++i_;
      RationalFn v = expr();
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return v;
    }
    if (c == 'q') {
      ++i_;
      return RationalFn(LaurentPoly::q(1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Int v(s_.substr(i_, j - i_));
      i_ = j;
      return RationalFn(LaurentPoly(v));
    }
    fail("expected operand");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

RationalFn parse_rational(const std::string& s) {
  try {
    return Parser(s).run();
  } catch (const DivisionByZero&) {
    throw ParseError("division by zero in '" + s + "'");
  }
}

LaurentPoly parse_laurent(const std::string& s) {
  auto v = parse_rational(s).to_laurent();
  if (!v) throw ParseError("not a Laurent polynomial: '" + s + "'");
  return *v;
}

}  // namespace qcanon

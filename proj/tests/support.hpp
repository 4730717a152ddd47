// Helpers shared by the unit tests: seeded random values and an
// evaluation oracle that bypasses the library's own eval.
#pragma once

#include <random>

#include "qcanon/laurent.hpp"

namespace qtest {

using qcanon::Int;
using qcanon::LaurentPoly;
using qcanon::Rat;
using qcanon::RationalFn;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20261014);
  return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline LaurentPoly random_laurent(int terms = 4, int span = 5, int coeff = 6) {
  LaurentPoly p;
  const int n = uniform(0, terms);
  for (int t = 0; t < n; ++t) p += LaurentPoly::monomial(uniform(-coeff, coeff), uniform(-span, span));
  return p;
}

inline LaurentPoly random_nonzero(int terms = 4, int span = 5, int coeff = 6) {
  LaurentPoly p;
  while (p.is_zero()) p = random_laurent(terms, span, coeff);
  return p;
}

// sum c x^e straight from the coefficient map.
inline Rat at(const LaurentPoly& p, const Rat& x) {
  Rat s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rat m = 1;
    const Rat base = e >= 0 ? x : Rat(1) / x;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) m *= base;
    s += Rat(c) * m;
  }
  return s;
}

inline const std::vector<Rat>& sample_points() {
  static const std::vector<Rat> pts = {Rat(2), Rat(3, 2), Rat(-5, 3), Rat(7, 11), Rat(-13, 4)};
  return pts;
}

}  // namespace qtest

#include "qcanon/gram.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "qcanon/errors.hpp"

namespace qcanon {

LetterSequence expand_word(const MonomialWord& word, const CartanDatum& datum) {
  LetterSequence s;
  s.prefactor = LaurentPoly(1);
  for (const Letter& l : word) {
    if (l.exp <= 0) continue;
    s.letters.insert(s.letters.end(), static_cast<std::size_t>(l.exp), l.gen);
    s.prefactor *= qfact(l.exp, datum.d(l.gen));
  }
  return s;
}

namespace {

void matching_dfs(const CartanDatum* datum, const std::vector<int>& nu, const std::vector<int>& nu2, std::size_t k,
                  Matching& w, std::vector<bool>& used, long a,
                  const std::function<void(const Matching&, long)>& fn) {
  if (k == nu.size()) {
    fn(w, a);
    return;
  }
  for (std::size_t t = 0; t < nu2.size(); ++t) {
    if (used[t] || nu2[t] != nu[k]) continue;
    long inc = 0;
    if (datum)
      for (std::size_t l = 0; l < k; ++l)
        if (static_cast<std::size_t>(w[l]) > t) inc += datum->form(nu[l], nu[k]);
    used[t] = true;
    w[k] = static_cast<int>(t);
    matching_dfs(datum, nu, nu2, k + 1, w, used, a + inc, fn);
    used[t] = false;
  }
}

bool same_multiset(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

LaurentPoly from_counts(const std::map<long, Int>& counts) {
  LaurentPoly r;
  for (const auto& [e, c] : counts) r += LaurentPoly::monomial(c, static_cast<int>(e));
  return r;
}

}  // namespace

std::vector<Matching> matchings(const std::vector<int>& nu, const std::vector<int>& nu2) {
  std::vector<Matching> out;
  if (nu.size() != nu2.size() || !same_multiset(nu, nu2)) return out;
  Matching w(nu.size(), -1);
  std::vector<bool> used(nu2.size(), false);
  matching_dfs(nullptr, nu, nu2, 0, w, used, 0, [&](const Matching& m, long) { out.push_back(m); });
  return out;
}

void for_each_matching(const CartanDatum& datum, const std::vector<int>& nu, const std::vector<int>& nu2,
                       const std::function<void(const Matching&, long)>& fn) {
  if (nu.size() != nu2.size() || !same_multiset(nu, nu2)) return;
  Matching w(nu.size(), -1);
  std::vector<bool> used(nu2.size(), false);
  matching_dfs(&datum, nu, nu2, 0, w, used, 0, fn);
}

long inversion_stat(const CartanDatum& datum, const std::vector<int>& nu, const Matching& w) {
  long a = 0;
  for (std::size_t k = 0; k < nu.size(); ++k)
    for (std::size_t l = k + 1; l < nu.size(); ++l)
      if (w[k] > w[l]) a += datum.form(nu[k], nu[l]);
  return a;
}

LaurentPoly matching_sum(const CartanDatum& datum, const std::vector<int>& nu, const std::vector<int>& nu2) {
  std::map<long, Int> counts;
  for_each_matching(datum, nu, nu2, [&](const Matching&, long a) { counts[-a] += 1; });
  return from_counts(counts);
}

LaurentPoly delta_weight(const CartanDatum& datum, const MonomialWord& word) {
  LaurentPoly r(1);
  for (const Letter& l : word) r *= (LaurentPoly(1) - LaurentPoly::q(datum.form(l.gen, l.gen))).pow(static_cast<unsigned>(l.exp));
  return r;
}

RationalFn inner_mackey(const CartanDatum& datum, const MonomialWord& a, const MonomialWord& b) {
  if (word_weight(datum.rank(), a) != word_weight(datum.rank(), b)) return {};
  LetterSequence x = expand_word(a, datum), y = expand_word(b, datum);
  LaurentPoly s = matching_sum(datum, x.letters, y.letters);
  return RationalFn::fraction(s, x.prefactor * y.prefactor * delta_weight(datum, a));
}

RationalFn inner_shuffle(const CartanDatum& datum, const MonomialWord& a, const MonomialWord& b) {
  LetterSequence x = expand_word(a, datum), y = expand_word(b, datum);
  const std::size_t n = y.letters.size();
  if (x.letters.size() != n) return {};
  if (n > 62) throw ConfigError("inner_shuffle: word too long");
  // S(mask) = (x restricted to its last popcount(mask) letters, y restricted to mask),
  // with the (f_i, f_i) factors pulled out.
  std::unordered_map<std::uint64_t, LaurentPoly> memo;
  std::function<LaurentPoly(std::uint64_t)> go = [&](std::uint64_t mask) -> LaurentPoly {
    if (mask == 0) return LaurentPoly(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const std::size_t i = n - static_cast<std::size_t>(__builtin_popcountll(mask));
    const int g = x.letters[i];
    LaurentPoly r;
    long before = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask >> k & 1u)) continue;
      if (y.letters[k] == g) {
        LaurentPoly sub = go(mask & ~(std::uint64_t{1} << k));
        if (!sub.is_zero()) r += sub.shifted(static_cast<int>(-before));
      }
      before += datum.form(y.letters[k], g);
    }
    memo.emplace(mask, r);
    return r;
  };
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  LaurentPoly s = go(full);
  if (s.is_zero()) return {};
  LaurentPoly den = x.prefactor * y.prefactor;
  for (int g : x.letters) den *= LaurentPoly(1) - LaurentPoly::q(2 * datum.d(g));
  return RationalFn::fraction(s, den);
}

RestrictedInner inner_mackey_restricted(const FoldingDatum& fd, const MonomialWord& a, const MonomialWord& b) {
  const CartanDatum& ul = fd.quotient;
  RestrictedInner out;
  if (word_weight(ul.rank(), a) != word_weight(ul.rank(), b)) return out;
  LetterSequence x = expand_word(a, ul), y = expand_word(b, ul);
  auto unfold = [&](const std::vector<int>& letters, std::vector<std::size_t>& offset) {
    std::vector<int> nu;
    for (int j : letters) {
      offset.push_back(nu.size());
      const auto& o = fd.orbits[static_cast<std::size_t>(j)];
      nu.insert(nu.end(), o.begin(), o.end());
    }
    return nu;
  };
  std::vector<std::size_t> ox, oy;
  std::vector<int> nu = unfold(x.letters, ox), nu2 = unfold(y.letters, oy);
  std::map<long, Int> restricted, quotient;
  for_each_matching(ul, x.letters, y.letters, [&](const Matching& w, long a_ul) {
    Matching big(nu.size(), -1);
    for (std::size_t k = 0; k < w.size(); ++k) {
      const std::size_t s = fd.orbits[static_cast<std::size_t>(x.letters[k])].size();
      for (std::size_t r = 0; r < s; ++r)
        big[ox[k] + r] = static_cast<int>(oy[static_cast<std::size_t>(w[k])] + r);
    }
    for (std::size_t t = 0; t < big.size(); ++t)
      if (nu2[static_cast<std::size_t>(big[t])] != nu[t]) throw MismatchError("phi does not preserve labels");
    const long a_big = inversion_stat(fd.base, nu, big);
    if (a_big != a_ul)
      throw MismatchError("A(phi(xi)) = " + std::to_string(a_big) + " but A(xi) = " + std::to_string(a_ul));
    restricted[-a_big] += 1;
    quotient[-a_ul] += 1;
    out.witness.emplace_back(w, std::move(big));
  });
  out.restricted_sum = from_counts(restricted);
  out.quotient_sum = from_counts(quotient);
  if (out.restricted_sum != out.quotient_sum) throw MismatchError("restricted sum differs from the quotient sum");
  if (!out.restricted_sum.is_zero())
    out.value = RationalFn::fraction(out.restricted_sum, x.prefactor * y.prefactor * delta_weight(ul, a));
  return out;
}

RationalFn pbw_diag(const CartanDatum& datum, const ReducedSequence& seq, const ExponentVector& c) {
  LaurentPoly den(1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const long n = datum.pair(seq.betas[k], seq.betas[k]);
    for (int d = 1; d <= c[k]; ++d) den *= LaurentPoly(1) - LaurentPoly::q(static_cast<int>(n * d));
  }
  return RationalFn::fraction(LaurentPoly(1), den);
}

}  // namespace qcanon

/// @file gram.hpp
/// @brief Inner products of monomial words: Mackey matching sum and shuffle recursion.
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qcanon/folding.hpp"
#include "qcanon/laurent.hpp"
#include "qcanon/monomial.hpp"

namespace qcanon {

/// Divided powers expanded into single letters, with prod [c_k]_{d}! kept aside.
struct LetterSequence {
  std::vector<int> letters;
  LaurentPoly prefactor;
};
LetterSequence expand_word(const MonomialWord& word, const CartanDatum& datum);

/// w[i] = position in nu' matched to position i of nu (0-based).
using Matching = std::vector<int>;

std::vector<Matching> matchings(const std::vector<int>& nu, const std::vector<int>& nu2);
/// Streams matchings with their A-statistic without storing them.
void for_each_matching(const CartanDatum& datum, const std::vector<int>& nu, const std::vector<int>& nu2,
                       const std::function<void(const Matching&, long)>& fn);
/// sum over k < l with w(k) > w(l) of (alpha_{nu_k}, alpha_{nu_l}).
long inversion_stat(const CartanDatum& datum, const std::vector<int>& nu, const Matching& w);
/// sum over all matchings of q^{-A}.
LaurentPoly matching_sum(const CartanDatum& datum, const std::vector<int>& nu, const std::vector<int>& nu2);

/// prod over letters of (1 - q^{(alpha, alpha)})^{exp}.
LaurentPoly delta_weight(const CartanDatum& datum, const MonomialWord& word);

RationalFn inner_mackey(const CartanDatum& datum, const MonomialWord& a, const MonomialWord& b);
/// Independent route: recursion on the first letter of `a` through the
/// twisted coproduct, memoized on (suffix of a, remaining letters of b).
RationalFn inner_shuffle(const CartanDatum& datum, const MonomialWord& a, const MonomialWord& b);

struct RestrictedInner {
  RationalFn value;
  LaurentPoly restricted_sum;
  LaurentPoly quotient_sum;
  /// Each quotient matching with its image under phi.
  std::vector<std::pair<Matching, Matching>> witness;
};
/// Computes phi(Xi) inside the unfolded letter sequences and checks
/// A(phi(xi)) = A(xi) per matching. Throws MismatchError otherwise.
RestrictedInner inner_mackey_restricted(const FoldingDatum& fd, const MonomialWord& a, const MonomialWord& b);

/// prod_k prod_{d=1}^{c_k} 1/(1 - q^{(beta_k,beta_k) d}).
RationalFn pbw_diag(const CartanDatum& datum, const ReducedSequence& seq, const ExponentVector& c);

}  // namespace qcanon

/// @file transition.hpp
/// @brief Per-weight Gram matrices, Lambda = tHDH, H = PQ and the folding comparisons.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcanon/gram.hpp"
#include "qcanon/laurent.hpp"
#include "qcanon/presets.hpp"

namespace qcanon {

enum class Basis { modified, folded, symmetric };
Basis parse_basis(const std::string& s);
std::string basis_name(Basis b);

using RMatrix = std::vector<std::vector<RationalFn>>;
using LMatrix = std::vector<std::vector<LaurentPoly>>;

/// Lambda together with its factored form delta^-1 Gamma^-1 core Gamma^-1,
/// where core holds the matching sums and Gamma the divided-power prefactors.
struct GramBlock {
  Basis basis = Basis::modified;
  RootVector weight;
  std::vector<ExponentVector> index;
  std::vector<MonomialWord> words;
  RMatrix lambda;
  LaurentPoly delta;
  std::vector<LaurentPoly> gamma;
  LMatrix core;
};

const CartanDatum& basis_datum(const Setup& setup, Basis basis);
const ReducedSequence& basis_sequence(const Setup& setup, Basis basis);
MonomialWord basis_word(const Setup& setup, Basis basis, const ExponentVector& c);

GramBlock gram_block(const Setup& setup, const RootVector& gamma, Basis basis);

struct LdlResult {
  LMatrix H;
  std::vector<RationalFn> D;
};
/// Unique Lambda = tHDH with H lower unitriangular; H is certified into
/// Z[q,q^-1]. Throws SingularPivot or NotIntegral.
LdlResult ldl(const RMatrix& lambda);
/// Same recursion over Q(q) without the integrality certificate.
std::pair<RMatrix, std::vector<RationalFn>> ldl_rational(const RMatrix& lambda);

struct PqResult {
  LMatrix P;
  LMatrix Q;
};
/// H = PQ, P off-diagonal in qZ[q], Q bar-invariant; entries are visited by
/// increasing i - j.
PqResult pq_split(const LMatrix& H);

RMatrix reconstruct_lambda(const LMatrix& H, const std::vector<RationalFn>& D);
LMatrix mat_mul(const LMatrix& a, const LMatrix& b);
RMatrix to_rational(const LMatrix& m);

/// Positions within `index` of the sigma-fixed vectors, listed in the order
/// of the quotient block at the folded weight.
struct SigmaRows {
  std::vector<std::size_t> rows;
  std::vector<ExponentVector> index;    // base exponents
  std::vector<ExponentVector> ulindex;  // matching quotient exponents
};
SigmaRows sigma_rows(const Setup& setup, const RootVector& gamma, const std::vector<ExponentVector>& index);

template <class T>
std::vector<std::vector<T>> submatrix(const std::vector<std::vector<T>>& m, const std::vector<std::size_t>& rows) {
  std::vector<std::vector<T>> r(rows.size(), std::vector<T>(rows.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b) r[a][b] = m[rows[a]][rows[b]];
  return r;
}

/// (sub-index, M^sigma) for a matrix indexed by a block of the lifted sequence.
template <class T>
std::pair<std::vector<ExponentVector>, std::vector<std::vector<T>>> sigma_submatrix(
    const Setup& setup, const RootVector& gamma, const std::vector<ExponentVector>& index,
    const std::vector<std::vector<T>>& m) {
  SigmaRows sr = sigma_rows(setup, gamma, index);
  return {sr.index, submatrix(m, sr.rows)};
}

struct CongruenceReport {
  unsigned long p = 0;
  bool equal = true;
  std::vector<std::pair<std::size_t, std::size_t>> diffs;
};
/// Entrywise coefficient reduction mod p. Throws IndexMismatch on shape mismatch.
CongruenceReport mod_p_compare(const LMatrix& psigma, const LMatrix& ulp, unsigned long p);

struct TransitionBlock {
  GramBlock gram;
  LMatrix H;
  std::vector<RationalFn> D;
  LMatrix P;
  LMatrix Q;
};
TransitionBlock pipeline(const Setup& setup, const RootVector& gamma, Basis basis);

/// The weight the basis lives over, e.g. quotient coordinates for `folded`.
int basis_rank(const Setup& setup, Basis basis);

}  // namespace qcanon

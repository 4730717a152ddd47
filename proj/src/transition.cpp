#include "qcanon/transition.hpp"

#include <algorithm>

#include "qcanon/errors.hpp"

namespace qcanon {

Basis parse_basis(const std::string& s) {
  if (s == "modified") return Basis::modified;
  if (s == "folded") return Basis::folded;
  if (s == "symmetric") return Basis::symmetric;
  throw ConfigError("basis must be modified, folded or symmetric, not '" + s + "'");
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::modified:
      return "modified";
    case Basis::folded:
      return "folded";
    case Basis::symmetric:
      return "symmetric";
  }
  return "?";
}

const CartanDatum& basis_datum(const Setup& setup, Basis basis) {
  return basis == Basis::folded ? setup.quotient() : setup.base();
}

const ReducedSequence& basis_sequence(const Setup& setup, Basis basis) {
  return basis == Basis::folded ? setup.ulseq : setup.seq;
}

int basis_rank(const Setup& setup, Basis basis) { return basis_datum(setup, basis).rank(); }

MonomialWord basis_word(const Setup& setup, Basis basis, const ExponentVector& c) {
  switch (basis) {
    case Basis::modified:
      return word_modified(setup.fold, setup.seq, c);
    case Basis::folded:
      return word_folded(setup.fold, setup.ulseq, c);
    case Basis::symmetric:
      return word_sym(setup.seq, c);
  }
  return {};
}

GramBlock gram_block(const Setup& setup, const RootVector& gamma, Basis basis) {
  const CartanDatum& datum = basis_datum(setup, basis);
  GramBlock g;
  g.basis = basis;
  g.weight = gamma;
  g.index = enumerate_block(basis_sequence(setup, basis), gamma);
  const std::size_t n = g.index.size();
  std::vector<LetterSequence> letters;
  for (const auto& c : g.index) {
    g.words.push_back(basis_word(setup, basis, c));
    if (word_weight(datum.rank(), g.words.back()) != gamma)
      throw InvariantError("monomial word does not have the weight of its exponent vector");
    letters.push_back(expand_word(g.words.back(), datum));
    g.gamma.push_back(letters.back().prefactor);
  }
  g.delta = LaurentPoly(1);
  for (int i = 0; i < datum.rank(); ++i)
    g.delta *= (LaurentPoly(1) - LaurentPoly::q(datum.form(i, i))).pow(static_cast<unsigned>(gamma[static_cast<std::size_t>(i)]));
  g.core.assign(n, std::vector<LaurentPoly>(n));
  g.lambda.assign(n, std::vector<RationalFn>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      g.core[a][b] = matching_sum(datum, letters[a].letters, letters[b].letters);
      g.core[b][a] = g.core[a][b];
      g.lambda[a][b] = RationalFn::fraction(g.core[a][b], g.delta * g.gamma[a] * g.gamma[b]);
      g.lambda[b][a] = g.lambda[a][b];
    }
  return g;
}

std::pair<RMatrix, std::vector<RationalFn>> ldl_rational(const RMatrix& lambda) {
  const std::size_t n = lambda.size();
  RMatrix H(n, std::vector<RationalFn>(n));
  std::vector<RationalFn> D(n);
  for (std::size_t i = n; i-- > 0;) {
    RationalFn d = lambda[i][i];
    for (std::size_t k = i + 1; k < n; ++k)
      if (!H[k][i].is_zero()) d -= H[k][i] * H[k][i] * D[k];
    if (d.is_zero()) throw SingularPivot("zero pivot at row " + std::to_string(i + 1));
    D[i] = d;
    H[i][i] = RationalFn(1);
    for (std::size_t b = 0; b < i; ++b) {
      RationalFn s = lambda[i][b];
      for (std::size_t k = i + 1; k < n; ++k)
        if (!H[k][i].is_zero() && !H[k][b].is_zero()) s -= H[k][i] * H[k][b] * D[k];
      H[i][b] = s / d;
    }
  }
  return {std::move(H), std::move(D)};
}

LdlResult ldl(const RMatrix& lambda) {
  auto [Hr, D] = ldl_rational(lambda);
  LdlResult r;
  r.D = std::move(D);
  const std::size_t n = Hr.size();
  r.H.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto v = Hr[i][j].to_laurent();
      if (!v) throw NotIntegral("H[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " + Hr[i][j].str());
      r.H[i][j] = *v;
    }
  return r;
}

PqResult pq_split(const LMatrix& H) {
  const std::size_t n = H.size();
  PqResult r;
  r.P.assign(n, std::vector<LaurentPoly>(n));
  r.Q.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (H[i][i] != LaurentPoly(1)) throw InvariantError("pq_split: H is not unitriangular");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!H[i][j].is_zero()) throw InvariantError("pq_split: H is not lower triangular");
    r.P[i][i] = LaurentPoly(1);
    r.Q[i][i] = LaurentPoly(1);
  }
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = m; i < n; ++i) {
      const std::size_t j = i - m;
      LaurentPoly a = H[i][j];
      for (std::size_t k = j + 1; k < i; ++k) a -= r.P[i][k] * r.Q[k][j];
      BarParts s = split_bar_parts(a);
      LaurentPoly mb = s.minus.bar();
      r.P[i][j] = s.plus - mb;
      r.Q[i][j] = s.minus + mb + LaurentPoly(s.zero);
    }
  return r;
}

RMatrix reconstruct_lambda(const LMatrix& H, const std::vector<RationalFn>& D) {
  const std::size_t n = H.size();
  RMatrix L(n, std::vector<RationalFn>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      RationalFn s;
      for (std::size_t i = std::max(a, b); i < n; ++i)
        if (!H[i][a].is_zero() && !H[i][b].is_zero()) s += RationalFn(H[i][a] * H[i][b]) * D[i];
      L[a][b] = s;
    }
  return L;
}

LMatrix mat_mul(const LMatrix& a, const LMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  LMatrix r(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

RMatrix to_rational(const LMatrix& m) {
  RMatrix r;
  for (const auto& row : m) r.emplace_back(row.begin(), row.end());
  return r;
}

SigmaRows sigma_rows(const Setup& setup, const RootVector& gamma, const std::vector<ExponentVector>& index) {
  SigmaRows sr;
  if (!sigma_stable(setup.fold, gamma)) return sr;
  for (const auto& ulc : enumerate_block(setup.ulseq, quotient_weight(setup.fold, gamma))) {
    ExponentVector c = fold_exponent(setup.fold, setup.ulseq, ulc);
    auto it = std::find(index.begin(), index.end(), c);
    if (it == index.end()) throw IndexMismatch("sigma-fixed vector missing from the block");
    sr.rows.push_back(static_cast<std::size_t>(it - index.begin()));
    sr.index.push_back(std::move(c));
    sr.ulindex.push_back(ulc);
  }
  return sr;
}

CongruenceReport mod_p_compare(const LMatrix& psigma, const LMatrix& ulp, unsigned long p) {
  CongruenceReport rep;
  rep.p = p;
  if (psigma.size() != ulp.size()) throw IndexMismatch("congruence: matrices differ in size");
  for (std::size_t i = 0; i < psigma.size(); ++i) {
    if (psigma[i].size() != ulp[i].size()) throw IndexMismatch("congruence: matrices differ in shape");
    for (std::size_t j = 0; j < psigma[i].size(); ++j)
      if (psigma[i][j].mod(p) != ulp[i][j].mod(p)) {
        rep.equal = false;
        rep.diffs.emplace_back(i, j);
      }
  }
  return rep;
}

TransitionBlock pipeline(const Setup& setup, const RootVector& gamma, Basis basis) {
  TransitionBlock t;
  t.gram = gram_block(setup, gamma, basis);
  LdlResult f = ldl(t.gram.lambda);
  t.H = std::move(f.H);
  t.D = std::move(f.D);
  PqResult pq = pq_split(t.H);
  t.P = std::move(pq.P);
  t.Q = std::move(pq.Q);
  return t;
}

}  // namespace qcanon

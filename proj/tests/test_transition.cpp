#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcanon/errors.hpp"
#include "qcanon/transition.hpp"
#include "support.hpp"

using namespace qcanon;

namespace {

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly one(1);
LaurentPoly Q(int e) { return LaurentPoly::q(e); }
RationalFn frac(const LaurentPoly& a, const LaurentPoly& b) { return RationalFn::fraction(a, b); }

// Square matrix from its lower triangle.
LMatrix lower(const std::vector<std::vector<LaurentPoly>>& rows) {
  LMatrix m(rows.size(), std::vector<LaurentPoly>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m[i][j] = rows[i][j];
  return m;
}

// Symmetric matrix from its upper triangle.
LMatrix symmetric(const std::vector<std::vector<LaurentPoly>>& rows) {
  const std::size_t n = rows.size();
  LMatrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m[i][i + j] = m[i + j][i] = rows[i][j];
  return m;
}

RMatrix from_core(const LMatrix& core, const LaurentPoly& delta, const std::vector<LaurentPoly>& gamma) {
  RMatrix r(core.size(), std::vector<RationalFn>(core.size()));
  for (std::size_t a = 0; a < core.size(); ++a)
    for (std::size_t b = 0; b < core.size(); ++b) r[a][b] = frac(core[a][b], delta * gamma[a] * gamma[b]);
  return r;
}

// sum_k H_ka D_k H_kb, written out independently of reconstruct_lambda.
RMatrix tHDH(const LMatrix& H, const std::vector<RationalFn>& D) {
  const std::size_t n = H.size();
  RMatrix r(n, std::vector<RationalFn>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) r[a][b] += RationalFn(H[k][a]) * D[k] * RationalFn(H[k][b]);
  return r;
}

LMatrix product(const LMatrix& a, const LMatrix& b) {
  const std::size_t n = a.size();
  LMatrix r(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

}  // namespace

TEST_CASE("A3 block 2,2,1 in the modified basis") {
  const Setup s = make_setup("A3", "A3->B2");
  const TransitionBlock t = pipeline(s, {2, 2, 1}, Basis::modified);
  const LaurentPoly v = q + Q(-1);
  const LMatrix core = symmetric({{4, 2 * v, 2 * v, v * v},
                                  {2 + 2 * Q(-2), v * v, q + 2 * Q(-1) + Q(-3)},
                                  {2 + 2 * Q(-2), q + 2 * Q(-1) + Q(-3)},
                                  {1 + 2 * Q(-2) + Q(-4)}});
  const LaurentPoly delta = (one - q * q).pow(5);
  CHECK(t.gram.core == core);
  CHECK(t.gram.delta == delta);
  CHECK(t.gram.gamma == std::vector<LaurentPoly>{one, v, v, v * v});
  CHECK(t.gram.lambda == from_core(core, delta, {one, v, v, v * v}));

  const LaurentPoly base = (one - q * q).pow(5) * (one + q * q).pow(2);
  const LaurentPoly u = one - Q(4);
  CHECK(t.D == std::vector<RationalFn>{frac(u * u, base), frac(u, base), frac(u, base), frac(one, base)});
  const LaurentPoly w = one + q * q;
  CHECK(t.H == lower({{1}, {w, 1}, {w, 0, 1}, {w * w, w, w, 1}}));
  CHECK(t.P == lower({{1}, {Q(2), 1}, {Q(2), 0, 1}, {Q(4), Q(2), Q(2), 1}}));
  CHECK(t.Q == lower({{1}, {1, 1}, {1, 0, 1}, {1, 1, 1, 1}}));
  CHECK(tHDH(t.H, t.D) == t.gram.lambda);

  const auto [idx, Ls] = sigma_submatrix(s, {2, 2, 1}, t.gram.index, t.gram.lambda);
  CHECK(idx == std::vector<ExponentVector>{{1, 1, 1, 0, 0, 0}, {2, 2, 0, 0, 0, 1}});
  CHECK(Ls == from_core(symmetric({{4, v * v}, {(one + Q(-2)).pow(2)}}), delta, {one, v * v}));
  const auto [pidx, Ps] = sigma_submatrix(s, {2, 2, 1}, t.gram.index, t.P);
  CHECK(Ps == lower({{1, 0}, {Q(4), 1}}));
}

TEST_CASE("B2 block 2,1 in the folded basis") {
  const Setup s = make_setup("B2");
  const TransitionBlock t = pipeline(s, {2, 1}, Basis::folded);
  const LMatrix core = symmetric({{2, Q(2) + Q(-2)}, {one + Q(-4)}});
  const LaurentPoly delta = (one - Q(4)).pow(2) * (one - q * q);
  CHECK(t.gram.core == core);
  CHECK(t.gram.delta == delta);
  CHECK(t.gram.lambda == from_core(core, delta, {one, Q(2) + Q(-2)}));
  CHECK(t.H == lower({{1}, {one + Q(4), 1}}));
  CHECK(t.D == std::vector<RationalFn>{frac(one, (one - q * q) * (one - Q(4))),
                                       frac(one, (one - q * q) * (one - Q(4)) * (one - Q(8)))});
  CHECK(t.P == lower({{1}, {Q(4), 1}}));
  CHECK(t.Q == lower({{1}, {1, 1}}));
}

TEST_CASE("G2 block 2,1 in the folded basis") {
  const Setup s = make_setup("G2");
  const TransitionBlock t = pipeline(s, {2, 1}, Basis::folded);
  const LMatrix core = symmetric({{2, Q(3) + Q(-3)}, {one + Q(-6)}});
  CHECK(t.gram.core == core);
  CHECK(t.gram.lambda == from_core(core, (one - Q(6)).pow(2) * (one - q * q), {one, Q(3) + Q(-3)}));
  CHECK(t.H == lower({{1}, {one + Q(6), 1}}));
  CHECK(t.D == std::vector<RationalFn>{frac(one, (one - q * q) * (one - Q(6))),
                                       frac(one, (one - q * q) * (one - Q(6)) * (one - Q(12)))});
  CHECK(t.P == lower({{1}, {Q(6), 1}}));
  CHECK(t.Q == lower({{1}, {1, 1}}));
}

TEST_CASE("D4 block 2,2,2,1 restricted to sigma-fixed rows") {
  const Setup s = make_setup("D4", "D4->G2");
  const GramBlock g = gram_block(s, {2, 2, 2, 1}, Basis::modified);
  const auto [idx, Ls] = sigma_submatrix(s, {2, 2, 2, 1}, g.index, g.lambda);
  const LaurentPoly v = q + Q(-1);
  CHECK(idx == std::vector<ExponentVector>{{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1}});
  CHECK(Ls == from_core(symmetric({{8, v.pow(3)}, {(one + Q(-2)).pow(3)}}), (one - q * q).pow(7), {one, v.pow(3)}));
}

TEST_CASE("ldl on small matrices") {
  const RMatrix one_by_one = {{frac(one, one - q * q)}};
  const LdlResult r = ldl(one_by_one);
  CHECK(r.H == LMatrix{{one}});
  CHECK(r.D == std::vector<RationalFn>{frac(one, one - q * q)});
  CHECK_THROWS_AS(ldl({{RationalFn()}}), SingularPivot);
  CHECK_THROWS_AS(ldl({{RationalFn(1), RationalFn(1)}, {RationalFn(1), RationalFn(2)}}), NotIntegral);
  const auto [Hr, Dr] = ldl_rational({{RationalFn(1), RationalFn(1)}, {RationalFn(1), RationalFn(2)}});
  CHECK(Hr[1][0] == frac(one, LaurentPoly(2)));
  CHECK(Dr == std::vector<RationalFn>{frac(one, LaurentPoly(2)), RationalFn(2)});
  CHECK_THROWS_AS(ldl({{RationalFn(1), RationalFn(0)}, {RationalFn(0), RationalFn(0)}}), SingularPivot);
}

TEST_CASE("pq_split") {
  const PqResult a = pq_split(lower({{1}, {Q(-2), 1}}));
  CHECK(a.P == lower({{1}, {-Q(2), 1}}));
  CHECK(a.Q == lower({{1}, {Q(2) + Q(-2), 1}}));
  CHECK_THROWS_AS(pq_split(lower({{2}})), InvariantError);
  CHECK_THROWS_AS(pq_split({{one, q}, {0, one}}), InvariantError);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + std::size_t(qtest::uniform(0, 4));
    LMatrix H(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
      H[i][i] = one;
      for (std::size_t j = 0; j < i; ++j) H[i][j] = qtest::random_laurent();
    }
    const PqResult r = pq_split(H);
    REQUIRE(product(r.P, r.Q) == H);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        REQUIRE((r.P[i][j].is_zero() || r.P[i][j].min_exp() > 0));
        REQUIRE(r.Q[i][j].bar() == r.Q[i][j]);
      }
    CHECK(mat_mul(r.P, r.Q) == H);
  }
}

TEST_CASE("factorizations over whole blocks") {
  for (const auto& [p, f, b] : {std::tuple<const char*, const char*, Basis>{"A3", "A3->B2", Basis::modified},
                                {"A3", "A3->B2", Basis::symmetric},
                                {"B2", "", Basis::folded},
                                {"G2", "", Basis::folded}}) {
    const Setup s = *f ? make_setup(p, f) : make_setup(p);
    for (const auto& g : weights_up_to(basis_rank(s, b), 5)) {
      const TransitionBlock t = pipeline(s, g, b);
      const std::size_t n = t.H.size();
      REQUIRE(tHDH(t.H, t.D) == t.gram.lambda);
      REQUIRE(reconstruct_lambda(t.H, t.D) == t.gram.lambda);
      REQUIRE(product(t.P, t.Q) == t.H);
      for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(t.D[i] == pbw_diag(basis_datum(s, b), basis_sequence(s, b), t.gram.index[i]));
        for (std::size_t j = 0; j < i; ++j) REQUIRE((t.P[i][j].is_zero() || t.P[i][j].min_exp() > 0));
      }
    }
  }
}

TEST_CASE("sigma rows and congruence reports") {
  const Setup s = make_setup("A3", "A3->B2");
  const GramBlock g = gram_block(s, {2, 2, 1}, Basis::modified);
  const SigmaRows sr = sigma_rows(s, {2, 2, 1}, g.index);
  CHECK(sr.rows == std::vector<std::size_t>{0, 3});
  CHECK(sr.ulindex == std::vector<ExponentVector>{{1, 1, 0, 0}, {2, 0, 0, 1}});
  CHECK(sigma_rows(s, {1, 0, 1}, gram_block(s, {1, 0, 1}, Basis::modified).index).rows.empty());
  CHECK_THROWS_AS(sigma_rows(s, {2, 2, 1}, {{1, 1, 1, 0, 0, 0}}), IndexMismatch);

  const LMatrix a = lower({{1}, {3 * Q(4) + 2 * q, 1}}), b = lower({{1}, {Q(4), 1}});
  CHECK(mod_p_compare(a, b, 2).equal);
  const CongruenceReport r = mod_p_compare(a, b, 3);
  CHECK_FALSE(r.equal);
  CHECK(r.diffs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}});
  CHECK_THROWS_AS(mod_p_compare(a, lower({{1}}), 2), IndexMismatch);
  CHECK(parse_basis("folded") == Basis::folded);
  CHECK_THROWS_AS(parse_basis("pbw"), ConfigError);
}

TEST_CASE("Lambda^sigma entries turn into quotient entries under the substitution") {
  for (const auto& [p, f] : {std::pair<const char*, const char*>{"A3", "A3->B2"}, {"D4", "D4->G2"}}) {
    const Setup s = make_setup(p, f);
    for (const auto& ulg : weights_up_to(s.quotient().rank(), 4)) {
      const RootVector g = unfold_weight(s.fold, ulg);
      const GramBlock big = gram_block(s, g, Basis::modified);
      const GramBlock ul = gram_block(s, ulg, Basis::folded);
      const SigmaRows sr = sigma_rows(s, g, big.index);
      REQUIRE(sr.ulindex == ul.index);
      for (std::size_t a = 0; a < sr.rows.size(); ++a)
        for (std::size_t b = 0; b < sr.rows.size(); ++b) {
          const std::size_t ia = sr.rows[a], ib = sr.rows[b];
          // unfolded side: full matching sum over delta and the prefactors
          REQUIRE(big.lambda[ia][ib] == frac(big.core[ia][ib], big.delta * big.gamma[ia] * big.gamma[ib]));
          // quotient side: phi-restricted sum over the quotient delta and prefactors
          const RestrictedInner r = inner_mackey_restricted(s.fold, ul.words[a], ul.words[b]);
          const LaurentPoly den = delta_weight(s.quotient(), ul.words[a]) *
                                  expand_word(ul.words[a], s.quotient()).prefactor *
                                  expand_word(ul.words[b], s.quotient()).prefactor;
          REQUIRE(ul.lambda[a][b] == frac(r.restricted_sum, den));
        }
    }
  }
}

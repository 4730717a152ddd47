#include "qcanon/checks.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "qcanon/errors.hpp"
#include "qcanon/gram.hpp"

namespace qcanon {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// Keeps reports readable when a sweep goes badly wrong.
void fail(CheckReport& r, const std::string& msg) {
  if (r.failures.size() < 20) r.failures.push_back(msg);
  else if (r.failures.size() == 20) r.failures.push_back("...");
}

MonomialWord random_word(std::mt19937_64& rng, int rank, int max_height) {
  std::uniform_int_distribution<int> gen(0, rank - 1), ex(1, 2);
  std::uniform_int_distribution<int> len(1, max_height);
  MonomialWord w;
  int left = len(rng);
  while (left > 0) {
    int e = std::min(ex(rng), left);
    w.push_back({gen(rng), e});
    left -= e;
  }
  return w;
}

// A word of the same weight: shuffle the letters, then regroup equal
// neighbours into divided powers at random.
MonomialWord rearranged(std::mt19937_64& rng, const MonomialWord& w) {
  std::vector<int> letters;
  for (const Letter& l : w) letters.insert(letters.end(), static_cast<std::size_t>(l.exp), l.gen);
  std::shuffle(letters.begin(), letters.end(), rng);
  std::bernoulli_distribution merge(0.5);
  MonomialWord out;
  for (int g : letters) {
    if (!out.empty() && out.back().gen == g && merge(rng)) ++out.back().exp;
    else out.push_back({g, 1});
  }
  return out;
}

bool in_q_zq(const LaurentPoly& p) { return p.is_zero() || p.min_exp() >= 1; }

}  // namespace

std::vector<Basis> supported_bases(const Setup& setup) {
  if (!setup.folded()) return {Basis::symmetric};
  if (setup.quotient_target) return {Basis::folded};
  return {Basis::modified, Basis::symmetric, Basis::folded};
}

std::vector<CheckReport> check_oracle(const Setup& setup, int max_height, int random_pairs, std::uint64_t seed) {
  std::vector<CheckReport> out;
  for (Basis basis : supported_bases(setup)) {
    const CartanDatum& datum = basis_datum(setup, basis);
    CheckReport r{"mackey = shuffle [" + basis_name(basis) + "]", 0, {}};
    CheckReport sym{"pairing symmetric [" + basis_name(basis) + "]", 0, {}};
    for (const RootVector& g : weights_up_to(datum.rank(), max_height)) {
      std::vector<MonomialWord> words;
      for (const auto& c : enumerate_block(basis_sequence(setup, basis), g)) words.push_back(basis_word(setup, basis, c));
      for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a; b < words.size(); ++b) {
          RationalFn m = inner_mackey(datum, words[a], words[b]);
          RationalFn s = inner_shuffle(datum, words[a], words[b]);
          ++r.instances;
          if (m != s)
            fail(r, word_str(datum, words[a]) + " | " + word_str(datum, words[b]) + ": " + m.str() + " vs " + s.str());
          ++sym.instances;
          if (m != inner_mackey(datum, words[b], words[a]))
            fail(sym, word_str(datum, words[a]) + " | " + word_str(datum, words[b]));
        }
    }
    out.push_back(std::move(r));
    out.push_back(std::move(sym));
  }
  if (random_pairs > 0) {
    const Basis basis = supported_bases(setup).front();
    const CartanDatum& datum = basis_datum(setup, basis);
    std::mt19937_64 rng(seed);
    CheckReport r{"mackey = shuffle [random pairs]", 0, {}};
    for (int t = 0; t < random_pairs; ++t) {
      MonomialWord a = random_word(rng, datum.rank(), std::max(1, max_height));
      MonomialWord b = rearranged(rng, a);
      ++r.instances;
      RationalFn m = inner_mackey(datum, a, b), s = inner_shuffle(datum, a, b);
      if (m != s) fail(r, word_str(datum, a) + " | " + word_str(datum, b) + ": " + m.str() + " vs " + s.str());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> check_factorization(const Setup& setup, Basis basis, int max_height) {
  const CartanDatum& datum = basis_datum(setup, basis);
  const ReducedSequence& seq = basis_sequence(setup, basis);
  const std::string tag = " [" + basis_name(basis) + "]";
  CheckReport recon{"tHDH = Lambda" + tag, 0, {}}, pq{"PQ = H" + tag, 0, {}};
  CheckReport pshape{"P off-diagonal in qZ[q]" + tag, 0, {}}, qbar{"Q bar-invariant" + tag, 0, {}};
  CheckReport integral{"H in Z[q,q^-1]" + tag, 0, {}}, diag{"D = PBW diagonal" + tag, 0, {}};
  for (const RootVector& g : weights_up_to(datum.rank(), max_height)) {
    if (enumerate_block(seq, g).empty()) continue;
    const std::string at = vec_str(g);
    GramBlock gb = gram_block(setup, g, basis);
    LdlResult f;
    ++integral.instances;
    try {
      f = ldl(gb.lambda);
    } catch (const NotIntegral& e) {
      fail(integral, at + ": " + e.what());
      continue;
    }
    ++recon.instances;
    if (reconstruct_lambda(f.H, f.D) != gb.lambda) fail(recon, at);
    PqResult s = pq_split(f.H);
    ++pq.instances;
    if (mat_mul(s.P, s.Q) != f.H) fail(pq, at);
    const std::size_t n = f.H.size();
    for (std::size_t i = 0; i < n; ++i) {
      ++diag.instances;
      if (f.D[i] != pbw_diag(datum, seq, gb.index[i])) fail(diag, at + " row " + std::to_string(i + 1));
      for (std::size_t j = 0; j < i; ++j) {
        ++pshape.instances;
        ++qbar.instances;
        if (!in_q_zq(s.P[i][j])) fail(pshape, at + " P[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " + s.P[i][j].str());
        if (!s.Q[i][j].is_bar_invariant())
          fail(qbar, at + " Q[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " + s.Q[i][j].str());
      }
    }
  }
  return {recon, pq, pshape, qbar, integral, diag};
}

std::vector<CheckReport> check_delta(const Setup& setup, int max_height) {
  CheckReport r{"delta vanishes on single parts", 0, {}};
  const CartanDatum& datum = setup.base();
  const ReducedSequence& seq = setup.seq;
  for (const Part& part : setup.parts) {
    ExponentVector c(seq.size(), 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t t, int left) {
      if (t == part.end) {
        if (left == max_height) return;
        ++r.instances;
        long d = delta_codim(datum, seq, setup.orientation, c);
        if (d != 0) fail(r, vec_str(c) + ": delta = " + std::to_string(d));
        return;
      }
      const int h = height(seq.betas[t]);
      for (int v = 0; v * h <= left; ++v) {
        c[t] = v;
        go(t + 1, left - v * h);
      }
      c[t] = 0;
    };
    go(part.begin, max_height);
  }
  return {r};
}

std::vector<CheckReport> check_restriction(const Setup& setup, int max_height) {
  CheckReport r{"phi-restricted sum = quotient sum", 0, {}};
  CheckReport v{"restricted value = quotient pairing", 0, {}};
  const CartanDatum& ul = setup.quotient();
  for (const RootVector& g : weights_up_to(ul.rank(), max_height)) {
    std::vector<MonomialWord> words;
    for (const auto& c : enumerate_block(setup.ulseq, g)) words.push_back(word_folded(setup.fold, setup.ulseq, c));
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = a; b < words.size(); ++b) {
        const std::string at = word_str(ul, words[a]) + " | " + word_str(ul, words[b]);
        ++r.instances;
        RestrictedInner ri;
        try {
          ri = inner_mackey_restricted(setup.fold, words[a], words[b]);
        } catch (const MismatchError& e) {
          fail(r, at + ": " + e.what());
          continue;
        }
        if (ri.restricted_sum != matching_sum(ul, expand_word(words[a], ul).letters, expand_word(words[b], ul).letters))
          fail(r, at);
        ++v.instances;
        if (ri.value != inner_mackey(ul, words[a], words[b])) fail(v, at);
      }
  }
  return {r, v};
}

std::vector<CheckReport> check_congruence(const Setup& setup, int max_height) {
  CheckReport r{"P^sigma = P mod " + std::to_string(setup.fold.p), 0, {}};
  CheckReport shape{"sigma-fixed rows match the quotient block", 0, {}};
  for (const RootVector& ulg : weights_up_to(setup.quotient().rank(), max_height)) {
    if (enumerate_block(setup.ulseq, ulg).empty()) continue;
    const RootVector g = unfold_weight(setup.fold, ulg);
    TransitionBlock base = pipeline(setup, g, Basis::modified);
    TransitionBlock quo = pipeline(setup, ulg, Basis::folded);
    ++shape.instances;
    SigmaRows sr;
    try {
      sr = sigma_rows(setup, g, base.gram.index);
    } catch (const IndexMismatch& e) {
      fail(shape, vec_str(ulg) + ": " + e.what());
      continue;
    }
    if (sr.ulindex != quo.gram.index) {
      fail(shape, vec_str(ulg));
      continue;
    }
    ++r.instances;
    CongruenceReport cr = mod_p_compare(submatrix(base.P, sr.rows), quo.P, static_cast<unsigned long>(setup.fold.p));
    if (!cr.equal) {
      const auto [i, j] = cr.diffs.front();
      fail(r, vec_str(ulg) + ": " + std::to_string(cr.diffs.size()) + " entries differ, first at (" +
                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  return {shape, r};
}

std::vector<CheckReport> check_sum_congruence(const Setup& setup, int max_height) {
  const unsigned long p = static_cast<unsigned long>(setup.fold.p);
  CheckReport r{"matching sum = restricted sum mod " + std::to_string(p) + " (experimental)", 0, {}};
  r.gating = false;
  for (const RootVector& ulg : weights_up_to(setup.quotient().rank(), max_height)) {
    const RootVector g = unfold_weight(setup.fold, ulg);
    const GramBlock base = gram_block(setup, g, Basis::modified);
    const GramBlock quo = gram_block(setup, ulg, Basis::folded);
    const SigmaRows sr = sigma_rows(setup, g, base.index);
    for (std::size_t a = 0; a < sr.rows.size(); ++a)
      for (std::size_t b = a; b < sr.rows.size(); ++b) {
        ++r.instances;
        const LaurentPoly full = base.core[sr.rows[a]][sr.rows[b]];
        const LaurentPoly restricted = inner_mackey_restricted(setup.fold, quo.words[a], quo.words[b]).restricted_sum;
        if (full.mod(p) != restricted.mod(p))
          fail(r, vec_str(ulg) + " " + vec_str(quo.index[a]) + "," + vec_str(quo.index[b]) + ": " + full.str() + " vs " +
                      restricted.str());
      }
  }
  return {r};
}

std::vector<CheckReport> check_equivariance(const Setup& setup, int max_height) {
  CheckReport r{"m~(sigma c) = sigma m~(c)", 0, {}};
  CheckReport col{"sigma-fixed m~(c) collapses to the folded word", 0, {}};
  const FoldingDatum ulfd = trivial_folding(setup.quotient());
  for (const RootVector& g : weights_up_to(setup.base().rank(), max_height)) {
    const auto index = enumerate_block(setup.seq, g);
    for (const auto& c : index) {
      ++r.instances;
      MonomialWord lhs = canonical_form(setup.fold, word_modified(setup.fold, setup.seq, sigma_on_exponents(setup.fold, setup.seq, c)));
      MonomialWord rhs = canonical_form(setup.fold, sigma_on_word(setup.fold, word_modified(setup.fold, setup.seq, c)));
      if (lhs != rhs)
        fail(r, vec_str(c) + ": " + word_str(setup.base(), lhs) + " vs " + word_str(setup.base(), rhs));
    }
    if (!setup.folded() || !sigma_stable(setup.fold, g)) continue;
    SigmaRows sr = sigma_rows(setup, g, index);
    for (std::size_t t = 0; t < sr.rows.size(); ++t) {
      ++col.instances;
      const MonomialWord w = canonical_form(setup.fold, word_modified(setup.fold, setup.seq, sr.index[t]));
      try {
        MonomialWord got = canonical_form(ulfd, collapse_orbits(setup.fold, w));
        MonomialWord want = canonical_form(ulfd, word_folded(setup.fold, setup.ulseq, sr.ulindex[t]));
        if (got != want)
          fail(col, vec_str(sr.index[t]) + ": " + word_str(setup.quotient(), got) + " vs " + word_str(setup.quotient(), want));
      } catch (const MismatchError& e) {
        fail(col, vec_str(sr.index[t]) + ": " + e.what());
      }
    }
  }
  return {r, col};
}

}  // namespace qcanon

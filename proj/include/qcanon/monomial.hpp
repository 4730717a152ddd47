/// @file monomial.hpp
/// @brief Monomial words F((c)), m(c,h) and the modified m~(c,h); the codimension statistic.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcanon/folding.hpp"
#include "qcanon/rootsys.hpp"

namespace qcanon {

/// Oriented Dynkin edges, stored as (source, target).
struct Orientation {
  std::vector<std::pair<int, int>> edges;
};

/// Sources are part1, sinks part0. Checks that each Dynkin edge is
/// covered once and that i -> j implies j < i.
Orientation bipartite_orientation(const CartanDatum& datum, const std::vector<int>& part0,
                                  const std::vector<int>& part1);

/// The orientation of a datum stored in the order (*): the colour class of
/// the first label are the sinks.
Orientation preset_orientation(const CartanDatum& datum);

struct Letter {
  int gen;
  int exp;
  friend bool operator==(const Letter& a, const Letter& b) { return a.gen == b.gen && a.exp == b.exp; }
};
using MonomialWord = std::vector<Letter>;

/// Coordinates of c_k beta_k (k is 0-based).
std::vector<int> dvec(const ReducedSequence& seq, const ExponentVector& c, std::size_t k);

/// F(d): generators in descending index order, zero exponents dropped.
MonomialWord factor_word(const std::vector<int>& d);

/// F(d^1) ... F(d^N), one factor per beta.
MonomialWord word_sym(const ReducedSequence& seq, const ExponentVector& c);
/// Same construction over the quotient datum's sequence.
MonomialWord word_folded(const FoldingDatum& fd, const ReducedSequence& ulseq, const ExponentVector& ulc);
/// One factor per j_k-part, built from c restricted to that part.
MonomialWord word_modified(const FoldingDatum& fd, const ReducedSequence& seq, const ExponentVector& c);

RootVector word_weight(int rank, const MonomialWord& w);

/// -sum_{h<k, i} d_i^h d_i^k + sum_{h<k, i->j} d_j^h d_i^k. Throws
/// ConfigError on non-symmetric data.
long delta_codim(const CartanDatum& datum, const ReducedSequence& seq, const Orientation& orient,
                 const ExponentVector& c);

/// Restriction of c to the k-th part (other coordinates zeroed).
ExponentVector restrict_to_part(const ExponentVector& c, const Part& part);

MonomialWord sigma_on_word(const FoldingDatum& fd, const MonomialWord& w);
/// Stable-sorts each maximal run of mutually commuting letters by (orbit, label).
MonomialWord canonical_form(const FoldingDatum& fd, const MonomialWord& w);
/// Replaces runs that cover one orbit with equal exponents by the orbit
/// letter. Throws MismatchError when a run does not have that shape.
MonomialWord collapse_orbits(const FoldingDatum& fd, const MonomialWord& w);

/// `f[1']^(2) f[1] f[2]`
std::string word_str(const CartanDatum& datum, const MonomialWord& w);

}  // namespace qcanon

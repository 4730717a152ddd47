/// @file folding.hpp
/// @brief Admissible automorphisms, the quotient datum and index bijections.
#pragma once

#include <string>
#include <vector>

#include "qcanon/rootsys.hpp"

namespace qcanon {

struct FoldingDatum {
  CartanDatum base;
  /// sigma[i] is the index of sigma(label i).
  std::vector<int> sigma;
  /// Orbits ordered by first member; members ascending in the order of I.
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of;
  int p = 1;
  CartanDatum quotient;

  bool trivial() const { return p == 1; }
};

/// Throws NotAdmissible naming the offending pair. `names` overrides the
/// default quotient labels (first member, primes stripped when the orbit is not a singleton).
FoldingDatum validate_admissible(const CartanDatum& base, const std::vector<int>& sigma,
                                 const std::vector<std::string>& names = {});

/// Identity sigma: quotient equals base.
FoldingDatum trivial_folding(const CartanDatum& base);

/// Parses cycle notation such as `(1 1')(2)`; labels not mentioned are fixed.
std::vector<int> parse_cycles(const CartanDatum& base, const std::string& cycles);

/// Each quotient letter j becomes its orbit members in order.
std::vector<int> lift_sequence(const FoldingDatum& fd, const std::vector<int>& ulh);

/// Consecutive positions [begin, end) of a lifted sequence forming the
/// part of the k-th quotient letter.
struct Part {
  int orbit;
  std::size_t begin;
  std::size_t end;
};
/// Cuts a lifted sequence into orbit blocks; throws NotReduced when the
/// sequence does not have this shape.
std::vector<Part> j_parts(const FoldingDatum& fd, const ReducedSequence& seq);

/// sigma acting on Q: (sigma v)_{sigma(i)} = v_i.
RootVector sigma_on_root(const FoldingDatum& fd, const RootVector& v);
/// Moves c_t to the position of sigma(beta_t), so weights transform by sigma.
ExponentVector sigma_on_exponents(const FoldingDatum& fd, const ReducedSequence& seq, const ExponentVector& c);
/// Quotient exponents to sigma-fixed base exponents (each entry repeated |j_k| times).
ExponentVector fold_exponent(const FoldingDatum& fd, const ReducedSequence& ulseq, const ExponentVector& ulc);

/// Base weight, read in the quotient through orbit sums.
RootVector quotient_weight(const FoldingDatum& fd, const RootVector& gamma);
/// The sigma-stable base weight whose orbit coordinates are all gamma_j.
RootVector unfold_weight(const FoldingDatum& fd, const RootVector& ulgamma);
bool sigma_stable(const FoldingDatum& fd, const RootVector& gamma);

}  // namespace qcanon

/// @file presets.hpp
/// @brief Named Cartan data with their bipartite orientation, folding and reduced words.
#pragma once

#include <string>
#include <vector>

#include "qcanon/folding.hpp"
#include "qcanon/monomial.hpp"
#include "qcanon/rootsys.hpp"

namespace qcanon {

/// Everything a block computation needs. Labels of `fold.base` are stored
/// in the total order (*): part0 first, then part1.
struct Setup {
  std::string preset;   // as requested, e.g. "A3", "B2"
  std::string fold_name;  // e.g. "A3->B2"; empty for the trivial folding
  bool quotient_target = false;  // preset named the quotient (B2, G2, ...)
  FoldingDatum fold;
  std::vector<int> part0, part1;
  Orientation orientation;
  ReducedSequence seq;    // over fold.base, lifted from ulseq
  ReducedSequence ulseq;  // over fold.quotient
  std::vector<Part> parts;

  const CartanDatum& base() const { return fold.base; }
  const CartanDatum& quotient() const { return fold.quotient; }
  bool folded() const { return !fold.trivial(); }
};

/// `preset` is A3, A{2n-1}, D{n}, D4, E6 or a quotient name B{n}, C{n-1},
/// F4, G2. `fold` is empty or one of A{2n-1}->B{n}, D{n}->C{n-1}, E6->F4,
/// D4->G2, D4->C3. Throws UnsupportedPreset / ConfigError.
Setup make_setup(const std::string& preset, const std::string& fold = "");

/// Custom datum. Labels are re-ordered into (part0, part1) of the
/// 2-colouring; `sigma` is cycle notation or empty.
Setup make_custom_setup(const std::vector<std::string>& labels, const std::vector<std::vector<int>>& form,
                        const std::string& sigma = "");

/// Supported foldings, for help text.
std::vector<std::string> known_folds();

/// The fold a base preset takes when none is given: A{2n-1}->B{n},
/// D4->G2, D{n}->C{n-1}, E6->F4. Quotient presets return their own fold.
std::string default_fold(const std::string& preset);

}  // namespace qcanon

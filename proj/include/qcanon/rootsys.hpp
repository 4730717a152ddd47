/// @file rootsys.hpp
/// @brief Cartan data of finite type, reflections, reduced words for w0 and weight blocks.
#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qcanon {

/// Coordinates over the simple roots.
using RootVector = std::vector<int>;
/// PBW exponents c, aligned with the betas of a ReducedSequence.
using ExponentVector = std::vector<int>;

class CartanDatum {
 public:
  CartanDatum() = default;
  /// Validates the integrality conditions and finite type; throws ConfigError.
  CartanDatum(std::vector<std::string> labels, std::vector<std::vector<int>> form);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int rank() const { return static_cast<int>(labels_.size()); }
  int form(int i, int j) const { return form_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& form_matrix() const { return form_; }
  /// (alpha_i, alpha_i) / 2, so that q_i = q^d(i).
  int d(int i) const { return form(i, i) / 2; }
  int cartan(int i, int j) const { return 2 * form(i, j) / form(i, i); }
  /// True iff the Cartan matrix is symmetric.
  bool symmetric() const { return symmetric_; }
  /// Throws UnknownLabel.
  int index(const std::string& label) const;

  long pair(const RootVector& a, const RootVector& b) const;
  RootVector simple_root(int i) const;
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  /// 2|Delta+|/|I|; only meaningful for irreducible data.
  int coxeter_number() const;
  bool connected() const;

  /// `11'2` style: each label repeated by its coordinate.
  std::string root_str(const RootVector& v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> form_;
  std::vector<RootVector> positive_;
  bool symmetric_ = true;
};

RootVector reflect(const CartanDatum& datum, int i, const RootVector& v);
RootVector reflect(const CartanDatum& datum, const std::string& label, const RootVector& v);

bool is_positive(const RootVector& v);
int height(const RootVector& v);

struct ReducedSequence {
  std::vector<int> indices;
  std::vector<RootVector> betas;
  std::size_t size() const { return indices.size(); }
};

/// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}). Throws NotReduced or WrongLength.
ReducedSequence betas_from_sequence(const CartanDatum& datum, const std::vector<int>& indices);
ReducedSequence betas_from_sequence(const CartanDatum& datum, const std::vector<std::string>& labels);

/// (c_0 c_1)^{h/2} with c_r listed in the given order. Throws InvalidColoring,
/// and ConfigError when h is odd.
std::vector<int> bipartite_w0(const CartanDatum& datum, const std::vector<int>& part0, const std::vector<int>& part1);

/// Splits I into a 2-colouring of the Dynkin graph, colour of the first label = 0.
/// Throws InvalidColoring when the graph has an odd cycle.
std::pair<std::vector<int>, std::vector<int>> bipartition(const CartanDatum& datum);

RootVector weight_of(const ReducedSequence& seq, const ExponentVector& c);

/// Lexicographic order on exponent vectors. Throws ConfigError on a length mismatch.
std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b);

/// All c with sum c_k beta_k = gamma, ascending in lex order.
std::vector<ExponentVector> enumerate_block(const ReducedSequence& seq, const RootVector& gamma);

/// Every gamma in Q+ with 1 <= height <= max_height, by height then lex.
std::vector<RootVector> weights_up_to(int rank, int max_height);

}  // namespace qcanon

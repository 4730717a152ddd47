/// @file checks.hpp
/// @brief Bounded-height property sweeps behind `qcanon check`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcanon/presets.hpp"
#include "qcanon/transition.hpp"

namespace qcanon {

struct CheckReport {
  std::string property;
  long instances = 0;
  std::vector<std::string> failures;
  bool gating = true;
  bool ok() const { return failures.empty(); }
};

/// inner_mackey against inner_shuffle on every word pair of every block,
/// in each basis the setup supports, plus `random_pairs` random pairs.
std::vector<CheckReport> check_oracle(const Setup& setup, int max_height, int random_pairs = 0,
                                      std::uint64_t seed = 1);
/// tHDH = Lambda, PQ = H, shape of P and Q, H integral, D against pbw_diag.
std::vector<CheckReport> check_factorization(const Setup& setup, Basis basis, int max_height);
/// delta(c) = 0 for every nonzero c supported on a single part.
std::vector<CheckReport> check_delta(const Setup& setup, int max_height);
/// phi-restricted matching sums against the quotient sums, per folded word pair.
std::vector<CheckReport> check_restriction(const Setup& setup, int max_height);
/// P^sigma = P-underline mod p on every matched block; heights are quotient heights.
std::vector<CheckReport> check_congruence(const Setup& setup, int max_height);
/// sigma acting on modified words, and collapse of sigma-fixed words to folded words.
std::vector<CheckReport> check_equivariance(const Setup& setup, int max_height);

/// Experimental, never gating: full matching sum against the phi-restricted
/// sum mod p on sigma-fixed pairs of every matched block.
std::vector<CheckReport> check_sum_congruence(const Setup& setup, int max_height);

/// Bases whose words the setup can produce.
std::vector<Basis> supported_bases(const Setup& setup);

}  // namespace qcanon

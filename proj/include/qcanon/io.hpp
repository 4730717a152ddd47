/// @file io.hpp
/// @brief JSON / TSV / pretty rendering of blocks and the key-value run configuration.
#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qcanon/presets.hpp"
#include "qcanon/transition.hpp"

namespace qcanon {

using Json = nlohmann::json;

struct RunConfig {
  std::string command;
  std::string preset;
  std::string fold;
  std::string weight;
  int max_height = 0;
  std::string basis;
  std::string format = "pretty";
  std::string out;
  std::string suite = "all";
  // custom datum
  std::vector<std::string> labels;
  std::vector<std::vector<int>> form;
  std::string sigma;
};

/// `key = value` lines, `#` comments. Keys mirror the long flags
/// (preset, fold, weight, max-height, basis, format, out, suite) plus
/// labels (comma separated), form (rows split by `;`) and sigma (cycles).
RunConfig parse_config_text(const std::string& text, RunConfig into = {});
RunConfig parse_config_file(const std::string& path, RunConfig into = {});

/// Resolves preset/fold/custom data; throws ConfigError.
Setup setup_from_config(const RunConfig& cfg);
/// Default basis: folded for quotient presets, modified otherwise.
Basis basis_from_config(const RunConfig& cfg, const Setup& setup);
/// `2,2,1` over the labels of `datum`. Throws ConfigError.
RootVector parse_weight(const std::string& s, const CartanDatum& datum);
std::string weight_str(const RootVector& w, char sep = ',');

Json word_json(const CartanDatum& datum, const MonomialWord& w);
Json matrix_json(const RMatrix& m);
Json matrix_json(const LMatrix& m);
Json roots_json(const Setup& setup);
Json gram_json(const Setup& setup, const GramBlock& g);
Json transition_json(const Setup& setup, const TransitionBlock& t);

/// Aligned text table; `tsv` switches to tab separation without padding.
std::string render_table(const std::string& title, const std::vector<std::string>& row_names,
                         const std::vector<std::vector<std::string>>& cells, bool tsv);
std::vector<std::vector<std::string>> to_cells(const RMatrix& m);
std::vector<std::vector<std::string>> to_cells(const LMatrix& m);
std::string exponent_str(const ExponentVector& c);

}  // namespace qcanon

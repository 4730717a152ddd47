#include "qcanon/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qcanon/errors.hpp"

namespace qcanon {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(what + ": '" + s + "' is not an integer");
  }
}

Json strings(const std::vector<RationalFn>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json strings(const std::vector<LaurentPoly>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

template <class T>
std::vector<T> pick(const std::vector<T>& v, const std::vector<std::size_t>& rows) {
  std::vector<T> r;
  for (std::size_t i : rows) r.push_back(v[i]);
  return r;
}

Json header(const Setup& setup, Basis basis, const RootVector& weight) {
  const CartanDatum& datum = basis_datum(setup, basis);
  Json j;
  j["preset"] = setup.preset;
  j["fold"] = setup.fold_name;
  j["basis"] = basis_name(basis);
  j["labels"] = datum.labels();
  j["weight"] = weight;
  return j;
}

Json gram_body(const CartanDatum& datum, const GramBlock& g) {
  Json j;
  j["index"] = g.index;
  Json words = Json::array();
  for (const auto& w : g.words) words.push_back(word_str(datum, w));
  j["words"] = words;
  j["lambda"] = matrix_json(g.lambda);
  j["factored"] = {{"delta", g.delta.str()}, {"gamma", strings(g.gamma)}, {"core", matrix_json(g.core)}};
  return j;
}

// The sigma-fixed part of a block, present when the basis lives over the
// base datum of an active folding and the weight is sigma-stable.
std::optional<SigmaRows> sigma_part(const Setup& setup, const GramBlock& g) {
  if (!setup.folded() || g.basis == Basis::folded || !sigma_stable(setup.fold, g.weight)) return std::nullopt;
  return sigma_rows(setup, g.weight, g.index);
}

Json sigma_gram(const Setup& setup, const GramBlock& g, const SigmaRows& sr) {
  Json j;
  j["index"] = sr.index;
  j["quotient_index"] = sr.ulindex;
  j["quotient_weight"] = quotient_weight(setup.fold, g.weight);
  j["lambda"] = matrix_json(submatrix(g.lambda, sr.rows));
  j["factored"] = {{"delta", g.delta.str()},
                   {"gamma", strings(pick(g.gamma, sr.rows))},
                   {"core", matrix_json(submatrix(g.core, sr.rows))}};
  return j;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, RunConfig cfg) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "command") cfg.command = val;
    else if (key == "preset") cfg.preset = val;
    else if (key == "fold") cfg.fold = val;
    else if (key == "weight") cfg.weight = val;
    else if (key == "max-height" || key == "max_height") cfg.max_height = to_int(val, "max-height");
    else if (key == "basis") cfg.basis = val;
    else if (key == "format") cfg.format = val;
    else if (key == "out") cfg.out = val;
    else if (key == "suite") cfg.suite = val;
    else if (key == "labels") cfg.labels = split(val, ',');
    else if (key == "sigma") cfg.sigma = val;
    else if (key == "form") {
      cfg.form.clear();
      for (const auto& row : split(val, ';')) {
        std::vector<int> r;
        for (const auto& x : split(row, ',')) r.push_back(to_int(x, "form"));
        cfg.form.push_back(std::move(r));
      }
    } else {
      throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path, RunConfig into) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), std::move(into));
}

Setup setup_from_config(const RunConfig& cfg) {
  if (!cfg.labels.empty()) {
    if (!cfg.preset.empty() && cfg.preset != "custom") throw ConfigError("give either a preset or labels/form, not both");
    if (cfg.form.empty()) throw ConfigError("custom labels need a form");
    return make_custom_setup(cfg.labels, cfg.form, cfg.sigma);
  }
  std::string preset = cfg.preset;
  if (preset.empty()) {
    const auto arrow = cfg.fold.find("->");
    if (arrow == std::string::npos) throw ConfigError("no preset given");
    preset = cfg.fold.substr(0, arrow);
  }
  return make_setup(preset, cfg.fold);
}

Basis basis_from_config(const RunConfig& cfg, const Setup& setup) {
  if (!cfg.basis.empty()) {
    Basis b = parse_basis(cfg.basis);
    if (setup.quotient_target && b != Basis::folded)
      throw ConfigError("preset " + setup.preset + " is a quotient; only the folded basis applies");
    return b;
  }
  if (setup.quotient_target) return Basis::folded;
  return setup.folded() ? Basis::modified : Basis::symmetric;
}

RootVector parse_weight(const std::string& s, const CartanDatum& datum) {
  RootVector w;
  for (const auto& x : split(s, ',')) {
    const int v = to_int(x, "weight");
    if (v < 0) throw ConfigError("weight coordinates must be nonnegative");
    w.push_back(v);
  }
  if (static_cast<int>(w.size()) != datum.rank())
    throw ConfigError("weight has " + std::to_string(w.size()) + " coordinates, expected " + std::to_string(datum.rank()));
  return w;
}

std::string weight_str(const RootVector& w, char sep) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(w[i]);
  return s;
}

std::string exponent_str(const ExponentVector& c) { return "(" + weight_str(c, ',') + ")"; }

Json word_json(const CartanDatum& datum, const MonomialWord& w) {
  Json a = Json::array();
  for (const Letter& l : w) a.push_back(Json::array({datum.label(l.gen), l.exp}));
  return a;
}

Json matrix_json(const RMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(strings(row));
  return a;
}

Json matrix_json(const LMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(strings(row));
  return a;
}

Json roots_json(const Setup& setup) {
  Json j;
  j["preset"] = setup.preset;
  j["fold"] = setup.fold_name;
  const auto seq_json = [](const CartanDatum& d, const ReducedSequence& s) {
    Json word = Json::array(), betas = Json::array();
    for (std::size_t k = 0; k < s.size(); ++k) {
      word.push_back(d.label(s.indices[k]));
      betas.push_back({{"root", d.root_str(s.betas[k])}, {"coords", s.betas[k]}});
    }
    return std::make_pair(word, betas);
  };
  auto [w, b] = seq_json(setup.base(), setup.seq);
  j["labels"] = setup.base().labels();
  j["reduced_word"] = w;
  j["betas"] = b;
  if (setup.folded()) {
    auto [uw, ub] = seq_json(setup.quotient(), setup.ulseq);
    j["quotient"] = {{"labels", setup.quotient().labels()}, {"reduced_word", uw}, {"betas", ub}};
    Json parts = Json::array();
    for (const Part& p : setup.parts) {
      Json roots = Json::array();
      for (std::size_t t = p.begin; t < p.end; ++t) roots.push_back(setup.base().root_str(setup.seq.betas[t]));
      parts.push_back({{"orbit", setup.quotient().label(p.orbit)}, {"roots", roots}});
    }
    j["parts"] = parts;
  }
  return j;
}

Json gram_json(const Setup& setup, const GramBlock& g) {
  Json j = header(setup, g.basis, g.weight);
  j.update(gram_body(basis_datum(setup, g.basis), g));
  if (auto sr = sigma_part(setup, g)) j["sigma"] = sigma_gram(setup, g, *sr);
  return j;
}

Json transition_json(const Setup& setup, const TransitionBlock& t) {
  Json j = gram_json(setup, t.gram);
  j["H"] = matrix_json(t.H);
  j["D"] = strings(t.D);
  j["P"] = matrix_json(t.P);
  j["Q"] = matrix_json(t.Q);
  if (auto sr = sigma_part(setup, t.gram)) {
    j["sigma"]["H"] = matrix_json(submatrix(t.H, sr->rows));
    j["sigma"]["P"] = matrix_json(submatrix(t.P, sr->rows));
    j["sigma"]["Q"] = matrix_json(submatrix(t.Q, sr->rows));
  }
  return j;
}

std::vector<std::vector<std::string>> to_cells(const RMatrix& m) {
  std::vector<std::vector<std::string>> c;
  for (const auto& row : m) {
    c.emplace_back();
    for (const auto& x : row) c.back().push_back(x.str());
  }
  return c;
}

std::vector<std::vector<std::string>> to_cells(const LMatrix& m) {
  std::vector<std::vector<std::string>> c;
  for (const auto& row : m) {
    c.emplace_back();
    for (const auto& x : row) c.back().push_back(x.str());
  }
  return c;
}

std::string render_table(const std::string& title, const std::vector<std::string>& row_names,
                         const std::vector<std::vector<std::string>>& cells, bool tsv) {
  std::ostringstream os;
  os << (tsv ? "# " : "") << title << '\n';
  if (tsv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i < row_names.size() ? row_names[i] : "");
      for (const auto& x : cells[i]) os << '\t' << x;
      os << '\n';
    }
    return os.str();
  }
  std::size_t name_w = 0, ncols = 0;
  for (const auto& n : row_names) name_w = std::max(name_w, n.size());
  for (const auto& r : cells) ncols = std::max(ncols, r.size());
  std::vector<std::size_t> w(ncols, 0);
  for (const auto& r : cells)
    for (std::size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], r[j].size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string n = i < row_names.size() ? row_names[i] : "";
    os << "  " << n << std::string(name_w - n.size(), ' ');
    for (std::size_t j = 0; j < cells[i].size(); ++j)
      os << "  " << cells[i][j] << std::string(w[j] - cells[i][j].size(), ' ');
    os << '\n';
  }
  return os.str();
}

}  // namespace qcanon

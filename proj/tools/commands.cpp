#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qcanon/checks.hpp"
#include "qcanon/errors.hpp"

namespace qcanon::cli {

namespace {

enum class Format { json, tsv, pretty };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "tsv") return Format::tsv;
  if (s == "pretty" || s.empty()) return Format::pretty;
  throw ConfigError("format must be json, tsv or pretty, not '" + s + "'");
}

// Writes to --out when given, else to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ConfigError("cannot write " + cfg.out);
  f << text;
}

std::vector<std::string> row_names(const std::vector<ExponentVector>& index) {
  std::vector<std::string> r;
  for (const auto& c : index) r.push_back(exponent_str(c));
  return r;
}

std::vector<std::vector<std::string>> column(const std::vector<RationalFn>& v) {
  std::vector<std::vector<std::string>> c;
  for (const auto& x : v) c.push_back({x.str()});
  return c;
}

std::vector<RootVector> requested_weights(const RunConfig& cfg, const Setup& setup, Basis basis) {
  const CartanDatum& datum = basis_datum(setup, basis);
  if (!cfg.weight.empty()) {
    if (cfg.max_height > 0) throw ConfigError("give --weight or --max-height, not both");
    return {parse_weight(cfg.weight, datum)};
  }
  if (cfg.max_height <= 0) throw ConfigError("--weight or --max-height is required");
  std::vector<RootVector> out;
  for (const auto& g : weights_up_to(datum.rank(), cfg.max_height))
    if (!enumerate_block(basis_sequence(setup, basis), g).empty()) out.push_back(g);
  return out;
}

std::string gram_text(const Setup& setup, const GramBlock& g, bool tsv) {
  const CartanDatum& datum = basis_datum(setup, g.basis);
  const auto names = row_names(g.index);
  std::ostringstream os;
  if (!tsv) {
    os << "weight " << weight_str(g.weight) << ", basis " << basis_name(g.basis) << ", block size " << g.index.size()
       << '\n';
    for (std::size_t i = 0; i < g.index.size(); ++i) os << "  " << names[i] << "  " << word_str(datum, g.words[i]) << '\n';
  }
  os << render_table("Lambda", names, to_cells(g.lambda), tsv);
  os << render_table("delta = " + g.delta.str(), {}, {}, tsv);
  std::vector<std::vector<std::string>> gamma;
  for (const auto& x : g.gamma) gamma.push_back({x.str()});
  os << render_table("gamma", names, gamma, tsv);
  os << render_table("core", names, to_cells(g.core), tsv);
  if (setup.folded() && g.basis != Basis::folded && sigma_stable(setup.fold, g.weight)) {
    SigmaRows sr = sigma_rows(setup, g.weight, g.index);
    os << render_table("Lambda^sigma", row_names(sr.index), to_cells(submatrix(g.lambda, sr.rows)), tsv);
  }
  return os.str();
}

std::string transition_text(const Setup& setup, const TransitionBlock& t, bool tsv) {
  const auto names = row_names(t.gram.index);
  std::ostringstream os;
  os << gram_text(setup, t.gram, tsv);
  os << render_table("H", names, to_cells(t.H), tsv);
  os << render_table("D", names, column(t.D), tsv);
  os << render_table("P", names, to_cells(t.P), tsv);
  os << render_table("Q", names, to_cells(t.Q), tsv);
  if (setup.folded() && t.gram.basis != Basis::folded && sigma_stable(setup.fold, t.gram.weight)) {
    SigmaRows sr = sigma_rows(setup, t.gram.weight, t.gram.index);
    os << render_table("P^sigma", row_names(sr.index), to_cells(submatrix(t.P, sr.rows)), tsv);
  }
  return os.str();
}

// Suites that need a non-trivial folding pick the preset's default one.
Setup folded_setup(const RunConfig& cfg) {
  Setup s = setup_from_config(cfg);
  if (s.folded() || !cfg.labels.empty()) return s;
  RunConfig c = cfg;
  c.fold = default_fold(s.preset);
  return setup_from_config(c);
}

int default_height(const std::string& suite) {
  if (suite == "delta") return 10;
  if (suite == "factorization" || suite == "equivariance") return 8;
  return 6;
}

std::vector<CheckReport> run_suite(const std::string& suite, const RunConfig& cfg) {
  const int h = cfg.max_height > 0 ? cfg.max_height : default_height(suite);
  if (suite == "oracle") return check_oracle(setup_from_config(cfg), h, 100, 1);
  if (suite == "factorization") {
    Setup s = setup_from_config(cfg);
    return check_factorization(s, basis_from_config(cfg, s), h);
  }
  if (suite == "delta") return check_delta(folded_setup(cfg), h);
  if (suite == "restriction") return check_restriction(folded_setup(cfg), h);
  if (suite == "congruence") return check_congruence(folded_setup(cfg), h);
  if (suite == "equivariance") return check_equivariance(folded_setup(cfg), h);
  if (suite == "sums") return check_sum_congruence(folded_setup(cfg), h);
  throw ConfigError("unknown suite '" + suite + "'");
}

const std::vector<std::string> kSuites = {"oracle", "factorization", "delta", "restriction", "congruence", "equivariance"};

}  // namespace

std::string fixture_path(const std::string& dir, const std::string& preset, const RootVector& weight) {
  return dir + "/" + preset + "/" + weight_str(weight) + ".json";
}

int cmd_roots(const RunConfig& cfg, std::ostream& out) {
  const Setup setup = setup_from_config(cfg);
  const Format fmt = parse_format(cfg.format);
  if (fmt == Format::json) {
    emit(cfg, out, roots_json(setup).dump(2) + "\n");
    return ok;
  }
  std::ostringstream os;
  const char* sep = fmt == Format::tsv ? "\t" : "  ";
  const auto listing = [&](const CartanDatum& d, const ReducedSequence& s, const std::string& title) {
    os << (fmt == Format::tsv ? "# " : "") << title << '\n';
    for (std::size_t k = 0; k < s.size(); ++k)
      os << k + 1 << sep << d.label(s.indices[k]) << sep << d.root_str(s.betas[k]) << '\n';
  };
  listing(setup.base(), setup.seq, "roots of " + (setup.quotient_target ? setup.fold_name.substr(0, setup.fold_name.find("->")) : setup.preset) +
                                       " (" + std::to_string(setup.seq.size()) + ")");
  if (setup.folded()) {
    listing(setup.quotient(), setup.ulseq, "quotient roots (" + std::to_string(setup.ulseq.size()) + ")");
    os << (fmt == Format::tsv ? "# " : "") << "parts\n";
    for (std::size_t k = 0; k < setup.parts.size(); ++k) {
      const Part& p = setup.parts[k];
      os << k + 1 << sep << setup.quotient().label(p.orbit) << sep;
      for (std::size_t t = p.begin; t < p.end; ++t) os << (t > p.begin ? " " : "") << setup.base().root_str(setup.seq.betas[t]);
      os << '\n';
    }
  }
  emit(cfg, out, os.str());
  return ok;
}

int cmd_gram(const RunConfig& cfg, std::ostream& out) {
  const Setup setup = setup_from_config(cfg);
  const Basis basis = basis_from_config(cfg, setup);
  const Format fmt = parse_format(cfg.format);
  const auto weights = requested_weights(cfg, setup, basis);
  Json blocks = Json::array();
  std::string text;
  for (const auto& g : weights) {
    GramBlock gb = gram_block(setup, g, basis);
    if (fmt == Format::json) blocks.push_back(gram_json(setup, gb));
    else text += gram_text(setup, gb, fmt == Format::tsv);
  }
  if (fmt == Format::json) text = (cfg.weight.empty() ? Json{{"blocks", blocks}} : blocks[0]).dump(2) + "\n";
  emit(cfg, out, text);
  return ok;
}

int cmd_transition(const RunConfig& cfg, std::ostream& out) {
  const Setup setup = setup_from_config(cfg);
  const Basis basis = basis_from_config(cfg, setup);
  const Format fmt = parse_format(cfg.format);
  const auto weights = requested_weights(cfg, setup, basis);
  Json blocks = Json::array();
  std::string text;
  for (const auto& g : weights) {
    TransitionBlock t = pipeline(setup, g, basis);
    if (fmt == Format::json) blocks.push_back(transition_json(setup, t));
    else text += transition_text(setup, t, fmt == Format::tsv);
  }
  if (fmt == Format::json) text = (cfg.weight.empty() ? Json{{"blocks", blocks}} : blocks[0]).dump(2) + "\n";
  emit(cfg, out, text);
  return ok;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const Format fmt = parse_format(cfg.format);
  std::vector<std::string> suites = cfg.suite == "all" || cfg.suite.empty() ? kSuites : std::vector<std::string>{cfg.suite};
  bool all_ok = true;
  Json j = Json::array();
  std::ostringstream os;
  for (const auto& suite : suites) {
    for (const CheckReport& r : run_suite(suite, cfg)) {
      all_ok = all_ok && (r.ok() || !r.gating);
      if (fmt == Format::json) {
        j.push_back({{"suite", suite}, {"property", r.property}, {"instances", r.instances}, {"failures", r.failures},
                     {"gating", r.gating}});
        continue;
      }
      const char* sep = fmt == Format::tsv ? "\t" : "  ";
      os << (!r.gating ? (r.ok() ? "HOLDS" : "FAILS") : r.ok() ? "PASS" : "FAIL") << sep << suite << sep << r.property << sep << r.instances << " instances\n";
      for (const auto& f : r.failures) os << "    " << f << '\n';
    }
  }
  emit(cfg, out, fmt == Format::json ? Json{{"ok", all_ok}, {"reports", j}}.dump(2) + "\n" : os.str());
  return all_ok ? ok : check_failed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"PBW and canonical bases of quantum groups under folding"};
  app.require_subcommand(1);
  RunConfig flags;
  std::string config_file;
  std::vector<std::pair<CLI::App*, std::string>> subs;
  const auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--preset", flags.preset, "A3, D4, E6, B2, G2, ...");
    s->add_option("--fold", flags.fold, "e.g. A3->B2");
    s->add_option("--config", config_file, "key = value file; flags given here win");
    s->add_option("--format", flags.format, "json, tsv or pretty");
    s->add_option("--out", flags.out, "write to FILE instead of stdout");
    s->add_option("--sigma", flags.sigma, "cycles for a custom datum, e.g. (1 1')");
    subs.emplace_back(s, name);
    return s;
  };
  add("roots", "reduced word, beta order and orbit parts");
  for (const auto& [name, help] : {std::pair<std::string, std::string>{"gram", "Gram matrix of a weight block"},
                                   {"transition", "Lambda = tHDH and H = PQ for a weight block"}}) {
    CLI::App* s = add(name, help);
    s->add_option("--weight", flags.weight, "coordinates over the simple roots, e.g. 2,2,1");
    s->add_option("--max-height", flags.max_height, "sweep every nonempty block up to this height");
    s->add_option("--basis", flags.basis, "modified, folded or symmetric");
  }
  CLI::App* check = add("check", "bounded-height property sweeps");
  check->add_option("--suite", flags.suite, "oracle, factorization, delta, restriction, congruence, equivariance, all, or the experimental sums");
  check->add_option("--max-height", flags.max_height, "height bound (suite default when omitted)");
  check->add_option("--basis", flags.basis, "basis for the factorization suite");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : config_error;
  }
  try {
    RunConfig cfg;
    std::string command;
    CLI::App* active = nullptr;
    for (const auto& [s, name] : subs)
      if (s->parsed()) {
        active = s;
        command = name;
      }
    if (!config_file.empty()) cfg = parse_config_file(config_file);
    // Explicit flags override the file.
    const auto given = [&](const char* opt) { return active->count(opt) > 0; };
    if (given("--preset")) cfg.preset = flags.preset;
    if (given("--fold")) cfg.fold = flags.fold;
    if (given("--format")) cfg.format = flags.format;
    if (given("--out")) cfg.out = flags.out;
    if (given("--sigma")) cfg.sigma = flags.sigma;
    const auto maybe = [&](const char* opt) { return active->get_option_no_throw(opt) != nullptr && given(opt); };
    if (maybe("--weight")) cfg.weight = flags.weight;
    if (maybe("--max-height")) cfg.max_height = flags.max_height;
    if (maybe("--basis")) cfg.basis = flags.basis;
    if (maybe("--suite")) cfg.suite = flags.suite;
    cfg.command = command;
    if (command == "roots") return cmd_roots(cfg, out);
    if (command == "gram") return cmd_gram(cfg, out);
    if (command == "transition") return cmd_transition(cfg, out);
    return cmd_check(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  } catch (const InvariantError& e) {
    err << "internal invariant failed: " << e.what() << '\n';
    return invariant_breach;
  }
}

}  // namespace qcanon::cli

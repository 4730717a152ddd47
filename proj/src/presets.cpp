#include "qcanon/presets.hpp"

#include <algorithm>

#include "qcanon/errors.hpp"

namespace qcanon {

namespace {

struct Diagram {
  std::vector<std::string> labels;  // already in (*) order
  std::vector<std::pair<std::string, std::string>> edges;
  std::size_t part0_size = 0;
};

CartanDatum simply_laced(const Diagram& g) {
  const std::size_t n = g.labels.size();
  std::vector<std::vector<int>> form(n, std::vector<int>(n, 0));
  auto idx = [&](const std::string& l) {
    return static_cast<std::size_t>(std::find(g.labels.begin(), g.labels.end(), l) - g.labels.begin());
  };
  for (std::size_t i = 0; i < n; ++i) form[i][i] = 2;
  for (const auto& [a, b] : g.edges) {
    std::size_t i = idx(a), j = idx(b);
    if (i >= n || j >= n) throw InvariantError("preset edge names an unknown label");
    form[i][j] = form[j][i] = -1;
  }
  return CartanDatum(g.labels, form);
}

std::string primed(int i, int primes) { return std::to_string(i) + std::string(static_cast<std::size_t>(primes), '\''); }

// I = {1, .., n-1, n, (n-1)', .., 1'}; I_0 = {1,1',3,3',..}, I_1 = {2,2',4,4',..}
// with n last in its part.
Diagram type_a_odd(int n) {
  Diagram g;
  std::vector<std::string> p0, p1;
  for (int i = 1; i < n; ++i) {
    auto& part = (i % 2 == 1) ? p0 : p1;
    part.push_back(primed(i, 0));
    part.push_back(primed(i, 1));
  }
  ((n % 2 == 1) ? p0 : p1).push_back(primed(n, 0));
  g.labels = p0;
  g.labels.insert(g.labels.end(), p1.begin(), p1.end());
  g.part0_size = p0.size();
  for (int i = 1; i + 1 < n; ++i) {
    g.edges.emplace_back(primed(i, 0), primed(i + 1, 0));
    g.edges.emplace_back(primed(i, 1), primed(i + 1, 1));
  }
  if (n > 1) {
    g.edges.emplace_back(primed(n - 1, 0), primed(n, 0));
    g.edges.emplace_back(primed(n - 1, 1), primed(n, 0));
  }
  return g;
}

// I = {1, .., n-2, n, n'}; I_0 odd, I_1 even, {n, n'} opposite n-2.
Diagram type_d(int n) {
  Diagram g;
  std::vector<std::string> p0, p1;
  for (int i = 1; i <= n - 2; ++i) ((i % 2 == 1) ? p0 : p1).push_back(primed(i, 0));
  auto& tail = ((n - 2) % 2 == 1) ? p1 : p0;
  tail.push_back(primed(n, 0));
  tail.push_back(primed(n, 1));
  g.labels = p0;
  g.labels.insert(g.labels.end(), p1.begin(), p1.end());
  g.part0_size = p0.size();
  for (int i = 1; i + 1 <= n - 2; ++i) g.edges.emplace_back(primed(i, 0), primed(i + 1, 0));
  g.edges.emplace_back(primed(n - 2, 0), primed(n, 0));
  g.edges.emplace_back(primed(n - 2, 0), primed(n, 1));
  return g;
}

Diagram type_d4_triality() {
  Diagram g;
  g.labels = {"1", "1'", "1''", "2"};
  g.part0_size = 3;
  g.edges = {{"1", "2"}, {"1'", "2"}, {"1''", "2"}};
  return g;
}

Diagram type_e6() {
  Diagram g;
  g.labels = {"1", "1'", "3", "2", "2'", "4"};
  g.part0_size = 3;
  g.edges = {{"1", "2"}, {"2", "3"}, {"3", "2'"}, {"2'", "1'"}, {"3", "4"}};
  return g;
}

Setup assemble(const CartanDatum& base, std::vector<int> part0, std::vector<int> part1, const std::vector<int>& sigma,
               const std::vector<std::string>& qnames) {
  Setup s;
  s.fold = validate_admissible(base, sigma, qnames);
  s.part0 = std::move(part0);
  s.part1 = std::move(part1);
  s.orientation = bipartite_orientation(base, s.part0, s.part1);
  std::vector<int> colour(static_cast<std::size_t>(base.rank()), 0);
  for (int i : s.part1) colour[static_cast<std::size_t>(i)] = 1;
  std::vector<int> j0, j1;
  for (std::size_t j = 0; j < s.fold.orbits.size(); ++j) {
    const auto& o = s.fold.orbits[j];
    const int c = colour[static_cast<std::size_t>(o.front())];
    for (int i : o)
      if (colour[static_cast<std::size_t>(i)] != c) throw NotAdmissible("sigma does not preserve the bipartition");
    (c == 0 ? j0 : j1).push_back(static_cast<int>(j));
  }
  std::vector<int> ulh = bipartite_w0(s.fold.quotient, j0, j1);
  s.ulseq = betas_from_sequence(s.fold.quotient, ulh);
  s.seq = betas_from_sequence(base, lift_sequence(s.fold, ulh));
  s.parts = j_parts(s.fold, s.seq);
  return s;
}

Setup from_diagram(const Diagram& g, const std::string& cycles, const std::vector<std::string>& qnames) {
  CartanDatum base = simply_laced(g);
  std::vector<int> p0, p1;
  for (int i = 0; i < base.rank(); ++i) (static_cast<std::size_t>(i) < g.part0_size ? p0 : p1).push_back(i);
  std::vector<int> sigma = parse_cycles(base, cycles);
  return assemble(base, p0, p1, sigma, qnames);
}

int parse_rank(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 1 || v > 64) throw ConfigError("bad rank");
    return v;
  } catch (const std::exception&) {
    throw UnsupportedPreset("cannot read the rank in this preset name");
  }
}

struct FoldSpec {
  std::string base;
  std::string fold;
};

// Quotient preset name -> (base preset, folding).
FoldSpec resolve_quotient(const std::string& name) {
  if (name == "G2") return {"D4", "D4->G2"};
  if (name == "F4") return {"E6", "E6->F4"};
  if (name.size() >= 2 && name[0] == 'B') {
    int n = parse_rank(name.substr(1));
    if (n < 2) throw UnsupportedPreset("B" + std::to_string(n) + " is not a supported quotient");
    return {"A" + std::to_string(2 * n - 1), "A" + std::to_string(2 * n - 1) + "->" + name};
  }
  if (name.size() >= 2 && name[0] == 'C') {
    int m = parse_rank(name.substr(1));
    if (m < 3) throw UnsupportedPreset("C" + std::to_string(m) + " is not a supported quotient (use B2)");
    return {"D" + std::to_string(m + 1), "D" + std::to_string(m + 1) + "->" + name};
  }
  return {};
}

Setup build(const std::string& base, const std::string& fold) {
  const bool trivial = fold.empty();
  const std::string want = trivial ? "" : fold;
  if (base == "E6") {
    if (!trivial && want != "E6->F4") throw UnsupportedPreset("E6 folds only as E6->F4");
    return from_diagram(type_e6(), trivial ? "" : "(1 1')(2 2')", {});
  }
  if (base == "D4") {
    if (trivial) return from_diagram(type_d4_triality(), "", {});
    if (want == "D4->G2") return from_diagram(type_d4_triality(), "(1 1' 1'')", {});
    if (want == "D4->C3") return from_diagram(type_d4_triality(), "(1' 1'')", {"1", "1'", "2"});
    throw UnsupportedPreset("D4 folds as D4->G2 or D4->C3");
  }
  if (base.size() >= 2 && base[0] == 'A') {
    const int m = parse_rank(base.substr(1));
    if (m % 2 == 0)
      throw UnsupportedPreset(base + " has odd Coxeter number; only A{2n-1} is supported");
    const int n = (m + 1) / 2;
    if (!trivial && want != base + "->B" + std::to_string(n))
      throw UnsupportedPreset(base + " folds only as " + base + "->B" + std::to_string(n));
    std::string cyc;
    if (!trivial)
      for (int i = 1; i < n; ++i) cyc += "(" + primed(i, 0) + " " + primed(i, 1) + ")";
    return from_diagram(type_a_odd(n), cyc, {});
  }
  if (base.size() >= 2 && base[0] == 'D') {
    const int n = parse_rank(base.substr(1));
    if (n < 4) throw UnsupportedPreset("D" + std::to_string(n) + " needs n >= 4");
    if (!trivial && want != base + "->C" + std::to_string(n - 1))
      throw UnsupportedPreset(base + " folds only as " + base + "->C" + std::to_string(n - 1));
    Diagram g = type_d(n);
    std::vector<std::string> names;
    if (!trivial) {
      // Orbits in (*) order; {n, n'} is named n-1 as in the quotient C_{n-1}.
      for (const auto& l : g.labels) {
        if (l == primed(n, 1)) continue;
        names.push_back(l == primed(n, 0) ? std::to_string(n - 1) : l);
      }
    }
    return from_diagram(g, trivial ? "" : "(" + primed(n, 0) + " " + primed(n, 1) + ")", names);
  }
  throw UnsupportedPreset("unknown preset '" + base + "'");
}

}  // namespace

Setup make_setup(const std::string& preset, const std::string& fold) {
  FoldSpec q = resolve_quotient(preset);
  Setup s;
  if (!q.base.empty()) {
    if (!fold.empty() && fold != q.fold) throw ConfigError("preset " + preset + " implies fold " + q.fold);
    s = build(q.base, q.fold);
    s.fold_name = q.fold;
    s.quotient_target = true;
  } else {
    if (!fold.empty() && fold.rfind(preset + "->", 0) != 0)
      throw ConfigError("fold " + fold + " does not start from preset " + preset);
    s = build(preset, fold);
    s.fold_name = fold;
  }
  s.preset = preset;
  return s;
}

Setup make_custom_setup(const std::vector<std::string>& labels, const std::vector<std::vector<int>>& form,
                        const std::string& sigma) {
  CartanDatum raw(labels, form);
  auto [p0, p1] = bipartition(raw);
  std::vector<int> perm = p0;
  perm.insert(perm.end(), p1.begin(), p1.end());
  std::vector<std::string> l2;
  std::vector<std::vector<int>> f2(perm.size(), std::vector<int>(perm.size()));
  for (std::size_t a = 0; a < perm.size(); ++a) {
    l2.push_back(labels[static_cast<std::size_t>(perm[a])]);
    for (std::size_t b = 0; b < perm.size(); ++b) f2[a][b] = form[static_cast<std::size_t>(perm[a])][static_cast<std::size_t>(perm[b])];
  }
  CartanDatum base(l2, f2);
  std::vector<int> q0, q1;
  for (std::size_t a = 0; a < perm.size(); ++a) (a < p0.size() ? q0 : q1).push_back(static_cast<int>(a));
  Setup s = assemble(base, q0, q1, parse_cycles(base, sigma), {});
  s.preset = "custom";
  s.fold_name = sigma.empty() ? "" : sigma;
  return s;
}

std::string default_fold(const std::string& preset) {
  FoldSpec q = resolve_quotient(preset);
  if (!q.base.empty()) return q.fold;
  if (preset == "D4") return "D4->G2";
  if (preset == "E6") return "E6->F4";
  if (preset.size() >= 2 && (preset[0] == 'A' || preset[0] == 'D')) {
    const int n = parse_rank(preset.substr(1));
    if (preset[0] == 'A' && n % 2 == 1) return preset + "->B" + std::to_string((n + 1) / 2);
    if (preset[0] == 'D' && n >= 4) return preset + "->C" + std::to_string(n - 1);
  }
  throw UnsupportedPreset("no folding known for '" + preset + "'");
}

std::vector<std::string> known_folds() { return {"A3->B2", "A5->B3", "D4->G2", "D4->C3", "D5->C4", "E6->F4"}; }

}  // namespace qcanon

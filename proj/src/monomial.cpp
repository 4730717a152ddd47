#include "qcanon/monomial.hpp"

#include <algorithm>
#include <set>

#include "qcanon/errors.hpp"

namespace qcanon {

Orientation bipartite_orientation(const CartanDatum& datum, const std::vector<int>& part0,
                                  const std::vector<int>& part1) {
  std::set<int> sinks(part0.begin(), part0.end()), sources(part1.begin(), part1.end());
  Orientation o;
  for (int i = 0; i < datum.rank(); ++i)
    for (int j = i + 1; j < datum.rank(); ++j) {
      if (datum.form(i, j) == 0) continue;
      if (sources.count(i) && sinks.count(j))
        o.edges.emplace_back(i, j);
      else if (sources.count(j) && sinks.count(i))
        o.edges.emplace_back(j, i);
      else
        throw InvalidColoring("edge " + datum.label(i) + "-" + datum.label(j) + " is not between the parts");
    }
  for (auto [s, t] : o.edges)
    if (!(t < s)) throw InvalidColoring("label order violates i -> j => j < i at " + datum.label(s) + "->" + datum.label(t));
  return o;
}

Orientation preset_orientation(const CartanDatum& datum) {
  auto [p0, p1] = bipartition(datum);
  return bipartite_orientation(datum, p0, p1);
}

std::vector<int> dvec(const ReducedSequence& seq, const ExponentVector& c, std::size_t k) {
  std::vector<int> d = seq.betas.at(k);
  for (int& x : d) x *= c.at(k);
  return d;
}

MonomialWord factor_word(const std::vector<int>& d) {
  MonomialWord w;
  for (std::size_t i = d.size(); i-- > 0;)
    if (d[i] != 0) w.push_back({static_cast<int>(i), d[i]});
  return w;
}

MonomialWord word_sym(const ReducedSequence& seq, const ExponentVector& c) {
  if (c.size() != seq.size()) throw ConfigError("exponent vector length does not match the sequence");
  MonomialWord w;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (c[k] == 0) continue;
    MonomialWord f = factor_word(dvec(seq, c, k));
    w.insert(w.end(), f.begin(), f.end());
  }
  return w;
}

MonomialWord word_folded(const FoldingDatum& fd, const ReducedSequence& ulseq, const ExponentVector& ulc) {
  if (!ulseq.betas.empty() && static_cast<int>(ulseq.betas[0].size()) != fd.quotient.rank())
    throw ConfigError("word_folded needs a sequence over the quotient datum");
  return word_sym(ulseq, ulc);
}

MonomialWord word_modified(const FoldingDatum& fd, const ReducedSequence& seq, const ExponentVector& c) {
  if (c.size() != seq.size()) throw ConfigError("exponent vector length does not match the sequence");
  MonomialWord w;
  for (const Part& part : j_parts(fd, seq)) {
    std::vector<int> d(static_cast<std::size_t>(fd.base.rank()), 0);
    for (std::size_t t = part.begin; t < part.end; ++t)
      for (std::size_t i = 0; i < d.size(); ++i) d[i] += c[t] * seq.betas[t][i];
    MonomialWord f = factor_word(d);
    w.insert(w.end(), f.begin(), f.end());
  }
  return w;
}

RootVector word_weight(int rank, const MonomialWord& w) {
  RootVector v(static_cast<std::size_t>(rank), 0);
  for (const Letter& l : w) v.at(static_cast<std::size_t>(l.gen)) += l.exp;
  return v;
}

long delta_codim(const CartanDatum& datum, const ReducedSequence& seq, const Orientation& orient,
                 const ExponentVector& c) {
  if (!datum.symmetric()) throw ConfigError("delta is defined only for symmetric data with an orientation");
  std::vector<std::vector<int>> d;
  for (std::size_t k = 0; k < seq.size(); ++k) d.push_back(dvec(seq, c, k));
  long s = 0;
  for (std::size_t k = 0; k < d.size(); ++k)
    for (std::size_t h = 0; h < k; ++h) {
      for (std::size_t i = 0; i < d[k].size(); ++i) s -= static_cast<long>(d[h][i]) * d[k][i];
      for (auto [src, dst] : orient.edges)
        s += static_cast<long>(d[h][static_cast<std::size_t>(dst)]) * d[k][static_cast<std::size_t>(src)];
    }
  return s;
}

ExponentVector restrict_to_part(const ExponentVector& c, const Part& part) {
  ExponentVector r(c.size(), 0);
  for (std::size_t t = part.begin; t < part.end; ++t) r[t] = c[t];
  return r;
}

MonomialWord sigma_on_word(const FoldingDatum& fd, const MonomialWord& w) {
  MonomialWord r = w;
  for (Letter& l : r) l.gen = fd.sigma[static_cast<std::size_t>(l.gen)];
  return r;
}

MonomialWord canonical_form(const FoldingDatum& fd, const MonomialWord& w) {
  MonomialWord r = w;
  auto key = [&](const Letter& l) { return std::make_pair(fd.orbit_of[static_cast<std::size_t>(l.gen)], l.gen); };
  std::size_t start = 0;
  while (start < r.size()) {
    std::size_t end = start + 1;
    while (end < r.size()) {
      bool commutes = true;
      for (std::size_t t = start; t < end; ++t)
        if (r[t].gen == r[end].gen || fd.base.form(r[t].gen, r[end].gen) != 0) commutes = false;
      if (!commutes) break;
      ++end;
    }
    std::stable_sort(r.begin() + static_cast<std::ptrdiff_t>(start), r.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](const Letter& a, const Letter& b) { return key(a) < key(b); });
    start = end;
  }
  return r;
}

MonomialWord collapse_orbits(const FoldingDatum& fd, const MonomialWord& w) {
  MonomialWord r;
  std::size_t t = 0;
  while (t < w.size()) {
    const int j = fd.orbit_of[static_cast<std::size_t>(w[t].gen)];
    const auto& orb = fd.orbits[static_cast<std::size_t>(j)];
    if (t + orb.size() > w.size()) throw MismatchError("orbit run truncated");
    std::set<int> seen;
    for (std::size_t u = t; u < t + orb.size(); ++u) {
      if (fd.orbit_of[static_cast<std::size_t>(w[u].gen)] != j || w[u].exp != w[t].exp || !seen.insert(w[u].gen).second)
        throw MismatchError("letters at position " + std::to_string(t + 1) + " do not form an orbit run");
    }
    r.push_back({j, w[t].exp});
    t += orb.size();
  }
  return r;
}

std::string word_str(const CartanDatum& datum, const MonomialWord& w) {
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += ' ';
    s += "f[" + datum.label(l.gen) + "]";
    if (l.exp != 1) s += "^(" + std::to_string(l.exp) + ")";
  }
  return s.empty() ? "1" : s;
}

}  // namespace qcanon

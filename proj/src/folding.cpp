#include "qcanon/folding.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qcanon/errors.hpp"

namespace qcanon {

namespace {

std::string strip_primes(std::string s) {
  while (!s.empty() && s.back() == '\'') s.pop_back();
  return s;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FoldingDatum validate_admissible(const CartanDatum& base, const std::vector<int>& sigma,
                                 const std::vector<std::string>& names) {
  const int n = base.rank();
  if (static_cast<int>(sigma.size()) != n) throw NotAdmissible("sigma must act on every label");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int s : sigma) {
    if (s < 0 || s >= n || hit[static_cast<std::size_t>(s)]) throw NotAdmissible("sigma is not a bijection");
    hit[static_cast<std::size_t>(s)] = true;
  }
  auto sg = [&](int i) { return sigma[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (base.form(sg(i), sg(j)) != base.form(i, j))
        throw NotAdmissible("sigma does not preserve (" + base.label(i) + "," + base.label(j) + ")");

  FoldingDatum fd;
  fd.base = base;
  fd.sigma = sigma;
  fd.orbit_of.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (fd.orbit_of[static_cast<std::size_t>(i)] != -1) continue;
    std::vector<int> orb;
    for (int j = i; fd.orbit_of[static_cast<std::size_t>(j)] == -1; j = sg(j)) {
      fd.orbit_of[static_cast<std::size_t>(j)] = static_cast<int>(fd.orbits.size());
      orb.push_back(j);
    }
    std::sort(orb.begin(), orb.end());
    for (std::size_t a = 0; a < orb.size(); ++a)
      for (std::size_t b = a + 1; b < orb.size(); ++b)
        if (base.form(orb[a], orb[b]) != 0)
          throw NotAdmissible("orbit members " + base.label(orb[a]) + " and " + base.label(orb[b]) + " are joined");
    fd.orbits.push_back(std::move(orb));
  }
  // Order of sigma is the lcm of orbit sizes.
  int p = 1;
  for (const auto& o : fd.orbits) {
    int s = static_cast<int>(o.size());
    int a = p, b = s;
    while (b) {
      int t = a % b;
      a = b;
      b = t;
    }
    p = p / a * s;
  }
  if (p != 1 && !is_prime(p)) throw NotAdmissible("order of sigma is " + std::to_string(p) + ", not a prime");
  fd.p = p;

  const std::size_t m = fd.orbits.size();
  std::vector<std::string> qlabels;
  if (!names.empty()) {
    if (names.size() != m) throw ConfigError("quotient label list has the wrong length");
    qlabels = names;
  } else {
    for (const auto& o : fd.orbits)
      qlabels.push_back(o.size() > 1 ? strip_primes(base.label(o.front())) : base.label(o.front()));
  }
  std::vector<std::vector<int>> form(m, std::vector<int>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) {
        form[a][a] = base.form(fd.orbits[a][0], fd.orbits[a][0]) * static_cast<int>(fd.orbits[a].size());
        continue;
      }
      for (int i : fd.orbits[a])
        for (int j : fd.orbits[b]) form[a][b] += base.form(i, j);
    }
  fd.quotient = CartanDatum(qlabels, form);
  return fd;
}

FoldingDatum trivial_folding(const CartanDatum& base) {
  std::vector<int> id(static_cast<std::size_t>(base.rank()));
  for (int i = 0; i < base.rank(); ++i) id[static_cast<std::size_t>(i)] = i;
  return validate_admissible(base, id, base.labels());
}

std::vector<int> parse_cycles(const CartanDatum& base, const std::string& cycles) {
  std::vector<int> sigma(static_cast<std::size_t>(base.rank()));
  for (int i = 0; i < base.rank(); ++i) sigma[static_cast<std::size_t>(i)] = i;
  std::vector<bool> used(static_cast<std::size_t>(base.rank()), false);
  std::size_t pos = 0;
  while (pos < cycles.size()) {
    if (std::isspace(static_cast<unsigned char>(cycles[pos]))) {
      ++pos;
      continue;
    }
    if (cycles[pos] != '(') throw ParseError("sigma cycles must look like (1 1')(2)");
    std::size_t close = cycles.find(')', pos);
    if (close == std::string::npos) throw ParseError("unclosed cycle in sigma");
    std::istringstream in(cycles.substr(pos + 1, close - pos - 1));
    std::vector<int> cyc;
    for (std::string tok; in >> tok;) {
      int i = base.index(tok);
      if (used[static_cast<std::size_t>(i)]) throw ParseError("label " + tok + " appears twice in sigma");
      used[static_cast<std::size_t>(i)] = true;
      cyc.push_back(i);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) sigma[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    pos = close + 1;
  }
  return sigma;
}

std::vector<int> lift_sequence(const FoldingDatum& fd, const std::vector<int>& ulh) {
  std::vector<int> h;
  for (int j : ulh) {
    if (j < 0 || j >= static_cast<int>(fd.orbits.size())) throw UnknownLabel("quotient index out of range");
    const auto& o = fd.orbits[static_cast<std::size_t>(j)];
    h.insert(h.end(), o.begin(), o.end());
  }
  betas_from_sequence(fd.base, h);
  return h;
}

std::vector<Part> j_parts(const FoldingDatum& fd, const ReducedSequence& seq) {
  std::vector<Part> parts;
  std::size_t t = 0;
  while (t < seq.size()) {
    const int j = fd.orbit_of[static_cast<std::size_t>(seq.indices[t])];
    const auto& o = fd.orbits[static_cast<std::size_t>(j)];
    if (t + o.size() > seq.size()) throw NotReduced("sequence is not a lift: truncated orbit block");
    std::vector<int> got(seq.indices.begin() + static_cast<std::ptrdiff_t>(t),
                         seq.indices.begin() + static_cast<std::ptrdiff_t>(t + o.size()));
    if (got != o) throw NotReduced("sequence is not a lift: orbit block out of order at position " + std::to_string(t + 1));
    parts.push_back({j, t, t + o.size()});
    t += o.size();
  }
  return parts;
}

RootVector sigma_on_root(const FoldingDatum& fd, const RootVector& v) {
  RootVector w(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) w[static_cast<std::size_t>(fd.sigma[i])] = v[i];
  return w;
}

ExponentVector sigma_on_exponents(const FoldingDatum& fd, const ReducedSequence& seq, const ExponentVector& c) {
  if (c.size() != seq.size()) throw ConfigError("exponent vector length does not match the sequence");
  ExponentVector out(c.size(), 0);
  for (const Part& part : j_parts(fd, seq)) {
    for (std::size_t t = part.begin; t < part.end; ++t) {
      RootVector img = sigma_on_root(fd, seq.betas[t]);
      std::size_t u = part.begin;
      while (u < part.end && seq.betas[u] != img) ++u;
      if (u == part.end) throw InvariantError("sigma does not permute the roots of a part");
      out[u] = c[t];
    }
  }
  return out;
}

ExponentVector fold_exponent(const FoldingDatum& fd, const ReducedSequence& ulseq, const ExponentVector& ulc) {
  if (ulc.size() != ulseq.size()) throw ConfigError("quotient exponent vector length does not match the sequence");
  ExponentVector c;
  for (std::size_t k = 0; k < ulc.size(); ++k) {
    const auto& o = fd.orbits[static_cast<std::size_t>(ulseq.indices[k])];
    c.insert(c.end(), o.size(), ulc[k]);
  }
  return c;
}

bool sigma_stable(const FoldingDatum& fd, const RootVector& gamma) { return sigma_on_root(fd, gamma) == gamma; }

RootVector quotient_weight(const FoldingDatum& fd, const RootVector& gamma) {
  if (!sigma_stable(fd, gamma)) throw ConfigError("weight is not sigma-stable");
  RootVector ul;
  for (const auto& o : fd.orbits) ul.push_back(gamma[static_cast<std::size_t>(o.front())]);
  return ul;
}

RootVector unfold_weight(const FoldingDatum& fd, const RootVector& ulgamma) {
  RootVector g(static_cast<std::size_t>(fd.base.rank()), 0);
  for (std::size_t j = 0; j < fd.orbits.size(); ++j)
    for (int i : fd.orbits[j]) g[static_cast<std::size_t>(i)] = ulgamma[j];
  return g;
}

}  // namespace qcanon

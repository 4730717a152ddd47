#include "qcanon/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "qcanon/errors.hpp"

namespace qcanon {

namespace {
constexpr std::size_t kMaxRoots = 4096;

// Sylvester: every leading principal minor positive, via fraction-free
// Bareiss elimination. Pivots are exactly those minors.
bool positive_definite(const std::vector<std::vector<int>>& form) {
  const std::size_t n = form.size();
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = form[i][j];
  __int128 prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return true;
}
}  // namespace

CartanDatum::CartanDatum(std::vector<std::string> labels_in, std::vector<std::vector<int>> form_in)
    : labels_(std::move(labels_in)), form_(std::move(form_in)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ConfigError("Cartan datum needs at least one label");
  if (form_.size() != n) throw ConfigError("form must be a square matrix matching the labels");
  for (const auto& row : form_)
    if (row.size() != n) throw ConfigError("form must be a square matrix matching the labels");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) throw ConfigError("duplicate label in Cartan datum");
  for (int i = 0; i < rank(); ++i) {
    if (form(i, i) <= 0 || form(i, i) % 2 != 0)
      throw ConfigError("(a_i,a_i) must be a positive even integer for " + label(i));
    for (int j = 0; j < rank(); ++j) {
      if (form(i, j) != form(j, i)) throw ConfigError("form is not symmetric");
      if (i == j) continue;
      if ((2 * form(i, j)) % form(i, i) != 0 || form(i, j) > 0)
        throw ConfigError("2(a_i,a_j)/(a_i,a_i) must be a nonpositive integer for " + label(i) + "," + label(j));
    }
  }
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (cartan(i, j) != cartan(j, i)) symmetric_ = false;

  if (!positive_definite(form_)) throw ConfigError("Cartan datum is not of finite type");

  // Close the simple roots under reflections.
  std::set<RootVector> found;
  std::vector<RootVector> todo;
  for (int i = 0; i < rank(); ++i) {
    found.insert(simple_root(i));
    todo.push_back(simple_root(i));
  }
  while (!todo.empty()) {
    RootVector v = std::move(todo.back());
    todo.pop_back();
    for (int i = 0; i < rank(); ++i) {
      RootVector w = reflect(*this, i, v);
      if (!is_positive(w) || found.count(w)) continue;
      if (found.size() >= kMaxRoots) throw ConfigError("Cartan datum is not of finite type");
      found.insert(w);
      todo.push_back(std::move(w));
    }
  }
  positive_.assign(found.begin(), found.end());
  std::stable_sort(positive_.begin(), positive_.end(),
                   [](const RootVector& a, const RootVector& b) { return height(a) < height(b); });
}

int CartanDatum::index(const std::string& l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  if (it == labels_.end()) throw UnknownLabel("unknown label '" + l + "'");
  return static_cast<int>(it - labels_.begin());
}

long CartanDatum::pair(const RootVector& a, const RootVector& b) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      s += static_cast<long>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(j)] * form(i, j);
  }
  return s;
}

RootVector CartanDatum::simple_root(int i) const {
  RootVector v(static_cast<std::size_t>(rank()), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

int CartanDatum::coxeter_number() const {
  return static_cast<int>(2 * positive_.size() / static_cast<std::size_t>(rank()));
}

bool CartanDatum::connected() const {
  std::vector<bool> seen(static_cast<std::size_t>(rank()), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < rank(); ++j)
      if (!seen[static_cast<std::size_t>(j)] && form(i, j) != 0) {
        seen[static_cast<std::size_t>(j)] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string CartanDatum::root_str(const RootVector& v) const {
  std::string s;
  for (int i = 0; i < rank(); ++i)
    for (int k = 0; k < v[static_cast<std::size_t>(i)]; ++k) s += label(i);
  return s.empty() ? "0" : s;
}

RootVector reflect(const CartanDatum& datum, int i, const RootVector& v) {
  if (i < 0 || i >= datum.rank()) throw UnknownLabel("reflection index out of range");
  long t = 0;
  for (int j = 0; j < datum.rank(); ++j) t += static_cast<long>(v[static_cast<std::size_t>(j)]) * datum.form(j, i);
  RootVector w = v;
  w[static_cast<std::size_t>(i)] -= static_cast<int>(2 * t / datum.form(i, i));
  return w;
}

RootVector reflect(const CartanDatum& datum, const std::string& label, const RootVector& v) {
  return reflect(datum, datum.index(label), v);
}

bool is_positive(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }) &&
         std::any_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

ReducedSequence betas_from_sequence(const CartanDatum& datum, const std::vector<int>& indices) {
  ReducedSequence seq;
  seq.indices = indices;
  std::set<RootVector> seen;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    RootVector b = datum.simple_root(indices[k]);
    for (std::size_t t = k; t-- > 0;) b = reflect(datum, indices[t], b);
    if (!is_positive(b)) throw NotReduced("beta_" + std::to_string(k + 1) + " is not positive");
    if (!seen.insert(b).second) throw NotReduced("beta_" + std::to_string(k + 1) + " repeats an earlier root");
    seq.betas.push_back(std::move(b));
  }
  if (indices.size() != datum.positive_roots().size())
    throw WrongLength("sequence has length " + std::to_string(indices.size()) + " but |Delta+| = " +
                      std::to_string(datum.positive_roots().size()));
  return seq;
}

ReducedSequence betas_from_sequence(const CartanDatum& datum, const std::vector<std::string>& labels) {
  std::vector<int> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) idx.push_back(datum.index(l));
  return betas_from_sequence(datum, idx);
}

std::vector<int> bipartite_w0(const CartanDatum& datum, const std::vector<int>& part0,
                              const std::vector<int>& part1) {
  std::vector<int> colour(static_cast<std::size_t>(datum.rank()), -1);
  for (int i : part0) colour.at(static_cast<std::size_t>(i)) = 0;
  for (int i : part1) {
    if (colour.at(static_cast<std::size_t>(i)) != -1) throw InvalidColoring("label " + datum.label(i) + " in both parts");
    colour[static_cast<std::size_t>(i)] = 1;
  }
  for (int i = 0; i < datum.rank(); ++i) {
    if (colour[static_cast<std::size_t>(i)] == -1) throw InvalidColoring("label " + datum.label(i) + " in neither part");
    for (int j = i + 1; j < datum.rank(); ++j)
      if (datum.form(i, j) != 0 && colour[static_cast<std::size_t>(i)] == colour[static_cast<std::size_t>(j)])
        throw InvalidColoring("edge " + datum.label(i) + "-" + datum.label(j) + " inside one part");
  }
  if (part0.size() + part1.size() != static_cast<std::size_t>(datum.rank()))
    throw InvalidColoring("parts repeat a label");
  if (!datum.connected()) throw ConfigError("bipartite word needs an irreducible datum");
  const int h = datum.coxeter_number();
  if (h % 2 != 0)
    throw ConfigError("Coxeter number " + std::to_string(h) + " is odd; the bipartite word is unsupported");
  std::vector<int> word;
  for (int r = 0; r < h / 2; ++r) {
    word.insert(word.end(), part0.begin(), part0.end());
    word.insert(word.end(), part1.begin(), part1.end());
  }
  betas_from_sequence(datum, word);
  return word;
}

std::pair<std::vector<int>, std::vector<int>> bipartition(const CartanDatum& datum) {
  std::vector<int> colour(static_cast<std::size_t>(datum.rank()), -1);
  for (int s = 0; s < datum.rank(); ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < datum.rank(); ++j) {
        if (j == i || datum.form(i, j) == 0) continue;
        int want = 1 - colour[static_cast<std::size_t>(i)];
        if (colour[static_cast<std::size_t>(j)] == -1) {
          colour[static_cast<std::size_t>(j)] = want;
          stack.push_back(j);
        } else if (colour[static_cast<std::size_t>(j)] != want) {
          throw InvalidColoring("Dynkin graph is not bipartite");
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int i = 0; i < datum.rank(); ++i) (colour[static_cast<std::size_t>(i)] == 0 ? parts.first : parts.second).push_back(i);
  return parts;
}

RootVector weight_of(const ReducedSequence& seq, const ExponentVector& c) {
  if (c.size() != seq.size()) throw ConfigError("exponent vector length does not match the sequence");
  RootVector w(seq.betas.empty() ? 0 : seq.betas[0].size(), 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += c[k] * seq.betas[k][i];
  return w;
}

std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw ConfigError("lex_compare: length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] <=> b[k];
  return std::strong_ordering::equal;
}

std::vector<ExponentVector> enumerate_block(const ReducedSequence& seq, const RootVector& gamma) {
  std::vector<ExponentVector> out;
  const std::size_t n = seq.size();
  if (n == 0) return out;
  const std::size_t r = seq.betas[0].size();
  if (gamma.size() != r) throw ConfigError("weight has " + std::to_string(gamma.size()) + " coordinates, expected " + std::to_string(r));
  if (std::any_of(gamma.begin(), gamma.end(), [](int x) { return x < 0; })) return out;
  // reach[k][i]: some beta_t with t >= k has a nonzero i-th coordinate.
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(r, false));
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t i = 0; i < r; ++i) reach[k][i] = reach[k + 1][i] || seq.betas[k][i] > 0;

  ExponentVector c(n, 0);
  RootVector rem = gamma;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    for (std::size_t i = 0; i < r; ++i)
      if (rem[i] > 0 && !reach[k][i]) return;
    if (k == n) {
      out.push_back(c);
      return;
    }
    const RootVector& b = seq.betas[k];
    int m = 0;
    for (;;) {
      c[k] = m;
      go(k + 1);
      bool fits = true;
      for (std::size_t i = 0; i < r; ++i)
        if (b[i] > rem[i]) fits = false;
      if (!fits) break;
      for (std::size_t i = 0; i < r; ++i) rem[i] -= b[i];
      ++m;
    }
    for (std::size_t i = 0; i < r; ++i) rem[i] += m * b[i];
    c[k] = 0;
  };
  go(0);
  return out;
}

std::vector<RootVector> weights_up_to(int rank, int max_height) {
  std::vector<RootVector> out;
  RootVector v(static_cast<std::size_t>(rank), 0);
  for (int h = 1; h <= max_height; ++h) {
    std::function<void(int, int)> go = [&](int i, int left) {
      if (i == rank - 1) {
        v[static_cast<std::size_t>(i)] = left;
        out.push_back(v);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        v[static_cast<std::size_t>(i)] = x;
        go(i + 1, left - x);
      }
    };
    go(0, h);
  }
  return out;
}

}  // namespace qcanon

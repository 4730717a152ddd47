#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qcanon/errors.hpp"
#include "qcanon/folding.hpp"
#include "qcanon/presets.hpp"

using namespace qcanon;

namespace {

const char* kFolds[][2] = {{"A3", "A3->B2"}, {"A5", "A5->B3"}, {"D4", "D4->G2"},
                           {"D4", "D4->C3"}, {"D5", "D5->C4"}, {"E6", "E6->F4"}};

std::vector<ExponentVector> sigma_power(const Setup& s, const ExponentVector& c, int p) {
  std::vector<ExponentVector> orbit{c};
  for (int k = 1; k <= p; ++k) orbit.push_back(sigma_on_exponents(s.fold, s.seq, orbit.back()));
  return orbit;
}

}  // namespace

TEST_CASE("cycle notation") {
  const CartanDatum a3 = make_setup("A3").base();
  CHECK(parse_cycles(a3, "(1 1')") == std::vector<int>{1, 0, 2});
  CHECK(parse_cycles(a3, "(1 1')(2)") == std::vector<int>{1, 0, 2});
  CHECK(parse_cycles(a3, "") == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(parse_cycles(a3, "(1 9)"), UnknownLabel);
  CHECK_THROWS_AS(parse_cycles(a3, "(1 1'"), ParseError);
  CHECK_THROWS_AS(parse_cycles(a3, "(1 1')(1 2)"), ConfigError);
}

TEST_CASE("admissibility") {
  const CartanDatum a3 = make_setup("A3").base();
  CHECK_THROWS_AS(validate_admissible(a3, parse_cycles(a3, "(1 2)")), NotAdmissible);
  const CartanDatum a2({"1", "2"}, {{2, -1}, {-1, 2}});
  // preserves the form, but the orbit {1,2} is not orthogonal
  CHECK_THROWS_AS(validate_admissible(a2, parse_cycles(a2, "(1 2)")), NotAdmissible);
  const CartanDatum d4 = make_setup("D4").base();
  CHECK_THROWS_AS(validate_admissible(d4, parse_cycles(d4, "(1 1')(1'' 2)")), NotAdmissible);
  const FoldingDatum t = trivial_folding(a3);
  CHECK(t.trivial());
  CHECK(t.quotient.labels() == a3.labels());
}

TEST_CASE("quotient Cartan data") {
  const Setup b2 = make_setup("A3", "A3->B2");
  CHECK(b2.fold.p == 2);
  CHECK(b2.quotient().labels() == std::vector<std::string>{"1", "2"});
  CHECK(b2.quotient().form_matrix() == std::vector<std::vector<int>>{{4, -2}, {-2, 2}});
  const Setup g2 = make_setup("D4", "D4->G2");
  CHECK(g2.fold.p == 3);
  CHECK(g2.quotient().form_matrix() == std::vector<std::vector<int>>{{6, -3}, {-3, 2}});
  const Setup f4 = make_setup("E6", "E6->F4");
  CHECK(f4.quotient().positive_roots().size() == 24);
  const Setup c3 = make_setup("D4", "D4->C3");
  CHECK(c3.quotient().positive_roots().size() == 9);
  CHECK(make_setup("D5", "D5->C4").quotient().labels().back() == "4");
  CHECK(make_setup("C4").fold_name == "D5->C4");
  CHECK(make_setup("B3").fold_name == "A5->B3");
  CHECK_THROWS_AS(make_setup("A3", "A3->G2"), UnsupportedPreset);
  CHECK_THROWS_AS(make_setup("B2", "D4->G2"), ConfigError);
}

TEST_CASE("lifted sequences cut into orbit parts") {
  for (const auto& f : kFolds) {
    const Setup s = make_setup(f[0], f[1]);
    REQUIRE(s.parts.size() == s.ulseq.size());
    std::size_t next = 0;
    for (std::size_t k = 0; k < s.parts.size(); ++k) {
      const Part& part = s.parts[k];
      CHECK(part.begin == next);
      CHECK(part.orbit == s.ulseq.indices[k]);
      CHECK(part.end - part.begin == s.fold.orbits[static_cast<std::size_t>(part.orbit)].size());
      next = part.end;
    }
    CHECK(next == s.seq.size());
  }
}

TEST_CASE("sigma permutes roots and exponent vectors") {
  for (const auto& f : kFolds) {
    const Setup s = make_setup(f[0], f[1]);
    const int p = s.fold.p;
    std::set<RootVector> images;
    for (const auto& b : s.seq.betas) {
      RootVector v = b;
      for (int k = 0; k < p; ++k) v = sigma_on_root(s.fold, v);
      CHECK(v == b);
      images.insert(sigma_on_root(s.fold, b));
    }
    CHECK(images == std::set<RootVector>(s.seq.betas.begin(), s.seq.betas.end()));
    for (const auto& g : weights_up_to(s.base().rank(), 4)) {
      const auto block = enumerate_block(s.seq, g);
      const auto target = enumerate_block(s.seq, sigma_on_root(s.fold, g));
      std::set<ExponentVector> seen;
      for (const auto& c : block) {
        const auto orbit = sigma_power(s, c, p);
        CHECK(orbit.back() == c);
        CHECK(weight_of(s.seq, orbit[1]) == sigma_on_root(s.fold, g));
        seen.insert(orbit[1]);
      }
      CHECK(seen == std::set<ExponentVector>(target.begin(), target.end()));
    }
  }
}

TEST_CASE("A3 sigma on exponents swaps c1,c2 and c4,c5") {
  const Setup s = make_setup("A3", "A3->B2");
  CHECK(sigma_on_exponents(s.fold, s.seq, {1, 2, 3, 4, 5, 6}) == ExponentVector{2, 1, 3, 5, 4, 6});
}

TEST_CASE("fold_exponent gives the sigma-fixed vectors") {
  for (const auto& f : kFolds) {
    const Setup s = make_setup(f[0], f[1]);
    for (const auto& ulg : weights_up_to(s.quotient().rank(), 4)) {
      const RootVector g = unfold_weight(s.fold, ulg);
      CHECK(sigma_stable(s.fold, g));
      CHECK(quotient_weight(s.fold, g) == ulg);
      std::set<ExponentVector> fixed;
      for (const auto& c : enumerate_block(s.seq, g))
        if (sigma_on_exponents(s.fold, s.seq, c) == c) fixed.insert(c);
      std::set<ExponentVector> folded;
      for (const auto& ulc : enumerate_block(s.ulseq, ulg)) {
        const ExponentVector c = fold_exponent(s.fold, s.ulseq, ulc);
        CHECK(weight_of(s.seq, c) == g);
        folded.insert(c);
      }
      CHECK(folded == fixed);
    }
  }
  const Setup a3 = make_setup("A3", "A3->B2");
  CHECK(fold_exponent(a3.fold, a3.ulseq, {1, 2, 3, 4}) == ExponentVector{1, 1, 2, 3, 3, 4});
  CHECK_FALSE(sigma_stable(a3.fold, {1, 0, 0}));
  CHECK_THROWS_AS(quotient_weight(a3.fold, {1, 0, 0}), ConfigError);
}

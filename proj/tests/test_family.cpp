#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqmon/family.hpp"
#include "eqmon/matcher.hpp"
#include "eqmon/word_classify.hpp"

using namespace eqmon;
using namespace eqmon::family;

namespace {

Word W(const char* text) { return Word::parse(text); }

bool is_factor_of(const Word& f, const Word& w) {
  if (f.size() > w.size()) return false;
  for (size_t i = 0; i + f.size() <= w.size(); ++i) {
    if (w.subword(i, i + f.size()) == f) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("sign vectors") {
  SignVector xi = SignVector::parse_bits("01");
  CHECK(xi.n() == 2);
  CHECK(!xi.swapped(1));
  CHECK(xi.swapped(2));
  CHECK(xi.index() == 1);
  CHECK(SignVector::parse_bits("10").index() == 2);
  CHECK(SignVector::from_index(2, 2).bits() == "10");
  for (size_t k = 0; k < 8; ++k) {
    CHECK(SignVector::from_index(3, k).index() == k);
  }
  CHECK_THROWS_AS(SignVector::parse_bits("02"), error);
}

TEST_CASE("permutations") {
  Permutation id = Permutation::identity(3);
  CHECK(id.apply(2) == 2);
  Permutation rho = Permutation::from_one_based({2, 3, 1});
  CHECK(rho.apply(1) == 2);
  CHECK_THROWS_AS(Permutation::from_one_based({1, 1, 2}), error);
}

TEST_CASE("the three sections") {
  CHECK(word_p(2).size() == 12);  // 6n
  CHECK(word_q(2).size() == 7);   // 2n + 3
  CHECK(word_r(2).size() == 19);  // 8n + 3 letters from the displayed product
  CHECK(word_q(2) == W("s0 y0 s1 y1 s2 y2 t"));
  CHECK(word_r(2).subword(0, 3) == W("b y0 x1_1"));
  CHECK(word_p(2) == W("z1 t1 z2 t2 zp1 tp1 zp2 tp2 zpp1 tpp1 zpp2 tpp2"));
  CHECK_THROWS_AS(word_p(1), error);
}

TEST_CASE("the family word and its middle section") {
  Word w = word_w(2, SignVector::identity(2));
  CHECK(w.size() == 48);  // 20n + 8
  CHECK(w.subword(12, 22) == W("a1 a2 a x1_1 x2_1 x1_2 x2_2 b b1 b2"));
  Word swapped = word_w(2, SignVector::parse_bits("10"));
  CHECK(swapped.subword(12, 22) == W("a1 a2 a x2_1 x1_1 x1_2 x2_2 b b1 b2"));
  // the tail sections are identical for all sign vectors
  CHECK(w.subword(22, 48) == swapped.subword(22, 48));
  CHECK_THROWS_AS(word_w(2, SignVector::identity(3)), error);
}

TEST_CASE("family counts and distinctness") {
  for (size_t n : {size_t{2}, size_t{3}}) {
    auto fam = all_words(n);
    CHECK(fam.size() == (size_t{1} << n));
    std::set<Word> distinct(fam.begin(), fam.end());
    CHECK(distinct.size() == fam.size());
    for (const Word& w : fam) {
      CHECK(w.size() == 20 * n + 8);
      CHECK(content(w).size() == 12 * n + 5);
      CHECK(simple_vars(w).size() == 4 * n + 2);
      for (Variable v : multiple_vars(w)) CHECK(occ(w, v) == 2);
    }
  }
}

TEST_CASE("collapsing the differing pairs equalizes two family words") {
  auto fam = all_words(2);
  for (size_t i = 0; i < fam.size(); ++i) {
    for (size_t j = 0; j < fam.size(); ++j) {
      SignVector xi = SignVector::from_index(2, i);
      SignVector eta = SignVector::from_index(2, j);
      std::set<Variable> diff;
      for (size_t k = 1; k <= 2; ++k) {
        if (xi.swapped(k) != eta.swapped(k)) {
          diff.insert(var_x(1, k));
          diff.insert(var_x(2, k));
        }
      }
      CHECK(remove(fam[i], diff) == remove(fam[j], diff));
    }
  }
}

TEST_CASE("the projection onto consecutive markers renames to the probe word") {
  Word w = word_w(2, SignVector::identity(2));
  std::set<Variable> keep = {var_a(1), var_a(2), var_s(1), var_t_plain(), var_y(1)};
  Word proj = project(w, keep);
  // a1 a2 s1 y1 t a1 y1 a2, which is the probe word under the renaming
  // a1 -> x, a2 -> y, s1 -> t, y1 -> z, t -> s
  CHECK(proj == W("a1 a2 s1 y1 t a1 y1 a2"));
  Substitution rename;
  rename.set(var_a(1), W("x"));
  rename.set(var_a(2), W("y"));
  rename.set(var_s(1), W("t"));
  rename.set(var_y(1), W("z"));
  rename.set(var_t_plain(), W("s"));
  CHECK(rename.apply(proj) == probe_word());
}

TEST_CASE("five and two identities") {
  auto five = five_identities();
  REQUIRE(five.size() == 5);
  CHECK(five[0] == Identity::parse("x x = x x x"));
  CHECK(five[4] == Identity::parse("x z y t x y = x z y t y x"));
  auto two = two_identities();
  REQUIRE(two.size() == 2);
  CHECK(two[1] == Identity::parse("x y z y x = y x z x y"));
}

TEST_CASE("the paired words differ exactly in the two leading letters") {
  auto [c, cp] = c_word_pair(1, 1, 1, Permutation::identity(3));
  CHECK(c == W("z1 t1 x y t z2 t2 x z1 z2 z3 y t3 z3"));
  CHECK(cp == W("z1 t1 y x t z2 t2 x z1 z2 z3 y t3 z3"));
  CHECK(content(c) == content(cp));
  size_t diffs = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] != cp[i]) ++diffs;
  }
  CHECK(diffs == 2);

  // linear except x, y and the z-run, each of which occurs exactly twice
  for (Variable v : content(c)) {
    size_t k = occ(c, v);
    std::string name = v.name();
    if (name == "x" || name == "y" || name[0] == 'z') {
      CHECK(k == 2);
    } else {
      CHECK(k == 1);
    }
  }
  CHECK_THROWS_AS(c_word_pair(0, 1, 1, Permutation::identity(2)), error);
  CHECK_THROWS_AS(c_word_pair(1, 1, 1, Permutation::identity(4)), error);
}

TEST_CASE("a permuted middle run") {
  auto [c, cp] = c_word_pair(1, 1, 1, Permutation::from_one_based({3, 1, 2}));
  CHECK(c == W("z1 t1 x y t z2 t2 x z3 z1 z2 y t3 z3"));
  CHECK(content(c) == content(cp));
}

TEST_CASE("the probe substitution lands inside the family word") {
  for (size_t n : {size_t{2}, size_t{3}}) {
    Substitution phi = probe_substitution(n);
    CHECK(phi.image(Variable::named("x")) == Word{var_x(2, 1)});
    CHECK(phi.image(Variable::named("z")) == Word{var_y(1)});
    Word image = phi.apply(probe_word());
    CHECK(is_factor_of(image, word_w(n, SignVector::identity(n))));
  }
}

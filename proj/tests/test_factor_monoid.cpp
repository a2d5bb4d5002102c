#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eqmon/factor_monoid.hpp"
#include "eqmon/family.hpp"

using namespace eqmon;

namespace {

Word W(const char* text) { return Word::parse(text); }
Variable V(const char* name) { return Variable::named(name); }

}  // namespace

TEST_CASE("element counts") {
  CHECK(FactorMonoid({W("x y")}).element_count() == 5);    // 1, x, y, xy, 0
  CHECK(FactorMonoid({W("x y x")}).element_count() == 7);  // 1, x, y, xy, yx, xyx, 0
  CHECK_THROWS_AS(FactorMonoid({W("1")}), error);

  // the family factor monoid: cross-count the distinct factors by strings
  auto fam = family::all_words(2);
  std::set<std::string> printed{Word{}.str()};
  for (const Word& w : fam) {
    for (size_t i = 0; i < w.size(); ++i) {
      for (size_t j = i + 1; j <= w.size(); ++j) printed.insert(w.subword(i, j).str());
    }
  }
  CHECK(FactorMonoid(fam).element_count() == printed.size() + 1);
}

TEST_CASE("materialized table agrees with the product rule") {
  FactorMonoid fm({W("x y x")});
  FiniteMonoid m = fm.materialize();
  CHECK(m.size() == 7);
  REQUIRE(m.zero_elem().has_value());
  auto idx = [&](const char* s) {
    auto i = m.index_of_name(s);
    REQUIRE(i.has_value());
    return *i;
  };
  CHECK(m.identity_elem() == idx("1"));
  CHECK(m.mul(idx("x"), idx("y")) == idx("x y"));
  CHECK(m.mul(idx("x y"), idx("x")) == idx("x y x"));
  CHECK(m.mul(idx("x"), idx("x")) == *m.zero_elem());
  CHECK_THROWS_AS(FactorMonoid({family::word_w(2, family::SignVector::identity(2))}).materialize(10),
                  error);
}

TEST_CASE("basic decisions") {
  FactorMonoid fm({W("x y")});
  DecideResult r = fm.decide_identity(Identity::parse("x y = y x"));
  CHECK(!r.satisfied);
  REQUIRE(r.witness.has_value());

  CHECK(fm.decide_identity(Identity::parse("x y = x y")).satisfied);
  // content difference forces a zero on exactly one side
  CHECK(!fm.decide_identity(Identity::parse("x y = x")).satisfied);
  // both sides always zero
  CHECK(fm.decide_identity(Identity::parse("x x y = x x x y")).satisfied);
}

TEST_CASE("the five defining identities against the two-word monoid") {
  FactorMonoid fm({W("x y z x y"), W("x y z y x")});
  auto five = family::five_identities();
  for (size_t k = 0; k + 1 < five.size(); ++k) {
    CHECK(fm.decide_identity(five[k]).satisfied);
  }
  DecideResult r = fm.decide_identity(five[4]);
  CHECK(!r.satisfied);
  REQUIRE(r.witness.has_value());
}

TEST_CASE("the probe monoid satisfies every family pair") {
  FactorMonoid fm({family::probe_word()});
  auto fam = family::all_words(2);
  for (const Word& u : fam) {
    for (const Word& v : fam) {
      CHECK(fm.decide_identity(Identity{u, v}).satisfied);
    }
  }
}

TEST_CASE("family words are separated over their own factor monoid") {
  auto fam = family::all_words(2);
  FactorMonoid fm(fam);
  for (size_t i = 0; i < fam.size(); ++i) {
    for (size_t j = 0; j < fam.size(); ++j) {
      CHECK(fm.decide_identity(Identity{fam[i], fam[j]}).satisfied == (i == j));
    }
  }
}

TEST_CASE("zero propagation") {
  FactorMonoid fm({W("x y x")});
  // any substitution sending a shared variable to zero equalizes the sides;
  // decide must therefore not be fooled by content-equal sides
  CHECK(fm.decide_identity(Identity::parse("x x x x = x x x x x")).satisfied);
}

TEST_CASE("violations transfer to larger word sets") {
  Identity id = Identity::parse("x y = y x");
  FactorMonoid small({W("x y")});
  FactorMonoid large({W("x y"), W("y x z")});
  CHECK(!small.decide_identity(id).satisfied);
  CHECK(!large.decide_identity(id).satisfied);
}

TEST_CASE("bounded isoterm over a factor monoid") {
  FactorMonoid fm({W("x z y t x y")});
  auto v = fm.bounded_isoterm(W("x z y t x y"), 8);
  CHECK(std::holds_alternative<IsotermUpTo>(v));

  FactorMonoid single({W("x")});
  auto c = single.bounded_isoterm(W("x y"), 2);
  REQUIRE(std::holds_alternative<IsotermCounterexample>(c));
  CHECK(std::get<IsotermCounterexample>(c).word == W("y x"));
}

TEST_CASE("decisions agree with brute force on random small instances") {
  std::mt19937 rng(4242);
  std::vector<Variable> alphabet = {V("x"), V("y"), V("z")};
  auto rand_word = [&](size_t lo, size_t hi) {
    std::uniform_int_distribution<size_t> len(lo, hi);
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    Word w;
    size_t n = len(rng);
    for (size_t i = 0; i < n; ++i) w.append(alphabet[pick(rng)]);
    return w;
  };
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Word> words{rand_word(1, 3)};
    if (rng() % 2) words.push_back(rand_word(1, 3));
    FactorMonoid fm(words);
    Identity id{rand_word(0, 4), rand_word(0, 4)};
    CHECK(fm.decide_identity(id).satisfied == satisfies(fm.materialize(), id).satisfied);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqmon/factor_monoid.hpp"
#include "eqmon/family.hpp"
#include "eqmon/reduce.hpp"
#include "eqmon/word_classify.hpp"

using namespace eqmon;

namespace {

Word W(const char* text) { return Word::parse(text); }

void check_certificate(const Reduction& red) {
  std::string why;
  CHECK_MESSAGE(replay_reduction(red, &why), why);
  FactorMonoid ref({W("x z y t x y")});
  for (const CertStep& s : red.steps) {
    CHECK_MESSAGE(ref.decide_identity(s.rule).satisfied,
                  "rule fails in the reference monoid: " << s.rule.str());
  }
}

}  // namespace

TEST_CASE("trivial input") {
  Reduction red = reduce_identity(Identity::parse("x x = x x"));
  CHECK(red.output.trivial());
  CHECK(red.steps.empty());
}

TEST_CASE("already reduced family identities are unchanged") {
  auto fam = family::all_words(2);
  Reduction red = reduce_identity(Identity{fam[0], fam[1]});
  CHECK(red.output == Identity{fam[0], fam[1]});
  CHECK(red.steps.empty());
  CHECK(is_reduced(red.output));
}

TEST_CASE("an island swap reduces to the trivial identity") {
  Reduction red = reduce_identity(Identity::parse("x y t x y = x y t y x"));
  CHECK(red.output.trivial());
  REQUIRE(red.steps.size() == 1);
  CHECK(red.steps[0].kind == CertKind::island_swap);
  check_certificate(red);
}

TEST_CASE("paired words reduce to sorted blocks with matching islands") {
  auto [lhs, rhs] = family::c_word_pair(1, 1, 1, family::Permutation::identity(3));
  Reduction red = reduce_identity(Identity{lhs, rhs});
  CHECK(red.output.lhs == W("z1 t1 x y t z2 t2 z3 x z1 z2 y t3 z3"));
  CHECK(red.output.rhs == W("z1 t1 y x t z2 t2 z3 x z1 z2 y t3 z3"));
  CHECK(is_reduced(red.output));
  CHECK(!red.output.trivial());
  // three sorting swaps per side move the first z3 ahead of the seconds
  size_t sorts = 0;
  for (const CertStep& s : red.steps) {
    if (s.kind == CertKind::block_sort) ++sorts;
  }
  CHECK(sorts == 6);
  check_certificate(red);
}

TEST_CASE("heavy variables are pulled out as squares") {
  Reduction red = reduce_identity(Identity::parse("c c x y t x y = c c x y t y x"));
  CHECK(red.output.trivial());  // after the pullout only the island swap remains
  bool pulled = false;
  for (const CertStep& s : red.steps) {
    if (s.kind == CertKind::square_pullout) {
      pulled = true;
      CHECK(s.rule.rhs.subword(0, 2) == W("c c"));
    }
  }
  CHECK(pulled);
  check_certificate(red);

  // three occurrences also classify as heavy
  Reduction red3 = reduce_identity(Identity::parse("c c c x y t x y = c c c x y t y x"));
  CHECK(red3.output.trivial());
  check_certificate(red3);

  // a same-block pair in the middle of a block
  Reduction mid = reduce_identity(Identity::parse("x c c y t x y = x c c y t y x"));
  CHECK(mid.output.trivial());
  check_certificate(mid);
}

TEST_CASE("island alignment collapses a pure second-occurrence difference") {
  Reduction red = reduce_identity(Identity::parse("x y h z t x y z = x y h z t y x z"));
  CHECK(red.output.trivial());
  check_certificate(red);
}

TEST_CASE("a first-occurrence difference stays as a nontrivial reduced identity") {
  Identity id = Identity::parse("x y t x h y = y x t x h y");
  FactorMonoid ref({W("x z y t x y")});
  REQUIRE(ref.decide_identity(id).satisfied);
  Reduction red = reduce_identity(id);
  CHECK(red.output == id);
  CHECK(red.steps.empty());
  CHECK(is_reduced(red.output));
  CHECK(!red.output.trivial());
}

TEST_CASE("inputs that cannot be aligned are rejected") {
  // islands of the final blocks have different contents; the identity does
  // not hold in the reference monoid
  CHECK_THROWS_AS(reduce_identity(Identity::parse("x z y t x y = x z y t y x")), reduce_error);
  // different simple skeletons
  CHECK_THROWS_AS(reduce_identity(Identity::parse("x t x = x s x")), reduce_error);
  // sides classify a variable differently
  CHECK_THROWS_AS(reduce_identity(Identity::parse("x x y t y = x y t y x")), reduce_error);
}

TEST_CASE("replay rejects tampered certificates") {
  Reduction red = reduce_identity(Identity::parse("x y t x y = x y t y x"));
  REQUIRE(red.steps.size() == 1);
  Reduction bad = red;
  bad.steps[0].after = W("x y t x y");  // not the recorded swap
  std::string why;
  CHECK(!replay_reduction(bad, &why));
  CHECK(!why.empty());

  Reduction wrong_output = red;
  wrong_output.output = Identity::parse("x = x");
  CHECK(!replay_reduction(wrong_output, &why));
}

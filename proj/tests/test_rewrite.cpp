#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eqmon/family.hpp"
#include "eqmon/matcher.hpp"
#include "eqmon/partition.hpp"
#include "eqmon/rewrite.hpp"

using namespace eqmon;

namespace {

Word W(const char* text) { return Word::parse(text); }
Variable V(const char* name) { return Variable::named(name); }

// the one-step rewrite relation computed directly from factor matches
std::set<Word> naive_results(const Word& target, const Identity& directed, size_t max_len) {
  std::set<Word> out;
  match_factor(directed.lhs, target, [&](const Match& m) {
    Word result = m.prefix + m.subst.apply(directed.rhs) + m.suffix;
    if (result.size() <= max_len) out.insert(result);
    return true;
  });
  return out;
}

std::set<Word> optimized_results(const Word& target, const Identity& directed, size_t max_len) {
  RewriteLimits limits;
  limits.max_word_len = max_len;
  RewriteEnumeration res = enumerate_rewrites(target, directed, limits);
  REQUIRE(res.complete);
  std::set<Word> out;
  for (const RewriteOutcome& oc : res.outcomes) out.insert(oc.result);
  return out;
}

}  // namespace

TEST_CASE("single step deductions") {
  IdentitySet sigma;
  sigma.identities.push_back(Identity::parse("x x = x x x"));

  auto steps = direct_deductions(W("x x"), sigma);
  bool to_xxx = false;
  for (const DeductionStep& s : steps) {
    CHECK(s.replay() == s.to);
    if (s.to == W("x x x")) to_xxx = true;
  }
  CHECK(to_xxx);

  // no nontrivial step out of an unrelated word
  CHECK(direct_deductions(W("y"), sigma).empty());
}

TEST_CASE("steps are merged by result and exclude the trivial loop") {
  IdentitySet sigma;
  sigma.identities.push_back(Identity::parse("x = x x"));
  auto steps = direct_deductions(W("x x"), sigma);
  std::set<Word> results;
  for (const DeductionStep& s : steps) {
    CHECK(s.to != W("x x"));
    CHECK(results.insert(s.to).second);  // no duplicates
  }
  CHECK(results == std::set<Word>{W("x"), W("x x x"), W("x x x x")});
}

TEST_CASE("closure under the squaring rule") {
  IdentitySet sigma;
  sigma.identities.push_back(Identity::parse("x x = x x x"));
  ClosureCaps caps;
  caps.max_word_len = 5;
  ClosureResult r = closure(W("x x"), sigma, caps);
  CHECK(r.exhausted);
  CHECK(std::set<Word>(r.words.begin(), r.words.end()) ==
        std::set<Word>{W("x x"), W("x x x"), W("x x x x"), W("x x x x x")});

  ClosureResult empty_sigma = closure(W("x"), IdentitySet{}, caps);
  CHECK(empty_sigma.exhausted);
  CHECK(empty_sigma.words == std::vector<Word>{W("x")});
}

TEST_CASE("closure reports exceeded caps honestly") {
  IdentitySet sigma;
  sigma.identities.push_back(Identity::parse("x x = x x x"));
  ClosureCaps caps;
  caps.max_word_len = 64;
  caps.max_depth = 3;
  ClosureResult r = closure(W("x x"), sigma, caps);
  CHECK(!r.exhausted);
  CHECK(!r.stop_reason.empty());
}

TEST_CASE("derivability with path reconstruction") {
  auto fam = family::all_words(2);
  IdentitySet sigma;
  sigma.identities.push_back(Identity{fam[0], fam[1]});

  DerivationResult direct = derivable(fam[0], fam[1], sigma);
  REQUIRE(direct.found);
  CHECK(direct.path.size() == 2);
  CHECK(direct.steps.size() == 1);
  CHECK(direct.steps[0].replay() == fam[1]);

  DerivationResult self = derivable(fam[0], fam[0], sigma);
  CHECK(self.found);
  CHECK(self.path.size() == 1);

  // unreachable within caps under a partition that separates them
  DerivationResult no = derivable(fam[2], fam[3], sigma, ClosureCaps{6, 1000, 48});
  CHECK(!no.found);
  CHECK(no.exhausted);  // the search space is tiny and fully explored
}

TEST_CASE("symmetry of exhausted closures") {
  IdentitySet sigma;
  sigma.identities.push_back(Identity::parse("x y x z x = x x y z"));
  sigma.identities.push_back(Identity::parse("x x = x x x"));
  ClosureCaps caps;
  caps.max_word_len = 8;
  Word u = W("x y x z x");
  ClosureResult cu = closure(u, sigma, caps);
  REQUIRE(cu.exhausted);
  for (const Word& v : cu.words) {
    ClosureResult cv = closure(v, sigma, caps);
    REQUIRE(cv.exhausted);
    CHECK(std::find(cv.words.begin(), cv.words.end(), u) != cv.words.end());
  }
}

TEST_CASE("optimized enumeration equals the factor-match relation") {
  std::mt19937 rng(777);
  std::vector<Variable> wide = {V("x"), V("y"), V("z")};
  std::vector<Variable> narrow = {V("x"), V("y")};
  auto rand_word = [&](size_t lo, size_t hi, const std::vector<Variable>& as) {
    std::uniform_int_distribution<size_t> len(lo, hi);
    std::uniform_int_distribution<size_t> pick(0, as.size() - 1);
    Word w;
    size_t n = len(rng);
    for (size_t i = 0; i < n; ++i) w.append(as[pick(rng)]);
    return w;
  };
  size_t tried = 0;
  for (int trial = 0; trial < 900 && tried < 600; ++trial) {
    // narrow alphabets make repeated letters, pinned checks, and long
    // repeated factors frequent
    const auto& alpha = trial % 2 ? narrow : wide;
    Word target = rand_word(0, trial % 2 ? 7 : 6, alpha);
    Word lhs = rand_word(1, 4, alpha);
    std::set<Variable> lhs_con = content(lhs);
    std::vector<Variable> lhs_vars(lhs_con.begin(), lhs_con.end());
    Word rhs = rand_word(0, 4, lhs_vars);
    ++tried;
    Identity directed{lhs, rhs};
    CHECK(optimized_results(target, directed, 32) == naive_results(target, directed, 32));
  }
  CHECK(tried >= 600);
}

TEST_CASE("rewrite enumeration flags whole-word identity substitutions") {
  auto fam = family::all_words(2);
  RewriteLimits limits;
  limits.max_word_len = 64;
  RewriteEnumeration res = enumerate_rewrites(fam[0], Identity{fam[0], fam[2]}, limits);
  REQUIRE(res.complete);
  bool saw = false;
  for (const RewriteOutcome& oc : res.outcomes) {
    if (oc.result == fam[2]) {
      saw = true;
      CHECK(oc.all_whole_word);
      CHECK(oc.all_identity_subst);
    }
  }
  CHECK(saw);
}

TEST_CASE("closures under partition identity sets stay inside the family") {
  auto fam = family::all_words(2);
  RewriteCache cache;
  ClosureCaps caps;
  caps.max_depth = 6;
  caps.max_states = 16;
  caps.max_word_len = 48;
  for (const Partition& pi : all_partitions(4)) {
    IdentitySet sigma = id_set(pi, 2);
    for (size_t i = 0; i < fam.size(); ++i) {
      ClosureResult r = closure(fam[i], sigma, caps, &cache);
      REQUIRE(r.exhausted);
      std::set<Word> expect;
      for (size_t j = 0; j < fam.size(); ++j) {
        if (pi.related(i, j)) expect.insert(fam[j]);
      }
      CHECK(std::set<Word>(r.words.begin(), r.words.end()) == expect);
    }
  }
}

TEST_CASE("identities that introduce variables are rejected") {
  IdentitySet sigma;
  sigma.identities.push_back(Identity::parse("x = y"));
  CHECK_THROWS_AS(direct_deductions(W("x"), sigma), error);
}

TEST_CASE("identity set helpers") {
  IdentitySet sigma = IdentitySet::parse_lines("x y = y x\n\nx x = x\n");
  REQUIRE(sigma.identities.size() == 2);
  IdentitySet sym = sigma.symmetric_closure();
  CHECK(sym.closed_under_symmetry);
  CHECK(sym.identities.size() == 4);
  // closing twice changes nothing
  CHECK(sym.symmetric_closure().identities.size() == 4);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eqmon/family.hpp"
#include "eqmon/partition.hpp"

using namespace eqmon;

TEST_CASE("enumeration matches the Bell numbers") {
  CHECK(all_partitions(1).size() == 1);
  CHECK(all_partitions(3).size() == 5);
  CHECK(all_partitions(4).size() == 15);
  for (size_t n = 1; n <= 8; ++n) {
    CHECK(all_partitions(n).size() == bell_number(n));
  }
  CHECK(bell_number(8) == 4140);
  CHECK_THROWS_AS(all_partitions(0), error);
}

TEST_CASE("canonical labels are unique per relation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<uint32_t> labels(6);
    for (auto& l : labels) l = rng() % 4;
    Partition p = Partition::canonicalize(labels);
    // relabeling the blocks arbitrarily gives the same canonical form
    uint32_t shift = rng() % 7 + 1;
    std::vector<uint32_t> relabeled;
    for (uint32_t l : labels) relabeled.push_back((l * 13 + shift) % 31);
    CHECK(Partition::canonicalize(relabeled) == p);
    // canonical form is a restricted growth string
    uint32_t mx = 0;
    for (uint32_t b : p.block_of) {
      CHECK(b <= mx);
      mx = std::max(mx, b + 1);
    }
  }
}

TEST_CASE("meet and join") {
  Partition eps = Partition::equality(3);
  Partition uni = Partition::universal(3);
  Partition p = Partition::canonicalize({0, 0, 1});  // {0 1 | 2}
  Partition q = Partition::canonicalize({0, 1, 0});  // {0 2 | 1}

  CHECK(meet(p, uni) == p);
  CHECK(join(p, eps) == p);
  CHECK(join(p, q) == uni);
  CHECK(meet(p, q) == eps);
  CHECK_THROWS_AS(meet(p, Partition::equality(4)), error);

  // lattice laws on Eq(4)
  auto parts = all_partitions(4);
  for (const Partition& a : parts) {
    for (const Partition& b : parts) {
      CHECK(meet(a, b) == meet(b, a));
      CHECK(join(a, b) == join(b, a));
      CHECK(meet(a, join(a, b)) == a);
      CHECK(join(a, meet(a, b)) == a);
      CHECK(finer_or_equal(meet(a, b), a));
      CHECK(finer_or_equal(a, join(a, b)));
    }
  }
}

TEST_CASE("identity sets from partitions") {
  CHECK(id_set(Partition::equality(4), 2).identities.empty());
  CHECK(id_set(Partition::universal(4), 2).identities.size() == 6);  // C(4,2)
  Partition p = Partition::canonicalize({0, 0, 1, 2});               // first two glued
  IdentitySet sigma = id_set(p, 2);
  REQUIRE(sigma.identities.size() == 1);
  auto fam = family::all_words(2);
  CHECK(sigma.identities[0] == Identity{fam[0], fam[1]});
  CHECK_THROWS_AS(id_set(Partition::equality(3), 2), error);
}

TEST_CASE("anti-isomorphism proxies at the word level") {
  RewriteCache cache;
  AntiIsoProxyReport rep = check_antiisomorphism_proxy(2, &cache);
  CHECK(rep.partitions == 15);
  CHECK_MESSAGE(rep.classes_match, rep.detail);
  CHECK_MESSAGE(rep.systems_distinct, rep.detail);
  CHECK_MESSAGE(rep.order_reversal, rep.detail);
  CHECK(rep.passed());
}

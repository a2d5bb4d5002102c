#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqmon/lattice.hpp"

using namespace eqmon;

TEST_CASE("built-in lattices satisfy the axioms") {
  for (const char* name : {"chain2", "chain5", "m3", "n5", "boolean3"}) {
    FiniteLattice l = lattices::by_name(name);
    CHECK(!lattice_axiom_violation(l).has_value());
  }
  CHECK(lattices::chain(4).size() == 4);
  CHECK(lattices::boolean(3).size() == 8);
  CHECK_THROWS_AS(lattices::by_name("pentagon"), error);
  CHECK_THROWS_AS(lattices::boolean(4), error);
}

TEST_CASE("orders that are not lattices are rejected") {
  // two incomparable elements with no upper bound
  std::vector<bool> leq = {
      true, false,  //
      false, true,
  };
  CHECK_THROWS_AS(FiniteLattice::from_order(2, leq), error);
}

TEST_CASE("the equivalence lattices") {
  for (size_t n = 2; n <= 5; ++n) {
    FiniteLattice eq = lattices::eq_lattice(n);
    CHECK(eq.size() == all_partitions(n).size());
    CHECK(!lattice_axiom_violation(eq).has_value());
  }
  // Eq(3) is the five-element lattice with three incomparable atoms
  FiniteLattice eq3 = lattices::eq_lattice(3);
  REQUIRE(eq3.size() == 5);
  size_t atoms = 0;
  for (size_t i = 0; i < 5; ++i) {
    size_t below = 0;
    for (size_t j = 0; j < 5; ++j) {
      if (i != j && eq3.leq(j, i)) ++below;
    }
    if (below == 1) ++atoms;
  }
  CHECK(atoms == 3);
}

TEST_CASE("embedding searches") {
  auto m3 = embed_lattice(lattices::m3(), 3);
  REQUIRE(m3.has_value());
  CHECK(verify_embedding(lattices::m3(), 3, *m3));

  // the pentagon needs a four-element ground set
  CHECK(!embed_lattice(lattices::n5(), 3).has_value());
  auto n5 = embed_lattice(lattices::n5(), 4);
  REQUIRE(n5.has_value());
  CHECK(verify_embedding(lattices::n5(), 4, *n5));

  auto chain = embed_lattice(lattices::chain(2), 2);
  REQUIRE(chain.has_value());
  CHECK(verify_embedding(lattices::chain(2), 2, *chain));

  CHECK_THROWS_AS(embed_lattice(lattices::m3(), 6), error);
}

TEST_CASE("verify_embedding rejects wrong maps") {
  FiniteLattice m3 = lattices::m3();
  CHECK(!verify_embedding(m3, 3, {0, 1, 2, 3, 3}));  // not injective
  CHECK(!verify_embedding(m3, 3, {0, 1, 2, 3}));     // wrong arity
  CHECK(verify_embedding(m3, 3, {4, 1, 2, 3, 0}));   // reversal is fine: self-dual
  CHECK(!verify_embedding(m3, 3, {0, 1, 2, 3, 4}));  // top and bottom collide
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqmon/family.hpp"
#include "eqmon/monoid.hpp"

using namespace eqmon;

namespace {

Word W(const char* text) { return Word::parse(text); }
Variable V(const char* name) { return Variable::named(name); }

size_t elem(const FiniteMonoid& m, const char* name) {
  auto i = m.index_of_name(name);
  REQUIRE(i.has_value());
  return *i;
}

}  // namespace

TEST_CASE("construction validates the axioms") {
  FiniteMonoid one = monoids::trivial();
  CHECK(one.size() == 1);
  CHECK(!one.zero_elem().has_value());  // the identity of a singleton is not reported as a zero

  // no two-sided identity
  CHECK_THROWS_AS(FiniteMonoid::build(2, {0, 0, 1, 1}, 0), error);
  // genuinely non-associative: (2*2)*2 = 2 but 2*(2*2) = 1
  CHECK_THROWS_AS(FiniteMonoid::build(3, {0, 1, 2, 1, 1, 2, 2, 1, 1}, 0), error);
  // malformed table
  CHECK_THROWS_AS(FiniteMonoid::build(2, {0, 1, 1}, 0), error);
}

TEST_CASE("brandt monoid from its presentation") {
  FiniteMonoid m = monoids::b21();
  CHECK(m.size() == 6);
  REQUIRE(m.zero_elem().has_value());
  size_t a = elem(m, "a"), b = elem(m, "b"), zero = *m.zero_elem();
  CHECK(m.mul(m.mul(a, b), a) == a);
  CHECK(m.mul(m.mul(b, a), b) == b);
  CHECK(m.mul(a, a) == zero);
  CHECK(m.mul(b, b) == zero);
}

TEST_CASE("the second six-element monoid") {
  FiniteMonoid m = monoids::a21();
  CHECK(m.size() == 6);
  REQUIRE(m.zero_elem().has_value());
  size_t a = elem(m, "a"), b = elem(m, "b");
  CHECK(m.mul(a, a) == *m.zero_elem());
  CHECK(m.mul(b, b) == b);
  CHECK(m.mul(m.mul(a, b), a) == a);
}

TEST_CASE("dihedral groups") {
  FiniteMonoid d3 = monoids::dihedral(3);
  CHECK(d3.size() == 6);
  CHECK_THROWS_AS(monoids::dihedral(4), error);  // parameter must be prime
  CHECK_THROWS_AS(monoids::dihedral(1), error);
  // non-abelian
  bool commutes = true;
  for (size_t i = 0; i < d3.size(); ++i) {
    for (size_t j = 0; j < d3.size(); ++j) {
      if (d3.mul(i, j) != d3.mul(j, i)) commutes = false;
    }
  }
  CHECK(!commutes);
  // a^p = b^2 = (ab)^2 = 1
  size_t a = elem(d3, "a"), b = elem(d3, "b");
  CHECK(d3.mul(d3.mul(a, a), a) == d3.identity_elem());
  CHECK(d3.mul(b, b) == d3.identity_elem());
  size_t ab = d3.mul(a, b);
  CHECK(d3.mul(ab, ab) == d3.identity_elem());
}

TEST_CASE("quaternion group") {
  FiniteMonoid q8 = monoids::quaternion();
  CHECK(q8.size() == 8);
  size_t i = elem(q8, "i"), j = elem(q8, "j"), k = elem(q8, "k"), m1 = elem(q8, "m1");
  CHECK(q8.mul(i, i) == m1);
  CHECK(q8.mul(j, j) == m1);
  CHECK(q8.mul(k, k) == m1);
  CHECK(q8.mul(q8.mul(i, j), k) == m1);  // ijk = i^2
  CHECK(q8.mul(i, j) == k);
  CHECK(q8.mul(j, i) == elem(q8, "mk"));
}

TEST_CASE("evaluation") {
  FiniteMonoid m = monoids::b21();
  Assignment asg{{V("x"), elem(m, "a")}, {V("y"), elem(m, "b")}};
  CHECK(m.evaluate(W("x y x"), asg) == elem(m, "a"));  // aba = a
  CHECK(m.evaluate(W("1"), asg) == m.identity_elem());
  CHECK_THROWS_AS(m.evaluate(W("x q"), asg), error);

  FiniteMonoid d5 = monoids::dihedral(5);
  Assignment w{{V("x"), elem(d5, "ab")}, {V("y"), elem(d5, "b")}, {V("z"), d5.identity_elem()}};
  CHECK(d5.evaluate(W("x y z x y"), w) == elem(d5, "a2"));
  CHECK(d5.evaluate(W("y x z y x"), w) == elem(d5, "a3"));  // a^{p-2}

  // evaluation respects factorization
  Assignment both{{V("x"), elem(m, "a")}, {V("y"), elem(m, "b")}};
  size_t u = m.evaluate(W("x y"), both);
  size_t v = m.evaluate(W("y x"), both);
  CHECK(m.evaluate(W("x y y x"), both) == m.mul(u, v));
}

TEST_CASE("identity satisfaction by exhaustive assignment") {
  FiniteMonoid q8 = monoids::quaternion();
  for (const Identity& id : family::two_identities()) {
    CHECK(satisfies(q8, id).satisfied);
  }
  FiniteMonoid d3 = monoids::dihedral(3);
  for (const Identity& id : family::two_identities()) {
    SatisfiesResult r = satisfies(d3, id);
    CHECK(!r.satisfied);
    // the witness really separates the sides
    CHECK(d3.evaluate(id.lhs, r.witness) != d3.evaluate(id.rhs, r.witness));
  }
  CHECK(satisfies(d3, Identity::parse("x = x")).satisfied);
  CHECK_THROWS_AS(satisfies(d3, Identity::parse("a b d e f g h i j = a")), error);
}

TEST_CASE("satisfaction is invariant under renaming") {
  FiniteMonoid m = monoids::b21();
  Identity id = Identity::parse("x y z x y = x z y x y");
  Identity renamed = Identity::parse("u v w u v = u w v u v");
  // apply the bijection x->u, y->v, z->w on both sides
  CHECK(satisfies(m, id).satisfied == satisfies(m, renamed).satisfied);
}

TEST_CASE("satisfaction composes transitively on witnesses") {
  FiniteMonoid m = monoids::b21();
  Identity uv = Identity::parse("x x = x x x");
  Identity vw = Identity::parse("x x x = x x x x");
  Identity uw = Identity::parse("x x = x x x x");
  if (satisfies(m, uv).satisfied && satisfies(m, vw).satisfied) {
    CHECK(satisfies(m, uw).satisfied);
  }
}

TEST_CASE("group cancellation of a common prefix letter") {
  std::vector<FiniteMonoid> groups;
  groups.push_back(monoids::dihedral(3));
  groups.push_back(monoids::dihedral(5));
  groups.push_back(monoids::quaternion());
  for (const FiniteMonoid& g : groups) {
    for (const Identity& id : family::two_identities()) {
      Identity prefixed{Word::parse("h") + id.lhs, Word::parse("h") + id.rhs};
      CHECK(satisfies(g, id).satisfied == satisfies(g, prefixed, 9).satisfied);
    }
  }
}

TEST_CASE("direct products satisfy an identity iff both factors do") {
  FiniteMonoid b21 = monoids::b21();
  FiniteMonoid d3 = monoids::dihedral(3);
  FiniteMonoid prod = monoids::direct_product(b21, d3);
  CHECK(prod.size() == 36);
  for (const Identity& id : family::five_identities()) {
    bool left = satisfies(b21, id).satisfied;
    bool right = satisfies(d3, id).satisfied;
    CHECK(satisfies(prod, id).satisfied == (left && right));
  }
}

TEST_CASE("index and period") {
  CHECK(index_and_period(monoids::trivial()) == std::pair<size_t, size_t>{1, 1});
  CHECK(index_and_period(monoids::cyclic(5)) == std::pair<size_t, size_t>{1, 5});
  CHECK(index_and_period(monoids::cyclic(6)) == std::pair<size_t, size_t>{1, 6});
  auto [m, k] = index_and_period(monoids::b21());
  CHECK(m == 2);  // satisfies xx = xxx but not x = xx
  CHECK(k == 1);
  CHECK(satisfies(monoids::b21(), Identity::parse("x x = x x x")).satisfied);
  CHECK(!satisfies(monoids::b21(), Identity::parse("x = x x")).satisfied);
}

TEST_CASE("bounded isoterm scan") {
  FiniteMonoid b21 = monoids::b21();
  CHECK(std::holds_alternative<IsotermUpTo>(bounded_isoterm(b21, W("x y z x y"), 7)));
  CHECK(std::holds_alternative<IsotermUpTo>(bounded_isoterm(b21, W("x y z y x"), 7)));
  auto v = bounded_isoterm(b21, W("x x"), 3);
  REQUIRE(std::holds_alternative<IsotermCounterexample>(v));
  CHECK(std::get<IsotermCounterexample>(v).word == W("x x x"));
  // the trivial monoid satisfies everything; the scan finds the empty
  // word first
  auto t = bounded_isoterm(monoids::trivial(), W("x y"), 2);
  REQUIRE(std::holds_alternative<IsotermCounterexample>(t));
  CHECK(std::get<IsotermCounterexample>(t).word == W("1"));
  CHECK(satisfies(monoids::trivial(), Identity{W("x y"), W("y x")}).satisfied);
}

TEST_CASE("json round-trip") {
  FiniteMonoid m = monoids::b21();
  FiniteMonoid back = monoid_from_json(to_json(m));
  CHECK(back.size() == m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    CHECK(back.name_of(i) == m.name_of(i));
    for (size_t j = 0; j < m.size(); ++j) {
      CHECK(back.mul(i, j) == m.mul(i, j));
    }
  }
  CHECK(back.identity_elem() == m.identity_elem());
}

TEST_CASE("monoid lookup by name") {
  CHECK(monoids::by_name("b21").size() == 6);
  CHECK(monoids::by_name("q8").size() == 8);
  CHECK(monoids::by_name("d5").size() == 10);
  CHECK(monoids::by_name("z4").size() == 4);
  CHECK_THROWS_AS(monoids::by_name("nope"), error);
}

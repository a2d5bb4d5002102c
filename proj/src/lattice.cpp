#include "eqmon/lattice.hpp"

#include <algorithm>
#include <functional>

namespace eqmon {

FiniteLattice FiniteLattice::from_order(size_t size, std::vector<bool> leq,
                                        std::vector<std::string> names) {
  if (size == 0) throw error("lattice must be nonempty");
  if (leq.size() != size * size) throw error("order relation must be size x size");
  FiniteLattice l;
  l.size_ = size;
  l.leq_ = std::move(leq);
  // partial order sanity
  for (size_t a = 0; a < size; ++a) {
    if (!l.leq(a, a)) throw error("order not reflexive");
    for (size_t b = 0; b < size; ++b) {
      if (a != b && l.leq(a, b) && l.leq(b, a)) throw error("order not antisymmetric");
      for (size_t c = 0; c < size; ++c) {
        if (l.leq(a, b) && l.leq(b, c) && !l.leq(a, c)) throw error("order not transitive");
      }
    }
  }
  l.meet_.assign(size * size, 0);
  l.join_.assign(size * size, 0);
  for (size_t a = 0; a < size; ++a) {
    for (size_t b = 0; b < size; ++b) {
      std::optional<size_t> meet, join;
      for (size_t c = 0; c < size; ++c) {
        if (l.leq(c, a) && l.leq(c, b)) {
          if (!meet || l.leq(*meet, c)) meet = c;
        }
        if (l.leq(a, c) && l.leq(b, c)) {
          if (!join || l.leq(c, *join)) join = c;
        }
      }
      if (!meet || !join) throw error("order is not a lattice");
      // greatest lower bound must dominate every lower bound
      for (size_t c = 0; c < size; ++c) {
        if (l.leq(c, a) && l.leq(c, b) && !l.leq(c, *meet)) throw error("no greatest lower bound");
        if (l.leq(a, c) && l.leq(b, c) && !l.leq(*join, c)) throw error("no least upper bound");
      }
      l.meet_[a * size + b] = *meet;
      l.join_[a * size + b] = *join;
    }
  }
  if (names.empty()) {
    for (size_t i = 0; i < size; ++i) names.push_back("e" + std::to_string(i));
  }
  if (names.size() != size) throw error("names must match size");
  l.names_ = std::move(names);
  if (auto bad = lattice_axiom_violation(l)) throw error("lattice axioms fail: " + *bad);
  return l;
}

std::optional<std::string> lattice_axiom_violation(const FiniteLattice& l) {
  size_t n = l.size();
  for (size_t a = 0; a < n; ++a) {
    if (l.meet(a, a) != a) return "meet not idempotent";
    if (l.join(a, a) != a) return "join not idempotent";
    for (size_t b = 0; b < n; ++b) {
      if (l.meet(a, b) != l.meet(b, a)) return "meet not commutative";
      if (l.join(a, b) != l.join(b, a)) return "join not commutative";
      if (l.meet(a, l.join(a, b)) != a) return "absorption fails";
      if (l.join(a, l.meet(a, b)) != a) return "absorption fails";
      for (size_t c = 0; c < n; ++c) {
        if (l.meet(l.meet(a, b), c) != l.meet(a, l.meet(b, c))) return "meet not associative";
        if (l.join(l.join(a, b), c) != l.join(a, l.join(b, c))) return "join not associative";
      }
    }
  }
  return std::nullopt;
}

namespace lattices {

namespace {

FiniteLattice from_covers(size_t size, const std::vector<std::pair<size_t, size_t>>& below,
                          std::vector<std::string> names) {
  // below: pairs (a, b) with a < b generating the order
  std::vector<bool> leq(size * size, false);
  for (size_t i = 0; i < size; ++i) leq[i * size + i] = true;
  for (auto [a, b] : below) leq[a * size + b] = true;
  // transitive closure
  for (size_t k = 0; k < size; ++k) {
    for (size_t a = 0; a < size; ++a) {
      for (size_t b = 0; b < size; ++b) {
        if (leq[a * size + k] && leq[k * size + b]) leq[a * size + b] = true;
      }
    }
  }
  return FiniteLattice::from_order(size, std::move(leq), std::move(names));
}

}  // namespace

FiniteLattice chain(size_t k) {
  if (k == 0) throw error("chain length must be positive");
  std::vector<std::pair<size_t, size_t>> below;
  for (size_t i = 0; i + 1 < k; ++i) below.emplace_back(i, i + 1);
  std::vector<std::string> names;
  for (size_t i = 0; i < k; ++i) names.push_back("c" + std::to_string(i));
  return from_covers(k, below, std::move(names));
}

FiniteLattice m3() {
  // 0 bottom, 1..3 atoms, 4 top
  return from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                     {"bot", "a", "b", "c", "top"});
}

FiniteLattice n5() {
  // 0 bottom, 4 top, chain 0 < 1 < 2 < 4, incomparable 3
  return from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, {"bot", "b", "c", "a", "top"});
}

FiniteLattice boolean(size_t k) {
  if (k > 3) throw error("boolean lattice supported for k <= 3");
  size_t size = size_t{1} << k;
  std::vector<bool> leq(size * size, false);
  for (size_t a = 0; a < size; ++a) {
    for (size_t b = 0; b < size; ++b) leq[a * size + b] = (a & b) == a;
  }
  std::vector<std::string> names;
  for (size_t a = 0; a < size; ++a) names.push_back("s" + std::to_string(a));
  return FiniteLattice::from_order(size, std::move(leq), std::move(names));
}

FiniteLattice by_name(const std::string& name) {
  if (name == "m3") return m3();
  if (name == "n5") return n5();
  if (name.rfind("chain", 0) == 0) return chain(std::stoul(name.substr(5)));
  if (name.rfind("boolean", 0) == 0) return boolean(std::stoul(name.substr(7)));
  throw error("unknown lattice name: " + name);
}

FiniteLattice eq_lattice(size_t n) {
  std::vector<Partition> ps = all_partitions(n);
  size_t size = ps.size();
  std::vector<bool> leq(size * size, false);
  for (size_t a = 0; a < size; ++a) {
    for (size_t b = 0; b < size; ++b) leq[a * size + b] = finer_or_equal(ps[a], ps[b]);
  }
  std::vector<std::string> names;
  for (const Partition& p : ps) names.push_back(p.str());
  return FiniteLattice::from_order(size, std::move(leq), std::move(names));
}

}  // namespace lattices

bool verify_embedding(const FiniteLattice& l, size_t n, const std::vector<size_t>& image) {
  FiniteLattice eq = lattices::eq_lattice(n);
  if (image.size() != l.size()) return false;
  for (size_t a = 0; a < l.size(); ++a) {
    for (size_t b = 0; b < l.size(); ++b) {
      if (a != b && image[a] == image[b]) return false;
      if (image[l.meet(a, b)] != eq.meet(image[a], image[b])) return false;
      if (image[l.join(a, b)] != eq.join(image[a], image[b])) return false;
    }
  }
  return true;
}

std::optional<std::vector<size_t>> embed_lattice(const FiniteLattice& l, size_t n) {
  if (l.size() > 8) throw error("embedding search supports lattices of at most 8 elements");
  if (n > 5) throw error("embedding search supports Eq(n) with n <= 5");
  FiniteLattice eq = lattices::eq_lattice(n);

  constexpr size_t kUnset = static_cast<size_t>(-1);
  std::vector<size_t> image(l.size(), kUnset);
  std::vector<bool> used(eq.size(), false);

  // elements are placed in index order, so indices <= a are the placed set
  auto consistent = [&](size_t a) {
    for (size_t b = 0; b <= a; ++b) {
      for (size_t c = 0; c <= a; ++c) {
        if (l.leq(b, c) != eq.leq(image[b], image[c])) return false;
        size_t m = l.meet(b, c);
        if (m <= a && eq.meet(image[b], image[c]) != image[m]) return false;
        size_t j = l.join(b, c);
        if (j <= a && eq.join(image[b], image[c]) != image[j]) return false;
      }
    }
    return true;
  };
  std::function<bool(size_t)> place = [&](size_t a) -> bool {
    if (a == l.size()) return true;
    for (size_t cand = 0; cand < eq.size(); ++cand) {
      if (used[cand]) continue;
      image[a] = cand;
      used[cand] = true;
      if (consistent(a) && place(a + 1)) return true;
      used[cand] = false;
      image[a] = kUnset;
    }
    return false;
  };

  if (!place(0)) return std::nullopt;
  if (!verify_embedding(l, n, image)) throw error("embedding search returned an invalid map");
  return image;
}

}  // namespace eqmon

#ifndef EQMON_LATTICE_HPP
#define EQMON_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqmon/partition.hpp"

namespace eqmon {

/// A finite lattice: order relation plus meet and join tables, validated
/// at construction (absorption, commutativity, associativity, and
/// compatibility with the order).
class FiniteLattice {
 public:
  static FiniteLattice from_order(size_t size, std::vector<bool> leq,
                                  std::vector<std::string> names = {});

  size_t size() const { return size_; }
  bool leq(size_t a, size_t b) const { return leq_[a * size_ + b]; }
  size_t meet(size_t a, size_t b) const { return meet_[a * size_ + b]; }
  size_t join(size_t a, size_t b) const { return join_[a * size_ + b]; }
  const std::string& name_of(size_t i) const { return names_[i]; }

 private:
  size_t size_ = 0;
  std::vector<bool> leq_;
  std::vector<size_t> meet_, join_;
  std::vector<std::string> names_;
};

/// Exhaustive lattice-axiom check on the tables; returns a diagnostic on
/// failure.
std::optional<std::string> lattice_axiom_violation(const FiniteLattice& l);

namespace lattices {

FiniteLattice chain(size_t k);
FiniteLattice m3();
FiniteLattice n5();
FiniteLattice boolean(size_t k);  // subsets of a k-set, k <= 3
FiniteLattice by_name(const std::string& name);

/// The lattice Eq(n) of equivalence relations on an n-set, ordered by
/// refinement; elements in all_partitions(n) order.
FiniteLattice eq_lattice(size_t n);

}  // namespace lattices

/// Injective map of l into Eq(n) preserving meet and join, found by
/// backtracking; the image indices refer to all_partitions(n) order.
std::optional<std::vector<size_t>> embed_lattice(const FiniteLattice& l, size_t n);

/// Re-verifies a claimed embedding pointwise.
bool verify_embedding(const FiniteLattice& l, size_t n, const std::vector<size_t>& image);

}  // namespace eqmon

#endif  // EQMON_LATTICE_HPP

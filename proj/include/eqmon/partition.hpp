#ifndef EQMON_PARTITION_HPP
#define EQMON_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "eqmon/rewrite.hpp"
#include "eqmon/word.hpp"

namespace eqmon {

/// An equivalence relation on {0..n-1} in canonical form: block ids appear
/// in first-occurrence order (a restricted growth string).
struct Partition {
  std::vector<uint32_t> block_of;

  size_t ground_size() const { return block_of.size(); }
  size_t block_count() const;
  bool related(size_t i, size_t j) const { return block_of.at(i) == block_of.at(j); }

  /// Blocks as sorted index lists, in block-id order.
  std::vector<std::vector<size_t>> blocks() const;

  static Partition canonicalize(const std::vector<uint32_t>& labels);
  static Partition equality(size_t n);
  static Partition universal(size_t n);

  std::string str() const;  // e.g. "{0 1 | 2}"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All Bell(n) partitions of an n-set, canonical and deduplicated, in
/// lexicographic restricted-growth-string order.  n <= 12.
std::vector<Partition> all_partitions(size_t n);

/// Bell numbers via the Bell triangle.
uint64_t bell_number(size_t n);

/// Common refinement: related iff related in both.
Partition meet(const Partition& a, const Partition& b);
/// Transitive closure of the union.
Partition join(const Partition& a, const Partition& b);
/// a <= b in the refinement order (every a-block lies inside a b-block).
bool finer_or_equal(const Partition& a, const Partition& b);

/// One identity w_i = w_j per related pair i < j of the 2^n family words,
/// in the fixed sign-vector index order.  The symmetry flag is set.
IdentitySet id_set(const Partition& pi, size_t family_n);

/// Word-level proxies for the anti-isomorphism between Eq of the family
/// and the corresponding subvariety interval: per partition, the exhausted
/// deduction closure of each family word equals its partition class; the
/// class systems are pairwise distinct; and refinement of partitions
/// corresponds to refinement of class systems, contravariant to the
/// identity-set inclusions.
struct AntiIsoProxyReport {
  size_t n = 2;
  size_t partitions = 0;
  bool classes_match = true;     // closure(w, Id(pi)) == pi-class of w, exhausted
  bool systems_distinct = true;  // injectivity proxy
  bool order_reversal = true;    // pi <= rho iff classes(pi) refine classes(rho)
  std::string detail;            // first failure, if any

  bool passed() const { return classes_match && systems_distinct && order_reversal; }
};

AntiIsoProxyReport check_antiisomorphism_proxy(size_t family_n = 2, RewriteCache* cache = nullptr);

}  // namespace eqmon

#endif  // EQMON_PARTITION_HPP

#ifndef EQMON_MONOID_HPP
#define EQMON_MONOID_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqmon/word.hpp"

namespace eqmon {

/// Assignment of monoid elements to variables.
using Assignment = std::map<Variable, size_t>;

/// A finite monoid given by its multiplication table.  Associativity and
/// the identity element are validated at construction; a two-sided zero is
/// detected automatically.
class FiniteMonoid {
 public:
  /// table is row-major: table[i*size + j] = i*j.  Throws error on a
  /// non-associative table or when identity_elem is not two-sided.
  static FiniteMonoid build(size_t size, std::vector<size_t> table, size_t identity_elem,
                            std::vector<std::string> names = {});

  /// Skips the associativity sweep; for products associative by
  /// construction (identity and zero detection still run).
  static FiniteMonoid build_unchecked(size_t size, std::vector<size_t> table, size_t identity_elem,
                                      std::vector<std::string> names = {});

  size_t size() const { return size_; }
  size_t mul(size_t i, size_t j) const { return table_[i * size_ + j]; }
  size_t identity_elem() const { return identity_; }
  std::optional<size_t> zero_elem() const { return zero_; }
  const std::string& name_of(size_t i) const { return names_[i]; }
  std::optional<size_t> index_of_name(const std::string& name) const;

  /// Left-to-right product of w under asg; the empty word evaluates to the
  /// identity element.  Throws on a variable without an assigned value.
  size_t evaluate(const Word& w, const Assignment& asg) const;

  std::string cayley_table_str() const;

 private:
  size_t size_ = 0;
  std::vector<size_t> table_;
  size_t identity_ = 0;
  std::optional<size_t> zero_;
  std::vector<std::string> names_;
};

/// Result of an exhaustive identity check: satisfied, or a witness
/// assignment together with the two evaluated elements.
struct SatisfiesResult {
  bool satisfied = true;
  Assignment witness;
  size_t lhs_value = 0;
  size_t rhs_value = 0;
};

/// Checks id over all |M|^k assignments, k the number of variables of the
/// identity.  Throws when k exceeds max_vars.
SatisfiesResult satisfies(const FiniteMonoid& m, const Identity& id, size_t max_vars = 8);

/// Minimal pair (index m, period k), m,k >= 1, with x^{m+k} = x^m for all
/// elements; lexicographic on m then k.
std::pair<size_t, size_t> index_and_period(const FiniteMonoid& m);

/// Bounded isoterm check: scans all words over content(w) of length <= max_len.
struct IsotermUpTo {
  size_t bound;
};
struct IsotermCounterexample {
  Word word;
};
using IsotermVerdict = std::variant<IsotermUpTo, IsotermCounterexample>;

/// Returns the first w' != w with satisfies(m, w = w'), else IsotermUpTo.
/// max_len defaults to |w| + 2.
IsotermVerdict bounded_isoterm(const FiniteMonoid& m, const Word& w, std::optional<size_t> max_len = {},
                               size_t max_vars = 8);

// -- built-in monoids --------------------------------------------------------

namespace monoids {

FiniteMonoid trivial();
/// Brandt monoid: <a,b | aba=a, bab=b, aa=bb=0> with adjoined 1.
FiniteMonoid b21();
/// <a,b | aba=a, bab=b, aa=0, bb=b> with adjoined 1.
FiniteMonoid a21();
/// Dihedral group of order 2p, p prime: <a,b | a^p=b^2=(ab)^2=1>.
FiniteMonoid dihedral(size_t p);
/// Quaternion group of order 8.
FiniteMonoid quaternion();
/// Cyclic group of order k.
FiniteMonoid cyclic(size_t k);
FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n);

/// Builds a monoid from a generator/relation presentation by closing the
/// set of reduced words under products.  Relations are rewriting rules
/// applied left to right until a fixed point; the token "0" in a rule
/// right-hand side denotes an absorbing zero.  expected_size caps the
/// closure at 10x.
FiniteMonoid from_presentation(const std::vector<std::string>& generators,
                               const std::vector<std::pair<std::string, std::string>>& rules,
                               size_t expected_size);

/// Lookup by name: trivial, b21, a21, d3, d5, ..., q8, z2, z3, ...
FiniteMonoid by_name(const std::string& name);

}  // namespace monoids

/// JSON serialization: {"names": [...], "table": [[...], ...], "identity": i}.
std::string to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const std::string& text);

}  // namespace eqmon

#endif  // EQMON_MONOID_HPP

#ifndef EQMON_FACTOR_MONOID_HPP
#define EQMON_FACTOR_MONOID_HPP

#include <optional>
#include <unordered_set>
#include <vector>

#include "eqmon/monoid.hpp"
#include "eqmon/rewrite.hpp"
#include "eqmon/word.hpp"

namespace eqmon {

/// Substitution into a factor monoid: images are factors of the word set,
/// or the zero element (nullopt).
struct FactorWitness {
  std::map<Variable, std::optional<Word>> images;
  std::string note;

  std::string str() const;
};

struct DecideResult {
  bool satisfied = true;
  std::optional<FactorWitness> witness;
};

/// The monoid of all factors of a finite word set plus a zero; the product
/// of two factors is their concatenation when that is again a factor, and
/// zero otherwise.  The empty word is the identity.
class FactorMonoid {
 public:
  explicit FactorMonoid(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }

  /// Number of elements: distinct factors (including the empty word) plus
  /// the zero.
  size_t element_count() const { return factors_.size() + 1; }

  bool is_factor(const Word& w) const { return factors_.count(w) != 0; }

  /// Element value of a word: the word itself if it is a factor, else the
  /// zero (nullopt).
  std::optional<Word> value_of(const Word& w) const;

  /// Exact decision of an identity over this monoid.
  ///
  /// A violating substitution with all images nonzero maps the variables of
  /// one side onto a factor of a member word, so it appears in the factor
  /// matches of that side; the matched side then forces the other side to
  /// the letter-identical word.  Zero images violate only when the contents
  /// of the two sides differ, which is handled symbolically.
  DecideResult decide_identity(const Identity& id) const;

  /// Scans all words over content(w) of length <= max_len for a satisfied
  /// nontrivial identity w = w'.  max_len defaults to |w| + 2.
  IsotermVerdict bounded_isoterm(const Word& w, std::optional<size_t> max_len = {}) const;

  /// Multiplication-table form; throws when element_count() exceeds the cap.
  /// The product rule is associative by construction, so the table is
  /// validated only for small sizes.
  FiniteMonoid materialize(size_t max_elements = 2000) const;

  /// Factors in table order: empty word first, then by length and name.
  std::vector<Word> sorted_factors() const;

 private:
  std::vector<Word> words_;
  std::unordered_set<Word> factors_;
  std::shared_ptr<RewriteCache> cache_;  // memo for repeated decisions
};

}  // namespace eqmon

#endif  // EQMON_FACTOR_MONOID_HPP

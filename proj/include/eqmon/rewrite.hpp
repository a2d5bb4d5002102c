#ifndef EQMON_REWRITE_HPP
#define EQMON_REWRITE_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "eqmon/matcher.hpp"
#include "eqmon/word.hpp"

namespace eqmon {

/// A finite set of identities used as rewriting axioms.
struct IdentitySet {
  std::vector<Identity> identities;
  bool closed_under_symmetry = false;

  /// Adds the swapped identity for every member and sets the flag.
  IdentitySet symmetric_closure() const;

  /// One identity per nonempty line, "<word> = <word>".
  static IdentitySet parse_lines(const std::string& text);
};

/// One application of an identity s = t inside a word:
/// from == prefix . subst(s) . suffix  and  to == prefix . subst(t) . suffix.
struct DeductionStep {
  Word from;
  Word to;
  Identity identity_used;
  bool reversed = false;  // t = s direction was applied
  size_t begin = 0;       // span of subst(s) within `from`
  size_t end = 0;
  Substitution subst;

  /// Reassembles `to` from the stored match; equals `to` for a sound step.
  Word replay() const;
};

/// Resource limits for rewrite enumeration and closure.
struct RewriteLimits {
  size_t max_word_len = 4096;
  size_t max_results = 1u << 20;
  uint64_t max_nodes = 200'000'000;  // DFS node budget per enumeration
  /// Stop as soon as some outcome differs from the target (counterexample
  /// search).  A stopped enumeration reports complete = false and is not
  /// cached.
  bool stop_on_nontrivial = false;
};

/// A distinct one-step rewrite outcome of a fixed word under a fixed
/// directed identity, with a summary of how it arose.
struct RewriteOutcome {
  Word result;
  size_t begin = 0;  // span of the first witnessing match
  size_t end = 0;
  Substitution subst;        // first witnessing substitution
  bool all_whole_word = true;      // every witnessing match covered the whole word
  bool all_identity_subst = true;  // every witnessing match fixed all variables
  bool any_whole_word = false;     // some witnessing match covered the whole word
  size_t witness_count = 0;        // matches seen for this result
};

struct RewriteEnumeration {
  std::vector<RewriteOutcome> outcomes;
  bool complete = true;  // false when a limit stopped the search
};

/// Shared memo for rewrite enumerations keyed by (target, lhs, rhs).
class RewriteCache {
 public:
  std::shared_ptr<const RewriteEnumeration> find(const Word& target, const Identity& directed);
  void store(const Word& target, const Identity& directed,
             std::shared_ptr<const RewriteEnumeration> value);

 private:
  struct Key {
    Word target, lhs, rhs;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const noexcept;
  };
  std::mutex mutex_;
  std::unordered_map<Key, std::shared_ptr<const RewriteEnumeration>, KeyHash> map_;
};

/// All distinct words prefix . subst(rhs) . suffix over the matches
/// target == prefix . subst(lhs) . suffix.  Requires
/// content(rhs) included in content(lhs).
///
/// The search walks the side with the later of the two possible
/// binding fronts reversed, so that repeated variables are checked close
/// to where they bind; repeated variables are capped by the longest
/// repeated factor of the target, runs of simple variables that recur
/// identically in every rhs consume their span as one gap, and adjacent
/// gaps separated only by empty images collapse to one canonical split.
RewriteEnumeration enumerate_rewrites(const Word& target, const Identity& directed,
                                      const RewriteLimits& limits = {},
                                      RewriteCache* cache = nullptr);

/// Shares one match search over several right-hand sides of the same lhs.
std::vector<RewriteEnumeration> enumerate_rewrites_multi(const Word& target, const Word& lhs,
                                                         const std::vector<Word>& rhs_list,
                                                         const RewriteLimits& limits = {},
                                                         RewriteCache* cache = nullptr);

/// All one-step deductions from w with |to| <= limits.max_word_len, both
/// directions of every identity, trivial steps omitted, duplicates merged
/// by result.  Deterministic order.
std::vector<DeductionStep> direct_deductions(const Word& w, const IdentitySet& sigma,
                                             const RewriteLimits& limits = {},
                                             RewriteCache* cache = nullptr);

struct ClosureCaps {
  size_t max_depth = 16;
  size_t max_states = 100'000;
  size_t max_word_len = 4096;
};

struct ClosureResult {
  std::vector<Word> words;  // sorted; always contains the start word
  bool exhausted = true;    // true iff no frontier remained within the caps
  std::string stop_reason;  // set when exhausted is false
};

ClosureResult closure(const Word& start, const IdentitySet& sigma, const ClosureCaps& caps = {},
                      RewriteCache* cache = nullptr);

struct DerivationResult {
  bool found = false;
  bool exhausted = false;            // search space fully explored (proof of absence)
  std::vector<Word> path;            // start .. goal when found
  std::vector<DeductionStep> steps;  // path.size() - 1 steps when found
};

DerivationResult derivable(const Word& from, const Word& to, const IdentitySet& sigma,
                           const ClosureCaps& caps = {}, RewriteCache* cache = nullptr);

}  // namespace eqmon

#endif  // EQMON_REWRITE_HPP

#ifndef EQMON_MATCHER_HPP
#define EQMON_MATCHER_HPP

#include <functional>
#include <vector>

#include "eqmon/word.hpp"

namespace eqmon {

/// One way of matching a pattern onto a factor of a target:
/// prefix . subst(pattern) . suffix == target, letter for letter.
struct Match {
  Substitution subst;
  Word prefix;
  Word suffix;
  size_t begin = 0;  // target span covered by subst(pattern)
  size_t end = 0;
};

struct MatchOptions {
  /// Minimal image length per variable (0 allows empty images, the monoid
  /// default; 1 gives semigroup-style matching).
  size_t min_image_len = 0;
};

/// Receives matches as they are found; return false to stop the search.
using MatchSink = std::function<bool(const Match&)>;

/// All substitutions phi with domain content(pattern) and
/// phi(pattern) == target.  Exhaustive and duplicate-free; depth-first
/// order, image lengths ascending.
void match_whole(const Word& pattern, const Word& target, const MatchSink& sink,
                 const MatchOptions& options = {});
std::vector<Match> match_whole(const Word& pattern, const Word& target,
                               const MatchOptions& options = {});

/// All decompositions target == prefix . phi(pattern) . suffix, including
/// empty phi(pattern) at every split point.
void match_factor(const Word& pattern, const Word& target, const MatchSink& sink,
                  const MatchOptions& options = {});
std::vector<Match> match_factor(const Word& pattern, const Word& target,
                                const MatchOptions& options = {});

/// Length of the longest factor occurring at least twice in w (0 when all
/// letters are distinct).  Any pattern variable occurring >= 2 times must
/// take an image no longer than this when matched into w.
size_t longest_repeated_factor(const Word& w);

/// True iff some substitution phi has phi(pattern) == target.
bool matches_whole(const Word& pattern, const Word& target, const MatchOptions& options = {});

}  // namespace eqmon

#endif  // EQMON_MATCHER_HPP

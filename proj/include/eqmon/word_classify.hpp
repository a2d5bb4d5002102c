#ifndef EQMON_WORD_CLASSIFY_HPP
#define EQMON_WORD_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "eqmon/word.hpp"

namespace eqmon {

/// A maximal factor of a word delimited by letters simple in the word.
struct Block {
  Word word;
  size_t begin;  // position of the first letter
  size_t end;    // one past the last letter
};

/// Maximal factors containing no simple variables, in position order;
/// empty blocks are omitted.  Interleaving the blocks with the simple
/// letters of w reproduces w.
std::vector<Block> blocks(const Word& w);

/// True iff every block of w is a linear word.
bool is_block_linear(const Word& w);

/// A maximal factor consisting of second occurrences of variables whose
/// first occurrences share a block.
struct Island {
  Word word;
  size_t begin;
  size_t end;
};

/// Islands of w, in position order.  Defined only for words in which every
/// multiple variable occurs exactly twice; throws otherwise.
std::vector<Island> islands(const Word& w);

/// Combinatorial classification of an identity.
///
/// Write both sides as u0 t1 u1 ... tm um with t1..tm the simple letters.
/// The identity is linear-balanced when the simple-letter sequences agree
/// and corresponding blocks are linear with equal content.  It is reduced
/// when, in addition, every block pair factors as (a c, b c): a and b made
/// of first occurrences, c a shared suffix of second occurrences.
struct IdentityClass {
  bool trivial = false;
  bool linear_balanced = false;
  bool reduced = false;
};

IdentityClass classify_identity(const Identity& id);

inline bool is_reduced(const Identity& id) { return classify_identity(id).reduced; }

/// Least number of steps transforming lhs into rhs, where a step swaps two
/// adjacent letters whose variables both occur elsewhere in the word.
/// nullopt when no chain exists.  Exact breadth-first search; throws when
/// the visited set exceeds max_states.
std::optional<size_t> invertibility_degree(const Identity& id, size_t max_states = 2'000'000);

/// The words reachable from w by one such swap.
std::vector<Word> invertible_neighbours(const Word& w);

}  // namespace eqmon

#endif  // EQMON_WORD_CLASSIFY_HPP

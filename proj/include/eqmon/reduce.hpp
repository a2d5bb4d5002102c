#ifndef EQMON_REDUCE_HPP
#define EQMON_REDUCE_HPP

#include <vector>

#include "eqmon/word.hpp"

namespace eqmon {

struct reduce_error : error {
  using error::error;
};

/// One certificate step of a reduction.  block_sort swaps an adjacent
/// (second occurrence, first occurrence) pair inside a block; island_swap
/// swaps two adjacent second occurrences lying in one island;
/// square_pullout deletes the variables that occur more than twice or
/// whose occurrences share a block, recording the identity that prefixes
/// their squares.
enum class CertKind { block_sort, island_swap, square_pullout };

struct CertStep {
  CertKind kind;
  int side;  // 0: left chain, 1: right chain
  Word before;
  Word after;
  Identity rule;     // instance identity justifying the step
  size_t begin = 0;  // for swaps: position of the left swapped letter
};

struct Reduction {
  Identity input;
  Identity output;
  std::vector<CertStep> steps;
};

/// Normalizes an identity to a reduced one, recording the certificate.
/// The caller is responsible for the input holding in the reference
/// factor monoid; inputs whose sides classify differently or whose island
/// structures cannot be aligned are rejected with reduce_error.
Reduction reduce_identity(const Identity& id);

/// Replays every step (chain continuity, swap shape, pullout shape) and
/// checks the chains end at the output identity.
bool replay_reduction(const Reduction& r, std::string* why = nullptr);

std::string cert_kind_name(CertKind k);

}  // namespace eqmon

#endif  // EQMON_REDUCE_HPP

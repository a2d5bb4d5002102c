#include "eqmon/word_classify.hpp"

#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace eqmon {

namespace {

std::vector<size_t> occurrence_counts(const Word& w) {
  // occ per position: 1-based index of this occurrence of its variable
  std::map<Variable, size_t> seen;
  std::vector<size_t> idx(w.size());
  for (size_t i = 0; i < w.size(); ++i) idx[i] = ++seen[w[i]];
  return idx;
}

}  // namespace

std::vector<Block> blocks(const Word& w) {
  std::set<Variable> sim = simple_vars(w);
  std::vector<Block> out;
  size_t start = 0;
  for (size_t i = 0; i <= w.size(); ++i) {
    bool boundary = (i == w.size()) || sim.count(w[i]);
    if (boundary) {
      if (i > start) out.push_back(Block{w.subword(start, i), start, i});
      start = i + 1;
    }
  }
  return out;
}

bool is_block_linear(const Word& w) {
  for (const Block& b : blocks(w)) {
    if (!is_linear(b.word)) return false;
  }
  return true;
}

std::vector<Island> islands(const Word& w) {
  for (Variable v : multiple_vars(w)) {
    if (occ(w, v) != 2) {
      throw error("islands: variable " + v.name() + " occurs more than twice");
    }
  }
  // block id of the first occurrence of each multiple variable
  std::vector<Block> bs = blocks(w);
  auto block_of = [&](size_t pos) -> long {
    for (size_t k = 0; k < bs.size(); ++k) {
      if (pos >= bs[k].begin && pos < bs[k].end) return static_cast<long>(k);
    }
    return -1;  // a simple letter
  };
  std::map<Variable, long> first_block;
  for (Variable v : multiple_vars(w)) {
    first_block[v] = block_of(occurrence_position(w, v, 1));
  }

  std::vector<size_t> idx = occurrence_counts(w);
  std::vector<Island> out;
  size_t i = 0;
  while (i < w.size()) {
    if (idx[i] != 2) {
      ++i;
      continue;
    }
    long group = first_block.at(w[i]);
    size_t j = i + 1;
    while (j < w.size() && idx[j] == 2 && first_block.at(w[j]) == group) ++j;
    out.push_back(Island{w.subword(i, j), i, j});
    i = j;
  }
  return out;
}

namespace {

// Simple-letter skeleton: the sequence of letters simple in w.
std::vector<Variable> simple_sequence(const Word& w) {
  std::set<Variable> sim = simple_vars(w);
  std::vector<Variable> out;
  for (Variable v : w) {
    if (sim.count(v)) out.push_back(v);
  }
  return out;
}

// Block slots between and around the simple letters, empty slots included.
std::vector<Word> block_slots(const Word& w) {
  std::set<Variable> sim = simple_vars(w);
  std::vector<Word> out;
  Word cur;
  for (Variable v : w) {
    if (sim.count(v)) {
      out.push_back(cur);
      cur = Word();
    } else {
      cur.append(v);
    }
  }
  out.push_back(cur);
  return out;
}

// Splits a linear block into (first-occurrence prefix, second-occurrence
// suffix) by whole-word occurrence indices; nullopt when the block mixes
// them non-monotonically or contains an occurrence index > 2.
std::optional<size_t> first_second_boundary(const Word& whole, const Word& block, size_t begin,
                                            const std::vector<size_t>& idx) {
  size_t boundary = block.size();
  for (size_t i = 0; i < block.size(); ++i) {
    size_t k = idx[begin + i];
    if (k > 2) return std::nullopt;
    if (k == 2) {
      boundary = i;
      break;
    }
  }
  for (size_t i = boundary; i < block.size(); ++i) {
    if (idx[begin + i] != 2) return std::nullopt;
  }
  (void)whole;
  return boundary;
}

}  // namespace

IdentityClass classify_identity(const Identity& id) {
  IdentityClass out;
  out.trivial = id.trivial();

  if (simple_sequence(id.lhs) != simple_sequence(id.rhs)) return out;
  std::vector<Word> lslots = block_slots(id.lhs);
  std::vector<Word> rslots = block_slots(id.rhs);
  if (lslots.size() != rslots.size()) return out;

  bool balanced = true;
  for (size_t k = 0; k < lslots.size() && balanced; ++k) {
    const Word& a = lslots[k];
    const Word& b = rslots[k];
    if (content(a) != content(b)) balanced = false;
    if (!a.empty() && !is_linear(a)) balanced = false;
    if (!b.empty() && !is_linear(b)) balanced = false;
  }
  if (!balanced) return out;
  out.linear_balanced = true;

  // reduced: every block pair is (a c, b c) with a/b first occurrences and
  // c a shared all-second-occurrence suffix
  std::vector<size_t> lidx = occurrence_counts(id.lhs);
  std::vector<size_t> ridx = occurrence_counts(id.rhs);
  std::set<Variable> lsim = simple_vars(id.lhs);
  std::set<Variable> rsim = simple_vars(id.rhs);

  size_t lpos = 0, rpos = 0;
  bool reduced = true;
  for (size_t k = 0; k < lslots.size() && reduced; ++k) {
    const Word& a = lslots[k];
    const Word& b = rslots[k];
    auto la = first_second_boundary(id.lhs, a, lpos, lidx);
    auto rb = first_second_boundary(id.rhs, b, rpos, ridx);
    if (!la || !rb) {
      reduced = false;
    } else {
      Word lsuffix = a.subword(*la, a.size());
      Word rsuffix = b.subword(*rb, b.size());
      if (lsuffix != rsuffix) reduced = false;
    }
    lpos += a.size() + 1;  // skip the simple letter after the slot
    rpos += b.size() + 1;
  }
  out.reduced = reduced;
  return out;
}

std::vector<Word> invertible_neighbours(const Word& w) {
  std::vector<Word> out;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    Variable x = w[i];
    Variable y = w[i + 1];
    if (x == y) continue;
    // both variables must occur outside the swapped pair
    if (occ(w, x) < 2 || occ(w, y) < 2) continue;
    std::vector<Variable> letters = w.letters();
    std::swap(letters[i], letters[i + 1]);
    out.emplace_back(std::move(letters));
  }
  return out;
}

std::optional<size_t> invertibility_degree(const Identity& id, size_t max_states) {
  if (id.trivial()) return 0;
  // swaps preserve the letter multiset
  std::map<Variable, size_t> ml, mr;
  for (Variable v : id.lhs) ++ml[v];
  for (Variable v : id.rhs) ++mr[v];
  if (ml != mr) return std::nullopt;

  std::unordered_set<Word> visited{id.lhs};
  std::deque<std::pair<Word, size_t>> queue{{id.lhs, 0}};
  while (!queue.empty()) {
    auto [word, depth] = std::move(queue.front());
    queue.pop_front();
    for (Word& next : invertible_neighbours(word)) {
      if (visited.count(next)) continue;
      if (next == id.rhs) return depth + 1;
      if (visited.size() >= max_states) {
        throw error("invertibility_degree: state cap exceeded");
      }
      visited.insert(next);
      queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return std::nullopt;
}

}  // namespace eqmon

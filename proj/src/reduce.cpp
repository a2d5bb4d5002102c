#include "eqmon/reduce.hpp"

#include <algorithm>
#include <map>

#include "eqmon/word_classify.hpp"

namespace eqmon {

namespace {

std::vector<size_t> occurrence_index_per_position(const Word& w) {
  std::map<Variable, size_t> seen;
  std::vector<size_t> idx(w.size());
  for (size_t i = 0; i < w.size(); ++i) idx[i] = ++seen[w[i]];
  return idx;
}

std::vector<Variable> simple_sequence(const Word& w) {
  std::set<Variable> sim = simple_vars(w);
  std::vector<Variable> out;
  for (Variable v : w) {
    if (sim.count(v)) out.push_back(v);
  }
  return out;
}

// Multiple variables that occur more than twice or whose first two
// occurrences share a block.
std::set<Variable> heavy_vars(const Word& w) {
  std::set<Variable> out;
  std::set<Variable> sim = simple_vars(w);
  for (Variable x : multiple_vars(w)) {
    if (occ(w, x) > 2) {
      out.insert(x);
      continue;
    }
    size_t p1 = occurrence_position(w, x, 1);
    size_t p2 = occurrence_position(w, x, 2);
    bool simple_between = false;
    for (size_t p = p1 + 1; p < p2; ++p) {
      if (sim.count(w[p])) simple_between = true;
    }
    if (!simple_between) out.insert(x);
  }
  return out;
}

Word swap_positions(const Word& w, size_t p) {
  std::vector<Variable> letters = w.letters();
  std::swap(letters[p], letters[p + 1]);
  return Word(std::move(letters));
}

// Sorts every block into first occurrences followed by second occurrences
// by swapping adjacent (second, first) pairs; appends one step per swap.
Word sort_blocks(Word w, int side, std::vector<CertStep>& steps) {
  while (true) {
    std::vector<size_t> idx = occurrence_index_per_position(w);
    std::set<Variable> sim = simple_vars(w);
    size_t swap_at = static_cast<size_t>(-1);
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      if (sim.count(w[p]) || sim.count(w[p + 1])) continue;  // block boundary
      if (idx[p] == 2 && idx[p + 1] == 1) {
        swap_at = p;
        break;
      }
    }
    if (swap_at == static_cast<size_t>(-1)) return w;
    Word next = swap_positions(w, swap_at);
    steps.push_back(CertStep{CertKind::block_sort, side, w, next, Identity{w, next}, swap_at});
    w = std::move(next);
  }
}

struct IslandStructure {
  std::vector<Island> list;
  // content of each island, in position order
  std::vector<std::set<Variable>> contents;
};

IslandStructure island_structure(const Word& w) {
  IslandStructure out;
  out.list = islands(w);
  for (const Island& isl : out.list) out.contents.push_back(content(isl.word));
  return out;
}

}  // namespace

Reduction reduce_identity(const Identity& id) {
  Reduction red;
  red.input = id;
  if (id.trivial()) {
    red.output = id;
    return red;
  }

  if (simple_sequence(id.lhs) != simple_sequence(id.rhs)) {
    throw reduce_error("sides have different simple-letter skeletons");
  }

  std::set<Variable> heavy_l = heavy_vars(id.lhs);
  std::set<Variable> heavy_r = heavy_vars(id.rhs);
  if (heavy_l != heavy_r) {
    throw reduce_error("sides classify multiple variables differently");
  }

  Word sides[2] = {id.lhs, id.rhs};
  if (!heavy_l.empty()) {
    for (int side = 0; side < 2; ++side) {
      Word before = sides[side];
      Word after = remove(before, heavy_l);
      // order the squares by first occurrence in this side
      Word squares;
      std::set<Variable> emitted;
      for (Variable v : before) {
        if (heavy_l.count(v) && emitted.insert(v).second) {
          squares.append(v);
          squares.append(v);
        }
      }
      Identity rule{before, squares + after};
      red.steps.push_back(CertStep{CertKind::square_pullout, side, before, after, rule, 0});
      sides[side] = after;
    }
  }

  for (int side = 0; side < 2; ++side) {
    sides[side] = sort_blocks(sides[side], side, red.steps);
  }

  // align the left side's islands with the right side's letter order
  IslandStructure left = island_structure(sides[0]);
  IslandStructure right = island_structure(sides[1]);
  if (left.contents.size() != right.contents.size()) {
    throw reduce_error("sides have different island counts");
  }
  for (size_t k = 0; k < left.contents.size(); ++k) {
    if (left.contents[k] != right.contents[k]) {
      throw reduce_error("island " + std::to_string(k) + " contents differ: " +
                         left.list[k].word.str() + " vs " + right.list[k].word.str());
    }
  }

  for (size_t k = 0; k < left.contents.size(); ++k) {
    // bubble the island letters of the left side into the right side's order
    const Word& goal = right.list[k].word;
    for (size_t rel = 0; rel < goal.size(); ++rel) {
      // recompute positions against the current left word
      IslandStructure cur = island_structure(sides[0]);
      const Island& isl = cur.list[k];
      Variable want = goal[rel];
      size_t at = rel;
      while (at < isl.word.size() && isl.word[at] != want) ++at;
      if (at >= isl.word.size()) throw reduce_error("island alignment lost a letter");
      for (size_t p = at; p > rel; --p) {
        size_t abs = isl.begin + p - 1;
        Word before = sides[0];
        Word next = swap_positions(before, abs);
        red.steps.push_back(
            CertStep{CertKind::island_swap, 0, before, next, Identity{before, next}, abs});
        sides[0] = std::move(next);
      }
    }
  }

  red.output = Identity{sides[0], sides[1]};
  if (!is_reduced(red.output) && !red.output.trivial()) {
    throw reduce_error("normalization did not reach a reduced identity");
  }
  return red;
}

namespace {

bool check_swap_step(const CertStep& s, std::string* why) {
  if (s.begin + 1 >= s.before.size()) {
    if (why) *why = "swap position out of range";
    return false;
  }
  if (swap_positions(s.before, s.begin) != s.after) {
    if (why) *why = "after word is not the recorded adjacent swap";
    return false;
  }
  std::vector<size_t> idx = occurrence_index_per_position(s.before);
  Variable x = s.before[s.begin];
  Variable y = s.before[s.begin + 1];
  if (occ(s.before, x) != 2 || occ(s.before, y) != 2) {
    if (why) *why = "swapped letters must belong to twice-occurring variables";
    return false;
  }
  if (s.kind == CertKind::block_sort) {
    if (idx[s.begin] != 2 || idx[s.begin + 1] != 1) {
      if (why) *why = "block_sort must swap a (second, first) pair";
      return false;
    }
  } else {
    if (idx[s.begin] != 2 || idx[s.begin + 1] != 2) {
      if (why) *why = "island_swap must swap two second occurrences";
      return false;
    }
    std::vector<Island> isls = islands(s.before);
    bool same_island = false;
    for (const Island& isl : isls) {
      if (s.begin >= isl.begin && s.begin + 1 < isl.end) same_island = true;
    }
    if (!same_island) {
      if (why) *why = "island_swap letters are not in one island";
      return false;
    }
  }
  if (s.rule.lhs != s.before || s.rule.rhs != s.after) {
    if (why) *why = "rule does not match the step words";
    return false;
  }
  return true;
}

bool check_pullout_step(const CertStep& s, std::string* why) {
  std::set<Variable> dropped;
  for (Variable v : content(s.before)) {
    if (!content(s.after).count(v)) dropped.insert(v);
  }
  if (remove(s.before, dropped) != s.after) {
    if (why) *why = "pullout after-word is not the before-word minus the dropped variables";
    return false;
  }
  if (dropped != heavy_vars(s.before)) {
    if (why) *why = "pullout dropped set differs from the heavy variables";
    return false;
  }
  if (s.rule.lhs != s.before) {
    if (why) *why = "pullout rule must start at the before word";
    return false;
  }
  // rule rhs = squares prefix + after
  const Word& rr = s.rule.rhs;
  size_t sq = 2 * dropped.size();
  if (rr.size() != sq + s.after.size() || rr.subword(sq, rr.size()) != s.after) {
    if (why) *why = "pullout rule right side must be squares followed by the after word";
    return false;
  }
  for (size_t i = 0; i < sq; i += 2) {
    if (!(rr[i] == rr[i + 1]) || !dropped.count(rr[i])) {
      if (why) *why = "pullout rule prefix must square the dropped variables";
      return false;
    }
  }
  return true;
}

}  // namespace

bool replay_reduction(const Reduction& r, std::string* why) {
  Word cur[2] = {r.input.lhs, r.input.rhs};
  for (const CertStep& s : r.steps) {
    if (s.side != 0 && s.side != 1) {
      if (why) *why = "bad side";
      return false;
    }
    if (cur[s.side] != s.before) {
      if (why) *why = "chain breaks: step before-word does not match";
      return false;
    }
    bool ok = s.kind == CertKind::square_pullout ? check_pullout_step(s, why)
                                                 : check_swap_step(s, why);
    if (!ok) return false;
    cur[s.side] = s.after;
  }
  if (cur[0] != r.output.lhs || cur[1] != r.output.rhs) {
    if (why) *why = "chains do not end at the output identity";
    return false;
  }
  return true;
}

std::string cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::block_sort:
      return "block_sort";
    case CertKind::island_swap:
      return "island_swap";
    case CertKind::square_pullout:
      return "square_pullout";
  }
  return "?";
}

}  // namespace eqmon

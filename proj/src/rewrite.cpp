#include "eqmon/rewrite.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eqmon {

IdentitySet IdentitySet::symmetric_closure() const {
  IdentitySet out;
  std::set<Identity> seen;
  for (const Identity& id : identities) {
    if (seen.insert(id).second) out.identities.push_back(id);
    Identity rev = id.swapped();
    if (seen.insert(rev).second) out.identities.push_back(rev);
  }
  out.closed_under_symmetry = true;
  return out;
}

IdentitySet IdentitySet::parse_lines(const std::string& text) {
  IdentitySet out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.identities.push_back(Identity::parse(line));
  }
  return out;
}

Word DeductionStep::replay() const {
  const Word& used_rhs = reversed ? identity_used.lhs : identity_used.rhs;
  Word out = from.subword(0, begin);
  out.append(subst.apply(used_rhs));
  out.append(from.subword(end, from.size()));
  return out;
}

size_t RewriteCache::KeyHash::operator()(const Key& k) const noexcept {
  WordHash h;
  size_t a = h(k.target), b = h(k.lhs), c = h(k.rhs);
  return a ^ (b * 0x9e3779b97f4a7c15ull) ^ (c * 0xc2b2ae3d27d4eb4full);
}

std::shared_ptr<const RewriteEnumeration> RewriteCache::find(const Word& target,
                                                             const Identity& directed) {
  std::lock_guard lock(mutex_);
  auto it = map_.find(Key{target, directed.lhs, directed.rhs});
  return it == map_.end() ? nullptr : it->second;
}

void RewriteCache::store(const Word& target, const Identity& directed,
                         std::shared_ptr<const RewriteEnumeration> value) {
  std::lock_guard lock(mutex_);
  map_[Key{target, directed.lhs, directed.rhs}] = std::move(value);
}

namespace {

constexpr size_t kNone = static_cast<size_t>(-1);

// The lhs is cut into units: single letters carrying a repeated variable,
// and gaps.  A gap is a maximal run of variables simple in the lhs that
// recurs contiguously and in order in every rhs; it consumes its span as
// one piece, so the internal split is never enumerated.
struct Unit {
  bool is_gap = false;
  size_t slot = kNone;   // letter unit: variable slot
  size_t lhs_begin = 0;  // first lhs position of the unit
  size_t len = 1;        // letter: 1; gap: number of lhs letters
};

class RewriteSearch {
 public:
  RewriteSearch(const Word& target, const Word& lhs, const std::vector<Word>& rhs_list,
                const RewriteLimits& limits, bool reversed_orientation)
      : limits_(limits), reversed_(reversed_orientation) {
    target_stored_ = reversed_ ? target.reversed().letters() : target.letters();
    lhs_stored_ = reversed_ ? lhs.reversed().letters() : lhs.letters();
    for (const Word& rhs : rhs_list) {
      rhs_stored_.push_back(reversed_ ? rhs.reversed().letters() : rhs.letters());
    }
    forward_target_ = target.letters();
    build_slots();
    build_units();
    build_emit_plans();
    repeated_cap_ = longest_repeated_factor(target);
    build_letter_counts();
    unit_span_begin_.assign(units_.size(), 0);
    unit_span_len_.assign(units_.size(), 0);
    per_plan_.resize(rhs_stored_.size());
  }

  std::vector<RewriteEnumeration> run() {
    for (size_t start = 0; start <= target_stored_.size(); ++start) {
      start_ = start;
      if (!dfs(0, start)) break;
    }
    std::vector<RewriteEnumeration> out(per_plan_.size());
    for (size_t p = 0; p < per_plan_.size(); ++p) {
      out[p].complete = complete_;
      out[p].outcomes = std::move(per_plan_[p].outcomes);
      std::sort(out[p].outcomes.begin(), out[p].outcomes.end(),
                [](const RewriteOutcome& a, const RewriteOutcome& b) { return a.result < b.result; });
    }
    return out;
  }

 private:
  struct PerPlan {
    std::vector<size_t> ops;  // unit index per emitted piece
    std::unordered_map<Word, size_t, WordHash> index;
    std::vector<RewriteOutcome> outcomes;
  };

  void build_slots() {
    std::map<Variable, size_t> slot_of;
    for (Variable v : lhs_stored_) {
      auto [it, fresh] = slot_of.emplace(v, vars_.size());
      if (fresh) {
        vars_.push_back(v);
        occ_total_.push_back(0);
      }
      ++occ_total_[it->second];
    }
    slot_of_ = std::move(slot_of);
    bound_.assign(vars_.size(), kNone);
    image_len_.assign(vars_.size(), 0);
  }

  void build_units() {
    // per rhs: occurrence count and (last) position per slot
    size_t R = rhs_stored_.size();
    rhs_occ_.assign(R, std::vector<size_t>(vars_.size(), 0));
    rhs_pos_.assign(R, std::vector<size_t>(vars_.size(), kNone));
    for (size_t r = 0; r < R; ++r) {
      for (size_t p = 0; p < rhs_stored_[r].size(); ++p) {
        auto it = slot_of_.find(rhs_stored_[r][p]);
        if (it == slot_of_.end()) throw error("rewrite side introduces a new variable");
        ++rhs_occ_[r][it->second];
        rhs_pos_[r][it->second] = p;
      }
    }

    auto coalescible_next = [&](size_t prev_slot, size_t cur_slot) {
      for (size_t r = 0; r < rhs_stored_.size(); ++r) {
        if (rhs_occ_[r][cur_slot] != 1 || rhs_occ_[r][prev_slot] != 1) return false;
        if (rhs_pos_[r][cur_slot] != rhs_pos_[r][prev_slot] + 1) return false;
      }
      return true;
    };
    auto in_every_rhs_once = [&](size_t slot) {
      for (size_t r = 0; r < rhs_stored_.size(); ++r) {
        if (rhs_occ_[r][slot] != 1) return false;
      }
      return true;
    };

    size_t i = 0;
    while (i < lhs_stored_.size()) {
      size_t slot = slot_of_.at(lhs_stored_[i]);
      if (occ_total_[slot] >= 2) {
        units_.push_back(Unit{false, slot, i, 1});
        ++i;
        continue;
      }
      size_t run_end = i + 1;
      if (in_every_rhs_once(slot)) {
        while (run_end < lhs_stored_.size()) {
          size_t s_cur = slot_of_.at(lhs_stored_[run_end]);
          if (occ_total_[s_cur] != 1) break;
          if (!coalescible_next(slot_of_.at(lhs_stored_[run_end - 1]), s_cur)) break;
          ++run_end;
        }
      }
      units_.push_back(Unit{true, kNone, i, run_end - i});
      i = run_end;
    }

    first_letter_unit_of_slot_.assign(vars_.size(), kNone);
    gap_unit_of_slot_.assign(vars_.size(), kNone);
    for (size_t u = 0; u < units_.size(); ++u) {
      if (units_[u].is_gap) {
        for (size_t d = 0; d < units_[u].len; ++d) {
          gap_unit_of_slot_[slot_of_.at(lhs_stored_[units_[u].lhs_begin + d])] = u;
        }
      } else if (first_letter_unit_of_slot_[units_[u].slot] == kNone) {
        first_letter_unit_of_slot_[units_[u].slot] = u;
      }
    }
  }

  void build_emit_plans() {
    per_plan_.resize(rhs_stored_.size());
    plans_.resize(rhs_stored_.size());
    for (size_t r = 0; r < rhs_stored_.size(); ++r) {
      size_t p = 0;
      while (p < rhs_stored_[r].size()) {
        size_t slot = slot_of_.at(rhs_stored_[r][p]);
        if (occ_total_[slot] >= 2) {
          plans_[r].push_back(first_letter_unit_of_slot_[slot]);
          ++p;
          continue;
        }
        size_t u = gap_unit_of_slot_[slot];
        plans_[r].push_back(u);
        p += units_[u].len > 1 ? units_[u].len : 1;
      }
    }
    // op position and emission count of each gap unit per plan
    gap_op_.assign(rhs_stored_.size(), std::vector<size_t>(units_.size(), kNone));
    emit_count_.assign(rhs_stored_.size(), std::vector<size_t>(units_.size(), 0));
    for (size_t r = 0; r < rhs_stored_.size(); ++r) {
      for (size_t o = 0; o < plans_[r].size(); ++o) {
        size_t u = plans_[r][o];
        ++emit_count_[r][u];
        if (units_[u].is_gap) gap_op_[r][u] = o;
      }
    }
  }

  // A gap may hand its whole span to the next gap (or to the suffix) when
  // nothing emitted between them in any plan can be nonempty; then only
  // the canonical all-in-the-last split is explored.  Ops referencing
  // still-unbound letters block the collapse.
  bool plan_ops_empty_between(size_t op_lo, size_t op_hi, size_t r) const {
    for (size_t o = op_lo + 1; o < op_hi; ++o) {
      size_t unit_at = plans_[r][o];
      if (units_[unit_at].is_gap) return false;
      size_t slot = units_[unit_at].slot;
      if (bound_[slot] == kNone || image_len_[slot] != 0) return false;
    }
    return true;
  }

  // Both gaps must be emitted exactly once per plan: a span emitted twice
  // contributes at both places, so its length cannot be canonicalized.
  bool may_merge_into(size_t u, size_t w) const {
    for (size_t r = 0; r < plans_.size(); ++r) {
      if (emit_count_[r][u] != 1 || emit_count_[r][w] != 1) return false;
      size_t op_u = gap_op_[r][u];
      size_t op_w = gap_op_[r][w];
      if (op_u == kNone || op_w == kNone || op_u >= op_w) return false;
      if (!plan_ops_empty_between(op_u, op_w, r)) return false;
    }
    return !plans_.empty();
  }

  bool may_absorb_into_suffix(size_t u) const {
    for (size_t r = 0; r < plans_.size(); ++r) {
      if (emit_count_[r][u] != 1) return false;
      size_t op_u = gap_op_[r][u];
      if (op_u == kNone) return false;
      if (!plan_ops_empty_between(op_u, plans_[r].size(), r)) return false;
    }
    return !plans_.empty();
  }

  void build_letter_counts() {
    std::map<Variable, size_t> letter_ids;
    for (Variable v : target_stored_) letter_ids.emplace(v, letter_ids.size());
    letter_id_.clear();
    for (Variable v : target_stored_) letter_id_.push_back(letter_ids.at(v));
    size_t L = target_stored_.size();
    size_t A = std::max<size_t>(letter_ids.size(), 1);
    suffix_count_.assign((L + 1) * A, 0);
    for (size_t pos = L; pos-- > 0;) {
      for (size_t a = 0; a < A; ++a) suffix_count_[pos * A + a] = suffix_count_[(pos + 1) * A + a];
      suffix_count_[pos * A + letter_id_[pos]] += 1;
    }
    alphabet_size_ = A;

    // partner position for target letters occurring exactly twice
    std::vector<std::vector<size_t>> occs(A);
    for (size_t pos = 0; pos < L; ++pos) occs[letter_id_[pos]].push_back(pos);
    partner_.assign(L, kNone);
    for (const auto& ps : occs) {
      if (ps.size() == 2) {
        partner_[ps[0]] = ps[1];
        partner_[ps[1]] = ps[0];
      }
    }
    // unit holding the second lhs occurrence of each twice-occurring slot
    check_unit_of_slot_.assign(vars_.size(), kNone);
    std::vector<size_t> seen(vars_.size(), 0);
    for (size_t u = 0; u < units_.size(); ++u) {
      if (units_[u].is_gap) continue;
      size_t slot = units_[u].slot;
      if (++seen[slot] == 2 && occ_total_[slot] == 2) check_unit_of_slot_[slot] = u;
    }
    pin_pos_.assign(units_.size(), kNone);
  }

  // A one-letter binding whose letter occurs exactly twice pins the check
  // to the partner position; pinned positions must be reachable and
  // strictly increasing along the unit order.
  bool pin_consistent(size_t check_unit, size_t pos, size_t j) const {
    if (pos <= j) return false;
    for (size_t w = check_unit; w-- > 0;) {
      if (pin_pos_[w] == kNone) continue;
      if (pin_pos_[w] >= pos) return false;
      break;
    }
    for (size_t w = check_unit + 1; w < units_.size(); ++w) {
      if (pin_pos_[w] == kNone) continue;
      if (pin_pos_[w] <= pos) return false;
      break;
    }
    return true;
  }

  size_t suffix_count(size_t pos, size_t letter) const {
    return suffix_count_[pos * alphabet_size_ + letter];
  }

  // How the current gap may take length: free loop, anchored on the first
  // letter of the next bound nonempty image, or forced to zero because a
  // later gap (or the suffix) canonically absorbs the span.
  enum class GapMode { Free, Anchored, Zero };

  GapMode gap_mode(size_t u, size_t* anchor_letter) const {
    size_t w = u + 1;
    while (w < units_.size()) {
      const Unit& un = units_[w];
      if (un.is_gap) return may_merge_into(u, w) ? GapMode::Zero : GapMode::Free;
      size_t b = bound_[un.slot];
      if (b == kNone) return GapMode::Free;
      if (image_len_[un.slot] > 0) {
        *anchor_letter = letter_id_[b];
        return GapMode::Anchored;
      }
      ++w;
    }
    return may_absorb_into_suffix(u) ? GapMode::Zero : GapMode::Free;
  }

  bool dfs(size_t u, size_t j) {
    if (++nodes_ > limits_.max_nodes) {
      complete_ = false;
      return false;
    }
    if (u == units_.size()) return emit(j);
    const Unit& un = units_[u];
    size_t remaining = target_stored_.size() - j;

    if (!un.is_gap) {
      size_t slot = un.slot;
      if (bound_[slot] != kNone) {
        size_t b = bound_[slot];
        size_t len = image_len_[slot];
        if (len > remaining) return true;
        for (size_t k = 0; k < len; ++k) {
          if (target_stored_[j + k] != target_stored_[b + k]) return true;
        }
        pending_ -= len;
        unit_span_begin_[u] = j;
        unit_span_len_[u] = len;
        bool keep = dfs(u + 1, j + len);
        pending_ += len;
        return keep;
      }
      size_t cap = std::min(repeated_cap_, remaining / occ_total_[slot]);
      for (size_t len = 0; len <= cap; ++len) {
        size_t extra = len * (occ_total_[slot] - 1);
        if (j + len + pending_ + extra > target_stored_.size()) break;
        if (len > 0 && suffix_count(j + len, letter_id_[j]) < occ_total_[slot] - 1) continue;
        size_t pinned_unit = kNone;
        if (len == 1 && occ_total_[slot] == 2 && partner_[j] != kNone &&
            check_unit_of_slot_[slot] != kNone) {
          pinned_unit = check_unit_of_slot_[slot];
          if (!pin_consistent(pinned_unit, partner_[j], j)) continue;
          pin_pos_[pinned_unit] = partner_[j];
        }
        bound_[slot] = j;
        image_len_[slot] = len;
        pending_ += extra;
        unit_span_begin_[u] = j;
        unit_span_len_[u] = len;
        bool keep = dfs(u + 1, j + len);
        pending_ -= extra;
        bound_[slot] = kNone;
        if (pinned_unit != kNone) pin_pos_[pinned_unit] = kNone;
        if (!keep) return false;
      }
      return true;
    }

    size_t anchor = kNone;
    GapMode mode = gap_mode(u, &anchor);
    size_t max_len = remaining >= pending_ ? remaining - pending_ : 0;
    unit_span_begin_[u] = j;
    if (mode == GapMode::Zero) {
      unit_span_len_[u] = 0;
      return dfs(u + 1, j);
    }
    for (size_t len = 0; len <= max_len; ++len) {
      if (mode == GapMode::Anchored) {
        if (j + len >= target_stored_.size()) break;
        if (letter_id_[j + len] != anchor) continue;
      }
      unit_span_begin_[u] = j;
      unit_span_len_[u] = len;
      if (!dfs(u + 1, j + len)) return false;
    }
    return true;
  }

  bool emit(size_t end) {
    bool whole = start_ == 0 && end == target_stored_.size();
    bool id_subst = whole && units_identity();
    for (size_t r = 0; r < plans_.size(); ++r) {
      std::vector<Variable> out;
      out.reserve(target_stored_.size() + rhs_stored_[r].size());
      out.insert(out.end(), target_stored_.begin(), target_stored_.begin() + start_);
      for (size_t op_unit : plans_[r]) {
        size_t b = unit_span_begin_[op_unit];
        size_t l = unit_span_len_[op_unit];
        out.insert(out.end(), target_stored_.begin() + b, target_stored_.begin() + b + l);
      }
      out.insert(out.end(), target_stored_.begin() + end, target_stored_.end());
      if (out.size() > limits_.max_word_len) continue;
      if (reversed_) std::reverse(out.begin(), out.end());
      Word result{std::move(out)};

      PerPlan& pp = per_plan_[r];
      bool nontrivial = result.letters() != forward_target_;
      auto [it, fresh] = pp.index.emplace(result, pp.outcomes.size());
      if (fresh) {
        RewriteOutcome oc;
        oc.result = std::move(result);
        if (reversed_) {
          oc.begin = target_stored_.size() - end;
          oc.end = target_stored_.size() - start_;
        } else {
          oc.begin = start_;
          oc.end = end;
        }
        oc.subst = current_subst();
        oc.all_whole_word = whole;
        oc.all_identity_subst = id_subst;
        oc.any_whole_word = whole;
        oc.witness_count = 1;
        pp.outcomes.push_back(std::move(oc));
        if (pp.outcomes.size() >= limits_.max_results ||
            (nontrivial && limits_.stop_on_nontrivial)) {
          complete_ = false;
          return false;
        }
      } else {
        RewriteOutcome& oc = pp.outcomes[it->second];
        oc.all_whole_word = oc.all_whole_word && whole;
        oc.all_identity_subst = oc.all_identity_subst && id_subst;
        oc.any_whole_word = oc.any_whole_word || whole;
        ++oc.witness_count;
      }
    }
    return true;
  }

  // every unit takes exactly its own letters
  bool units_identity() const {
    for (size_t u = 0; u < units_.size(); ++u) {
      const Unit& un = units_[u];
      if (unit_span_len_[u] != un.len) return false;
      for (size_t d = 0; d < un.len; ++d) {
        if (target_stored_[unit_span_begin_[u] + d] != lhs_stored_[un.lhs_begin + d]) return false;
      }
    }
    return true;
  }

  Substitution current_subst() const {
    Substitution s;
    size_t L = target_stored_.size();
    auto image = [&](size_t b, size_t l) {
      size_t fb = reversed_ ? L - (b + l) : b;
      return Word(
          std::vector<Variable>(forward_target_.begin() + fb, forward_target_.begin() + fb + l));
    };
    for (size_t u = 0; u < units_.size(); ++u) {
      const Unit& un = units_[u];
      if (!un.is_gap) {
        if (!s.maps(vars_[un.slot])) {
          s.set(vars_[un.slot], image(unit_span_begin_[u], unit_span_len_[u]));
        }
        continue;
      }
      // canonical split of a gap: in processing order the first variable
      // takes the whole span (the last one in forward order when reversed)
      size_t b = unit_span_begin_[u];
      size_t l = unit_span_len_[u];
      for (size_t d = 0; d < un.len; ++d) {
        Variable v = lhs_stored_[un.lhs_begin + d];
        s.set(v, d == 0 ? image(b, l) : Word{});
      }
    }
    return s;
  }

  RewriteLimits limits_;
  bool reversed_;
  std::vector<Variable> target_stored_, lhs_stored_, forward_target_;
  std::vector<std::vector<Variable>> rhs_stored_;
  std::map<Variable, size_t> slot_of_;
  std::vector<Variable> vars_;
  std::vector<size_t> occ_total_;
  std::vector<size_t> bound_, image_len_;
  std::vector<Unit> units_;
  std::vector<size_t> first_letter_unit_of_slot_, gap_unit_of_slot_;
  std::vector<std::vector<size_t>> rhs_occ_, rhs_pos_;
  std::vector<std::vector<size_t>> plans_;    // per rhs: unit per emitted piece
  std::vector<std::vector<size_t>> gap_op_;   // per rhs, per unit: op position
  std::vector<std::vector<size_t>> emit_count_;
  std::vector<size_t> unit_span_begin_, unit_span_len_;
  std::vector<size_t> letter_id_;
  std::vector<size_t> suffix_count_;
  std::vector<size_t> partner_;
  std::vector<size_t> check_unit_of_slot_;
  std::vector<size_t> pin_pos_;
  size_t alphabet_size_ = 0;
  size_t repeated_cap_ = 0;
  size_t pending_ = 0;
  size_t start_ = 0;
  uint64_t nodes_ = 0;
  bool complete_ = true;
  std::vector<PerPlan> per_plan_;
};

// Repeated variables should bind as early as possible in processing
// order; pick the orientation whose latest first binding comes sooner.
bool prefer_reversed(const Word& lhs) {
  const auto& a = lhs.letters();
  std::map<Variable, std::pair<size_t, size_t>> first_last;
  for (size_t i = 0; i < a.size(); ++i) {
    auto it = first_last.find(a[i]);
    if (it == first_last.end()) {
      first_last.emplace(a[i], std::make_pair(i, i));
    } else {
      it->second.second = i;
    }
  }
  size_t fwd = 0, rev = 0;
  for (const auto& [v, fl] : first_last) {
    if (fl.first == fl.second) continue;
    fwd = std::max(fwd, fl.first);
    rev = std::max(rev, a.size() - 1 - fl.second);
  }
  return rev < fwd;
}

}  // namespace

std::vector<RewriteEnumeration> enumerate_rewrites_multi(const Word& target, const Word& lhs,
                                                         const std::vector<Word>& rhs_list,
                                                         const RewriteLimits& limits,
                                                         RewriteCache* cache) {
  std::vector<RewriteEnumeration> out(rhs_list.size());
  std::vector<size_t> missing;
  for (size_t i = 0; i < rhs_list.size(); ++i) {
    if (cache) {
      if (auto hit = cache->find(target, Identity{lhs, rhs_list[i]})) {
        out[i] = *hit;
        continue;
      }
    }
    missing.push_back(i);
  }
  if (missing.empty()) return out;

  std::vector<Word> todo;
  for (size_t i : missing) todo.push_back(rhs_list[i]);
  RewriteSearch search(target, lhs, todo, limits, prefer_reversed(lhs));
  std::vector<RewriteEnumeration> fresh = search.run();
  for (size_t k = 0; k < missing.size(); ++k) {
    out[missing[k]] = fresh[k];
    if (cache && fresh[k].complete) {
      cache->store(target, Identity{lhs, rhs_list[missing[k]]},
                   std::make_shared<RewriteEnumeration>(fresh[k]));
    }
  }
  return out;
}

RewriteEnumeration enumerate_rewrites(const Word& target, const Identity& directed,
                                      const RewriteLimits& limits, RewriteCache* cache) {
  return enumerate_rewrites_multi(target, directed.lhs, {directed.rhs}, limits, cache)[0];
}

std::vector<DeductionStep> direct_deductions(const Word& w, const IdentitySet& sigma,
                                             const RewriteLimits& limits, RewriteCache* cache) {
  // group directed identities by their matched side to share the search
  std::map<Word, std::vector<std::pair<Word, std::pair<Identity, bool>>>> groups;
  for (const Identity& id : sigma.identities) {
    if (id.trivial()) continue;
    groups[id.lhs].push_back({id.rhs, {id, false}});
    groups[id.rhs].push_back({id.lhs, {id, true}});
  }

  std::map<Word, DeductionStep> by_result;
  for (const auto& [lhs, rhss] : groups) {
    std::vector<Word> rhs_list;
    for (const auto& [rhs, tag] : rhss) rhs_list.push_back(rhs);
    std::vector<RewriteEnumeration> res = enumerate_rewrites_multi(w, lhs, rhs_list, limits, cache);
    for (size_t k = 0; k < rhss.size(); ++k) {
      if (!res[k].complete) throw error("direct_deductions: enumeration budget exceeded");
      for (const RewriteOutcome& oc : res[k].outcomes) {
        if (oc.result == w) continue;
        if (by_result.count(oc.result)) continue;
        DeductionStep step;
        step.from = w;
        step.to = oc.result;
        step.identity_used = rhss[k].second.first;
        step.reversed = rhss[k].second.second;
        step.begin = oc.begin;
        step.end = oc.end;
        step.subst = oc.subst;
        by_result.emplace(oc.result, std::move(step));
      }
    }
  }
  std::vector<DeductionStep> out;
  out.reserve(by_result.size());
  for (auto& [result, step] : by_result) out.push_back(std::move(step));
  return out;
}

ClosureResult closure(const Word& start, const IdentitySet& sigma, const ClosureCaps& caps,
                      RewriteCache* cache) {
  RewriteLimits limits;
  limits.max_word_len = caps.max_word_len;
  ClosureResult out;
  std::set<Word> seen{start};
  std::vector<Word> frontier{start};
  size_t depth = 0;
  while (!frontier.empty()) {
    if (depth == caps.max_depth) {
      out.exhausted = false;
      out.stop_reason = "depth cap reached with a nonempty frontier";
      break;
    }
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const DeductionStep& step : direct_deductions(w, sigma, limits, cache)) {
        if (seen.count(step.to)) continue;
        if (seen.size() >= caps.max_states) {
          out.exhausted = false;
          out.stop_reason = "state cap reached";
          break;
        }
        seen.insert(step.to);
        next.push_back(step.to);
      }
      if (!out.exhausted) break;
    }
    if (!out.exhausted) break;
    frontier = std::move(next);
    ++depth;
  }
  out.words.assign(seen.begin(), seen.end());
  return out;
}

DerivationResult derivable(const Word& from, const Word& to, const IdentitySet& sigma,
                           const ClosureCaps& caps, RewriteCache* cache) {
  DerivationResult out;
  if (from == to) {
    out.found = true;
    out.path = {from};
    return out;
  }
  RewriteLimits limits;
  limits.max_word_len = caps.max_word_len;
  std::map<Word, DeductionStep> parent;
  std::set<Word> seen{from};
  std::vector<Word> frontier{from};
  bool capped = false;
  size_t depth = 0;
  while (!frontier.empty() && depth < caps.max_depth) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (DeductionStep& step : direct_deductions(w, sigma, limits, cache)) {
        if (seen.count(step.to)) continue;
        if (seen.size() >= caps.max_states) {
          capped = true;
          break;
        }
        seen.insert(step.to);
        next.push_back(step.to);
        bool done = step.to == to;
        parent.emplace(step.to, std::move(step));
        if (done) {
          std::vector<Word> rpath{to};
          std::vector<DeductionStep> rsteps;
          Word cur = to;
          while (cur != from) {
            const DeductionStep& s = parent.at(cur);
            rsteps.push_back(s);
            cur = s.from;
            rpath.push_back(cur);
          }
          std::reverse(rpath.begin(), rpath.end());
          std::reverse(rsteps.begin(), rsteps.end());
          out.found = true;
          out.path = std::move(rpath);
          out.steps = std::move(rsteps);
          return out;
        }
      }
      if (capped) break;
    }
    if (capped) break;
    frontier = std::move(next);
    ++depth;
  }
  out.exhausted = !capped && frontier.empty();
  return out;
}

}  // namespace eqmon

#include "eqmon/matcher.hpp"

#include <algorithm>
#include <map>

namespace eqmon {

size_t longest_repeated_factor(const Word& w) {
  size_t best = 0;
  const auto& a = w.letters();
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = i + 1; j < a.size(); ++j) {
      size_t k = 0;
      while (j + k < a.size() && a[i + k] == a[j + k]) ++k;
      best = std::max(best, k);
    }
  }
  return best;
}

namespace {

// Depth-first enumeration over (pattern position, target position).  A
// variable binds a target span at its first occurrence and is a plain
// string check afterwards.  Pruned by the pending length of bound
// variables and, for variables repeated in the pattern, by the longest
// repeated factor of the target (two disjoint image occurrences cannot be
// longer than that).
class Search {
 public:
  Search(const Word& pattern, const Word& target, const MatchOptions& options, bool whole,
         const MatchSink& sink)
      : pattern_(pattern.letters()),
        target_(target.letters()),
        options_(options),
        whole_(whole),
        sink_(sink) {
    std::map<Variable, size_t> slot_of;
    slots_.reserve(pattern_.size());
    for (Variable v : pattern_) {
      auto [it, fresh] = slot_of.emplace(v, vars_.size());
      if (fresh) {
        vars_.push_back(v);
        occ_total_.push_back(0);
      }
      slots_.push_back(it->second);
      ++occ_total_[it->second];
    }
    bound_.assign(vars_.size(), kUnbound);
    image_len_.assign(vars_.size(), 0);
    repeated_cap_ = longest_repeated_factor(target);
  }

  // Enumerate matches whose covered span starts at `start`; for whole
  // matches the span must end at the target size.  Returns false when the
  // sink stopped the search.  Bindings unwind completely, so one Search
  // can run several starts.
  bool run(size_t start) {
    start_ = start;
    return dfs(0, start);
  }

 private:
  static constexpr size_t kUnbound = static_cast<size_t>(-1);

  bool dfs(size_t i, size_t j) {
    if (i == pattern_.size()) {
      if (whole_ && j != target_.size()) return true;
      return emit(j);
    }
    size_t slot = slots_[i];
    if (bound_[slot] != kUnbound) {
      size_t b = bound_[slot];
      size_t len = image_len_[slot];
      if (j + len > target_.size()) return true;
      for (size_t k = 0; k < len; ++k) {
        if (target_[j + k] != target_[b + k]) return true;
      }
      pending_ -= len;
      bool keep = dfs(i + 1, j + len);
      pending_ += len;
      return keep;
    }

    size_t remaining = target_.size() - j;
    size_t cap = remaining;
    if (occ_total_[slot] >= 2) {
      cap = std::min(cap, repeated_cap_);
      cap = std::min(cap, remaining / occ_total_[slot]);
    }
    for (size_t len = options_.min_image_len; len <= cap; ++len) {
      size_t extra = len * (occ_total_[slot] - 1);
      if (j + len + pending_ + extra > target_.size()) break;
      bound_[slot] = j;
      image_len_[slot] = len;
      pending_ += extra;
      bool keep = dfs(i + 1, j + len);
      pending_ -= extra;
      bound_[slot] = kUnbound;
      if (!keep) return false;
    }
    return true;
  }

  bool emit(size_t end) {
    Match m;
    for (size_t s = 0; s < vars_.size(); ++s) {
      size_t b = bound_[s];
      m.subst.set(vars_[s], Word(std::vector<Variable>(target_.begin() + b,
                                                       target_.begin() + b + image_len_[s])));
    }
    m.prefix = Word(std::vector<Variable>(target_.begin(), target_.begin() + start_));
    m.suffix = Word(std::vector<Variable>(target_.begin() + end, target_.end()));
    m.begin = start_;
    m.end = end;
    return sink_(m);
  }

  const std::vector<Variable>& pattern_;
  const std::vector<Variable>& target_;
  MatchOptions options_;
  bool whole_;
  const MatchSink& sink_;

  std::vector<Variable> vars_;
  std::vector<size_t> slots_;
  std::vector<size_t> occ_total_;
  std::vector<size_t> bound_;
  std::vector<size_t> image_len_;
  size_t pending_ = 0;  // total length still owed by bound variables
  size_t repeated_cap_ = 0;
  size_t start_ = 0;
};

}  // namespace

void match_whole(const Word& pattern, const Word& target, const MatchSink& sink,
                 const MatchOptions& options) {
  Search search(pattern, target, options, /*whole=*/true, sink);
  search.run(0);
}

std::vector<Match> match_whole(const Word& pattern, const Word& target,
                               const MatchOptions& options) {
  std::vector<Match> out;
  match_whole(
      pattern, target,
      [&](const Match& m) {
        out.push_back(m);
        return true;
      },
      options);
  return out;
}

void match_factor(const Word& pattern, const Word& target, const MatchSink& sink,
                  const MatchOptions& options) {
  Search search(pattern, target, options, /*whole=*/false, sink);
  for (size_t start = 0; start <= target.size(); ++start) {
    if (!search.run(start)) return;
  }
}

std::vector<Match> match_factor(const Word& pattern, const Word& target,
                                const MatchOptions& options) {
  std::vector<Match> out;
  match_factor(
      pattern, target,
      [&](const Match& m) {
        out.push_back(m);
        return true;
      },
      options);
  return out;
}

bool matches_whole(const Word& pattern, const Word& target, const MatchOptions& options) {
  bool found = false;
  match_whole(
      pattern, target,
      [&](const Match&) {
        found = true;
        return false;
      },
      options);
  return found;
}

}  // namespace eqmon

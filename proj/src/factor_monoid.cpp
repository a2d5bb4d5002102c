#include "eqmon/factor_monoid.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "eqmon/matcher.hpp"
#include "eqmon/rewrite.hpp"

namespace eqmon {

std::string FactorWitness::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, img] : images) {
    if (!first) os << ", ";
    first = false;
    os << v.name() << " -> " << (img ? img->str() : std::string("0"));
  }
  os << '}';
  if (!note.empty()) os << " (" << note << ')';
  return os.str();
}

FactorMonoid::FactorMonoid(std::vector<Word> words)
    : words_(std::move(words)), cache_(std::make_shared<RewriteCache>()) {
  for (const Word& w : words_) {
    if (w.empty()) throw error("factor monoid words must be nonempty");
  }
  factors_.insert(Word{});
  for (const Word& w : words_) {
    for (size_t i = 0; i < w.size(); ++i) {
      for (size_t j = i + 1; j <= w.size(); ++j) {
        factors_.insert(w.subword(i, j));
      }
    }
  }
}

std::optional<Word> FactorMonoid::value_of(const Word& w) const {
  if (is_factor(w)) return w;
  return std::nullopt;
}

DecideResult FactorMonoid::decide_identity(const Identity& id) const {
  if (id.trivial()) return {};

  std::set<Variable> lcon = content(id.lhs);
  std::set<Variable> rcon = content(id.rhs);
  if (lcon != rcon) {
    // a variable on one side only: send it to zero, the rest to 1
    Variable diff = [&] {
      for (Variable v : lcon) {
        if (!rcon.count(v)) return v;
      }
      for (Variable v : rcon) {
        if (!lcon.count(v)) return v;
      }
      throw error("unreachable");
    }();
    FactorWitness w;
    for (Variable v : lcon) w.images[v] = v == diff ? std::nullopt : std::optional<Word>(Word{});
    for (Variable v : rcon) w.images[v] = v == diff ? std::nullopt : std::optional<Word>(Word{});
    w.note = "contents differ; one side evaluates to zero, the other to the identity";
    return {false, std::move(w)};
  }

  // identity substitution: distinct sides with at least one side a factor
  if (is_factor(id.lhs) || is_factor(id.rhs)) {
    FactorWitness w;
    for (Variable v : lcon) w.images[v] = Word{v};
    w.note = "identity substitution";
    return {false, std::move(w)};
  }

  // A violating substitution maps one side onto a factor of a member word
  // while the other side's image differs letterwise; that is exactly a
  // rewrite outcome differing from the member word.
  std::optional<FactorWitness> witness;
  auto scan = [&](const Word& pattern, const Word& other, const Word& target) {
    RewriteLimits limits;
    limits.max_word_len = static_cast<size_t>(-1) / 2;
    limits.stop_on_nontrivial = true;
    RewriteEnumeration res = enumerate_rewrites(target, Identity{pattern, other}, limits, cache_.get());
    for (const RewriteOutcome& oc : res.outcomes) {
      if (oc.result == target) continue;
      FactorWitness w;
      for (const auto& [v, img] : oc.subst.images()) w.images[v] = img;
      w.note = "replacing " + pattern.str() + " by " + other.str() + " inside " + target.str() +
               " yields " + oc.result.str();
      witness = std::move(w);
      return true;
    }
    return false;
  };

  for (const Word& w : words_) {
    if (scan(id.lhs, id.rhs, w)) return {false, std::move(witness)};
    if (scan(id.rhs, id.lhs, w)) return {false, std::move(witness)};
  }
  return {};
}

IsotermVerdict FactorMonoid::bounded_isoterm(const Word& w, std::optional<size_t> max_len) const {
  size_t bound = max_len.value_or(w.size() + 2);
  std::vector<Variable> alphabet;
  for (Variable v : content(w)) alphabet.push_back(v);

  std::vector<size_t> digits;
  while (true) {
    Word cand;
    for (size_t d : digits) cand.append(alphabet[d]);
    if (cand != w && decide_identity(Identity{w, cand}).satisfied) {
      return IsotermCounterexample{cand};
    }
    size_t i = digits.size();
    while (i > 0 && digits[i - 1] + 1 == alphabet.size()) {
      digits[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      if (digits.size() == bound) break;
      digits.assign(digits.size() + 1, 0);
    } else {
      ++digits[i - 1];
    }
  }
  return IsotermUpTo{bound};
}

std::vector<Word> FactorMonoid::sorted_factors() const {
  std::vector<Word> fs(factors_.begin(), factors_.end());
  std::sort(fs.begin(), fs.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.str() < b.str();
  });
  return fs;
}

FiniteMonoid FactorMonoid::materialize(size_t max_elements) const {
  if (element_count() > max_elements) {
    throw error("factor monoid has " + std::to_string(element_count()) +
                " elements, materialization cap is " + std::to_string(max_elements));
  }
  std::vector<Word> fs = sorted_factors();
  std::unordered_map<Word, size_t, WordHash> index;
  for (size_t i = 0; i < fs.size(); ++i) index[fs[i]] = i;
  size_t zero = fs.size();
  size_t n = fs.size() + 1;

  std::vector<size_t> table(n * n, zero);
  for (size_t i = 0; i < fs.size(); ++i) {
    for (size_t j = 0; j < fs.size(); ++j) {
      Word prod = fs[i] + fs[j];
      auto it = index.find(prod);
      table[i * n + j] = it == index.end() ? zero : it->second;
    }
  }
  std::vector<std::string> names;
  for (const Word& f : fs) names.push_back(f.str());
  names.push_back("0");

  // concatenation-or-zero is associative; run the cubic sweep only when cheap
  if (n <= 300) {
    return FiniteMonoid::build(n, std::move(table), index.at(Word{}), std::move(names));
  }
  return FiniteMonoid::build_unchecked(n, std::move(table), index.at(Word{}), std::move(names));
}

}  // namespace eqmon

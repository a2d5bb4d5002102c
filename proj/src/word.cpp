#include "eqmon/word.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace eqmon {

namespace {

// Process-wide interner. Words store 32-bit ids so that hashing and
// comparison in the search loops stay cheap.
struct Interner {
  std::shared_mutex mutex;
  std::unordered_map<std::string, uint32_t> ids;
  std::vector<std::string> names;

  uint32_t intern(std::string_view token) {
    {
      std::shared_lock lock(mutex);
      auto it = ids.find(std::string(token));
      if (it != ids.end()) return it->second;
    }
    std::unique_lock lock(mutex);
    auto [it, inserted] = ids.emplace(std::string(token), static_cast<uint32_t>(names.size()));
    if (inserted) names.emplace_back(token);
    return it->second;
  }

  const std::string& name(uint32_t id) {
    std::shared_lock lock(mutex);
    return names.at(id);
  }
};

Interner& interner() {
  static Interner instance;
  return instance;
}

bool valid_token_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '\'';
}

}  // namespace

Variable Variable::named(std::string_view token) {
  if (token.empty()) throw error("variable token must be nonempty");
  if (token == "1") throw error("token '1' denotes the empty word, not a variable");
  for (char c : token) {
    if (!valid_token_char(c)) {
      throw error("invalid character in variable token: " + std::string(token));
    }
  }
  return Variable(interner().intern(token));
}

const std::string& Variable::name() const { return interner().name(id_); }

Word Word::parse(std::string_view text) {
  std::vector<Variable> letters;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      std::string_view token = text.substr(start, i - start);
      if (token == "1") continue;  // empty-word token contributes nothing
      letters.push_back(Variable::named(token));
    }
  }
  return Word(std::move(letters));
}

Word Word::subword(size_t begin, size_t end) const {
  if (begin > end || end > letters_.size()) throw error("subword range out of bounds");
  return Word(std::vector<Variable>(letters_.begin() + begin, letters_.begin() + end));
}

Word Word::reversed() const {
  std::vector<Variable> rev(letters_.rbegin(), letters_.rend());
  return Word(std::move(rev));
}

Word& Word::append(Variable v) {
  letters_.push_back(v);
  return *this;
}

Word& Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  return *this;
}

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) os << ' ';
    os << letters_[i].name();
  }
  return os.str();
}

size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letter ids.
  uint64_t h = 1469598103934665603ull;
  for (Variable v : w.letters()) {
    h ^= v.id();
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

Identity Identity::parse(std::string_view text) {
  size_t pos = text.find('=');
  if (pos == std::string_view::npos) throw error("identity must contain '=': " + std::string(text));
  return Identity{Word::parse(text.substr(0, pos)), Word::parse(text.substr(pos + 1))};
}

std::string Identity::str() const { return lhs.str() + " = " + rhs.str(); }

const Word& Substitution::image(Variable v) const {
  auto it = images_.find(v);
  if (it == images_.end()) throw error("substitution does not map " + v.name());
  return it->second;
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (Variable v : w) {
    auto it = images_.find(v);
    if (it == images_.end()) {
      out.append(v);
    } else {
      out.append(it->second);
    }
  }
  return out;
}

Identity Substitution::apply(const Identity& id) const {
  return Identity{apply(id.lhs), apply(id.rhs)};
}

std::string Substitution::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, img] : images_) {
    if (!first) os << ", ";
    first = false;
    os << v.name() << " -> " << img.str();
  }
  os << '}';
  return os.str();
}

std::set<Variable> content(const Word& w) {
  return std::set<Variable>(w.begin(), w.end());
}

size_t occ(const Word& w, Variable x) {
  return static_cast<size_t>(std::count(w.begin(), w.end(), x));
}

std::set<Variable> simple_vars(const Word& w) {
  std::set<Variable> out;
  for (Variable v : content(w)) {
    if (occ(w, v) == 1) out.insert(v);
  }
  return out;
}

std::set<Variable> multiple_vars(const Word& w) {
  std::set<Variable> out;
  for (Variable v : content(w)) {
    if (occ(w, v) > 1) out.insert(v);
  }
  return out;
}

bool is_linear(const Word& w) {
  return !w.empty() && multiple_vars(w).empty();
}

Word project(const Word& w, const std::set<Variable>& keep) {
  Word out;
  for (Variable v : w) {
    if (keep.count(v)) out.append(v);
  }
  return out;
}

Word remove(const Word& w, const std::set<Variable>& drop) {
  Word out;
  for (Variable v : w) {
    if (!drop.count(v)) out.append(v);
  }
  return out;
}

size_t occurrence_position(const Word& w, Variable x, size_t i) {
  if (i == 0) throw error("occurrence index is 1-based");
  size_t seen = 0;
  for (size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == x && ++seen == i) return pos;
  }
  throw error("occurrence " + std::to_string(i) + " of " + x.name() + " out of range");
}

bool occurrence_order(const Word& w, Variable x, size_t i, Variable y, size_t j) {
  return occurrence_position(w, x, i) < occurrence_position(w, y, j);
}

}  // namespace eqmon

#ifndef EQMON_WORD_HPP
#define EQMON_WORD_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqmon {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A variable is an interned token; equality is token equality.
/// Valid tokens are nonempty strings over [A-Za-z0-9_'] other than "1",
/// which is reserved for the empty word.
class Variable {
 public:
  static Variable named(std::string_view token);

  const std::string& name() const;
  uint32_t id() const noexcept { return id_; }

  friend bool operator==(Variable a, Variable b) noexcept { return a.id_ == b.id_; }
  friend auto operator<=>(Variable a, Variable b) noexcept { return a.id_ <=> b.id_; }

 private:
  explicit Variable(uint32_t id) : id_(id) {}
  uint32_t id_;
};

/// A word is a finite (possibly empty) sequence of variables.  The empty
/// word is the monoid identity and prints as "1".
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Variable> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Variable> letters) : letters_(letters) {}

  /// Parses the text format: whitespace-separated variable tokens, or "1"
  /// for the empty word ("1" tokens inside a longer list are skipped).
  static Word parse(std::string_view text);

  size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Variable at(size_t i) const { return letters_.at(i); }
  Variable operator[](size_t i) const { return letters_[i]; }

  const std::vector<Variable>& letters() const noexcept { return letters_; }

  Word subword(size_t begin, size_t end) const;
  Word reversed() const;
  Word& append(Variable v);
  Word& append(const Word& w);

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;

  std::string str() const;

  std::vector<Variable>::const_iterator begin() const { return letters_.begin(); }
  std::vector<Variable>::const_iterator end() const { return letters_.end(); }

 private:
  std::vector<Variable> letters_;
};

struct WordHash {
  size_t operator()(const Word& w) const noexcept;
};

/// The i-th occurrence (1-based) of a variable, with its 0-based offset.
struct OccurrenceRef {
  Variable variable;
  size_t index;
  size_t position;
};

/// An identity u = v between two words; nontrivial iff the sides differ.
struct Identity {
  Word lhs;
  Word rhs;

  bool trivial() const { return lhs == rhs; }
  Identity swapped() const { return Identity{rhs, lhs}; }

  static Identity parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const Identity&, const Identity&) = default;
  friend auto operator<=>(const Identity&, const Identity&) = default;
};

/// A substitution maps finitely many variables to words (images may be
/// empty); unmapped variables are fixed.  Application is the unique
/// extension to a monoid endomorphism of the free monoid.
class Substitution {
 public:
  Substitution() = default;

  void set(Variable v, Word image) { images_.insert_or_assign(v, std::move(image)); }
  bool maps(Variable v) const { return images_.count(v) != 0; }
  const Word& image(Variable v) const;

  Word apply(const Word& w) const;
  Identity apply(const Identity& id) const;

  const std::map<Variable, Word>& images() const { return images_; }
  std::string str() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Variable, Word> images_;
};

// -- basic combinatorics ----------------------------------------------------

std::set<Variable> content(const Word& w);
size_t occ(const Word& w, Variable x);
std::set<Variable> simple_vars(const Word& w);
std::set<Variable> multiple_vars(const Word& w);
bool is_linear(const Word& w);

/// Keeps the letters whose variables lie in `keep`, deleting the rest.
Word project(const Word& w, const std::set<Variable>& keep);

/// Deletes the letters whose variables lie in `drop`; equals
/// project(w, content(w) \ drop).
Word remove(const Word& w, const std::set<Variable>& drop);

/// 0-based offset of the i-th occurrence (1-based) of x; throws if i is out
/// of range.
size_t occurrence_position(const Word& w, Variable x, size_t i);

/// True iff the i-th occurrence of x precedes the j-th occurrence of y.
bool occurrence_order(const Word& w, Variable x, size_t i, Variable y, size_t j);

}  // namespace eqmon

template <>
struct std::hash<eqmon::Word> {
  size_t operator()(const eqmon::Word& w) const noexcept { return eqmon::WordHash{}(w); }
};

#endif  // EQMON_WORD_HPP

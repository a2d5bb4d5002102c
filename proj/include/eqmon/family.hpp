#ifndef EQMON_FAMILY_HPP
#define EQMON_FAMILY_HPP

#include <vector>

#include "eqmon/word.hpp"

namespace eqmon::family {

/// A component choice per index: false keeps the pair x1 x2 in order,
/// true swaps it.
struct SignVector {
  std::vector<bool> swaps;

  size_t n() const { return swaps.size(); }
  bool swapped(size_t i) const { return swaps.at(i - 1); }  // 1-based

  /// All-identity vector of length n.
  static SignVector identity(size_t n) { return SignVector{std::vector<bool>(n, false)}; }

  /// Parses a bit string such as "01" (0 keeps, 1 swaps; leftmost = i = 1).
  static SignVector parse_bits(std::string_view bits);
  std::string bits() const;

  /// Index when the bits are read as a binary number, leftmost most
  /// significant.  Fixes the enumeration order of the family.
  size_t index() const;
  static SignVector from_index(size_t n, size_t k);

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// A permutation of {1..degree} as an image array (1-based semantics,
/// stored 0-based).
struct Permutation {
  std::vector<size_t> image;  // image[i-1] = i^rho

  size_t degree() const { return image.size(); }
  size_t apply(size_t i) const { return image.at(i - 1); }

  static Permutation identity(size_t degree);
  static Permutation from_one_based(std::vector<size_t> image);

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Variable spelling used throughout: z<i>, zp<i>, zpp<i> for the primed
// z-series, t<i>, tp<i>, tpp<i>, s<i>, y<i>, a<i>, b<i>, x1_<i>, x2_<i>,
// and the bare letters a, b, t.
Variable var_z(size_t i, int primes = 0);
Variable var_t(size_t i, int primes = 0);
Variable var_s(size_t i);
Variable var_y(size_t i);
Variable var_a(size_t i);  // i = 0 gives the bare letter a
Variable var_b(size_t i);  // i = 0 gives the bare letter b
Variable var_x(size_t j, size_t i);
Variable var_t_plain();

Word word_p(size_t n);
Word word_q(size_t n);
Word word_r(size_t n);

/// The family word for a sign vector (n = xi.n() >= 2).
Word word_w(size_t n, const SignVector& xi);

/// All 2^n family words in sign-vector index order.
std::vector<Word> all_words(size_t n);

/// The five defining identities x^2=x^3, x^2 y=y x^2, xyxzx=x^2 yz,
/// xzxyty=xzyxty, xzytxy=xzytyx.
std::vector<Identity> five_identities();

/// The two group-distinguishing identities xyzxy=yxzyx, xyzyx=yxzxy.
std::vector<Identity> two_identities();

/// The pair c[rho] / c'[rho]; the two words differ exactly in the leading
/// "x y t" versus "y x t".  rho must have degree n+m+k.
std::pair<Word, Word> c_word_pair(size_t n, size_t m, size_t k, const Permutation& rho);

/// The eight-letter probe whose factor structure pins the family's
/// occurrence order.
Word probe_word();  // x y t z s x z y

/// A substitution mapping the probe onto a factor of word_w(n, identity).
Substitution probe_substitution(size_t n);

}  // namespace eqmon::family

#endif  // EQMON_FAMILY_HPP

#include "eqmon/family.hpp"

#include <string>

namespace eqmon::family {

namespace {

Variable make(const std::string& base, size_t i) {
  return Variable::named(base + std::to_string(i));
}

void require_n(size_t n) {
  if (n < 2) throw error("family parameter n must be at least 2");
}

}  // namespace

SignVector SignVector::parse_bits(std::string_view bits) {
  SignVector out;
  for (char c : bits) {
    if (c == '0') {
      out.swaps.push_back(false);
    } else if (c == '1') {
      out.swaps.push_back(true);
    } else {
      throw error("sign vector bits must be 0 or 1");
    }
  }
  return out;
}

std::string SignVector::bits() const {
  std::string out;
  for (bool b : swaps) out.push_back(b ? '1' : '0');
  return out;
}

size_t SignVector::index() const {
  size_t k = 0;
  for (bool b : swaps) k = (k << 1) | (b ? 1 : 0);
  return k;
}

SignVector SignVector::from_index(size_t n, size_t k) {
  SignVector out;
  out.swaps.resize(n);
  for (size_t i = 0; i < n; ++i) {
    out.swaps[n - 1 - i] = (k >> i) & 1;
  }
  return out;
}

Permutation Permutation::identity(size_t degree) {
  Permutation out;
  out.image.resize(degree);
  for (size_t i = 0; i < degree; ++i) out.image[i] = i + 1;
  return out;
}

Permutation Permutation::from_one_based(std::vector<size_t> image) {
  std::vector<bool> seen(image.size(), false);
  for (size_t v : image) {
    if (v < 1 || v > image.size() || seen[v - 1]) throw error("not a permutation");
    seen[v - 1] = true;
  }
  return Permutation{std::move(image)};
}

Variable var_z(size_t i, int primes) {
  static const char* base[] = {"z", "zp", "zpp"};
  return make(base[primes], i);
}

Variable var_t(size_t i, int primes) {
  static const char* base[] = {"t", "tp", "tpp"};
  return make(base[primes], i);
}

Variable var_s(size_t i) { return make("s", i); }
Variable var_y(size_t i) { return make("y", i); }

Variable var_a(size_t i) {
  return i == 0 ? Variable::named("a") : make("a", i);
}

Variable var_b(size_t i) {
  return i == 0 ? Variable::named("b") : make("b", i);
}

Variable var_x(size_t j, size_t i) {
  return Variable::named("x" + std::to_string(j) + "_" + std::to_string(i));
}

Variable var_t_plain() { return Variable::named("t"); }

Word word_p(size_t n) {
  require_n(n);
  Word out;
  for (int primes = 0; primes <= 2; ++primes) {
    for (size_t i = 1; i <= n; ++i) {
      out.append(var_z(i, primes));
      out.append(var_t(i, primes));
    }
  }
  return out;
}

Word word_q(size_t n) {
  require_n(n);
  Word out;
  for (size_t i = 0; i <= n; ++i) {
    out.append(var_s(i));
    out.append(var_y(i));
  }
  out.append(var_t_plain());
  return out;
}

Word word_r(size_t n) {
  require_n(n);
  Word out;
  out.append(var_b(0));
  out.append(var_y(0));
  for (size_t i = 1; i <= n; ++i) {
    out.append(var_x(1, i));
    out.append(var_z(i, 0));
    out.append(var_a(i));
    out.append(var_z(i, 1));
    out.append(var_b(i));
    out.append(var_z(i, 2));
    out.append(var_x(2, i));
    out.append(var_y(i));
  }
  out.append(var_a(0));
  return out;
}

Word word_w(size_t n, const SignVector& xi) {
  require_n(n);
  if (xi.n() != n) throw error("sign vector length does not match n");
  Word out = word_p(n);
  for (size_t i = 1; i <= n; ++i) out.append(var_a(i));
  out.append(var_a(0));
  for (size_t i = 1; i <= n; ++i) {
    if (xi.swapped(i)) {
      out.append(var_x(2, i));
      out.append(var_x(1, i));
    } else {
      out.append(var_x(1, i));
      out.append(var_x(2, i));
    }
  }
  out.append(var_b(0));
  for (size_t i = 1; i <= n; ++i) out.append(var_b(i));
  out.append(word_q(n));
  out.append(word_r(n));
  return out;
}

std::vector<Word> all_words(size_t n) {
  require_n(n);
  std::vector<Word> out;
  out.reserve(size_t{1} << n);
  for (size_t k = 0; k < (size_t{1} << n); ++k) {
    out.push_back(word_w(n, SignVector::from_index(n, k)));
  }
  return out;
}

std::vector<Identity> five_identities() {
  return {
      Identity::parse("x x = x x x"),
      Identity::parse("x x y = y x x"),
      Identity::parse("x y x z x = x x y z"),
      Identity::parse("x z x y t y = x z y x t y"),
      Identity::parse("x z y t x y = x z y t y x"),
  };
}

std::vector<Identity> two_identities() {
  return {
      Identity::parse("x y z x y = y x z y x"),
      Identity::parse("x y z y x = y x z x y"),
  };
}

std::pair<Word, Word> c_word_pair(size_t n, size_t m, size_t k, const Permutation& rho) {
  if (n < 1 || m < 1 || k < 1) throw error("c-word parameters must be positive");
  if (rho.degree() != n + m + k) throw error("permutation degree must be n+m+k");
  Variable x = Variable::named("x");
  Variable y = Variable::named("y");
  Variable t = var_t_plain();

  auto build = [&](bool prime) {
    Word out;
    for (size_t i = 1; i <= n; ++i) {
      out.append(var_z(i, 0));
      out.append(var_t(i, 0));
    }
    if (prime) {
      out.append(y);
      out.append(x);
    } else {
      out.append(x);
      out.append(y);
    }
    out.append(t);
    for (size_t i = n + 1; i <= n + m; ++i) {
      out.append(var_z(i, 0));
      out.append(var_t(i, 0));
    }
    out.append(x);
    for (size_t i = 1; i <= n + m + k; ++i) {
      out.append(var_z(rho.apply(i), 0));
    }
    out.append(y);
    for (size_t i = n + m + 1; i <= n + m + k; ++i) {
      out.append(var_t(i, 0));
      out.append(var_z(i, 0));
    }
    return out;
  };
  return {build(false), build(true)};
}

Word probe_word() { return Word::parse("x y t z s x z y"); }

Substitution probe_substitution(size_t n) {
  require_n(n);
  Substitution phi;
  phi.set(Variable::named("x"), Word{var_x(2, 1)});
  phi.set(Variable::named("y"), Word{var_x(1, 2)});
  phi.set(Variable::named("z"), Word{var_y(1)});

  Word t_image;
  t_image.append(var_x(2, 2));
  for (size_t i = 3; i <= n; ++i) {
    t_image.append(var_x(1, i));
    t_image.append(var_x(2, i));
  }
  t_image.append(var_b(0));
  for (size_t i = 1; i <= n; ++i) t_image.append(var_b(i));
  t_image.append(var_s(0));
  t_image.append(var_y(0));
  t_image.append(var_s(1));
  phi.set(var_t_plain(), t_image);

  Word s_image;
  for (size_t i = 2; i <= n; ++i) {
    s_image.append(var_s(i));
    s_image.append(var_y(i));
  }
  s_image.append(var_t_plain());
  s_image.append(var_b(0));
  s_image.append(var_y(0));
  s_image.append(var_x(1, 1));
  s_image.append(var_z(1, 0));
  s_image.append(var_a(1));
  s_image.append(var_z(1, 1));
  s_image.append(var_b(1));
  s_image.append(var_z(1, 2));
  phi.set(Variable::named("s"), s_image);
  return phi;
}

}  // namespace eqmon::family

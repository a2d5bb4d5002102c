#include "eqmon/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace eqmon {

FiniteMonoid FiniteMonoid::build(size_t size, std::vector<size_t> table, size_t identity_elem,
                                 std::vector<std::string> names) {
  FiniteMonoid m = build_unchecked(size, std::move(table), identity_elem, std::move(names));
  for (size_t i = 0; i < size; ++i) {
    for (size_t j = 0; j < size; ++j) {
      for (size_t k = 0; k < size; ++k) {
        if (m.mul(m.mul(i, j), k) != m.mul(i, m.mul(j, k))) {
          throw error("not associative at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + ")");
        }
      }
    }
  }
  return m;
}

FiniteMonoid FiniteMonoid::build_unchecked(size_t size, std::vector<size_t> table,
                                           size_t identity_elem, std::vector<std::string> names) {
  if (size == 0) throw error("monoid must be nonempty");
  if (table.size() != size * size) throw error("table must be size x size");
  for (size_t v : table) {
    if (v >= size) throw error("table entry out of range");
  }
  FiniteMonoid m;
  m.size_ = size;
  m.table_ = std::move(table);
  m.identity_ = identity_elem;
  for (size_t i = 0; i < size; ++i) {
    if (m.mul(m.identity_, i) != i || m.mul(i, m.identity_) != i) {
      throw error("element " + std::to_string(identity_elem) + " is not a two-sided identity");
    }
  }
  for (size_t z = 0; z < size; ++z) {
    bool is_zero = true;
    for (size_t i = 0; i < size && is_zero; ++i) {
      if (m.mul(z, i) != z || m.mul(i, z) != z) is_zero = false;
    }
    if (is_zero && size > 1) {
      m.zero_ = z;
      break;
    }
  }
  if (names.empty()) {
    for (size_t i = 0; i < size; ++i) names.push_back("e" + std::to_string(i));
  }
  if (names.size() != size) throw error("names must match size");
  m.names_ = std::move(names);
  return m;
}

std::optional<size_t> FiniteMonoid::index_of_name(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

size_t FiniteMonoid::evaluate(const Word& w, const Assignment& asg) const {
  size_t acc = identity_;
  for (Variable v : w) {
    auto it = asg.find(v);
    if (it == asg.end()) throw error("unbound variable " + v.name());
    if (it->second >= size_) throw error("assignment value out of range");
    acc = mul(acc, it->second);
  }
  return acc;
}

std::string FiniteMonoid::cayley_table_str() const {
  size_t width = 1;
  for (const auto& n : names_) width = std::max(width, n.size());
  std::ostringstream os;
  auto pad = [&](const std::string& s) {
    os << s;
    for (size_t i = s.size(); i < width + 1; ++i) os << ' ';
  };
  pad("*");
  os << "| ";
  for (const auto& n : names_) pad(n);
  os << '\n';
  for (size_t i = 0; i < width + 2 + (width + 1) * size_; ++i) os << '-';
  os << '\n';
  for (size_t i = 0; i < size_; ++i) {
    pad(names_[i]);
    os << "| ";
    for (size_t j = 0; j < size_; ++j) pad(names_[mul(i, j)]);
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<Variable> identity_vars(const Identity& id) {
  std::set<Variable> vars = content(id.lhs);
  std::set<Variable> rvars = content(id.rhs);
  vars.insert(rvars.begin(), rvars.end());
  return std::vector<Variable>(vars.begin(), vars.end());
}

}  // namespace

SatisfiesResult satisfies(const FiniteMonoid& m, const Identity& id, size_t max_vars) {
  std::vector<Variable> vars = identity_vars(id);
  if (vars.size() > max_vars) {
    throw error("identity has " + std::to_string(vars.size()) + " variables, cap is " +
                std::to_string(max_vars));
  }
  std::vector<size_t> values(vars.size(), 0);
  SatisfiesResult out;
  while (true) {
    Assignment asg;
    for (size_t i = 0; i < vars.size(); ++i) asg[vars[i]] = values[i];
    size_t l = m.evaluate(id.lhs, asg);
    size_t r = m.evaluate(id.rhs, asg);
    if (l != r) {
      out.satisfied = false;
      out.witness = asg;
      out.lhs_value = l;
      out.rhs_value = r;
      return out;
    }
    size_t i = 0;
    while (i < values.size() && ++values[i] == m.size()) {
      values[i] = 0;
      ++i;
    }
    if (i == values.size()) break;
  }
  return out;
}

std::pair<size_t, size_t> index_and_period(const FiniteMonoid& m) {
  size_t index = 1;
  size_t period = 1;
  for (size_t x = 0; x < m.size(); ++x) {
    // walk the power trajectory x, x^2, ... until it cycles
    std::vector<size_t> seen;  // seen[k] = x^{k+1}
    std::map<size_t, size_t> pos;
    size_t cur = x;
    size_t step = 1;
    while (!pos.count(cur)) {
      pos[cur] = step;
      seen.push_back(cur);
      cur = m.mul(cur, x);
      ++step;
    }
    size_t cycle_start = pos[cur];          // x^{cycle_start} = x^{step}
    size_t cycle_len = step - cycle_start;  // period of x
    index = std::max(index, cycle_start);
    period = std::lcm(period, cycle_len);
  }
  return {index, period};
}

namespace {

// Words over `alphabet` of length <= max_len, by length then lexicographic
// in alphabet order.
template <typename Fn>
void for_each_word(const std::vector<Variable>& alphabet, size_t max_len, Fn&& fn) {
  std::vector<size_t> digits;
  while (true) {
    Word w;
    for (size_t d : digits) w.append(alphabet[d]);
    if (!fn(w)) return;
    // next word: counter in base |alphabet|, carrying into longer lengths
    size_t i = digits.size();
    while (i > 0 && digits[i - 1] + 1 == alphabet.size()) {
      digits[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      if (digits.size() == max_len) return;
      digits.assign(digits.size() + 1, 0);
    } else {
      ++digits[i - 1];
    }
  }
}

}  // namespace

IsotermVerdict bounded_isoterm(const FiniteMonoid& m, const Word& w, std::optional<size_t> max_len,
                               size_t max_vars) {
  size_t bound = max_len.value_or(w.size() + 2);
  std::vector<Variable> alphabet;
  for (Variable v : content(w)) alphabet.push_back(v);
  std::optional<Word> counterexample;
  for_each_word(alphabet, bound, [&](const Word& cand) {
    if (cand == w) return true;
    if (satisfies(m, Identity{w, cand}, max_vars).satisfied) {
      counterexample = cand;
      return false;
    }
    return true;
  });
  if (counterexample) return IsotermCounterexample{*counterexample};
  return IsotermUpTo{bound};
}

namespace monoids {

namespace {

// Applies the rules as left-to-right rewrites until no rule matches.  A
// "0" anywhere collapses the word to "0".
std::string reduce_word(std::string w, const std::vector<std::pair<std::string, std::string>>& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    if (w.find('0') != std::string::npos && w != "0") {
      w = "0";
      changed = true;
      continue;
    }
    for (const auto& [lhs, rhs] : rules) {
      size_t pos = w.find(lhs);
      if (pos != std::string::npos) {
        w = w.substr(0, pos) + rhs + w.substr(pos + lhs.size());
        changed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace

FiniteMonoid from_presentation(const std::vector<std::string>& generators,
                               const std::vector<std::pair<std::string, std::string>>& rules,
                               size_t expected_size) {
  size_t cap = 10 * expected_size;
  std::vector<std::string> elems = {""};
  std::set<std::string> known = {""};
  // close under right multiplication by generators
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      std::string prod = reduce_word(elems[i] + g, rules);
      if (known.insert(prod).second) {
        elems.push_back(prod);
        if (elems.size() > cap) throw error("presentation closure exceeded cap");
      }
    }
  }
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  size_t n = elems.size();
  std::vector<size_t> table(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::string prod = reduce_word(elems[i] + elems[j], rules);
      auto it = index.find(prod);
      if (it == index.end()) throw error("closure not multiplicatively closed: " + prod);
      table[i * n + j] = it->second;
    }
  }
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(e.empty() ? "1" : e);
  return FiniteMonoid::build(n, std::move(table), 0, std::move(names));
}

FiniteMonoid trivial() { return FiniteMonoid::build(1, {0}, 0, {"1"}); }

FiniteMonoid b21() {
  return from_presentation({"a", "b"}, {{"aba", "a"}, {"bab", "b"}, {"aa", "0"}, {"bb", "0"}}, 6);
}

FiniteMonoid a21() {
  return from_presentation({"a", "b"}, {{"aba", "a"}, {"bab", "b"}, {"aa", "0"}, {"bb", "b"}}, 6);
}

namespace {

bool is_prime(size_t p) {
  if (p < 2) return false;
  for (size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

FiniteMonoid dihedral(size_t p) {
  if (!is_prime(p)) throw error("dihedral parameter must be prime");
  // element (r, f) = a^r b^f, index f*p + r
  size_t n = 2 * p;
  auto idx = [&](size_t r, size_t f) { return f * p + r; };
  std::vector<size_t> table(n * n);
  for (size_t f1 = 0; f1 < 2; ++f1) {
    for (size_t r1 = 0; r1 < p; ++r1) {
      for (size_t f2 = 0; f2 < 2; ++f2) {
        for (size_t r2 = 0; r2 < p; ++r2) {
          size_t r = f1 ? (r1 + p - r2) % p : (r1 + r2) % p;
          size_t f = f1 ^ f2;
          table[idx(r1, f1) * n + idx(r2, f2)] = idx(r, f);
        }
      }
    }
  }
  std::vector<std::string> names(n);
  for (size_t f = 0; f < 2; ++f) {
    for (size_t r = 0; r < p; ++r) {
      std::string s = r == 0 ? "" : (r == 1 ? "a" : "a" + std::to_string(r));
      if (f) s += "b";
      names[idx(r, f)] = s.empty() ? "1" : s;
    }
  }
  return FiniteMonoid::build(n, std::move(table), idx(0, 0), std::move(names));
}

FiniteMonoid quaternion() {
  // elements 2*axis + sign with axes 1, i, j, k: 1,-1,i,-i,j,-j,k,-k
  // axis multiplication with sign from the quaternion relations
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{+1, +1, +1, +1},
                                     {+1, -1, +1, -1},
                                     {+1, -1, -1, +1},
                                     {+1, +1, -1, -1}};
  size_t n = 8;
  auto idx = [](int axis, int sign) { return static_cast<size_t>(2 * axis + (sign < 0 ? 1 : 0)); };
  std::vector<size_t> table(n * n);
  for (int a1 = 0; a1 < 4; ++a1) {
    for (int s1 : {+1, -1}) {
      for (int a2 = 0; a2 < 4; ++a2) {
        for (int s2 : {+1, -1}) {
          int axis = axis_mul[a1][a2];
          int sign = s1 * s2 * sign_mul[a1][a2];
          table[idx(a1, s1) * n + idx(a2, s2)] = idx(axis, sign);
        }
      }
    }
  }
  std::vector<std::string> names = {"1", "m1", "i", "mi", "j", "mj", "k", "mk"};
  return FiniteMonoid::build(n, std::move(table), 0, std::move(names));
}

FiniteMonoid cyclic(size_t k) {
  if (k == 0) throw error("cyclic order must be positive");
  std::vector<size_t> table(k * k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) table[i * k + j] = (i + j) % k;
  }
  std::vector<std::string> names(k);
  for (size_t i = 0; i < k; ++i) names[i] = i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i));
  return FiniteMonoid::build(k, std::move(table), 0, std::move(names));
}

FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n) {
  size_t size = m.size() * n.size();
  auto idx = [&](size_t i, size_t j) { return i * n.size() + j; };
  std::vector<size_t> table(size * size);
  std::vector<std::string> names(size);
  for (size_t i1 = 0; i1 < m.size(); ++i1) {
    for (size_t j1 = 0; j1 < n.size(); ++j1) {
      names[idx(i1, j1)] = "(" + m.name_of(i1) + "," + n.name_of(j1) + ")";
      for (size_t i2 = 0; i2 < m.size(); ++i2) {
        for (size_t j2 = 0; j2 < n.size(); ++j2) {
          table[idx(i1, j1) * size + idx(i2, j2)] = idx(m.mul(i1, i2), n.mul(j1, j2));
        }
      }
    }
  }
  return FiniteMonoid::build(size, std::move(table), idx(m.identity_elem(), n.identity_elem()),
                             std::move(names));
}

FiniteMonoid by_name(const std::string& name) {
  if (name == "trivial") return trivial();
  if (name == "b21") return b21();
  if (name == "a21") return a21();
  if (name == "q8") return quaternion();
  if (name.size() > 1 && name[0] == 'd') return dihedral(std::stoul(name.substr(1)));
  if (name.size() > 1 && name[0] == 'z') return cyclic(std::stoul(name.substr(1)));
  throw error("unknown monoid name: " + name);
}

}  // namespace monoids

std::string to_json(const FiniteMonoid& m) {
  nlohmann::json j;
  j["names"] = nlohmann::json::array();
  for (size_t i = 0; i < m.size(); ++i) j["names"].push_back(m.name_of(i));
  auto rows = nlohmann::json::array();
  for (size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (size_t k = 0; k < m.size(); ++k) row.push_back(m.mul(i, k));
    rows.push_back(row);
  }
  j["table"] = rows;
  j["identity"] = m.identity_elem();
  return j.dump(2);
}

FiniteMonoid monoid_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> names = j.at("names").get<std::vector<std::string>>();
  size_t n = names.size();
  std::vector<size_t> table;
  table.reserve(n * n);
  for (const auto& row : j.at("table")) {
    for (const auto& v : row) table.push_back(v.get<size_t>());
  }
  return FiniteMonoid::build(n, std::move(table), j.at("identity").get<size_t>(), std::move(names));
}

}  // namespace eqmon

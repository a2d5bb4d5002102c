#include "eqmon/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "eqmon/family.hpp"

namespace eqmon {

size_t Partition::block_count() const {
  uint32_t mx = 0;
  for (uint32_t b : block_of) mx = std::max(mx, b + 1);
  return mx;
}

std::vector<std::vector<size_t>> Partition::blocks() const {
  std::vector<std::vector<size_t>> out(block_count());
  for (size_t i = 0; i < block_of.size(); ++i) out[block_of[i]].push_back(i);
  return out;
}

Partition Partition::canonicalize(const std::vector<uint32_t>& labels) {
  std::map<uint32_t, uint32_t> relabel;
  Partition out;
  out.block_of.reserve(labels.size());
  for (uint32_t l : labels) {
    auto [it, fresh] = relabel.emplace(l, static_cast<uint32_t>(relabel.size()));
    out.block_of.push_back(it->second);
  }
  return out;
}

Partition Partition::equality(size_t n) {
  Partition out;
  out.block_of.resize(n);
  for (size_t i = 0; i < n; ++i) out.block_of[i] = static_cast<uint32_t>(i);
  return out;
}

Partition Partition::universal(size_t n) {
  Partition out;
  out.block_of.assign(n, 0);
  return out;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '{';
  auto bs = blocks();
  for (size_t b = 0; b < bs.size(); ++b) {
    if (b) os << " | ";
    for (size_t k = 0; k < bs[b].size(); ++k) {
      if (k) os << ' ';
      os << bs[b][k];
    }
  }
  os << '}';
  return os.str();
}

std::vector<Partition> all_partitions(size_t n) {
  if (n == 0 || n > 12) throw error("all_partitions supports 1 <= n <= 12");
  std::vector<Partition> out;
  std::vector<uint32_t> rgs(n, 0);
  // enumerate restricted growth strings: rgs[i] <= 1 + max(rgs[0..i))
  while (true) {
    out.push_back(Partition{rgs});
    size_t i = n;
    bool advanced = false;
    while (i-- > 1) {
      uint32_t mx = 0;
      for (size_t k = 0; k < i; ++k) mx = std::max(mx, rgs[k]);
      if (rgs[i] <= mx) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

uint64_t bell_number(size_t n) {
  // Bell triangle
  std::vector<uint64_t> row = {1};
  for (size_t i = 0; i < n; ++i) {
    std::vector<uint64_t> next = {row.back()};
    for (uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.ground_size() != b.ground_size()) throw error("partition ground sizes differ");
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> ids;
  std::vector<uint32_t> labels(a.ground_size());
  for (size_t i = 0; i < labels.size(); ++i) {
    auto key = std::make_pair(a.block_of[i], b.block_of[i]);
    auto [it, fresh] = ids.emplace(key, static_cast<uint32_t>(ids.size()));
    labels[i] = it->second;
  }
  return Partition::canonicalize(labels);
}

Partition join(const Partition& a, const Partition& b) {
  if (a.ground_size() != b.ground_size()) throw error("partition ground sizes differ");
  size_t n = a.ground_size();
  std::vector<uint32_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = static_cast<uint32_t>(i);
  std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](size_t i, size_t j) { parent[find(static_cast<uint32_t>(i))] = find(static_cast<uint32_t>(j)); };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (a.related(i, j) || b.related(i, j)) unite(i, j);
    }
  }
  std::vector<uint32_t> labels(n);
  for (size_t i = 0; i < n; ++i) labels[i] = find(static_cast<uint32_t>(i));
  return Partition::canonicalize(labels);
}

bool finer_or_equal(const Partition& a, const Partition& b) {
  if (a.ground_size() != b.ground_size()) throw error("partition ground sizes differ");
  for (size_t i = 0; i < a.ground_size(); ++i) {
    for (size_t j = i + 1; j < a.ground_size(); ++j) {
      if (a.related(i, j) && !b.related(i, j)) return false;
    }
  }
  return true;
}

IdentitySet id_set(const Partition& pi, size_t family_n) {
  if (pi.ground_size() != (size_t{1} << family_n)) {
    throw error("partition ground size must be 2^n");
  }
  std::vector<Word> words = family::all_words(family_n);
  IdentitySet out;
  for (size_t i = 0; i < words.size(); ++i) {
    for (size_t j = i + 1; j < words.size(); ++j) {
      if (pi.related(i, j)) out.identities.push_back(Identity{words[i], words[j]});
    }
  }
  out.closed_under_symmetry = true;  // directions are applied symmetrically
  return out;
}

AntiIsoProxyReport check_antiisomorphism_proxy(size_t family_n, RewriteCache* cache) {
  AntiIsoProxyReport rep;
  rep.n = family_n;
  std::vector<Word> fam = family::all_words(family_n);
  std::vector<Partition> parts = all_partitions(fam.size());
  rep.partitions = parts.size();

  ClosureCaps caps;
  caps.max_depth = fam.size() + 2;
  caps.max_states = 4 * fam.size();
  caps.max_word_len = fam.front().size();

  // class system per partition: for each family index, the set of indices
  // reachable by exhausted closure
  std::vector<std::vector<std::set<size_t>>> systems(parts.size());
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    IdentitySet sigma = id_set(parts[pi], family_n);
    systems[pi].resize(fam.size());
    for (size_t i = 0; i < fam.size(); ++i) {
      ClosureResult cr = closure(fam[i], sigma, caps, cache);
      if (!cr.exhausted) {
        rep.classes_match = false;
        rep.detail = "closure not exhausted for partition " + parts[pi].str();
        continue;
      }
      std::set<size_t> cls;
      for (const Word& w : cr.words) {
        auto it = std::find(fam.begin(), fam.end(), w);
        if (it == fam.end()) {
          rep.classes_match = false;
          rep.detail = "closure escapes the family for partition " + parts[pi].str();
        } else {
          cls.insert(static_cast<size_t>(it - fam.begin()));
        }
      }
      systems[pi][i] = cls;
      std::set<size_t> expect;
      for (size_t j = 0; j < fam.size(); ++j) {
        if (parts[pi].related(i, j)) expect.insert(j);
      }
      if (cls != expect && rep.classes_match) {
        rep.classes_match = false;
        rep.detail = "class of word " + std::to_string(i) + " under " + parts[pi].str() +
                     " differs from the partition class";
      }
    }
  }

  for (size_t a = 0; a < parts.size() && rep.systems_distinct; ++a) {
    for (size_t b = a + 1; b < parts.size(); ++b) {
      if (systems[a] == systems[b]) {
        rep.systems_distinct = false;
        rep.detail = "partitions " + parts[a].str() + " and " + parts[b].str() +
                     " yield the same class system";
        break;
      }
    }
  }

  auto system_refines = [&](size_t a, size_t b) {
    // every class of a is contained in the matching class of b
    for (size_t i = 0; i < fam.size(); ++i) {
      for (size_t j : systems[a][i]) {
        if (!systems[b][i].count(j)) return false;
      }
    }
    return true;
  };
  for (size_t a = 0; a < parts.size() && rep.order_reversal; ++a) {
    for (size_t b = 0; b < parts.size(); ++b) {
      bool finer = finer_or_equal(parts[a], parts[b]);
      if (finer != system_refines(a, b)) {
        rep.order_reversal = false;
        rep.detail = "refinement mismatch between " + parts[a].str() + " and " + parts[b].str();
        break;
      }
    }
  }
  return rep;
}

}  // namespace eqmon

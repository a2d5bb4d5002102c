#include "eqmon/monitors.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <sstream>

#include "eqmon/family.hpp"
#include "eqmon/matcher.hpp"
#include "eqmon/parallel.hpp"
#include "eqmon/word_classify.hpp"

namespace eqmon {

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
  MonitorParams params;
  std::vector<Word> fam;
  RewriteCache cache;
  std::mutex mutex;
  MonitorReport report;

  explicit Ctx(const MonitorParams& p) : params(p), fam(family::all_words(p.n)) {}

  void violation(const std::string& instance, const std::string& detail) {
    std::lock_guard lock(mutex);
    if (report.violations.size() < 50) report.violations.push_back({instance, detail});
  }
  void bump_checks(size_t k) {
    std::lock_guard lock(mutex);
    report.checks += k;
  }
};

struct Step {
  Word result;
  size_t xi, eta;
  bool whole, idsubst;
};

// All nontrivial one-step rewrites of u under the all-pairs identity set.
// whole_matched, when given, collects per matched-side index whether any
// match (with any result) covered the whole base word.
std::vector<Step> family_steps(const Word& u, Ctx& ctx,
                               std::vector<bool>* whole_matched = nullptr) {
  std::vector<Step> out;
  if (whole_matched) whole_matched->assign(ctx.fam.size(), false);
  for (size_t xi = 0; xi < ctx.fam.size(); ++xi) {
    std::vector<Word> rhss;
    std::vector<size_t> etas;
    for (size_t eta = 0; eta < ctx.fam.size(); ++eta) {
      if (eta != xi) {
        rhss.push_back(ctx.fam[eta]);
        etas.push_back(eta);
      }
    }
    auto res = enumerate_rewrites_multi(u, ctx.fam[xi], rhss, ctx.params.limits, &ctx.cache);
    for (size_t k = 0; k < res.size(); ++k) {
      if (!res[k].complete) throw error("monitor enumeration budget exceeded");
      for (const RewriteOutcome& oc : res[k].outcomes) {
        if (whole_matched && oc.any_whole_word) (*whole_matched)[xi] = true;
        if (oc.result == u) continue;
        out.push_back({oc.result, xi, etas[k], oc.all_whole_word, oc.all_identity_subst});
      }
    }
  }
  return out;
}

// Inserts words at slots (slot s lies between positions s-1 and s); the
// inserts must be given in ascending slot order.
Word insert_at(const Word& w, const std::vector<std::pair<size_t, Word>>& inserts) {
  Word out;
  size_t k = 0;
  for (size_t pos = 0; pos <= w.size(); ++pos) {
    while (k < inserts.size() && inserts[k].first == pos) {
      out.append(inserts[k].second);
      ++k;
    }
    if (pos < w.size()) out.append(w[pos]);
  }
  if (k != inserts.size()) throw error("insert slots out of order");
  return out;
}

Word replace_range(const Word& w, size_t begin, size_t end, Variable v) {
  Word out = w.subword(0, begin);
  out.append(v);
  out.append(w.subword(end, w.size()));
  return out;
}

size_t pos_of(const Word& w, Variable v, size_t k) { return occurrence_position(w, v, k); }

Variable fresh_c() { return Variable::named("c"); }
Variable fresh_c2() { return Variable::named("cc"); }
Variable fresh_h() { return Variable::named("h"); }

// Zone boundaries of a family word: the middle section of first
// occurrences, and the tail section of second occurrences.
struct Zones {
  size_t mid_lo, mid_hi;  // positions of the first a1 and the first b_n
  size_t tail_lo, tail_hi;  // positions of the second b and the second a
};

Zones zones_of(const Word& w, size_t n) {
  Zones z;
  z.mid_lo = pos_of(w, family::var_a(1), 1);
  z.mid_hi = pos_of(w, family::var_b(n), 1);
  z.tail_lo = pos_of(w, family::var_b(0), 2);
  z.tail_hi = pos_of(w, family::var_a(0), 2);
  return z;
}

bool adjacent_positions(size_t a, size_t b) { return a + 1 == b || b + 1 == a; }

long block_index_of_position(const Word& w, size_t pos) {
  std::vector<Block> bs = blocks(w);
  for (size_t k = 0; k < bs.size(); ++k) {
    if (pos >= bs[k].begin && pos < bs[k].end) return static_cast<long>(k);
  }
  return -1;
}

std::vector<size_t> zeta_range(const Ctx& ctx) {
  std::vector<size_t> out;
  for (size_t z = 0; z < ctx.fam.size(); ++z) {
    out.push_back(z);
    if (!ctx.params.all_zeta) break;
  }
  return out;
}

// Adjacent positions (p, p+1) whose letters are distinct multiple
// variables with the given occurrence index (1 or 2, 0 for any).
std::vector<size_t> adjacent_mult_sites(const Word& w, size_t occ_index) {
  std::set<Variable> mul = multiple_vars(w);
  std::map<Variable, size_t> seen;
  std::vector<size_t> occ_idx(w.size());
  for (size_t i = 0; i < w.size(); ++i) occ_idx[i] = ++seen[w[i]];
  std::vector<size_t> out;
  for (size_t p = 0; p + 1 < w.size(); ++p) {
    if (!mul.count(w[p]) || !mul.count(w[p + 1]) || w[p] == w[p + 1]) continue;
    if (occ_index != 0 && (occ_idx[p] != occ_index || occ_idx[p + 1] != occ_index)) continue;
    out.push_back(p);
  }
  return out;
}

// -- the monitors ------------------------------------------------------------

void run_directly(Ctx& ctx) {
  ctx.report.notes =
      "for every base word and every ordered identity pair, enumerates all one-step rewrites of "
      "the base exhaustively; nontrivial results must be whole-word identity-substitution "
      "replacements landing on the right-hand family word, and must exist exactly when the "
      "matched side equals the base";
  auto zetas = zeta_range(ctx);
  ctx.report.instances = zetas.size();
  parallel_for(zetas.size(), [&](size_t i) {
    size_t zeta = zetas[i];
    const Word& base = ctx.fam[zeta];
    std::vector<bool> whole_matched;
    std::vector<Step> steps = family_steps(base, ctx, &whole_matched);
    ctx.bump_checks(steps.size());
    for (size_t xi = 0; xi < whole_matched.size(); ++xi) {
      // a family word matches another one whole only when they coincide
      if (whole_matched[xi] != (xi == zeta)) {
        ctx.violation("zeta=" + std::to_string(zeta) + " xi=" + std::to_string(xi),
                      whole_matched[xi] ? "unexpected whole-word match of a different family word"
                                        : "the aligned whole-word match is missing");
      }
    }
    std::set<std::pair<size_t, size_t>> seen_pairs;
    for (const Step& s : steps) {
      std::ostringstream inst;
      inst << "zeta=" << zeta << " xi=" << s.xi << " eta=" << s.eta;
      if (s.xi != zeta) {
        ctx.violation(inst.str(), "nontrivial step from a non-matching left side");
      } else if (s.result != ctx.fam[s.eta]) {
        ctx.violation(inst.str(), "nontrivial step leaves the family: " + s.result.str());
      } else if (!s.whole || !s.idsubst) {
        ctx.violation(inst.str(), "nontrivial step is not a whole-word identity substitution");
      }
      seen_pairs.insert({s.xi, s.eta});
    }
    for (size_t eta = 0; eta < ctx.fam.size(); ++eta) {
      if (eta == zeta) continue;
      if (!seen_pairs.count({zeta, eta})) {
        std::ostringstream inst;
        inst << "zeta=" << zeta << " eta=" << eta;
        ctx.violation(inst.str(), "expected whole-word rewrite to the family word is missing");
      }
    }
  });
}

void run_fic_class(Ctx& ctx) {
  ctx.report.notes =
      "every one-step rewrite of a family word under the all-pairs identity set must land in the "
      "family";
  auto zetas = zeta_range(ctx);
  ctx.report.instances = zetas.size();
  parallel_for(zetas.size(), [&](size_t i) {
    size_t zeta = zetas[i];
    std::vector<Step> steps = family_steps(ctx.fam[zeta], ctx);
    ctx.bump_checks(steps.size());
    for (const Step& s : steps) {
      if (std::find(ctx.fam.begin(), ctx.fam.end(), s.result) == ctx.fam.end()) {
        ctx.violation("zeta=" + std::to_string(zeta), "escapes the family: " + s.result.str());
      }
    }
  });
}

void run_three_isoterms(Ctx& ctx) {
  ctx.report.notes =
      "hypothesis words: (i) one occurrence of a multiple variable replaced by a fresh letter, "
      "(ii) a length-2 factor replaced by a fresh letter, (iii) proper prefixes and suffixes; "
      "each must admit no nontrivial one-step rewrite";
  Variable h = fresh_h();
  struct Inst {
    Word u;
    std::string tag;
  };
  std::vector<Inst> insts;
  for (size_t zeta : zeta_range(ctx)) {
    const Word& base = ctx.fam[zeta];
    for (Variable c : multiple_vars(base)) {
      for (size_t occ_i = 1; occ_i <= 2; ++occ_i) {
        size_t p = pos_of(base, c, occ_i);
        insts.push_back({replace_range(base, p, p + 1, h),
                         "zeta=" + std::to_string(zeta) + " replace occ " + std::to_string(occ_i) +
                             " of " + c.name()});
      }
    }
    for (size_t p = 0; p + 2 <= base.size(); p += ctx.params.site_stride) {
      insts.push_back({replace_range(base, p, p + 2, h),
                       "zeta=" + std::to_string(zeta) + " replace factor at " + std::to_string(p)});
    }
    for (size_t k = 1; k < base.size(); k += ctx.params.slot_stride) {
      insts.push_back({base.subword(0, k), "zeta=" + std::to_string(zeta) + " prefix " + std::to_string(k)});
      insts.push_back(
          {base.subword(base.size() - k, base.size()), "zeta=" + std::to_string(zeta) + " suffix " + std::to_string(k)});
    }
  }
  if (insts.size() > ctx.params.max_instances) insts.resize(ctx.params.max_instances);
  ctx.report.instances = insts.size();
  parallel_for(insts.size(), [&](size_t i) {
    std::vector<Step> steps = family_steps(insts[i].u, ctx);
    ctx.bump_checks(steps.size() + 1);
    for (const Step& s : steps) {
      ctx.violation(insts[i].tag, "admits a nontrivial rewrite to " + s.result.str());
    }
  });
}

// conclusion shared by the insertion monitors: deleting the fresh
// variables from every one-step result recovers the base word
void check_conclusion(Ctx& ctx, const Word& u, const Word& base, const std::set<Variable>& fresh,
                      const std::string& tag) {
  std::vector<Step> steps = family_steps(u, ctx);
  ctx.bump_checks(steps.size() + 1);
  for (const Step& s : steps) {
    if (remove(s.result, fresh) != base) {
      ctx.violation(tag, "projection of " + s.result.str() + " is not the base word");
    }
  }
}

void run_u_C(Ctx& ctx) {
  ctx.report.notes =
      "hypothesis words: a fresh variable inserted twice with at least one occurrence inside the "
      "first-occurrence middle zone or the second-occurrence tail zone, all length>1 factors "
      "unique; slot strides subsample the insertion pairs";
  Variable c = fresh_c();
  struct Inst {
    Word u;
    std::string tag;
  };
  std::vector<Inst> insts;
  for (size_t zeta : zeta_range(ctx)) {
    const Word& base = ctx.fam[zeta];
    Zones z = zones_of(base, ctx.params.n);
    auto in_zone_slot = [&](size_t s) {
      // a slot strictly inside a zone puts the letter strictly between the ends
      return (s > z.mid_lo + 1 && s <= z.mid_hi) || (s > z.tail_lo + 1 && s <= z.tail_hi);
    };
    for (size_t i = 0; i <= base.size(); i += ctx.params.slot_stride) {
      for (size_t j = i; j <= base.size(); j += ctx.params.slot_stride) {
        if (!in_zone_slot(i) && !in_zone_slot(j)) continue;
        Word u = insert_at(base, {{i, Word{c}}, {j, Word{c}}});
        if (longest_repeated_factor(u) > 1) continue;
        std::ostringstream tag;
        tag << "zeta=" << zeta << " slots " << i << "," << j;
        insts.push_back({std::move(u), tag.str()});
        if (insts.size() >= ctx.params.max_instances) break;
      }
      if (insts.size() >= ctx.params.max_instances) break;
    }
  }
  ctx.report.instances = insts.size();
  parallel_for(insts.size(), [&](size_t i) {
    Word base = remove(insts[i].u, {c});
    check_conclusion(ctx, insts[i].u, base, {c}, insts[i].tag);
  });
}

void run_u_ch(Ctx& ctx) {
  ctx.report.notes =
      "hypothesis words: a fresh variable c inserted between an adjacent same-index pair of "
      "multiple variables, its other occurrence forming a one-letter block next to a fresh simple "
      "letter h; block-linear instances only";
  Variable c = fresh_c();
  Variable h = fresh_h();
  struct Inst {
    Word u;
    std::string tag;
  };
  std::vector<Inst> insts;
  for (size_t zeta : zeta_range(ctx)) {
    const Word& base = ctx.fam[zeta];
    std::set<Variable> sim = simple_vars(base);
    for (size_t occ_i : {size_t{1}, size_t{2}}) {
      std::vector<size_t> sites = adjacent_mult_sites(base, occ_i);
      for (size_t si = 0; si < sites.size(); si += ctx.params.site_stride) {
        size_t p = sites[si];
        // the other occurrence of c forms a block [c] beside a simple letter
        for (size_t q = 0; q < base.size(); q += ctx.params.slot_stride) {
          if (!sim.count(base[q])) continue;
          for (bool before : {true, false}) {
            // occ 1 at the site needs the block occurrence after it, and
            // conversely
            size_t block_slot = before ? q : q + 1;
            Word ins = before ? Word{h, c} : Word{c, h};
            if (occ_i == 1 && block_slot <= p + 1) continue;
            if (occ_i == 2 && block_slot > p) continue;
            std::vector<std::pair<size_t, Word>> inserts;
            if (block_slot <= p) {
              inserts = {{block_slot, ins}, {p + 1, Word{c}}};
            } else {
              inserts = {{p + 1, Word{c}}, {block_slot, ins}};
            }
            Word u = insert_at(base, inserts);
            if (!is_block_linear(u)) continue;
            std::ostringstream tag;
            tag << "zeta=" << zeta << " site " << p << " occ " << occ_i << " block at " << q
                << (before ? " (h before)" : " (h after)");
            insts.push_back({std::move(u), tag.str()});
          }
        }
      }
    }
  }
  if (insts.size() > ctx.params.max_instances) insts.resize(ctx.params.max_instances);
  ctx.report.instances = insts.size();
  parallel_for(insts.size(), [&](size_t i) {
    Word base = remove(insts[i].u, {c, h});
    check_conclusion(ctx, insts[i].u, base, {c, h}, insts[i].tag);
  });
}

void run_adj_2x2c2y(Ctx& ctx) {
  ctx.report.notes =
      "hypothesis words: c inserted between adjacent second occurrences x, y with its first "
      "occurrence earlier, subject to the per-case adjacency and block conditions; block-linear "
      "instances only";
  Variable c = fresh_c();
  struct Inst {
    Word u;
    std::string tag;
  };
  std::vector<Inst> insts;
  for (size_t zeta : zeta_range(ctx)) {
    const Word& base = ctx.fam[zeta];
    Variable a0 = family::var_a(0);
    Variable b0 = family::var_b(0);
    std::vector<size_t> sites = adjacent_mult_sites(base, 2);
    for (size_t si = 0; si < sites.size(); si += ctx.params.site_stride) {
      size_t p = sites[si];
      Variable x = base[p];
      Variable y = base[p + 1];
      for (size_t s = 0; s <= p; s += ctx.params.slot_stride) {
        Word u = insert_at(base, {{s, Word{c}}, {p + 1, Word{c}}});
        if (!is_block_linear(u)) continue;
        size_t c1 = pos_of(u, c, 1);
        size_t x1 = pos_of(u, x, 1);
        size_t y1 = pos_of(u, y, 1);
        bool ok;
        if (x == b0) {
          ok = y != a0 && block_index_of_position(u, c1) != block_index_of_position(u, x1) &&
               !adjacent_positions(c1, y1);
        } else if (y == a0) {
          ok = block_index_of_position(u, c1) != block_index_of_position(u, y1) &&
               !adjacent_positions(c1, x1);
        } else {
          ok = !adjacent_positions(c1, x1) && !adjacent_positions(c1, y1);
        }
        if (!ok) continue;
        std::ostringstream tag;
        tag << "zeta=" << zeta << " site " << p << " first-slot " << s;
        insts.push_back({std::move(u), tag.str()});
      }
    }
  }
  if (insts.size() > ctx.params.max_instances) insts.resize(ctx.params.max_instances);
  ctx.report.instances = insts.size();
  parallel_for(insts.size(), [&](size_t i) {
    Word base = remove(insts[i].u, {c});
    check_conclusion(ctx, insts[i].u, base, {c}, insts[i].tag);
  });
}

void run_adj_1x1c1y(Ctx& ctx) {
  ctx.report.notes =
      "hypothesis words: c inserted between adjacent first occurrences x, y with its second "
      "occurrence later and not adjacent to the second occurrences of x or y; block-linear "
      "instances only";
  Variable c = fresh_c();
  struct Inst {
    Word u;
    std::string tag;
  };
  std::vector<Inst> insts;
  for (size_t zeta : zeta_range(ctx)) {
    const Word& base = ctx.fam[zeta];
    std::vector<size_t> sites = adjacent_mult_sites(base, 1);
    for (size_t si = 0; si < sites.size(); si += ctx.params.site_stride) {
      size_t p = sites[si];
      Variable x = base[p];
      Variable y = base[p + 1];
      for (size_t s = p + 2; s <= base.size(); s += ctx.params.slot_stride) {
        Word u = insert_at(base, {{p + 1, Word{c}}, {s, Word{c}}});
        if (!is_block_linear(u)) continue;
        size_t c2 = pos_of(u, c, 2);
        size_t x2 = pos_of(u, x, 2);
        size_t y2 = pos_of(u, y, 2);
        if (adjacent_positions(c2, x2) || adjacent_positions(c2, y2)) continue;
        std::ostringstream tag;
        tag << "zeta=" << zeta << " site " << p << " second-slot " << s;
        insts.push_back({std::move(u), tag.str()});
      }
    }
  }
  if (insts.size() > ctx.params.max_instances) insts.resize(ctx.params.max_instances);
  ctx.report.instances = insts.size();
  parallel_for(insts.size(), [&](size_t i) {
    Word base = remove(insts[i].u, {c});
    check_conclusion(ctx, insts[i].u, base, {c}, insts[i].tag);
  });
}

void run_cor_ix1hiy(Ctx& ctx) {
  ctx.report.notes =
      "hypothesis words: a fresh simple letter inserted between two distinct adjacent multiple "
      "variables";
  Variable h = fresh_h();
  struct Inst {
    Word u;
    std::string tag;
  };
  std::vector<Inst> insts;
  for (size_t zeta : zeta_range(ctx)) {
    const Word& base = ctx.fam[zeta];
    std::vector<size_t> sites = adjacent_mult_sites(base, 0);
    for (size_t si = 0; si < sites.size(); si += ctx.params.site_stride) {
      size_t p = sites[si];
      Word u = insert_at(base, {{p + 1, Word{h}}});
      std::ostringstream tag;
      tag << "zeta=" << zeta << " slot " << p + 1;
      insts.push_back({std::move(u), tag.str()});
    }
  }
  if (insts.size() > ctx.params.max_instances) insts.resize(ctx.params.max_instances);
  ctx.report.instances = insts.size();
  parallel_for(insts.size(), [&](size_t i) {
    Word base = remove(insts[i].u, {h});
    check_conclusion(ctx, insts[i].u, base, {h}, insts[i].tag);
  });
}

void run_adj_2c1c2(Ctx& ctx) {
  ctx.report.notes =
      "hypothesis words: c1 c2 inserted between adjacent second occurrences x, y with the first "
      "occurrence of c1 in the block of the first y and that of c2 in the block of the first x";
  Variable c1 = fresh_c();
  Variable c2 = fresh_c2();
  struct Inst {
    Word u;
    std::string tag;
  };
  std::vector<Inst> insts;
  for (size_t zeta : zeta_range(ctx)) {
    const Word& base = ctx.fam[zeta];
    std::vector<Block> bs = blocks(base);
    auto block_of_pos = [&](size_t pos) -> const Block* {
      for (const Block& b : bs) {
        if (pos >= b.begin && pos < b.end) return &b;
      }
      return nullptr;
    };
    std::vector<size_t> sites = adjacent_mult_sites(base, 2);
    for (size_t si = 0; si < sites.size(); si += ctx.params.site_stride) {
      size_t p = sites[si];
      Variable x = base[p];
      Variable y = base[p + 1];
      const Block* bx = block_of_pos(pos_of(base, x, 1));
      const Block* by = block_of_pos(pos_of(base, y, 1));
      if (!bx || !by) continue;
      // a fresh multiple letter at the edge slot of a block still joins it
      for (size_t s1 = by->begin; s1 <= by->end; s1 += ctx.params.slot_stride) {
        for (size_t s2 = bx->begin; s2 <= bx->end; s2 += ctx.params.slot_stride) {
          if (s1 > p || s2 > p) continue;
          std::vector<std::pair<size_t, Word>> inserts;
          if (s1 == s2) continue;
          if (s1 < s2) {
            inserts = {{s1, Word{c1}}, {s2, Word{c2}}, {p + 1, Word{c1, c2}}};
          } else {
            inserts = {{s2, Word{c2}}, {s1, Word{c1}}, {p + 1, Word{c1, c2}}};
          }
          Word u = insert_at(base, inserts);
          std::ostringstream tag;
          tag << "zeta=" << zeta << " site " << p << " c1-slot " << s1 << " c2-slot " << s2;
          insts.push_back({std::move(u), tag.str()});
        }
      }
    }
  }
  if (insts.size() > ctx.params.max_instances) insts.resize(ctx.params.max_instances);
  ctx.report.instances = insts.size();
  parallel_for(insts.size(), [&](size_t i) {
    Word base = remove(insts[i].u, {c1, c2});
    check_conclusion(ctx, insts[i].u, base, {c1, c2}, insts[i].tag);
  });
}

void run_adj_1c1c2(Ctx& ctx) {
  ctx.report.notes =
      "hypothesis words: c1 c2 inserted between adjacent first occurrences x, y with the second "
      "occurrence of c1 adjacent to the second y and that of c2 adjacent to the second x";
  Variable c1 = fresh_c();
  Variable c2 = fresh_c2();
  struct Inst {
    Word u;
    std::string tag;
  };
  std::vector<Inst> insts;
  for (size_t zeta : zeta_range(ctx)) {
    const Word& base = ctx.fam[zeta];
    std::vector<size_t> sites = adjacent_mult_sites(base, 1);
    for (size_t si = 0; si < sites.size(); si += ctx.params.site_stride) {
      size_t p = sites[si];
      Variable x = base[p];
      Variable y = base[p + 1];
      size_t x2 = pos_of(base, x, 2);
      size_t y2 = pos_of(base, y, 2);
      for (bool c1_before : {true, false}) {
        for (bool c2_before : {true, false}) {
          size_t s1 = c1_before ? y2 : y2 + 1;  // slot adjacent to the second y
          size_t s2 = c2_before ? x2 : x2 + 1;
          if (s1 <= p + 1 || s2 <= p + 1 || s1 == s2) continue;
          std::vector<std::pair<size_t, Word>> inserts;
          if (s1 < s2) {
            inserts = {{p + 1, Word{c1, c2}}, {s1, Word{c1}}, {s2, Word{c2}}};
          } else {
            inserts = {{p + 1, Word{c1, c2}}, {s2, Word{c2}}, {s1, Word{c1}}};
          }
          Word u = insert_at(base, inserts);
          std::ostringstream tag;
          tag << "zeta=" << zeta << " site " << p << (c1_before ? " c1-before" : " c1-after")
              << (c2_before ? " c2-before" : " c2-after");
          insts.push_back({std::move(u), tag.str()});
        }
      }
    }
  }
  if (insts.size() > ctx.params.max_instances) insts.resize(ctx.params.max_instances);
  ctx.report.instances = insts.size();
  parallel_for(insts.size(), [&](size_t i) {
    Word base = remove(insts[i].u, {c1, c2});
    check_conclusion(ctx, insts[i].u, base, {c1, c2}, insts[i].tag);
  });
}

}  // namespace

std::vector<std::string> monitor_names() {
  return {"directly",   "fic_class",   "three_isoterms", "u_C",       "u_ch",
          "adj_2x2c2y", "adj_1x1c1y",  "cor_ix1hiy",     "adj_2c1c2", "adj_1c1c2"};
}

MonitorReport monitor_lemma(const std::string& name, const MonitorParams& params) {
  Ctx ctx(params);
  ctx.report.name = name;
  ctx.report.n = params.n;
  auto t0 = Clock::now();
  if (name == "directly") {
    run_directly(ctx);
  } else if (name == "fic_class") {
    run_fic_class(ctx);
  } else if (name == "three_isoterms") {
    run_three_isoterms(ctx);
  } else if (name == "u_C") {
    run_u_C(ctx);
  } else if (name == "u_ch") {
    run_u_ch(ctx);
  } else if (name == "adj_2x2c2y") {
    run_adj_2x2c2y(ctx);
  } else if (name == "adj_1x1c1y") {
    run_adj_1x1c1y(ctx);
  } else if (name == "cor_ix1hiy") {
    run_cor_ix1hiy(ctx);
  } else if (name == "adj_2c1c2") {
    run_adj_2c1c2(ctx);
  } else if (name == "adj_1c1c2") {
    run_adj_1c1c2(ctx);
  } else {
    throw error("unknown monitor: " + name);
  }
  ctx.report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return ctx.report;
}

}  // namespace eqmon

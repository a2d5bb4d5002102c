#include "eqmon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "eqmon/factor_monoid.hpp"
#include "eqmon/family.hpp"
#include "eqmon/lattice.hpp"
#include "eqmon/matcher.hpp"
#include "eqmon/monitors.hpp"
#include "eqmon/partition.hpp"
#include "eqmon/reduce.hpp"
#include "eqmon/word_classify.hpp"

namespace eqmon {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  Report& report;
  CheckRecord rec;
  Clock::time_point t0 = Clock::now();
  int exceptions_at_entry = std::uncaught_exceptions();

  Checker(Report& r, std::string name) : report(r) {
    rec.name = std::move(name);
    rec.status = "pass";
  }
  void fail(const std::string& witness) {
    rec.status = "fail";
    if (rec.witness.empty()) rec.witness = witness;
  }
  void expect(bool ok, const std::string& witness) {
    if (!ok) fail(witness);
  }
  void count(const std::string& key, long long v) { rec.counts[key] = v; }
  ~Checker() {
    if (std::uncaught_exceptions() > exceptions_at_entry) {
      rec.status = "fail";
      if (rec.witness.empty()) rec.witness = "aborted by an exception";
    }
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    report.checks.push_back(rec);
  }
};

size_t named(const FiniteMonoid& m, const std::string& name) {
  auto idx = m.index_of_name(name);
  if (!idx) throw error("element " + name + " not found");
  return *idx;
}

bool is_abelian(const FiniteMonoid& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m.size(); ++j) {
      if (m.mul(i, j) != m.mul(j, i)) return false;
    }
  }
  return true;
}

void criterion_builtins(Report& report, const VerifyOptions& options) {
  Checker c(report, "1 built-in monoids");
  FiniteMonoid b21 = options.b21_override ? *options.b21_override : monoids::b21();
  c.expect(b21.size() == 6, "b21 size");
  c.expect(b21.zero_elem().has_value(), "b21 zero");
  size_t a = named(b21, "a"), b = named(b21, "b");
  size_t zero = *b21.zero_elem();
  c.expect(b21.mul(b21.mul(a, b), a) == a, "b21: aba = a");
  c.expect(b21.mul(b21.mul(b, a), b) == b, "b21: bab = b");
  c.expect(b21.mul(a, a) == zero && b21.mul(b, b) == zero, "b21: aa = bb = 0");

  FiniteMonoid a21 = monoids::a21();
  c.expect(a21.size() == 6, "a21 size");
  size_t aa = named(a21, "a"), ab = named(a21, "b");
  c.expect(a21.mul(a21.mul(aa, ab), aa) == aa, "a21: aba = a");
  c.expect(a21.mul(a21.mul(ab, aa), ab) == ab, "a21: bab = b");
  c.expect(a21.zero_elem() && a21.mul(aa, aa) == *a21.zero_elem(), "a21: aa = 0");
  c.expect(a21.mul(ab, ab) == ab, "a21: bb = b");

  for (size_t p : {3u, 5u}) {
    FiniteMonoid d = monoids::dihedral(p);
    c.expect(d.size() == 2 * p, "d" + std::to_string(p) + " size");
    c.expect(!is_abelian(d), "d" + std::to_string(p) + " non-abelian");
  }
  c.expect(monoids::quaternion().size() == 8, "q8 size");
  c.count("monoids", 5);
}

void criterion_group_identities(Report& report) {
  Checker c(report, "2 group identity checks");
  std::vector<Identity> two = family::two_identities();
  FiniteMonoid q8 = monoids::quaternion();
  for (const Identity& id : two) {
    c.expect(satisfies(q8, id).satisfied, "q8 must satisfy " + id.str());
  }
  for (size_t p : {3u, 5u}) {
    FiniteMonoid d = monoids::dihedral(p);
    for (const Identity& id : two) {
      c.expect(!satisfies(d, id).satisfied, "d" + std::to_string(p) + " must violate " + id.str());
    }
    Assignment asg;
    asg[Variable::named("x")] = named(d, "ab");
    asg[Variable::named("y")] = named(d, "b");
    asg[Variable::named("z")] = named(d, "1");
    size_t lhs = d.evaluate(Word::parse("x y z x y"), asg);
    size_t rhs = d.evaluate(Word::parse("y x z y x"), asg);
    c.expect(lhs == named(d, "a2"), "witness value of xyzxy in d" + std::to_string(p));
    std::string apm2 = p - 2 == 1 ? "a" : "a" + std::to_string(p - 2);
    c.expect(rhs == named(d, apm2), "witness value of yxzyx in d" + std::to_string(p));
  }
  c.count("identities", 2);
}

void criterion_isoterms(Report& report) {
  Checker c(report, "3 bounded isoterm checks");
  FiniteMonoid b21 = monoids::b21();
  for (const char* w : {"x y z x y", "x y z y x"}) {
    IsotermVerdict v = bounded_isoterm(b21, Word::parse(w), 7);
    c.expect(std::holds_alternative<IsotermUpTo>(v), std::string(w) + " must be an isoterm up to 7");
  }
  IsotermVerdict v = bounded_isoterm(b21, Word::parse("x x"), 3);
  bool ok = std::holds_alternative<IsotermCounterexample>(v) &&
            std::get<IsotermCounterexample>(v).word == Word::parse("x x x");
  c.expect(ok, "xx must fail with counterexample xxx");
  c.count("bound", 7);
}

void criterion_factor_decisions(Report& report, const VerifyOptions& options) {
  Checker c(report, "4 factor monoid decisions");
  size_t n = options.n;
  std::vector<Word> fam = family::all_words(n);
  FactorMonoid probe({family::probe_word()});
  size_t pairs = 0;
  for (const Word& u : fam) {
    for (const Word& v : fam) {
      DecideResult r = probe.decide_identity(Identity{u, v});
      if (!r.satisfied) {
        c.fail("probe monoid must satisfy the family identity pair " + std::to_string(pairs));
      }
      ++pairs;
    }
  }
  c.count("family_pairs", static_cast<long long>(pairs));

  FactorMonoid two({Word::parse("x y z x y"), Word::parse("x y z y x")});
  std::vector<Identity> five = family::five_identities();
  for (size_t k = 0; k + 1 < five.size(); ++k) {
    c.expect(two.decide_identity(five[k]).satisfied,
             "defining identity " + std::to_string(k + 1) + " must hold");
  }
  c.expect(!two.decide_identity(five[4]).satisfied, "the fifth identity must fail");
}

void criterion_one_step(Report& report, const VerifyOptions& options) {
  Checker c(report, "5 one-step rewrite sweep");
  MonitorParams params;
  params.n = options.n;
  MonitorReport rep = monitor_lemma("directly", params);
  c.count("instances", static_cast<long long>(rep.instances));
  c.count("checks", static_cast<long long>(rep.checks));
  c.count("violations", static_cast<long long>(rep.violations.size()));
  if (!rep.violations.empty()) {
    c.fail(rep.violations.front().instance + ": " + rep.violations.front().detail);
  }
}

void criterion_closure_classes(Report& report, const VerifyOptions& options) {
  Checker c(report, "6 closure classes and lattice proxies");
  RewriteCache cache;
  AntiIsoProxyReport rep = check_antiisomorphism_proxy(options.n, &cache);
  c.count("partitions", static_cast<long long>(rep.partitions));
  c.expect(rep.classes_match, rep.detail);
  c.expect(rep.systems_distinct, rep.detail);
  c.expect(rep.order_reversal, rep.detail);
}

// random word over an alphabet, geometric-ish length in [0, max_len]
Word random_word(std::mt19937& rng, const std::vector<Variable>& alphabet, size_t max_len,
                 size_t min_len = 0) {
  std::uniform_int_distribution<size_t> len_dist(min_len, max_len);
  size_t len = len_dist(rng);
  Word w;
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  for (size_t i = 0; i < len; ++i) w.append(alphabet[pick(rng)]);
  return w;
}

void criterion_cross_validation(Report& report) {
  Checker c(report, "7 decision cross-validation");
  std::mt19937 rng(20240817);
  std::vector<Variable> alphabet = {Variable::named("x"), Variable::named("y"),
                                    Variable::named("z")};
  size_t agreements = 0;
  for (size_t trial = 0; trial < 220; ++trial) {
    // a word set of total length <= 6
    std::vector<Word> words;
    size_t budget = 6;
    std::uniform_int_distribution<size_t> nwords(1, 2);
    size_t k = nwords(rng);
    for (size_t i = 0; i < k && budget > 0; ++i) {
      Word w = random_word(rng, alphabet, std::min<size_t>(budget, 4), 1);
      budget -= w.size();
      words.push_back(std::move(w));
    }
    FactorMonoid fm(words);
    Identity id{random_word(rng, alphabet, 4), random_word(rng, alphabet, 4)};
    bool decided = fm.decide_identity(id).satisfied;
    bool brute = satisfies(fm.materialize(), id).satisfied;
    if (decided != brute) {
      std::ostringstream os;
      os << "disagreement on " << id.str() << " over {";
      for (const Word& w : words) os << ' ' << w.str();
      os << " }: decided " << decided << ", brute force " << brute;
      c.fail(os.str());
    } else {
      ++agreements;
    }
  }
  c.count("instances", static_cast<long long>(agreements));
}

std::string subst_key(const Substitution& s) { return s.str(); }

void criterion_matcher_completeness(Report& report) {
  Checker c(report, "8 matcher completeness");
  std::mt19937 rng(911);
  std::vector<Variable> target_alpha = {Variable::named("a"), Variable::named("b"),
                                        Variable::named("d")};
  std::vector<Variable> pattern_alpha = {Variable::named("x"), Variable::named("y"),
                                         Variable::named("z"), Variable::named("w")};
  size_t instances = 0;
  for (size_t trial = 0; trial < 520; ++trial) {
    Word target = random_word(rng, target_alpha, 6);
    Word pattern = random_word(rng, pattern_alpha, 4, 1);
    ++instances;

    // oracle: all substitutions with images among the factors of target
    std::vector<Word> images;
    images.push_back(Word{});
    for (size_t i = 0; i < target.size(); ++i) {
      for (size_t j = i + 1; j <= target.size(); ++j) {
        Word f = target.subword(i, j);
        if (std::find(images.begin(), images.end(), f) == images.end()) images.push_back(f);
      }
    }
    std::vector<Variable> vars;
    for (Variable v : content(pattern)) vars.push_back(v);
    std::set<std::string> oracle;
    std::vector<size_t> choice(vars.size(), 0);
    while (true) {
      Substitution s;
      for (size_t i = 0; i < vars.size(); ++i) s.set(vars[i], images[choice[i]]);
      if (s.apply(pattern) == target) oracle.insert(subst_key(s));
      size_t i = 0;
      while (i < choice.size() && ++choice[i] == images.size()) {
        choice[i] = 0;
        ++i;
      }
      if (i == choice.size()) break;
    }

    std::set<std::string> found;
    for (const Match& m : match_whole(pattern, target)) {
      found.insert(subst_key(m.subst));
    }
    if (found != oracle) {
      c.fail("whole-match sets differ for " + pattern.str() + " on " + target.str());
      break;
    }

    // factor matches against per-span whole matches
    std::set<std::string> factor_oracle;
    for (size_t s = 0; s <= target.size(); ++s) {
      for (size_t e = s; e <= target.size(); ++e) {
        for (const Match& m : match_whole(pattern, target.subword(s, e))) {
          factor_oracle.insert(std::to_string(s) + ":" + std::to_string(e) + ":" +
                               subst_key(m.subst));
        }
      }
    }
    std::set<std::string> factor_found;
    for (const Match& m : match_factor(pattern, target)) {
      factor_found.insert(std::to_string(m.begin) + ":" + std::to_string(m.end) + ":" +
                          subst_key(m.subst));
    }
    if (factor_found != factor_oracle) {
      c.fail("factor-match sets differ for " + pattern.str() + " on " + target.str());
      break;
    }
  }
  c.count("instances", static_cast<long long>(instances));
}

void criterion_family_invariants(Report& report) {
  Checker c(report, "9 family invariants");
  for (size_t n : {size_t{2}, size_t{3}}) {
    std::vector<Word> fam = family::all_words(n);
    c.expect(fam.size() == (size_t{1} << n), "family size 2^n");
    std::set<Word> distinct(fam.begin(), fam.end());
    c.expect(distinct.size() == fam.size(), "family words pairwise distinct");
    for (const Word& w : fam) {
      // the displayed products give 6n + (4n+2) + (2n+3) + (8n+3) letters
      c.expect(w.size() == 20 * n + 8, "length 20n+8 at n=" + std::to_string(n));
      c.expect(content(w).size() == 12 * n + 5, "alphabet 12n+5");
      c.expect(simple_vars(w).size() == 4 * n + 2, "simple variable count 4n+2");
      for (Variable v : multiple_vars(w)) {
        c.expect(occ(w, v) == 2, "multiple variables occur exactly twice");
      }
      c.expect(longest_repeated_factor(w) <= 1, "factors of length > 1 are unique");
      // square-freeness
      bool square = false;
      for (size_t i = 0; i < w.size() && !square; ++i) {
        for (size_t l = 1; i + 2 * l <= w.size() && !square; ++l) {
          if (w.subword(i, i + l) == w.subword(i + l, i + 2 * l)) square = true;
        }
      }
      c.expect(!square, "square-freeness");
      std::set<Variable> keep = {family::var_b(0), family::var_s(0), family::var_t_plain(),
                                 family::var_y(0)};
      Word proj = project(w, keep);
      c.expect(proj == Word::parse("b s0 y0 t b y0"), "projection onto b, s0, t, y0");
    }
  }
  c.count("checked_n", 2);
}

void criterion_reduction(Report& report) {
  Checker c(report, "10 reduction corpus");
  std::vector<Identity> corpus;
  std::vector<Word> fam = family::all_words(2);
  corpus.push_back(Identity{fam[0], fam[1]});
  corpus.push_back(Identity{fam[0], fam[2]});
  corpus.push_back(Identity{fam[0], fam[3]});
  corpus.push_back(Identity{fam[1], fam[2]});
  corpus.push_back(Identity{fam[2], fam[3]});

  using family::c_word_pair;
  using family::Permutation;
  auto add_cpair = [&](size_t n, size_t m, size_t k, Permutation rho) {
    auto [lhs, rhs] = c_word_pair(n, m, k, rho);
    corpus.push_back(Identity{lhs, rhs});
  };
  add_cpair(1, 1, 1, Permutation::identity(3));
  add_cpair(1, 1, 1, Permutation::from_one_based({2, 1, 3}));
  add_cpair(1, 1, 1, Permutation::from_one_based({3, 2, 1}));
  add_cpair(2, 1, 1, Permutation::identity(4));
  add_cpair(1, 2, 1, Permutation::from_one_based({4, 3, 2, 1}));
  add_cpair(1, 1, 2, Permutation::identity(4));

  corpus.push_back(Identity::parse("x y t x y = x y t y x"));
  corpus.push_back(Identity::parse("c c x y t x y = c c x y t y x"));
  corpus.push_back(Identity::parse("c c c x y t x y = c c c x y t y x"));
  corpus.push_back(Identity::parse("x c c y t x y = x c c y t y x"));
  corpus.push_back(Identity::parse("x y t x y s z z = x y t y x s z z"));
  corpus.push_back(Identity::parse("x y h z t x y z = x y h z t y x z"));
  corpus.push_back(Identity::parse("x x = x x"));
  corpus.push_back(Identity::parse("x y t x y = x y t x y"));
  corpus.push_back(Identity{fam[0], fam[0]});

  FactorMonoid ref({Word::parse("x z y t x y")});
  c.count("corpus", static_cast<long long>(corpus.size()));
  size_t steps_total = 0;
  for (const Identity& id : corpus) {
    if (!ref.decide_identity(id).satisfied) {
      c.fail("corpus identity does not hold in the reference monoid: " + id.str());
      continue;
    }
    Reduction red = reduce_identity(id);
    IdentityClass cls = classify_identity(red.output);
    c.expect(cls.reduced || cls.trivial, "output not reduced for " + id.str());
    std::string why;
    c.expect(replay_reduction(red, &why), "replay failed for " + id.str() + ": " + why);
    for (const CertStep& s : red.steps) {
      ++steps_total;
      if (!ref.decide_identity(s.rule).satisfied) {
        c.fail("certificate step rule not satisfied by the reference monoid: " + s.rule.str());
      }
    }
  }
  c.count("certificate_steps", static_cast<long long>(steps_total));
}

void criterion_lattices(Report& report) {
  Checker c(report, "11 partition lattices");
  for (size_t n = 1; n <= 6; ++n) {
    c.expect(all_partitions(n).size() == bell_number(n),
             "partition count equals the Bell number at n=" + std::to_string(n));
  }
  for (size_t n = 2; n <= 5; ++n) {
    FiniteLattice eq = lattices::eq_lattice(n);
    c.expect(!lattice_axiom_violation(eq).has_value(), "lattice axioms on Eq(n)");
  }
  auto m3 = embed_lattice(lattices::m3(), 3);
  c.expect(m3.has_value() && verify_embedding(lattices::m3(), 3, *m3), "M3 embeds in Eq(3)");
  bool n5_found = false;
  for (size_t n = 2; n <= 5 && !n5_found; ++n) {
    auto emb = embed_lattice(lattices::n5(), n);
    if (emb) {
      n5_found = verify_embedding(lattices::n5(), n, *emb);
      c.count("n5_ground_size", static_cast<long long>(n));
    }
  }
  c.expect(n5_found, "N5 embeds in Eq(n) for some n <= 5");
}

void full_profile_extras(Report& report, const VerifyOptions& options) {
  {
    Checker c(report, "F1 family isoterm sweep");
    std::vector<Word> fam = family::all_words(options.n);
    FactorMonoid fm(fam);
    size_t pairs = 0;
    for (size_t i = 0; i < fam.size(); ++i) {
      for (size_t j = 0; j < fam.size(); ++j) {
        if (i == j) continue;
        ++pairs;
        if (fm.decide_identity(Identity{fam[i], fam[j]}).satisfied) {
          c.fail("family words must be inequivalent over their own factor monoid");
        }
      }
    }
    // transposition neighbourhood: every adjacent swap is violated
    RewriteLimits limits;
    limits.max_word_len = 4 * fam.front().size();
    size_t swaps = 0;
    for (const Word& w : fam) {
      std::vector<Word> neighbours = invertible_neighbours(w);
      swaps += neighbours.size();
      auto res = enumerate_rewrites_multi(w, w, neighbours, limits, nullptr);
      for (size_t k = 0; k < res.size(); ++k) {
        bool witnessed = false;
        for (const RewriteOutcome& oc : res[k].outcomes) {
          if (oc.result != w) witnessed = true;
        }
        if (!witnessed) c.fail("swap neighbour not separated: " + neighbours[k].str());
      }
    }
    c.count("pairs", static_cast<long long>(pairs));
    c.count("swaps", static_cast<long long>(swaps));
  }
  {
    Checker c(report, "F2 one-step sweep at n=3");
    MonitorParams params;
    params.n = 3;
    params.all_zeta = false;
    MonitorReport rep = monitor_lemma("directly", params);
    c.count("instances", static_cast<long long>(rep.instances));
    c.count("violations", static_cast<long long>(rep.violations.size()));
    if (!rep.violations.empty()) {
      c.fail(rep.violations.front().instance + ": " + rep.violations.front().detail);
    }
  }
}

}  // namespace

Report verify_all(const VerifyOptions& options) {
  Report report;
  report.command = "verify all";
  report.params["n"] = std::to_string(options.n);
  report.params["profile"] = options.full ? "full" : "fast";

  auto guarded = [&](auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      if (!report.checks.empty() && report.checks.back().status == "fail" &&
          report.checks.back().witness == "aborted by an exception") {
        report.checks.back().witness = std::string("exception: ") + e.what();
      }
    }
  };
  guarded([&] { criterion_builtins(report, options); });
  guarded([&] { criterion_group_identities(report); });
  guarded([&] { criterion_isoterms(report); });
  guarded([&] { criterion_factor_decisions(report, options); });
  guarded([&] { criterion_one_step(report, options); });
  guarded([&] { criterion_closure_classes(report, options); });
  guarded([&] { criterion_cross_validation(report); });
  guarded([&] { criterion_matcher_completeness(report); });
  guarded([&] { criterion_family_invariants(report); });
  guarded([&] { criterion_reduction(report); });
  guarded([&] { criterion_lattices(report); });
  if (options.full) guarded([&] { full_profile_extras(report, options); });
  return report;
}

}  // namespace eqmon

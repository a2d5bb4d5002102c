#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eqmon/factor_monoid.hpp"
#include "eqmon/family.hpp"
#include "eqmon/lattice.hpp"
#include "eqmon/matcher.hpp"
#include "eqmon/monitors.hpp"
#include "eqmon/monoid.hpp"
#include "eqmon/partition.hpp"
#include "eqmon/reduce.hpp"
#include "eqmon/report.hpp"
#include "eqmon/rewrite.hpp"
#include "eqmon/verify.hpp"
#include "eqmon/word_classify.hpp"

#include "json.hpp"

namespace {

using namespace eqmon;

// Accepts the word text format, the compact all-letters form (xyzxy), and
// the family shorthand w_<bits>.
Word parse_word_arg(const std::string& text) {
  std::istringstream is(text);
  std::string token;
  Word out;
  while (is >> token) {
    if (token == "1") continue;
    if (token.size() > 2 && token.rfind("w_", 0) == 0 &&
        token.find_first_not_of("01", 2) == std::string::npos) {
      family::SignVector xi = family::SignVector::parse_bits(token.substr(2));
      out.append(family::word_w(xi.n(), xi));
      continue;
    }
    bool letters_only = true;
    for (char ch : token) {
      if (!std::isalpha(static_cast<unsigned char>(ch))) letters_only = false;
    }
    if (letters_only && token.size() > 1) {
      for (char ch : token) out.append(Variable::named(std::string(1, ch)));
    } else {
      out.append(Variable::named(token));
    }
  }
  return out;
}

Identity parse_identity_arg(const std::string& text) {
  size_t pos = text.find('=');
  if (pos == std::string::npos) throw error("identity must contain '=': " + text);
  return Identity{parse_word_arg(text.substr(0, pos)), parse_word_arg(text.substr(pos + 1))};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Word> words_from_arg(const std::string& arg) {
  // a path to a word-per-line file, or inline words separated by commas
  std::vector<Word> out;
  std::ifstream in(arg);
  if (in) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(parse_word_arg(line));
    }
    return out;
  }
  std::string current;
  std::istringstream is(arg);
  while (std::getline(is, current, ',')) {
    if (!current.empty()) out.push_back(parse_word_arg(current));
  }
  return out;
}

FiniteMonoid monoid_from_arg(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::ostringstream os;
    os << in.rdbuf();
    return monoid_from_json(os.str());
  }
  return monoids::by_name(arg);
}

int emit_report(const Report& report, bool json) {
  if (json) {
    std::cout << report.json() << "\n";
  } else {
    std::cout << report.text();
  }
  return report.overall_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for equational logic over finite monoids"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  // monoid show
  auto* monoid_cmd = app.add_subcommand("monoid", "built-in and file-backed monoids");
  auto* monoid_show = monoid_cmd->add_subcommand("show", "print the Cayley table");
  std::string monoid_name;
  monoid_show->add_option("name", monoid_name, "builtin name or JSON file")->required();

  // check
  auto* check_cmd = app.add_subcommand("check", "decide an identity over a monoid or word set");
  std::string check_monoid, check_words, check_identity;
  check_cmd->add_option("--monoid", check_monoid, "builtin name or JSON file");
  check_cmd->add_option("--words", check_words, "word set: file or comma-separated list");
  check_cmd->add_option("identity", check_identity, "identity \"<u> = <v>\"")->required();
  size_t check_max_vars = 8;
  check_cmd->add_option("--max-vars", check_max_vars, "assignment cap for table monoids");

  // factor-monoid
  auto* fm_cmd = app.add_subcommand("factor-monoid", "factor monoids of word sets");
  auto* fm_build = fm_cmd->add_subcommand("build", "build and print the element count");
  std::string fm_words;
  fm_build->add_option("words", fm_words, "word set: file or comma-separated list")->required();
  auto* fm_check = fm_cmd->add_subcommand("check", "decide an identity");
  std::string fm_check_words, fm_check_identity;
  fm_check->add_option("words", fm_check_words)->required();
  fm_check->add_option("identity", fm_check_identity)->required();
  auto* fm_isoterm = fm_cmd->add_subcommand("isoterm", "bounded isoterm scan");
  std::string fm_iso_words, fm_iso_word;
  size_t fm_iso_len = 0;
  fm_isoterm->add_option("words", fm_iso_words)->required();
  fm_isoterm->add_option("word", fm_iso_word)->required();
  fm_isoterm->add_option("--maxlen", fm_iso_len, "candidate length bound (default |w|+2)");

  // family
  auto* family_cmd = app.add_subcommand("family", "the indexed word family");
  auto* family_gen = family_cmd->add_subcommand("gen", "print one family word");
  size_t family_n = 2;
  std::string family_xi;
  family_gen->add_option("--n", family_n, "family parameter (>= 2)");
  family_gen->add_option("--xi", family_xi, "bit string, 0 keeps a pair, 1 swaps it");

  // rewrite
  auto* rewrite_cmd = app.add_subcommand("rewrite", "one-step and closure deduction");
  std::string rw_mode, rw_sigma, rw_from, rw_to;
  size_t rw_depth = 16, rw_maxlen = 256, rw_maxstates = 100000;
  rewrite_cmd->add_option("mode", rw_mode, "step | closure | derivable")->required();
  rewrite_cmd->add_option("--sigma", rw_sigma, "identity-per-line file")->required();
  rewrite_cmd->add_option("--from", rw_from, "start word")->required();
  rewrite_cmd->add_option("--to", rw_to, "goal word (derivable)");
  rewrite_cmd->add_option("--depth", rw_depth);
  rewrite_cmd->add_option("--maxlen", rw_maxlen);
  rewrite_cmd->add_option("--maxstates", rw_maxstates);

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "normalize an identity with a certificate");
  std::string reduce_id;
  reduce_cmd->add_option("identity", reduce_id)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verification suites");
  auto* verify_all_cmd = verify_cmd->add_subcommand("all", "run the acceptance criteria");
  size_t verify_n = 2;
  std::string verify_profile = "fast";
  verify_all_cmd->add_option("--n", verify_n);
  verify_all_cmd->add_option("--profile", verify_profile, "fast | full");
  auto* verify_lemma = verify_cmd->add_subcommand("lemma", "run one structural monitor");
  std::string lemma_name;
  MonitorParams lemma_params;
  bool lemma_first_base_only = false;
  verify_lemma->add_option("name", lemma_name)->required();
  verify_lemma->add_option("--n", lemma_params.n);
  verify_lemma->add_flag("--first-base-only", lemma_first_base_only,
                         "use only the first family word as the base");
  verify_lemma->add_option("--site-stride", lemma_params.site_stride);
  verify_lemma->add_option("--slot-stride", lemma_params.slot_stride);
  verify_lemma->add_option("--max-instances", lemma_params.max_instances);

  // lattice
  auto* lattice_cmd = app.add_subcommand("lattice", "equivalence lattices and embeddings");
  auto* lattice_eq = lattice_cmd->add_subcommand("eq", "list the partitions of an n-set");
  size_t lattice_n = 4;
  lattice_eq->add_option("--n", lattice_n);
  auto* lattice_embed = lattice_cmd->add_subcommand("embed", "embed a named lattice into Eq(n)");
  std::string embed_name;
  size_t embed_n = 4;
  lattice_embed->add_option("--lattice", embed_name, "chain<k>, m3, n5, boolean<k>")->required();
  lattice_embed->add_option("--n", embed_n);

  // isoterm (table monoids)
  auto* isoterm_cmd = app.add_subcommand("isoterm", "bounded isoterm scan over a table monoid");
  std::string iso_monoid, iso_word;
  size_t iso_len = 0;
  isoterm_cmd->add_option("--monoid", iso_monoid)->required();
  isoterm_cmd->add_option("word", iso_word)->required();
  isoterm_cmd->add_option("--maxlen", iso_len);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*monoid_show) {
      FiniteMonoid m = monoid_from_arg(monoid_name);
      if (json) {
        std::cout << to_json(m) << "\n";
      } else {
        std::cout << m.cayley_table_str();
      }
      return 0;
    }

    if (*check_cmd) {
      Identity id = parse_identity_arg(check_identity);
      Report report;
      report.command = "check";
      report.params["identity"] = id.str();
      CheckRecord rec;
      rec.name = "identity";
      if (!check_monoid.empty()) {
        report.params["monoid"] = check_monoid;
        FiniteMonoid m = monoid_from_arg(check_monoid);
        SatisfiesResult r = satisfies(m, id, check_max_vars);
        rec.status = r.satisfied ? "pass" : "fail";
        if (!r.satisfied) {
          std::ostringstream os;
          os << "violated under {";
          for (const auto& [v, e] : r.witness) os << ' ' << v.name() << "->" << m.name_of(e);
          os << " }: " << m.name_of(r.lhs_value) << " vs " << m.name_of(r.rhs_value);
          rec.witness = os.str();
        }
      } else if (!check_words.empty()) {
        report.params["words"] = check_words;
        FactorMonoid fm(words_from_arg(check_words));
        DecideResult r = fm.decide_identity(id);
        rec.status = r.satisfied ? "pass" : "fail";
        if (!r.satisfied) rec.witness = r.witness->str();
      } else {
        std::cerr << "check requires --monoid or --words\n";
        return 2;
      }
      report.checks.push_back(rec);
      if (json) return emit_report(report, true);
      std::cout << (rec.status == "pass" ? "satisfied" : "violated") << "\n";
      if (!rec.witness.empty()) std::cout << rec.witness << "\n";
      return rec.status == "pass" ? 0 : 1;
    }

    if (*fm_build) {
      FactorMonoid fm(words_from_arg(fm_words));
      if (json) {
        nlohmann::ordered_json j;
        j["words"] = nlohmann::ordered_json::array();
        for (const Word& w : fm.words()) j["words"].push_back(w.str());
        j["elements"] = fm.element_count();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "elements: " << fm.element_count() << "\n";
      }
      return 0;
    }
    if (*fm_check) {
      FactorMonoid fm(words_from_arg(fm_check_words));
      Identity id = parse_identity_arg(fm_check_identity);
      DecideResult r = fm.decide_identity(id);
      if (json) {
        nlohmann::ordered_json j;
        j["identity"] = id.str();
        j["satisfied"] = r.satisfied;
        if (!r.satisfied) j["witness"] = r.witness->str();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (r.satisfied ? "satisfied" : "violated") << "\n";
        if (!r.satisfied) std::cout << "witness: " << r.witness->str() << "\n";
      }
      return r.satisfied ? 0 : 1;
    }
    if (*fm_isoterm) {
      FactorMonoid fm(words_from_arg(fm_iso_words));
      Word w = parse_word_arg(fm_iso_word);
      IsotermVerdict v =
          fm.bounded_isoterm(w, fm_iso_len == 0 ? std::optional<size_t>{} : fm_iso_len);
      if (std::holds_alternative<IsotermUpTo>(v)) {
        std::cout << "isoterm up to length " << std::get<IsotermUpTo>(v).bound << "\n";
        return 0;
      }
      std::cout << "counterexample: " << std::get<IsotermCounterexample>(v).word.str() << "\n";
      return 1;
    }

    if (*family_gen) {
      family::SignVector xi = family_xi.empty() ? family::SignVector::identity(family_n)
                                                : family::SignVector::parse_bits(family_xi);
      if (!family_xi.empty()) family_n = xi.n();
      std::cout << family::word_w(family_n, xi).str() << "\n";
      return 0;
    }

    if (*rewrite_cmd) {
      IdentitySet sigma = IdentitySet::parse_lines(read_file(rw_sigma));
      Word from = parse_word_arg(rw_from);
      ClosureCaps caps;
      caps.max_depth = rw_depth;
      caps.max_states = rw_maxstates;
      caps.max_word_len = rw_maxlen;
      RewriteCache cache;
      nlohmann::ordered_json j;
      if (rw_mode == "step") {
        RewriteLimits limits;
        limits.max_word_len = rw_maxlen;
        auto steps = direct_deductions(from, sigma, limits, &cache);
        if (json) {
          j["from"] = from.str();
          j["steps"] = nlohmann::ordered_json::array();
          for (const auto& s : steps) {
            nlohmann::ordered_json e;
            e["to"] = s.to.str();
            e["identity"] = s.identity_used.str();
            e["reversed"] = s.reversed;
            j["steps"].push_back(e);
          }
          std::cout << j.dump(2) << "\n";
        } else {
          for (const auto& s : steps) std::cout << s.to.str() << "\n";
        }
        return 0;
      }
      if (rw_mode == "closure") {
        ClosureResult r = closure(from, sigma, caps, &cache);
        if (json) {
          j["from"] = from.str();
          j["exhausted"] = r.exhausted;
          if (!r.exhausted) j["stop_reason"] = r.stop_reason;
          j["words"] = nlohmann::ordered_json::array();
          for (const Word& w : r.words) j["words"].push_back(w.str());
          std::cout << j.dump(2) << "\n";
        } else {
          for (const Word& w : r.words) std::cout << w.str() << "\n";
          std::cout << (r.exhausted ? "exhausted" : "stopped: " + r.stop_reason) << "\n";
        }
        return 0;
      }
      if (rw_mode == "derivable") {
        if (rw_to.empty()) {
          std::cerr << "derivable requires --to\n";
          return 2;
        }
        DerivationResult r = derivable(from, parse_word_arg(rw_to), sigma, caps, &cache);
        if (json) {
          j["found"] = r.found;
          j["exhausted"] = r.exhausted;
          j["path"] = nlohmann::ordered_json::array();
          for (const Word& w : r.path) j["path"].push_back(w.str());
          std::cout << j.dump(2) << "\n";
        } else if (r.found) {
          std::cout << "derivable in " << r.path.size() - 1 << " steps\n";
          for (const Word& w : r.path) std::cout << "  " << w.str() << "\n";
        } else {
          std::cout << (r.exhausted ? "not derivable (search exhausted)"
                                    : "not derivable within caps")
                    << "\n";
        }
        return r.found ? 0 : 1;
      }
      std::cerr << "unknown rewrite mode: " << rw_mode << "\n";
      return 2;
    }

    if (*reduce_cmd) {
      Identity id = parse_identity_arg(reduce_id);
      Reduction red = reduce_identity(id);
      if (json) {
        nlohmann::ordered_json j;
        j["input"] = red.input.str();
        j["output"] = red.output.str();
        j["steps"] = nlohmann::ordered_json::array();
        for (const CertStep& s : red.steps) {
          nlohmann::ordered_json e;
          e["kind"] = cert_kind_name(s.kind);
          e["side"] = s.side;
          e["rule"] = s.rule.str();
          j["steps"].push_back(e);
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "reduced: " << red.output.str() << "\n";
        std::cout << "certificate steps: " << red.steps.size() << "\n";
      }
      return 0;
    }

    if (*verify_all_cmd) {
      VerifyOptions options;
      options.n = verify_n;
      if (verify_profile == "full") {
        options.full = true;
      } else if (verify_profile != "fast") {
        std::cerr << "unknown profile: " << verify_profile << "\n";
        return 2;
      }
      Report report = verify_all(options);
      return emit_report(report, json);
    }
    if (*verify_lemma) {
      lemma_params.all_zeta = !lemma_first_base_only;
      MonitorReport rep = monitor_lemma(lemma_name, lemma_params);
      nlohmann::ordered_json j;
      j["lemma"] = rep.name;
      j["n"] = rep.n;
      j["instances"] = rep.instances;
      j["checks"] = rep.checks;
      j["violations"] = nlohmann::ordered_json::array();
      for (const auto& v : rep.violations) {
        j["violations"].push_back(v.instance + ": " + v.detail);
      }
      j["elapsed_ms"] = rep.elapsed_ms;
      j["notes"] = rep.notes;
      std::cout << j.dump(2) << "\n";
      return rep.passed() ? 0 : 1;
    }

    if (*lattice_eq) {
      for (const Partition& p : all_partitions(lattice_n)) std::cout << p.str() << "\n";
      return 0;
    }
    if (*lattice_embed) {
      FiniteLattice l = lattices::by_name(embed_name);
      auto emb = embed_lattice(l, embed_n);
      if (!emb) {
        std::cout << "not found in Eq(" << embed_n << ")\n";
        return 1;
      }
      std::vector<Partition> parts = all_partitions(embed_n);
      for (size_t i = 0; i < emb->size(); ++i) {
        std::cout << l.name_of(i) << " -> " << parts[(*emb)[i]].str() << "\n";
      }
      std::cout << (verify_embedding(l, embed_n, *emb) ? "verified" : "INVALID") << "\n";
      return 0;
    }

    if (*isoterm_cmd) {
      FiniteMonoid m = monoid_from_arg(iso_monoid);
      Word w = parse_word_arg(iso_word);
      IsotermVerdict v = bounded_isoterm(m, w, iso_len == 0 ? std::optional<size_t>{} : iso_len);
      if (std::holds_alternative<IsotermUpTo>(v)) {
        std::cout << "isoterm up to length " << std::get<IsotermUpTo>(v).bound << "\n";
        return 0;
      }
      std::cout << "counterexample: " << std::get<IsotermCounterexample>(v).word.str() << "\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

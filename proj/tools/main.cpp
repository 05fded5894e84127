// SPDX-License-Identifier: Apache-2.0
//
// ctw: command-line front end for the C-test word toolkit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctw/constructors.hpp"
#include "ctw/endomorphism.hpp"
#include "ctw/expr.hpp"
#include "ctw/group_algorithms.hpp"
#include "ctw/harness.hpp"
#include "ctw/matrix_oracle.hpp"
#include "ctw/serialize.hpp"
#include "ctw/word.hpp"

namespace {

using namespace ctw;

constexpr int kOk = 0;
constexpr int kAsserted = 1;
constexpr int kUsage = 2;

struct CliConfig {
  int m = 2;
  std::uint64_t seed = 1;
  int prime_count = 5;
  int prime_bits = 62;
  std::uint64_t seam_cap = 1'000'000;
  std::uint64_t expand_budget = 8'000'000;
  std::string format = "json";

  [[nodiscard]] OracleConfig oracle() const {
    OracleConfig c;
    c.prime_count = prime_count;
    c.prime_bits = prime_bits;
    c.seed = seed;
    c.validate();
    return c;
  }
  [[nodiscard]] bool json() const { return format == "json"; }
};

// Constructor arity for --word.
int arity(const std::string& word, int n) {
  if (word == "w2" || word == "u") return 2;
  if (n < 2) throw std::invalid_argument("--n must be at least 2");
  return n;
}

Expr build(const std::string& word, int n, const std::vector<Expr>& args) {
  if (word == "w2") return build_w2(args.at(0), args.at(1));
  if (word == "u") return build_u(args.at(0), args.at(1));
  return build_v(n, args);
}

std::vector<Expr> to_exprs(const Tuple& t) {
  std::vector<Expr> out;
  out.reserve(t.size());
  for (const auto& w : t) out.push_back(lit(w));
  return out;
}

Expr parse_constructor(const std::string& text, Rank m);

// Expression inputs: a Word, or w2[a;b], u[a;b], v[a1;...;an] with Word
// arguments, optionally followed by ^k.
Expr parse_expr(const std::string& text, Rank m) {
  const auto open = text.find('[');
  if (open == std::string::npos) return lit(parse_word(text, m));
  const auto close = text.rfind(']');
  if (close == std::string::npos || close < open) throw ParseError("unbalanced '[' in '" + text + "'");
  std::string tail = text.substr(close + 1);
  tail.erase(std::remove(tail.begin(), tail.end(), ' '), tail.end());
  const Expr base = parse_constructor(text.substr(0, close + 1), m);
  if (tail.empty()) return base;
  if (tail.size() < 2 || tail[0] != '^') throw ParseError("unexpected '" + tail + "' after ']'");
  std::size_t used = 0;
  long long k = 0;
  try {
    k = std::stoll(tail.substr(1), &used);
  } catch (const std::exception&) {
    throw ParseError("bad exponent '" + tail + "'");
  }
  if (used + 1 != tail.size()) throw ParseError("bad exponent '" + tail + "'");
  return pow(base, k);
}

Expr parse_constructor(const std::string& text, Rank m) {
  const auto open = text.find('[');
  const auto close = text.size() - 1;
  std::string head = text.substr(0, open);
  while (!head.empty() && head.front() == ' ') head.erase(head.begin());
  while (!head.empty() && head.back() == ' ') head.pop_back();
  const Tuple args = parse_tuple(text.substr(open + 1, close - open - 1), m);
  if (head == "w2" || head == "u") {
    if (args.size() != 2) throw ParseError(head + "[...] takes two arguments");
    return build(head, 2, to_exprs(args));
  }
  if (head == "v") {
    if (args.size() < 2) throw ParseError("v[...] takes at least two arguments");
    return build_v(static_cast<int>(args.size()), args);
  }
  throw ParseError("unknown constructor '" + head + "' (w2, u, v)");
}

Json length_json(const BigLen& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(n));
  return Json(to_string(n));
}

std::string verdict_text(const EqualityVerdict& v) {
  if (v.definitely_unequal()) {
    if (v.method == EqualityVerdict::Method::MonteCarlo) {
      return "Unequal (prime " + std::to_string(v.witness_prime) + ")";
    }
    return "Unequal (" + to_string(v.method) + ")";
  }
  if (v.method == EqualityVerdict::Method::Exact) return "Equal (exact)";
  return "ProbablyEqual (" + to_string(v.method) + ", log10 bound " + std::to_string(v.log10_error_bound) + ")";
}

void emit(const CliConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.json()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::string word_or_one(const Word& w) { return w.empty() ? "1" : format_word(w); }

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Free-group C-test word toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--m", cfg.m, "rank of the free group")->envname("CTEST_RANK")->check(CLI::Range(2, 1 << 20));
  app.add_option("--seed", cfg.seed, "seed for prime sampling and suites")->envname("CTEST_SEED");
  app.add_option("--primes", cfg.prime_count, "number of primes k")->envname("CTEST_PRIMES")->check(CLI::PositiveNumber);
  app.add_option("--prime-bits", cfg.prime_bits, "prime size in bits")->envname("CTEST_PRIME_BITS")->check(CLI::Range(30, 62));
  app.add_option("--seam-cap", cfg.seam_cap, "max letters scanned per seam cancellation")->envname("CTEST_SEAM_CAP");
  app.add_option("--expand-budget", cfg.expand_budget, "max letters materialized by expansion")->envname("CTEST_EXPAND_BUDGET");
  app.add_option("--format", cfg.format, "output format")->envname("CTEST_FORMAT")->check(CLI::IsMember({"json", "text"}));

  // construct / eval
  std::string word = "v";
  int n = 2;
  std::string args_text;
  bool stats = false;
  bool dump = false;
  bool show_expansion = false;
  auto* construct = app.add_subcommand("construct", "build w2, u or v_n over generators or given arguments");
  auto* eval = app.add_subcommand("eval", "substitute a tuple into w2, u or v_n and reduce");
  for (auto* sub : {construct, eval}) {
    sub->add_option("--word", word, "constructor")->check(CLI::IsMember({"w2", "u", "v"}));
    sub->add_option("--n", n, "arity of v_n");
    sub->add_option("--args", args_text, "semicolon-separated arguments, 1 for empty");
    sub->add_flag("--stats", stats, "include DAG statistics");
    sub->add_flag("--expand", show_expansion, "print the reduced word when within --expand-budget");
  }
  construct->add_flag("--dump-expr", dump, "emit the DAG as JSON");

  // equal
  std::string a_text;
  std::string b_text;
  auto* equal = app.add_subcommand("equal", "compare two words or expressions");
  equal->add_option("--a", a_text, "word or w2[..], u[..], v[..]")->required();
  equal->add_option("--b", b_text, "word or w2[..], u[..], v[..]")->required();

  // tuples and words
  std::string tuple_text;
  auto* is_cyclic = app.add_subcommand("is-cyclic", "decide whether a tuple generates a cyclic subgroup");
  is_cyclic->add_option("--tuple", tuple_text, "semicolon-separated words")->required();

  std::string x_text;
  std::string y_text;
  auto* conj_words = app.add_subcommand("conjugate-words", "find S with y = S x S^-1");
  conj_words->add_option("--x", x_text)->required();
  conj_words->add_option("--y", y_text)->required();
  auto* conj_tuples = app.add_subcommand("conjugate-tuples", "find S with Y_i = S X_i S^-1 for all i");
  conj_tuples->add_option("--x", x_text)->required();
  conj_tuples->add_option("--y", y_text)->required();

  // endo
  std::string endo_text;
  std::string endo_g_text;
  std::string endo_word;
  auto* endo = app.add_subcommand("endo", "endomorphisms given by generator images");
  endo->require_subcommand(1);
  auto* endo_apply = endo->add_subcommand("apply", "image of a word");
  endo_apply->add_option("--endo", endo_text, "images, e.g. \"x2; x1 x2 x1^-1\"")->required();
  endo_apply->add_option("--word", endo_word)->required();
  auto* endo_compose = endo->add_subcommand("compose", "f after g");
  endo_compose->add_option("--f", endo_text)->required();
  endo_compose->add_option("--g", endo_g_text)->required();
  auto* endo_cyclic = endo->add_subcommand("image-cyclic", "whether the image subgroup is cyclic");
  endo_cyclic->add_option("--endo", endo_text)->required();

  // verify
  std::string suite;
  bool all = false;
  std::string scale = "default";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  auto* suite_opt = verify->add_option("--suite", suite, "suite name");
  verify->add_flag("--all", all, "run every suite")->excludes(suite_opt);
  verify->add_option("--scale", scale, "tiny, default or acceptance")->envname("CTEST_SCALE");

  auto* list = app.add_subcommand("list-suites", "list suites with their claims");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const Rank m(cfg.m);
    set_seam_cap(cfg.seam_cap);
    const OracleConfig oracle = cfg.oracle();

    if (construct->parsed() || eval->parsed()) {
      const int k = arity(word, n);
      // Generators up to the arity are always available.
      const Rank rank(std::max(cfg.m, k));
      std::vector<Expr> args;
      if (args_text.empty()) {
        if (eval->parsed()) throw std::invalid_argument("eval needs --args");
        args = generator_exprs(rank);
        args.resize(static_cast<std::size_t>(k));
      } else {
        const Tuple t = parse_tuple(args_text, rank);
        if (static_cast<int>(t.size()) != k) {
          throw std::invalid_argument(word + " takes " + std::to_string(k) + " arguments, got " +
                                      std::to_string(t.size()));
        }
        args = to_exprs(t);
      }
      const Expr e = build(word, n, args);
      Json j{{"word", word}, {"length", length_json(e.length())}};
      if (word == "v") j["n"] = n;
      if (!args_text.empty()) j["args"] = args_text;
      std::string text = "length " + to_string(e.length());
      if (stats || construct->parsed()) {
        const DagStats s = dag_stats(e);
        j["stats"] = to_json(s);
        text += " nodes " + std::to_string(s.nodes) + " depth " + std::to_string(s.depth);
      }
      if (eval->parsed()) {
        const EqualityVerdict v = decide_equal(e, Expr{}, rank, oracle);
        j["identity"] = to_json(v);
        text += "\nidentity: " + verdict_text(v);
      }
      if (show_expansion) {
        if (auto w = expand(e, cfg.expand_budget)) {
          j["expansion"] = word_or_one(*w);
          text += "\n" + word_or_one(*w);
        } else {
          j["expansion"] = nullptr;
          text += "\n(expansion exceeds budget)";
        }
      }
      if (dump) {
        j["expr"] = dump_expr(e);
        text += "\n" + dump_expr(e).dump();
      }
      emit(cfg, j, text);
      return kOk;
    }

    if (equal->parsed()) {
      const Expr a = parse_expr(a_text, m);
      const Expr b = parse_expr(b_text, m);
      const EqualityVerdict v = decide_equal(a, b, m, oracle);
      emit(cfg, to_json(v), verdict_text(v));
      return v.probably_equal() ? kOk : kAsserted;
    }

    if (is_cyclic->parsed()) {
      const Tuple t = parse_tuple(tuple_text, m);
      const auto w = is_cyclic_tuple(t);
      Json j{{"cyclic", w.has_value()}};
      std::string text = w ? "cyclic" : "not cyclic";
      if (w) {
        j["root"] = word_or_one(w->root);
        j["exponents"] = w->exponents;
        text += ", root " + word_or_one(w->root);
      }
      emit(cfg, j, text);
      return kOk;
    }

    if (conj_words->parsed() || conj_tuples->parsed()) {
      std::optional<Word> s;
      if (conj_words->parsed()) {
        s = conjugator_word(parse_word(x_text, m), parse_word(y_text, m));
      } else {
        s = conjugator_tuple(parse_tuple(x_text, m), parse_tuple(y_text, m));
      }
      Json j{{"conjugate", s.has_value()}};
      if (s) j["conjugator"] = word_or_one(*s);
      emit(cfg, j, s ? "Conjugate, S = " + word_or_one(*s) : "NotConjugate");
      return s ? kOk : kAsserted;
    }

    if (endo_apply->parsed()) {
      const Endo e = parse_endo(endo_text, m);
      const Word w = apply_word(e, parse_word(endo_word, m));
      emit(cfg, Json{{"image", word_or_one(w)}}, word_or_one(w));
      return kOk;
    }
    if (endo_compose->parsed()) {
      const Endo f = compose(parse_endo(endo_text, m), parse_endo(endo_g_text, m));
      emit(cfg, Json{{"endo", format_endo(f)}}, format_endo(f));
      return kOk;
    }
    if (endo_cyclic->parsed()) {
      const bool c = image_is_cyclic(parse_endo(endo_text, m));
      emit(cfg, Json{{"image_cyclic", c}}, c ? "cyclic" : "not cyclic");
      return kOk;
    }

    if (verify->parsed()) {
      if (!all && suite.empty()) throw std::invalid_argument("verify needs --suite NAME or --all");
      SmallConfig sc = SmallConfig::named(scale);
      sc.oracle = oracle;
      sc.expand_budget = cfg.expand_budget;
      std::vector<Report> reports;
      if (all) {
        for (const auto& d : list_suites()) reports.push_back(run_suite(d.name, cfg.seed, sc));
      } else {
        reports.push_back(run_suite(suite, cfg.seed, sc));
      }
      bool ok = true;
      Json arr = Json::array();
      std::string text;
      for (const auto& r : reports) {
        ok = ok && r.ok();
        arr.push_back(to_json(r));
        text += r.suite + ": " + std::to_string(r.passes) + "/" + std::to_string(r.cases) + " passed, " +
                std::to_string(r.findings.size()) + " findings, bound " + std::to_string(r.error_bound_total) + "\n";
        for (const auto& f : r.findings) text += "  case " + std::to_string(f.case_index) + ": " + f.observed + "\n";
      }
      if (!text.empty()) text.pop_back();
      const Json j = all ? Json{{"ok", ok}, {"reports", arr}} : arr.at(0);
      emit(cfg, j, text);
      return ok ? kOk : kAsserted;
    }

    if (list->parsed()) {
      Json arr = Json::array();
      std::string text;
      for (const auto& d : list_suites()) {
        arr.push_back(to_json(d));
        text += d.name + "  " + d.claim + "\n";
      }
      if (!text.empty()) text.pop_back();
      emit(cfg, arr, text);
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

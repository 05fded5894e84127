// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ctw/constructors.hpp"
#include "ctw/group_algorithms.hpp"
#include "ctw/harness.hpp"
#include "ctw/matrix_oracle.hpp"
#include "naive.hpp"
#include "programs.hpp"

namespace {

using namespace ctw;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool ok = true;
  std::string detail;
};

naive::Seq to_seq(const Word& w) {
  naive::Seq s;
  for (Letter l : w.letters()) s.push_back(l.raw());
  return s;
}

Word from_seq(const naive::Seq& s) {
  std::vector<Letter> letters;
  for (int x : s) letters.push_back(Letter::from_signed(x));
  return Word::reduce(letters);
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Runs suites and requires zero findings and a small aggregate bound.
Outcome suites(const std::vector<std::string>& names, const SmallConfig& scale) {
  Outcome o;
  double bound = 0;
  std::size_t cases = 0;
  std::size_t findings = 0;
  for (const auto& name : names) {
    const Report r = run_suite(name, kSeed, scale);
    cases += r.cases;
    findings += r.findings.size();
    bound += r.error_bound_total;
    for (const auto& f : r.findings) {
      o.detail += "\n    " + name + " case " + std::to_string(f.case_index) + ": " + f.inputs + " | " + f.observed;
    }
  }
  o.ok = findings == 0 && bound < 1e-12;
  o.detail = std::to_string(cases) + " cases, " + std::to_string(findings) + " findings, bound " + sci(bound) +
             o.detail;
  return o;
}

Outcome exponent_forms() { return suites({"lemma10_forms", "lemma13_forms"}, SmallConfig::defaults()); }

Outcome theorem() {
  // 100 cyclic and 100 non-cyclic tuples for each n in 2..5.
  return suites({"theorem_cyclic_iff_trivial"}, SmallConfig::acceptance());
}

Outcome small_ground_truth() {
  Outcome o;
  const auto g = generator_exprs(Rank(2));
  const struct {
    const char* name;
    Expr expr;
    naive::Seq reference;
    std::size_t pinned;
  } words[] = {{"w2", build_w2(g[0], g[1]), naive::w2({1}, {2}), 115'200},
               {"u", build_u(g[0], g[1]), naive::u({1}, {2}), 633'604}};
  for (const auto& w : words) {
    const auto x = expand(w.expr, 10'000'000);
    if (!x) {
      o.ok = false;
      o.detail += std::string(w.name) + " expansion failed; ";
      continue;
    }
    const naive::Seq core = naive::cyclic_core(to_seq(*x));
    const bool good = !x->empty() && to_seq(*x) == w.reference && x->size() == w.pinned && !core.empty() &&
                      !naive::is_proper_power(core) && !is_proper_power(*x);
    o.ok = o.ok && good;
    o.detail += std::string(w.name) + " length " + std::to_string(x->size()) + (good ? "" : " (mismatch)") + "; ";
  }
  return o;
}

Tuple random_tuple(std::mt19937_64& rng, std::size_t arity) {
  Tuple t;
  for (std::size_t i = 0; i < arity; ++i) t.push_back(random_word(rng, 2, 0, 20));
  return t;
}

Outcome conjugacy() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  int recovered = 0;
  int rejected = 0;
  for (int i = 0; i < 1000; ++i) {
    const Tuple xs = random_tuple(rng, 1 + rng() % 4);
    const Word s = random_word(rng, 2, 0, 20);
    const Tuple ys = conjugate(xs, s);
    const auto found = conjugator_tuple(xs, ys);
    if (found && conjugate(xs, *found) == ys) ++recovered;
  }
  // Non-conjugate pairs by two invariants of conjugacy: length parity, and
  // the length of the cyclic core.
  for (int i = 0; i < 1000; ++i) {
    Tuple xs = random_tuple(rng, 1 + rng() % 4);
    Tuple ys = conjugate(xs, random_word(rng, 2, 0, 20));
    const std::size_t j = rng() % xs.size();
    if (i % 2 == 0 || xs.size() == 1) {
      ys[j] = concat(ys[j], Word::generator(1 + static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1));
    } else {
      const std::size_t k = (j + 1) % xs.size();
      if (cyclic_reduce(xs[j]).core.size() == cyclic_reduce(xs[k]).core.size()) {
        xs[k] = concat(xs[k], Word::generator(1, 2));
        ys = conjugate(xs, random_word(rng, 2, 0, 20));
        if (cyclic_reduce(xs[j]).core.size() == cyclic_reduce(xs[k]).core.size()) {
          ys[j] = concat(ys[j], Word::generator(2));
        }
      }
      std::swap(ys[j], ys[k]);
    }
    if (!conjugator_tuple(xs, ys)) ++rejected;
  }
  // Exhaustive words of length <= 6 in F_2 against brute-force classes.
  auto classes = naive::conjugacy_classes(2, 6);
  std::size_t pairs = 0;
  std::size_t wrong = 0;
  for (const auto& a : classes.words) {
    const Word x = from_seq(a);
    for (const auto& b : classes.words) {
      const Word y = from_seq(b);
      const auto z = conjugator_word(x, y);
      const bool ok = z ? concat(concat(*z, x), invert(*z)) == y : !classes.conjugate(a, b);
      if (!ok || z.has_value() != classes.conjugate(a, b)) ++wrong;
      ++pairs;
    }
  }
  o.ok = recovered == 1000 && rejected == 1000 && wrong == 0;
  o.detail = "recovered " + std::to_string(recovered) + "/1000, NotConjugate " + std::to_string(rejected) +
             "/1000, brute force " + std::to_string(pairs - wrong) + "/" + std::to_string(pairs);
  return o;
}

Outcome corollary() { return suites({"corollary2_demo"}, SmallConfig::defaults()); }

Outcome oracle_soundness() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  const OracleConfig cfg;
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const Word a = random_word(rng, 2, 0, 30);
    const Word b = i % 2 == 0 ? a : random_word(rng, 2, 0, 30);
    const Word pad = random_word(rng, 2, 0, 10);
    const Expr eb = cat(lit(concat(b, pad)), lit(invert(pad)));
    if (equal_mc(lit(a), eb, Rank(2), cfg).probably_equal() != (a == b)) ++violations;
  }
  std::size_t faithful = 0;
  std::size_t words = 0;
  for (int m : {2, 3}) {
    for (std::size_t len = 1; len <= 8; ++len) {
      for (const auto& s : naive::all_reduced(m, len)) {
        ++words;
        if (!eval_exact(from_seq(s), Rank(m)).is_identity()) ++faithful;
      }
    }
  }
  o.ok = violations == 0 && faithful == words;
  o.detail = std::to_string(violations) + " violations in 1000 pairs, faithful on " + std::to_string(faithful) +
             "/" + std::to_string(words) + " words";
  return o;
}

Outcome program_equivalence() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  int mismatches = 0;
  for (int i = 0; i < 10'000; ++i) {
    if (const auto m = programs::run(rng, 8, 10'000)) {
      if (mismatches++ == 0) o.detail = "first mismatch in program " + std::to_string(i) + ", " + *m + "; ";
    }
  }
  o.ok = mismatches == 0;
  o.detail += std::to_string(10'000 - mismatches) + "/10000 programs agree";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exponent-form identities", 300, exponent_forms},
      {2, "cyclic iff trivial, n = 2..5", 300, theorem},
      {3, "small-scale ground truth for w2 and u", 30, small_ground_truth},
      {4, "conjugacy recovery", 120, conjugacy},
      {5, "corollary demonstration", 300, corollary},
      {6, "oracle soundness and faithfulness", 60, oracle_soundness},
      {7, "compressed engine vs word mirror", 60, program_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool ok = o.ok && in_time;
    if (!ok) ++failed;
    std::printf("[%s] criterion %d %s: %s (%.1f s of %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

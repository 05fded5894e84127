// SPDX-License-Identifier: Apache-2.0

#include "ctw/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ctw/constructors.hpp"
#include "ctw/endomorphism.hpp"
#include "ctw/expr.hpp"

namespace ctw {

SmallConfig SmallConfig::tiny() {
  SmallConfig c;
  c.name = "tiny";
  c.cases = 4;
  c.max_word_length = 5;
  c.max_conjugator_length = 3;
  c.equivariance_conjugator_length = 4;
  return c;
}

SmallConfig SmallConfig::defaults() { return SmallConfig{}; }

SmallConfig SmallConfig::acceptance() {
  SmallConfig c;
  c.name = "acceptance";
  c.cases = 100;
  return c;
}

SmallConfig SmallConfig::named(std::string_view name) {
  if (name == "tiny") return tiny();
  if (name == "default") return defaults();
  if (name == "acceptance") return acceptance();
  throw std::invalid_argument("unknown scale '" + std::string(name) + "' (tiny, default, acceptance)");
}

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

long long pick_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(pick(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

Word random_word(std::mt19937_64& rng, int m, std::size_t length) {
  std::vector<Letter> out;
  out.reserve(length);
  const auto alphabet = static_cast<std::uint64_t>(2 * m);
  while (out.size() < length) {
    const auto k = static_cast<int>(pick(rng, alphabet));
    const Letter l(k / 2 + 1, k % 2 == 0 ? 1 : -1);
    if (!out.empty() && l.cancels(out.back())) continue;
    out.push_back(l);
  }
  return Word::from_reduced(std::move(out));
}

Word random_word(std::mt19937_64& rng, int m, std::size_t lo, std::size_t hi) {
  return random_word(rng, m, static_cast<std::size_t>(pick_range(rng, static_cast<long long>(lo),
                                                                 static_cast<long long>(hi))));
}

namespace {

using Clock = std::chrono::steady_clock;

std::string describe(const EqualityVerdict& v) {
  std::ostringstream os;
  os << to_string(v.kind);
  if (v.definitely_unequal()) {
    if (v.method != EqualityVerdict::Method::MonteCarlo) {
      os << " (" << to_string(v.method) << ")";
    } else {
      os << " (prime " << v.witness_prime << ")";
    }
  } else if (v.method == EqualityVerdict::Method::Exact) {
    os << " (exact)";
  } else {
    os << " (" << to_string(v.method) << ", log10 bound " << v.log10_error_bound << ")";
  }
  return os.str();
}

double bound_of(const EqualityVerdict& v) {
  if (!v.probably_equal() || v.method == EqualityVerdict::Method::Exact) return 0.0;
  return std::pow(10.0, v.log10_error_bound);
}

class Case {
 public:
  Case(std::size_t index, std::string claim) : index_(index), claim_(std::move(claim)) {}

  void inputs(std::string text) { inputs_ = std::move(text); }

  [[nodiscard]] bool failed() const { return failed_; }

  void require(bool cond, std::string_view what, const std::string& observed) {
    if (failed_ || cond) return;
    fail(what, observed, 0.0);
  }

  void probably_equal(const EqualityVerdict& v, std::string_view what) {
    if (failed_) return;
    bound_ += bound_of(v);
    if (!v.probably_equal()) fail(what, describe(v), 0.0);
  }

  void definitely_unequal(const EqualityVerdict& v, std::string_view what) {
    if (failed_) return;
    if (!v.definitely_unequal()) fail(std::string(what) + " [inconclusive]", describe(v), bound_of(v));
  }

  void crash(const std::exception& e) {
    if (!failed_) fail("completes without error", std::string("exception: ") + e.what(), 0.0);
  }

  [[nodiscard]] double bound() const { return bound_; }
  [[nodiscard]] Finding finding() const {
    return Finding{index_, inputs_, claim_ + ": " + what_, observed_, finding_bound_};
  }

 private:
  void fail(std::string_view what, const std::string& observed, double bound) {
    failed_ = true;
    what_ = std::string(what);
    observed_ = observed;
    finding_bound_ = bound;
  }

  std::size_t index_;
  std::string claim_;
  std::string inputs_;
  bool failed_ = false;
  std::string what_;
  std::string observed_;
  double finding_bound_ = 0.0;
  double bound_ = 0.0;
};

std::uint64_t name_tag(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

class Runner {
 public:
  Runner(std::string_view suite, std::string claim, std::uint64_t seed, const SmallConfig& cfg)
      : cfg_(cfg), claim_(std::move(claim)), tag_(name_tag(suite)), start_(Clock::now()) {
    report_.suite = std::string(suite);
    report_.seed = seed;
    report_.scale = cfg.name;
  }

  [[nodiscard]] const SmallConfig& cfg() const { return cfg_; }
  [[nodiscard]] Rank rank() const { return Rank(cfg_.rank); }

  /// Runs one case with its own generator, derived from (seed, suite, index).
  void run(const std::function<void(Case&, std::mt19937_64&)>& body) {
    const std::size_t index = report_.cases++;
    std::seed_seq seq{static_cast<std::uint32_t>(report_.seed), static_cast<std::uint32_t>(report_.seed >> 32),
                      static_cast<std::uint32_t>(tag_), static_cast<std::uint32_t>(tag_ >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    Case c(index, claim_);
    try {
      body(c, rng);
    } catch (const std::exception& e) {
      c.crash(e);
    }
    if (c.failed()) {
      report_.findings.push_back(c.finding());
    } else {
      ++report_.passes;
      report_.error_bound_total += c.bound();
    }
  }

  OracleConfig oracle(std::mt19937_64& rng) const {
    OracleConfig o = cfg_.oracle;
    o.seed = rng();
    return o;
  }

  Report finish() {
    report_.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    std::sort(report_.findings.begin(), report_.findings.end(),
              [](const Finding& a, const Finding& b) { return a.case_index < b.case_index; });
    return report_;
  }

 private:
  SmallConfig cfg_;
  std::string claim_;
  std::uint64_t tag_;
  Clock::time_point start_;
  Report report_;
};

std::vector<Expr> exprs(const Tuple& t) {
  std::vector<Expr> out;
  out.reserve(t.size());
  for (const auto& w : t) out.push_back(lit(w));
  return out;
}

std::size_t max_len(const SmallConfig& c) { return static_cast<std::size_t>(c.max_word_length); }

Tuple random_tuple(std::mt19937_64& rng, int m, std::size_t n, std::size_t lo, std::size_t hi) {
  Tuple t;
  for (std::size_t i = 0; i < n; ++i) t.push_back(random_word(rng, m, lo, hi));
  return t;
}

/// Entries of length lo..hi; with allow_empty about one entry in five is empty.
Tuple random_noncyclic(std::mt19937_64& rng, int m, std::size_t n, std::size_t hi, bool allow_empty) {
  for (;;) {
    Tuple t;
    for (std::size_t i = 0; i < n; ++i) {
      if (allow_empty && pick(rng, 5) == 0) {
        t.emplace_back();
      } else {
        t.push_back(random_word(rng, m, 1, hi));
      }
    }
    if (!is_cyclic_tuple(t)) return t;
  }
}

Tuple random_cyclic(std::mt19937_64& rng, int m, std::size_t n, std::size_t root_len, long long max_exp) {
  const Word w = random_word(rng, m, 1, root_len);
  Tuple t;
  for (std::size_t i = 0; i < n; ++i) t.push_back(power(w, pick_range(rng, -max_exp, max_exp)));
  return t;
}

std::string tuple_input(std::string_view name, const Tuple& t) {
  return std::string(name) + " = (" + format_tuple(t) + ")";
}

std::string len_text(const Expr& e) { return "length " + to_string(e.length()); }

// ---------------------------------------------------------------------------

void suite_lemma1(Runner& r) {
  const auto& cfg = r.cfg();
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const Tuple x = random_noncyclic(rng, cfg.rank, 2, max_len(cfg), false);
      c.inputs(tuple_input("X", x));
      const Expr v = build_w2(lit(x[0]), lit(x[1]));
      c.require(!v.empty(), "v2(X) is non-empty", len_text(v));
      c.definitely_unequal(is_identity_mc(v, r.rank(), r.oracle(rng)), "v2(X) != 1");
      if (auto w = expand(v, cfg.expand_budget)) {
        c.require(!is_proper_power(*w), "v2(X) is not a proper power",
                  "exponent " + std::to_string(primitive_root(*w).exponent));
      }
    });
  }
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const Tuple x = random_cyclic(rng, cfg.rank, 2, 4, 4);
      c.inputs(tuple_input("X", x));
      const Expr v = build_w2(lit(x[0]), lit(x[1]));
      c.require(v.empty(), "v2(X) = 1 for cyclic <X1, X2>", len_text(v));
      c.probably_equal(is_identity_mc(v, r.rank(), r.oracle(rng)), "v2(X) = 1 for cyclic <X1, X2>");
    });
  }
}

void suite_lemma3(Runner& r) {
  const auto& cfg = r.cfg();
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const Tuple x = random_noncyclic(rng, cfg.rank, 2, max_len(cfg), false);
      const Tuple y = random_tuple(rng, cfg.rank, 2, 0, max_len(cfg));
      c.inputs(tuple_input("X", x) + ", " + tuple_input("Y", y));
      const Expr vx = build_w2(lit(x[0]), lit(x[1]));
      const Expr vy = build_w2(lit(y[0]), lit(y[1]));
      c.definitely_unequal(equal_mc(vx.inverse(), vy, r.rank(), r.oracle(rng)), "v2(X)^-1 != v2(Y)");
    });
  }
}

void suite_lemma4(Runner& r) {
  const auto& cfg = r.cfg();
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const Word w = random_word(rng, cfg.rank, 1, 4);
      long long a = pick_range(rng, -6, 6);
      long long b = pick_range(rng, -6, 6);
      if (i % 5 == 0) {
        // the non-trivial solutions of 6a = -5b in range
        const long long s = pick(rng, 2) == 0 ? 1 : -1;
        a = 5 * s;
        b = -6 * s;
      }
      const Tuple x{power(w, a), power(w, b)};
      c.inputs("W = " + format_word(w) + ", a = " + std::to_string(a) + ", b = " + std::to_string(b));
      const Expr u = build_u(lit(x[0]), lit(x[1]));
      const auto got = expand(u, cfg.expand_budget);
      c.require(got.has_value(), "u(W^a, W^b) is expandable", len_text(u));
      if (!got) return;
      const long long e = 24 * a + 20 * b;
      c.require(*got == power(w, e), "u(W^a, W^b) = W^(24a + 20b)", format_word(*got));
      const bool trivial = 6 * a == -5 * b;
      c.require(got->empty() == trivial, "u(W^a, W^b) = 1 iff 6a = -5b", len_text(u));
      if (!trivial) c.require(is_proper_power(*got), "u(W^a, W^b) is a proper power otherwise", format_word(*got));
    });
  }
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const Tuple x = random_noncyclic(rng, cfg.rank, 2, max_len(cfg), false);
      c.inputs(tuple_input("X", x));
      const Expr u = build_u(lit(x[0]), lit(x[1]));
      c.require(!u.empty(), "u(X) is non-empty", len_text(u));
      c.definitely_unequal(is_identity_mc(u, r.rank(), r.oracle(rng)), "u(X) != 1");
      if (auto w = expand(u, cfg.expand_budget)) {
        c.require(!is_proper_power(*w), "u(X) is not a proper power",
                  "exponent " + std::to_string(primitive_root(*w).exponent));
      }
    });
  }
}

void suite_lemma7(Runner& r) {
  const auto& cfg = r.cfg();
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const Tuple x = random_noncyclic(rng, cfg.rank, 2, max_len(cfg), false);
      c.inputs(tuple_input("X", x));
      const Expr u = build_u(lit(x[0]), lit(x[1]));
      const auto w = expand(u, cfg.expand_budget);
      for (int k = 0; k < 2; ++k) {
        const std::string what = "<X" + std::to_string(k + 1) + ", u(X)> is non-cyclic";
        if (w) {
          c.require(!commutes(x[static_cast<std::size_t>(k)], *w), what, "commutes");
        } else {
          const Expr cm = comm(lit(x[static_cast<std::size_t>(k)]), u);
          c.definitely_unequal(is_identity_mc(cm, r.rank(), r.oracle(rng)), what);
        }
      }
    });
  }
}

void suite_lemma9(Runner& r) {
  const auto& cfg = r.cfg();
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const Tuple x = random_cyclic(rng, cfg.rank, 2, 4, 4);
      const Tuple y = random_cyclic(rng, cfg.rank, 2, 4, 4);
      c.inputs(tuple_input("X", x) + ", " + tuple_input("Y", y));
      const Expr vx = build_w2(lit(x[0]), lit(x[1]));
      const Expr vy = build_w2(lit(y[0]), lit(y[1]));
      c.require(vx.empty() && vy.empty(), "v2(X) = v2(Y) = 1 on cyclic pairs", len_text(vx) + ", " + len_text(vy));
      const Expr u = build_u(vx, vy);
      c.probably_equal(is_identity_mc(u, r.rank(), r.oracle(rng)), "u(v2(X), v2(Y)) = 1");
    });
  }
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const auto pair = [&] {
        return pick(rng, 2) == 0 ? random_cyclic(rng, cfg.rank, 2, 4, 4)
                                 : random_noncyclic(rng, cfg.rank, 2, max_len(cfg), false);
      };
      const Tuple x = pair();
      const Tuple y = pair();
      c.inputs(tuple_input("X", x) + ", " + tuple_input("Y", y));
      const Expr vx = build_w2(lit(x[0]), lit(x[1]));
      const Expr vy = build_w2(lit(y[0]), lit(y[1]));
      const Expr u = build_u(vx, vy);
      const auto verdict = is_identity_mc(u, r.rank(), r.oracle(rng));
      if (verdict.probably_equal()) {
        c.probably_equal(verdict, "u(v2(X), v2(Y)) = 1");
        c.probably_equal(is_identity_mc(vx, r.rank(), r.oracle(rng)), "u(v2(X), v2(Y)) = 1 implies v2(X) = 1");
        c.probably_equal(is_identity_mc(vy, r.rank(), r.oracle(rng)), "u(v2(X), v2(Y)) = 1 implies v2(Y) = 1");
      } else {
        c.require(!(vx.empty() && vy.empty()), "u(v2(X), v2(Y)) != 1 needs a non-trivial v2", describe(verdict));
      }
    });
  }
}

struct PowerForm {
  const char* label;
  Tuple (*arguments)(const Word& p, const Word& q);
  Expr (*expected)(const Word& p, const Word& q);
};

Expr w2(const Word& a, const Word& b) { return build_w2(lit(a), lit(b)); }

void run_forms(Runner& r, std::span<const PowerForm> forms, int cases) {
  const auto& cfg = r.cfg();
  for (const auto& form : forms) {
    for (int i = 0; i < cases; ++i) {
      r.run([&](Case& c, std::mt19937_64& rng) {
        const Tuple pq = random_noncyclic(rng, cfg.rank, 2, max_len(cfg), false);
        const Tuple x = form.arguments(pq[0], pq[1]);
        c.inputs(std::string(form.label) + ": " + tuple_input("X", x));
        const Expr lhs = build_v(static_cast<int>(x.size()), std::span<const Word>(x));
        const Expr rhs = form.expected(pq[0], pq[1]);
        c.probably_equal(decide_equal(lhs, rhs, r.rank(), r.oracle(rng), cfg.exact_budget),
                         std::string(form.label) + " holds");
      });
    }
  }
}

void suite_lemma10(Runner& r) {
  static const PowerForm forms[] = {
      {"A1", [](const Word& p, const Word& q) { return Tuple{Word{}, p, q}; },
       [](const Word& p, const Word& q) { return pow(w2(p, q), exponents::a1); }},
      {"A2", [](const Word& p, const Word& q) { return Tuple{p, Word{}, q}; },
       [](const Word& p, const Word& q) { return pow(w2(q, p), exponents::a2); }},
      {"A3", [](const Word& p, const Word& q) { return Tuple{p, q, Word{}}; },
       [](const Word& p, const Word& q) { return pow(w2(p, q), exponents::a3); }},
  };
  run_forms(r, forms, r.cfg().cases);
}

void suite_lemma13(Runner& r) {
  const auto& cfg = r.cfg();
  using exponents::a1;
  using exponents::a2;
  using exponents::a3;
  static const PowerForm even[] = {
      {"B1 (n=4)", [](const Word& p, const Word& q) { return Tuple{Word{}, Word{}, p, q}; },
       [](const Word& p, const Word& q) { return pow(w2(q, p), a1 * a2); }},
      {"B2 (n=4)", [](const Word& p, const Word& q) { return Tuple{p, Word{}, Word{}, q}; },
       [](const Word& p, const Word& q) { return pow(w2(p, q), a2 * a2); }},
      {"B3 (n=4)", [](const Word& p, const Word& q) { return Tuple{p, Word{}, q, Word{}}; },
       [](const Word& p, const Word& q) { return pow(w2(q, p), a3 * a2); }},
  };
  run_forms(r, even, cfg.cases);

  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const Tuple wx = random_noncyclic(rng, cfg.rank, 2, max_len(cfg), false);
      const Word& w = wx[0];
      const Tuple x{w, wx[1], w, w};
      c.inputs("B4 (n=4): " + tuple_input("X", x));
      const Expr lhs = build_v(4, std::span<const Word>(x));
      const Tuple x3{w, wx[1], w};
      const Expr rhs = pow(build_v(3, std::span<const Word>(x3)), exponents::b4);
      c.probably_equal(decide_equal(lhs, rhs, r.rank(), r.oracle(rng), cfg.exact_budget), "B4 holds");
    });
  }

  static const PowerForm odd[] = {
      {"B1 (n=5)", [](const Word& p, const Word& q) { return Tuple{Word{}, Word{}, Word{}, p, q}; },
       [](const Word& p, const Word& q) { return pow(w2(p, q), a1 * a2 * a2); }},
      {"B2 (n=5)", [](const Word& p, const Word& q) { return Tuple{p, Word{}, Word{}, Word{}, q}; },
       [](const Word& p, const Word& q) { return pow(w2(q, p), a2 * a2 * a2); }},
      {"B3 (n=5)", [](const Word& p, const Word& q) { return Tuple{p, Word{}, Word{}, q, Word{}}; },
       [](const Word& p, const Word& q) { return pow(w2(p, q), a3 * a2 * a2); }},
  };
  run_forms(r, odd, std::max(1, cfg.cases / 5));
}

void suite_theorem(Runner& r) {
  const auto& cfg = r.cfg();
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int i = 0; i < cfg.cases; ++i) {
      r.run([&](Case& c, std::mt19937_64& rng) {
        const Tuple x = random_cyclic(rng, cfg.rank, n, 4, 3);
        c.inputs(tuple_input("X", x));
        const Expr v = build_v(static_cast<int>(n), std::span<const Word>(x));
        c.require(v.empty(), "v_n(X) = 1 for cyclic <X>", len_text(v));
        c.probably_equal(is_identity_mc(v, r.rank(), r.oracle(rng)), "v_n(X) = 1 for cyclic <X>");
      });
    }
    for (int i = 0; i < cfg.cases; ++i) {
      r.run([&](Case& c, std::mt19937_64& rng) {
        const Tuple x = random_noncyclic(rng, cfg.rank, n, max_len(cfg), true);
        c.inputs(tuple_input("X", x));
        const Expr v = build_v(static_cast<int>(n), std::span<const Word>(x));
        c.definitely_unequal(is_identity_mc(v, r.rank(), r.oracle(rng)), "v_n(X) != 1 for non-cyclic <X>");
      });
    }
  }
}

Expr conjugated(const Word& s, const Expr& v) {
  const Expr se = lit(s);
  return cat(cat(se, v), se.inverse());
}

void suite_conjugacy(Runner& r) {
  const auto& cfg = r.cfg();
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const auto n = static_cast<std::size_t>(2 + i % 3);
      const Tuple x = random_tuple(rng, cfg.rank, n, 1, max_len(cfg));
      const Word s = random_word(rng, cfg.rank, 0, static_cast<std::size_t>(cfg.max_conjugator_length));
      const Tuple y = conjugate(x, s);
      c.inputs(tuple_input("X", x) + ", S = " + format_word(s));
      const Expr vx = build_v(static_cast<int>(n), std::span<const Word>(x));
      const Expr vy = build_v(static_cast<int>(n), std::span<const Word>(y));
      c.probably_equal(decide_equal(conjugated(s, vx), vy, r.rank(), r.oracle(rng), cfg.exact_budget),
                       "S v_n(X) S^-1 = v_n(Y)");
      const auto found = conjugator_tuple(x, y);
      c.require(found.has_value(), "a conjugator is recovered", "NotConjugate");
      if (found) c.require(conjugate(x, *found) == y, "the recovered conjugator is valid", format_word(*found));
    });
  }
}

void suite_equivariance(Runner& r) {
  const auto& cfg = r.cfg();
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const auto n = static_cast<std::size_t>(2 + i % 3);
      const Tuple x = random_tuple(rng, cfg.rank, n, 0, max_len(cfg));
      const Word s = random_word(rng, cfg.rank, 1, static_cast<std::size_t>(cfg.equivariance_conjugator_length));
      c.inputs(tuple_input("X", x) + ", S = " + format_word(s));
      const Tuple y = conjugate(x, s);
      const Expr lhs = build_v(static_cast<int>(n), std::span<const Word>(y));
      const Expr rhs = conjugated(s, build_v(static_cast<int>(n), std::span<const Word>(x)));
      c.probably_equal(decide_equal(lhs, rhs, r.rank(), r.oracle(rng), cfg.exact_budget),
                       "v_n(S X S^-1) = S v_n(X) S^-1");
    });
  }
}

bool noncyclic_endo(const std::vector<Word>& images) { return !is_cyclic_tuple(images).has_value(); }

void suite_corollary2(Runner& r) {
  const auto& cfg = r.cfg();
  const Rank m(2);
  const auto [u1, u2] = corollary_words(m);
  for (int i = 0; i < cfg.cases; ++i) {
    r.run([&](Case& c, std::mt19937_64& rng) {
      const long long k = 1 + i % 2;
      std::vector<Word> images;
      do {
        images = random_tuple(rng, 2, 2, 1, max_len(cfg));
      } while (!noncyclic_endo(images));
      const Endo psi(images);
      c.inputs("psi = " + format_endo(psi) + ", k = " + std::to_string(k));

      const auto psi_images = exprs(images);
      const Expr pu1 = substitute(u1, psi_images);
      const Expr pu2 = substitute(u2, psi_images);
      c.definitely_unequal(is_identity_mc(comm(pu1, pu2), m, r.oracle(rng)), "<psi(u1), psi(u2)> is non-cyclic");

      // phi = tau_S o psi with S = psi(u1)^k
      const Expr s = pow(pu1, k);
      std::vector<Expr> phi_images;
      for (const auto& e : psi_images) phi_images.push_back(cat(cat(s, e), s.inverse()));
      const Expr fu1 = substitute(u1, phi_images);
      const Expr fu2 = substitute(u2, phi_images);
      c.probably_equal(decide_equal(fu1, pu1, m, r.oracle(rng), cfg.exact_budget), "phi(u1) = psi(u1)");
      c.definitely_unequal(equal_mc(fu2, pu2, m, r.oracle(rng)), "phi(u2) != psi(u2)");

      // phi = psi: identical images give identical values
      c.probably_equal(decide_equal(substitute(u1, psi_images), pu1, m, r.oracle(rng), cfg.exact_budget),
                       "phi = psi gives phi(u1) = psi(u1)");
      c.probably_equal(decide_equal(substitute(u2, psi_images), pu2, m, r.oracle(rng), cfg.exact_budget),
                       "phi = psi gives phi(u2) = psi(u2)");
    });
  }
}

struct Registered {
  SuiteDescriptor descriptor;
  void (*run)(Runner&);
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> suites = {
      {{"lemma1", "v2(X1, X2) is non-empty and not a proper power for non-cyclic <X1, X2>, trivial otherwise",
        "Lemma 1"},
       suite_lemma1},
      {{"lemma3", "v2(X)^-1 != v2(Y) for non-cyclic <X1, X2>", "Lemma 3"}, suite_lemma3},
      {{"lemma4",
        "u(W^a, W^b) is trivial iff 6a = -5b and a proper power otherwise; non-cyclic pairs give a non-trivial "
        "non-power",
        "Lemma 4"},
       suite_lemma4},
      {{"lemma7", "<X_i, u(X1, X2)> is non-cyclic for non-cyclic <X1, X2>", "Lemma 7"}, suite_lemma7},
      {{"lemma9", "u(v2(X), v2(Y)) = 1 iff v2(X) = 1 and v2(Y) = 1", "Lemma 9"}, suite_lemma9},
      {{"lemma10_forms", "v3 with one trivial argument is v2^960, v2^400 or v2^576", "Lemma 10 (A1)-(A3)"},
       suite_lemma10},
      {{"lemma13_forms", "degenerate v4 and v5 values are the stated powers of v2 or v3", "Lemma 13 (B1)-(B4)"},
       suite_lemma13},
      {{"theorem_cyclic_iff_trivial", "v_n(X) = 1 iff <X1, ..., Xn> is cyclic, n = 2..5", "Theorem"},
       suite_theorem},
      {{"ctest_conjugacy_recovery", "conjugate tuples give conjugate values and a recoverable conjugator",
        "Definition (C-test word)"},
       suite_conjugacy},
      {{"substitution_equivariance", "v_n(S X S^-1) = S v_n(X) S^-1, n = 2..4", "word-map equivariance"},
       suite_equivariance},
      {{"corollary2_demo", "tau_S o psi agrees with psi on u1 and differs on u2 for S = psi(u1)^k",
        "Corollary 2 and its Claim"},
       suite_corollary2},
  };
  return suites;
}

}  // namespace

std::vector<SuiteDescriptor> list_suites() {
  std::vector<SuiteDescriptor> out;
  for (const auto& s : registry()) out.push_back(s.descriptor);
  return out;
}

Report run_suite(std::string_view name, std::uint64_t seed, const SmallConfig& scale) {
  scale.oracle.validate();
  for (const auto& s : registry()) {
    if (s.descriptor.name == name) {
      Runner runner(name, s.descriptor.claim + " [" + s.descriptor.anchor + "]", seed, scale);
      s.run(runner);
      return runner.finish();
    }
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace ctw

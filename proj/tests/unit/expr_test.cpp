// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "ctw/constructors.hpp"
#include "ctw/expr.hpp"
#include "ctw/harness.hpp"
#include "ctw/word.hpp"
#include "naive.hpp"
#include "printers.hpp"
#include "programs.hpp"

namespace {

using namespace ctw;

Word W(const char* text) { return parse_word(text, Rank(3)); }

Word expanded(const Expr& e) {
  auto w = expand(e, 50'000'000);
  EXPECT_TRUE(w.has_value());
  return w.value_or(Word{});
}

naive::Seq to_seq(const Word& w) {
  naive::Seq s;
  for (Letter l : w.letters()) s.push_back(l.raw());
  return s;
}

TEST(Expr, Examples) {
  EXPECT_EQ(Expr{}.length(), 0);
  EXPECT_EQ(lit(W("x1^8")).length(), 8);
  EXPECT_EQ(expanded(lit(W("x1 x2^-1 x3"))), W("x1 x2^-1 x3"));
  EXPECT_EQ(expanded(cat(lit(W("x1 x2")), lit(W("x2^-1 x1")))), W("x1^2"));
  EXPECT_EQ(pow(lit(W("x1")), 800).length(), 800);
  EXPECT_TRUE(pow(lit(W("x1 x2")), 0).empty());
  const Expr c = pow(lit(W("x1 x2 x1^-1")), 3);
  EXPECT_EQ(c.length(), 5);
  EXPECT_EQ(expanded(c), W("x1 x2^3 x1^-1"));
}

TEST(Expr, InverseLaw) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Expr e = pow(lit(random_word(rng, 2, 1, 12)), 1 + static_cast<long long>(rng() % 50));
    e = cat(e, lit(random_word(rng, 2, 0, 6)));
    EXPECT_TRUE(cat(e, e.inverse()).empty());
    EXPECT_TRUE(cat(inv(e), e).empty());
  }
}

TEST(Expr, LengthsMatchNaiveReduction) {
  const auto g = generator_exprs(Rank(2));
  EXPECT_EQ(build_w2(g[0], g[1]).length(), 115200);
  EXPECT_EQ(build_u(g[0], g[1]).length(), 633604);
  EXPECT_EQ(build_w2(g[0], g[1]).length(), naive::w2({1}, {2}).size());
  EXPECT_EQ(build_u(g[0], g[1]).length(), naive::u({1}, {2}).size());
}

TEST(Expr, ExpansionMatchesNaiveW2) {
  const auto g = generator_exprs(Rank(2));
  const Expr w = build_w2(g[0], g[1]);
  EXPECT_EQ(to_seq(expanded(w)), naive::w2({1}, {2}));
  EXPECT_EQ(equal_exact(w, lit(expanded(w))), ExactVerdict::Equal);
}

TEST(Expr, ExpansionMatchesNaiveOnSubstitutedArguments) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 3; ++i) {
    const Word a = random_word(rng, 2, 1, 3);
    const Word b = random_word(rng, 2, 1, 3);
    EXPECT_EQ(to_seq(expanded(build_w2(lit(a), lit(b)))), naive::w2(to_seq(a), to_seq(b)));
  }
}

TEST(Expr, ExpandBudget) {
  const Expr e = pow(lit(W("x1 x2")), 1000);
  EXPECT_FALSE(expand(e, 1999).has_value());
  EXPECT_TRUE(expand(e, 2000).has_value());
}

TEST(Expr, EqualExact) {
  EXPECT_EQ(equal_exact(lit(W("x1")), lit(W("x1"))), ExactVerdict::Equal);
  EXPECT_EQ(equal_exact(lit(W("x1")), lit(W("x2"))), ExactVerdict::Unequal);
  EXPECT_EQ(equal_exact(lit(W("x1")), lit(W("x1 x2"))), ExactVerdict::Unequal);
  // Same denotation, different structure.
  const Expr a = pow(lit(W("x1 x2")), 600);
  const Expr b = cat(pow(lit(W("x1 x2")), 250), pow(lit(W("x1 x2")), 350));
  EXPECT_EQ(equal_exact(a, b), ExactVerdict::Equal);
  const Expr c = cat(pow(lit(W("x1 x2")), 599), lit(W("x1 x3")));
  EXPECT_EQ(equal_exact(a, c), ExactVerdict::Unequal);
  EXPECT_EQ(common_prefix(a, c, 1'000'000), BigLen(1199));
}

TEST(Expr, Slice) {
  const Expr e = cat(pow(lit(W("x1 x2")), 100), pow(lit(W("x3")), 100));
  const Word w = expanded(e);
  const Expr s = slice(e, 150, 80);
  EXPECT_EQ(expanded(s), w.subword(150, 80));
  EXPECT_THROW(slice(e, 250, 100), std::out_of_range);
}

TEST(Expr, LetterAtMatchesExpansion) {
  std::mt19937_64 rng(31);
  const auto g = generator_exprs(Rank(2));
  const Expr w = build_w2(g[0], g[1]);
  const Word x = expanded(w);
  for (int i = 0; i < 500; ++i) {
    const std::size_t k = rng() % x.size();
    ASSERT_EQ(letter_at(w, k), x[k]) << k;
    ASSERT_EQ(letter_at(w.inverse(), k), invert(x)[k]) << k;
  }
  EXPECT_THROW(letter_at(w, w.length()), std::out_of_range);
}

TEST(Expr, CatAssociativity) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const Expr a = pow(lit(random_word(rng, 2, 1, 6)), 1 + static_cast<long long>(rng() % 5));
    const Expr b = lit(random_word(rng, 2, 0, 10));
    const Expr c = pow(lit(random_word(rng, 2, 1, 6)), -1 - static_cast<long long>(rng() % 5));
    EXPECT_EQ(equal_exact(cat(cat(a, b), c), cat(a, cat(b, c))), ExactVerdict::Equal);
  }
}

TEST(Expr, CyclicSplit) {
  const Expr e = cat(cat(lit(W("x3 x1")), pow(lit(W("x2 x1")), 40)), lit(W("x1^-1 x3^-1")));
  const ExprSplit s = cyclic_split(e);
  // x3 x1 (x2 x1)^40 x1^-1 x3^-1 reduces to x3 . x1 (x2 x1)^39 x2 . x3^-1
  EXPECT_EQ(expanded(s.conjugator), W("x3"));
  const Word core = expanded(s.core);
  EXPECT_EQ(concat(concat(expanded(s.conjugator), core), invert(expanded(s.conjugator))), expanded(e));
  EXPECT_TRUE(core.is_cyclically_reduced());
  EXPECT_EQ(expanded(pow_split(s, 3)), power(expanded(e), 3));
}

TEST(Expr, DagSharing) {
  const auto g = generator_exprs(Rank(5));
  const Expr v5 = build_v(5, g);
  const DagStats s = dag_stats(v5);
  EXPECT_LT(s.nodes, 2000u);
  EXPECT_GT(v5.length(), BigLen(1) << 40);
}

TEST(Expr, RandomProgramsMatchWordMirror) {
  std::mt19937_64 rng(41);
  for (int program = 0; program < 1000; ++program) {
    const auto mismatch = programs::run(rng, 12, 10'000);
    ASSERT_FALSE(mismatch) << "program " << program << ": " << *mismatch;
  }
}

TEST(Expr, SeamCapExceededIsReported) {
  const std::uint64_t saved = seam_cap();
  set_seam_cap(4);
  // Letters of the seam are compared one at a time, since the two sides
  // share no structure.
  std::mt19937_64 rng(43);
  const Word w = random_word(rng, 2, 200);
  const Expr a = cat(lit(w.subword(0, 100)), lit(w.subword(100, 100)));
  const Expr b = cat(lit(invert(w.subword(150, 50))), lit(invert(w.subword(0, 150))));
  EXPECT_THROW(cat(a, b), SeamCapExceeded);
  set_seam_cap(saved);
  EXPECT_TRUE(cat(a, b).empty());
}

}  // namespace

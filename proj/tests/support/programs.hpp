// SPDX-License-Identifier: Apache-2.0
//
// Random constructor programs over Expr, each call mirrored by the matching
// word_core operation on explicit Words.

#ifndef CTW_TESTS_PROGRAMS_HPP
#define CTW_TESTS_PROGRAMS_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ctw/expr.hpp"
#include "ctw/harness.hpp"
#include "ctw/word.hpp"

namespace programs {

using ctw::Expr;
using ctw::Word;

struct Pair {
  Expr e;
  Word w;
};

inline Pair random_step(std::mt19937_64& rng, const std::vector<Pair>& pool, std::size_t max_len) {
  const auto pick = [&] { return pool[rng() % pool.size()]; };
  for (;;) {
    switch (rng() % 6) {
      case 0: {
        const Word w = ctw::random_word(rng, 3, 0, 12);
        return {ctw::lit(w), w};
      }
      case 1: {
        const Pair a = pick();
        const Pair b = pick();
        if (a.w.size() + b.w.size() > max_len) continue;
        return {ctw::cat(a.e, b.e), ctw::concat(a.w, b.w)};
      }
      case 2: {
        const Pair a = pick();
        return {ctw::inv(a.e), ctw::invert(a.w)};
      }
      case 3: {
        const Pair a = pick();
        const long long k = static_cast<long long>(rng() % 9) - 4;
        if (a.w.size() * static_cast<std::size_t>(k < 0 ? -k : k) > max_len) continue;
        return {ctw::pow(a.e, k), ctw::power(a.w, k)};
      }
      case 4: {
        const Pair a = pick();
        const Pair b = pick();
        if (2 * (a.w.size() + b.w.size()) > max_len) continue;
        return {ctw::comm(a.e, b.e), ctw::commutator(a.w, b.w)};
      }
      default: {
        const Pair a = pick();
        if (a.w.empty()) continue;
        const std::size_t off = rng() % a.w.size();
        const std::size_t cnt = rng() % (a.w.size() - off + 1);
        return {ctw::slice(a.e, off, cnt), a.w.subword(off, cnt)};
      }
    }
  }
}

/// Runs one program of `steps` calls with every denotation at most max_len
/// letters; returns a description of the first disagreement, if any.
inline std::optional<std::string> run(std::mt19937_64& rng, int steps, std::size_t max_len) {
  std::vector<Pair> pool{{ctw::lit(Word::generator(1)), Word::generator(1)}};
  for (int step = 0; step < steps; ++step) {
    Pair p = random_step(rng, pool, max_len);
    const auto x = ctw::expand(p.e, max_len);
    if (!x || *x != p.w || p.e.length() != p.w.size()) {
      return "step " + std::to_string(step) + ": expected " + ctw::format_word(p.w);
    }
    if (Word::reduce(x->letters()) != *x) return "step " + std::to_string(step) + ": unreduced expansion";
    pool.push_back(std::move(p));
  }
  return std::nullopt;
}

}  // namespace programs

#endif  // CTW_TESTS_PROGRAMS_HPP

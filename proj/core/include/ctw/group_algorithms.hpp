// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_GROUP_ALGORITHMS_HPP
#define CTW_GROUP_ALGORITHMS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctw/word.hpp"

namespace ctw {

using Tuple = std::vector<Word>;

/// "x1 x2; 1; x2^-1": semicolon-separated words, `1` for the empty word.
Tuple parse_tuple(std::string_view text, Rank m);
std::string format_tuple(const Tuple& t);

/// words[i] == power(root, exponents[i]); the first non-empty entry has a
/// positive exponent. An all-empty tuple has an empty root.
struct CyclicWitness {
  Word root;
  std::vector<long long> exponents;
};

bool commutes(const Word& a, const Word& b);

/// Nullopt when <t> is not cyclic.
std::optional<CyclicWitness> is_cyclic_tuple(const Tuple& t);

/// Z with Z x Z^-1 == y, or nullopt when x and y are not conjugate.
std::optional<Word> conjugator_word(const Word& x, const Word& y);

/// Generator of the centralizer of a non-empty w (its primitive root).
Word centralizer_gen(const Word& w);

/// S with S xs[i] S^-1 == ys[i] for every i, or nullopt.
/// Throws std::invalid_argument when the arities differ.
std::optional<Word> conjugator_tuple(const Tuple& xs, const Tuple& ys);

/// Conjugates every entry: S t[i] S^-1.
Tuple conjugate(const Tuple& t, const Word& s);

}  // namespace ctw

#endif  // CTW_GROUP_ALGORITHMS_HPP

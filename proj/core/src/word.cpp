// SPDX-License-Identifier: Apache-2.0

#include "ctw/word.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <sstream>

namespace ctw {

Word Word::reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::from_reduced(std::vector<Letter> letters) {
#ifndef NDEBUG
  for (std::size_t i = 1; i < letters.size(); ++i) assert(!letters[i - 1].cancels(letters[i]));
#endif
  return Word(std::move(letters));
}

Word Word::generator(int i, long long exponent) {
  const Letter l(i, exponent < 0 ? -1 : 1);
  return Word(std::vector<Letter>(static_cast<std::size_t>(std::llabs(exponent)), l));
}

int Word::max_generator() const noexcept {
  int best = 0;
  for (Letter l : letters_) best = std::max(best, l.generator());
  return best;
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(count)));
}

namespace {

long long parse_int(std::string_view s, std::string_view token) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("malformed token '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

Word parse_word(std::string_view text, Rank m) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  std::size_t tokens = 0;
  bool saw_one = false;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;
    ++tokens;

    if (token == "1") {
      saw_one = true;
      continue;
    }
    if (token.size() < 2 || token[0] != 'x') {
      throw ParseError("malformed token '" + std::string(token) + "'");
    }
    const auto caret = token.find('^');
    const auto index_part = token.substr(1, caret == std::string_view::npos ? token.npos : caret - 1);
    if (index_part.empty() || index_part[0] == '-' || index_part[0] == '+') {
      throw ParseError("malformed token '" + std::string(token) + "'");
    }
    const long long index = parse_int(index_part, token);
    long long exponent = 1;
    if (caret != std::string_view::npos) {
      exponent = parse_int(token.substr(caret + 1), token);
      if (exponent == 0) throw ParseError("zero exponent in token '" + std::string(token) + "'");
    }
    if (index < 1 || index > m.value()) {
      throw ParseError("generator index out of range in token '" + std::string(token) + "'");
    }
    const Letter l(static_cast<int>(index), exponent < 0 ? -1 : 1);
    letters.insert(letters.end(), static_cast<std::size_t>(std::llabs(exponent)), l);
  }
  if (saw_one && tokens != 1) throw ParseError("'1' must be the only token of the empty word");
  if (tokens == 0) throw ParseError("empty word text (use '1')");
  return Word::reduce(letters);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(letters[i].generator());
    const long long run = static_cast<long long>(j - i) * letters[i].sign();
    if (run != 1) {
      out += '^';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word::from_reduced(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  const auto a = u.letters();
  const auto b = v.letters();
  std::size_t c = 0;
  while (c < a.size() && c < b.size() && a[a.size() - 1 - c].cancels(b[c])) ++c;
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * c);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(c));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(c), b.end());
  return Word::from_reduced(std::move(out));
}

Word power(const Word& w, long long k) {
  if (k == 0 || w.empty()) return {};
  if (k < 0) return power(invert(w), -k);
  if (k == 1) return w;
  // w^k = g core^k g^-1 with core cyclically reduced, so no cancellation
  // happens between the copies of core.
  const auto [core, g] = cyclic_reduce(w);
  std::vector<Letter> out;
  out.reserve(2 * g.size() + core.size() * static_cast<std::size_t>(k));
  out.insert(out.end(), g.letters().begin(), g.letters().end());
  for (long long i = 0; i < k; ++i) out.insert(out.end(), core.letters().begin(), core.letters().end());
  const Word gi = invert(g);
  out.insert(out.end(), gi.letters().begin(), gi.letters().end());
  return Word::from_reduced(std::move(out));
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(concat(a, b), invert(a)), invert(b));
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  const auto s = w.letters();
  std::size_t t = 0;
  while (2 * t + 1 < s.size() && s[t].cancels(s[s.size() - 1 - t])) ++t;
  return {w.subword(t, s.size() - 2 * t), w.subword(0, t)};
}

std::size_t smallest_period(std::span<const Letter> s) {
  if (s.empty()) return 0;
  std::vector<std::size_t> fail(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  return s.size() - fail.back();
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive root of the empty word is undefined");
  const auto [core, g] = cyclic_reduce(w);
  std::size_t d = smallest_period(core.letters());
  if (core.size() % d != 0) d = core.size();
  const Word root_core = core.subword(0, d);
  const Word root = concat(concat(g, root_core), invert(g));
  return {root, static_cast<long long>(core.size() / d)};
}

bool is_proper_power(const Word& w) {
  return !w.empty() && primitive_root(w).exponent >= 2;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l.raw()));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ctw

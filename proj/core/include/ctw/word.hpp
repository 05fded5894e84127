// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_WORD_HPP
#define CTW_WORD_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctw {

/// Malformed textual input (words, tuples, endomorphisms).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rank m >= 2 of the ambient free group F_m.
class Rank {
 public:
  explicit Rank(int m) : m_(m) {
    if (m < 2) throw std::invalid_argument("rank must be at least 2");
  }
  [[nodiscard]] int value() const noexcept { return m_; }
  friend bool operator==(Rank, Rank) = default;

 private:
  int m_;
};

/// A generator x_i or its inverse, packed as +i / -i.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign) : v_(sign < 0 ? -generator : generator) {}
  static constexpr Letter from_signed(std::int32_t v) {
    Letter l;
    l.v_ = v;
    return l;
  }

  [[nodiscard]] constexpr int generator() const noexcept { return v_ < 0 ? -v_ : v_; }
  [[nodiscard]] constexpr int sign() const noexcept { return v_ < 0 ? -1 : 1; }
  [[nodiscard]] constexpr std::int32_t raw() const noexcept { return v_; }
  [[nodiscard]] constexpr Letter inverse() const noexcept { return from_signed(-v_); }
  [[nodiscard]] constexpr bool cancels(Letter o) const noexcept { return v_ == -o.v_; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::int32_t v_ = 1;
};

/// A freely reduced word. Every constructor path goes through reduction, so
/// a Word value never holds an adjacent inverse pair.
class Word {
 public:
  Word() = default;

  /// Reduces `letters` to its unique freely reduced form.
  static Word reduce(std::span<const Letter> letters);
  /// Wraps letters the caller guarantees are already reduced (checked in debug builds).
  static Word from_reduced(std::vector<Letter> letters);
  /// x_i^e for a single generator.
  static Word generator(int i, long long exponent = 1);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] Letter front() const { return letters_.front(); }
  [[nodiscard]] Letter back() const { return letters_.back(); }
  [[nodiscard]] int max_generator() const noexcept;

  [[nodiscard]] bool is_cyclically_reduced() const noexcept {
    return letters_.size() < 2 || !letters_.front().cancels(letters_.back());
  }

  /// Letters [pos, pos + count); a subword of a reduced word is reduced.
  [[nodiscard]] Word subword(std::size_t pos, std::size_t count) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

Word parse_word(std::string_view text, Rank m);
/// Canonical text: run-length grouped tokens, `1` for the empty word.
std::string format_word(const Word& w);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, long long k);
Word commutator(const Word& a, const Word& b);

struct CyclicDecomposition {
  Word core;
  Word conjugator;  // w = conjugator * core * conjugator^-1
};
CyclicDecomposition cyclic_reduce(const Word& w);

struct PrimitiveRoot {
  Word root;
  long long exponent = 1;
};

/// Unique root with root^exponent == w and root not a proper power.
/// Throws std::invalid_argument on the empty word.
PrimitiveRoot primitive_root(const Word& w);
bool is_proper_power(const Word& w);

/// Smallest period of `s` from the KMP failure function.
std::size_t smallest_period(std::span<const Letter> s);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace ctw

#endif  // CTW_WORD_HPP

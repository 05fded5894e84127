// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_EXPR_HPP
#define CTW_EXPR_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ctw/word.hpp"

namespace ctw {

/// Exact lengths of compressed words; v_5 over short arguments is ~10^41 letters.
using BigLen = boost::multiprecision::cpp_int;

namespace detail {
struct Node;
}

/// Compressed freely reduced word: a signed reference into an interned DAG
/// of Literal / Concat / Slice / Power nodes. The default value is the empty
/// word. Structurally equal DAGs share one node, so identity comparison of
/// references is structural equality.
class Expr {
 public:
  Expr() = default;

  [[nodiscard]] bool empty() const noexcept { return node_ == nullptr; }
  [[nodiscard]] const BigLen& length() const noexcept;
  [[nodiscard]] Expr inverse() const noexcept { return Expr(node_, node_ ? !inverted_ : false); }

  [[nodiscard]] const detail::Node* node() const noexcept { return node_.get(); }
  [[nodiscard]] bool inverted() const noexcept { return inverted_; }
  [[nodiscard]] std::uint64_t structural_hash() const noexcept;

  /// Same interned node with the same orientation.
  friend bool operator==(const Expr& a, const Expr& b) noexcept {
    return a.node_ == b.node_ && a.inverted_ == b.inverted_;
  }

 private:
  friend struct detail::Node;
  friend class ExprFactory;
  Expr(std::shared_ptr<const detail::Node> n, bool inv) : node_(std::move(n)), inverted_(inv) {}

  std::shared_ptr<const detail::Node> node_;
  bool inverted_ = false;
};

namespace detail {

enum class Kind : std::uint8_t { Literal, Concat, Slice, Power };

struct Node {
  Kind kind = Kind::Literal;
  BigLen length;
  std::uint64_t hash = 0;
  std::uint32_t depth = 0;
  Word word;               // Literal
  Expr first;              // Concat left, Slice source, Power base
  Expr second;             // Concat right
  BigLen offset;           // Concat seam cancellation, Slice start
  long long exponent = 0;  // Power
};

}  // namespace detail

/// Thrown when one seam needs more letter-level comparisons than the
/// configured cap. Structural skips do not count against the cap.
class SeamCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Letter-comparison cap per seam (default 10^6). Process-wide.
void set_seam_cap(std::uint64_t cap);
std::uint64_t seam_cap();

Expr lit(const Word& w);
Expr cat(const Expr& a, const Expr& b);
Expr inv(const Expr& a);
Expr pow(const Expr& a, long long k);
Expr comm(const Expr& a, const Expr& b);
/// Letters [offset, offset + count) of the denotation.
Expr slice(const Expr& a, const BigLen& offset, const BigLen& count);

inline const BigLen& length(const Expr& a) { return a.length(); }

/// a = conjugator * Power-compatible core * conjugator^-1, core cyclically reduced.
struct ExprSplit {
  Expr conjugator;
  Expr core;
};
ExprSplit cyclic_split(const Expr& a);
/// Rebuilds (conjugator * core^k * conjugator^-1) from a split without re-scanning.
Expr pow_split(const ExprSplit& s, long long k);

/// Throws std::out_of_range unless 0 <= i < length(a).
Letter letter_at(const Expr& a, const BigLen& i);

/// Nullopt when the denotation is longer than max_len.
std::optional<Word> expand(const Expr& a, std::uint64_t max_len);

enum class ExactVerdict { Equal, Unequal, BudgetExceeded };
inline constexpr std::uint64_t kDefaultExactBudget = 10'000'000;

/// Length check, then a streaming comparison that may spend at most
/// `budget` letter comparisons. Structurally identical pieces are skipped.
ExactVerdict equal_exact(const Expr& a, const Expr& b, std::uint64_t budget = kDefaultExactBudget);

/// Longest common prefix of two denotations; nullopt if `budget` runs out.
std::optional<BigLen> common_prefix(const Expr& a, const Expr& b, std::uint64_t budget);

struct DagStats {
  std::size_t nodes = 0;
  std::size_t literal_letters = 0;
  std::uint32_t depth = 0;
};
DagStats dag_stats(const Expr& a);

std::string to_string(const BigLen& n);

}  // namespace ctw

#endif  // CTW_EXPR_HPP

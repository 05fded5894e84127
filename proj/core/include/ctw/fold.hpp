// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_FOLD_HPP
#define CTW_FOLD_HPP

#include <map>
#include <span>
#include <tuple>
#include <unordered_map>

#include "ctw/expr.hpp"

namespace ctw {

// Evaluates an Expr by folding over its DAG. A group homomorphism ignores
// free cancellation, so Concat nodes fold to a plain product; only Slice
// nodes need window (prefix/suffix) evaluation.
//
// Algebra must provide:
//   using Value = ...;
//   Value identity() const;
//   Value literal(std::span<const Letter>) const;
//   Value mul(const Value&, const Value&) const;
//   Value inverse(const Value&) const;
//   Value power(const Value&, long long k) const;  // k >= 2
// An algebra that reads the letter sequence itself rather than a group
// element declares `static constexpr bool group_valued = false;`, and seam
// cancellations are then evaluated as windows.
template <class Algebra>
class DagFold {
  static constexpr bool kGroupValued = [] {
    if constexpr (requires { Algebra::group_valued; }) {
      return Algebra::group_valued;
    } else {
      return true;
    }
  }();

 public:
  using Value = typename Algebra::Value;

  explicit DagFold(Algebra algebra) : alg_(std::move(algebra)) {}

  const Algebra& algebra() const { return alg_; }

  Value full(const Expr& e) {
    if (e.empty()) return alg_.identity();
    const Value v = node_value(*e.node());
    return e.inverted() ? alg_.inverse(v) : v;
  }

  /// Value of letters [s, t) of the denotation of e.
  Value window(const Expr& e, const BigLen& s, const BigLen& t) {
    if (s >= t) return alg_.identity();
    if (s == 0 && t == e.length()) return full(e);
    if (e.inverted()) {
      const BigLen& len = e.length();
      return alg_.inverse(raw_window(*e.node(), len - t, len - s));
    }
    return raw_window(*e.node(), s, t);
  }

 private:
  const Value& node_value(const detail::Node& n) {
    if (auto it = memo_.find(&n); it != memo_.end()) return it->second;
    Value v = compute(n);
    return memo_.emplace(&n, std::move(v)).first->second;
  }

  Value compute(const detail::Node& n) {
    using detail::Kind;
    switch (n.kind) {
      case Kind::Literal:
        return alg_.literal(n.word.letters());
      case Kind::Concat:
        if constexpr (kGroupValued) {
          return alg_.mul(full(n.first), full(n.second));
        } else {
          return alg_.mul(window(n.first, 0, n.first.length() - n.offset),
                          window(n.second, n.offset, n.second.length()));
        }
      case Kind::Slice:
        return window(n.first, n.offset, n.offset + n.length);
      case Kind::Power:
        return alg_.power(full(n.first), n.exponent);
    }
    return alg_.identity();
  }

  // Windows through nested Slice nodes split into two paths per level, so
  // they are memoized like whole nodes.
  Value raw_window(const detail::Node& n, const BigLen& s, const BigLen& t) {
    if (s == 0 && t == n.length) return node_value(n);
    if (n.kind == detail::Kind::Literal) return compute_window(n, s, t);
    auto key = std::make_tuple(&n, s, t);
    if (auto it = windows_.find(key); it != windows_.end()) return it->second;
    Value v = compute_window(n, s, t);
    windows_.emplace(std::move(key), v);
    return v;
  }

  Value compute_window(const detail::Node& n, const BigLen& s, const BigLen& t) {
    using detail::Kind;
    switch (n.kind) {
      case Kind::Literal: {
        const auto letters = n.word.letters();
        return alg_.literal(letters.subspan(static_cast<std::size_t>(s), static_cast<std::size_t>(t - s)));
      }
      case Kind::Concat: {
        const BigLen keep = n.first.length() - n.offset;
        Value left = alg_.identity();
        Value right = alg_.identity();
        if (s < keep) left = window(n.first, s, t < keep ? t : keep);
        if (t > keep) right = window(n.second, (s > keep ? s : keep) - keep + n.offset, t - keep + n.offset);
        return alg_.mul(left, right);
      }
      case Kind::Slice:
        return window(n.first, n.offset + s, n.offset + t);
      case Kind::Power: {
        const BigLen& period = n.first.length();
        const BigLen q1 = s / period;
        const BigLen r1 = s % period;
        const BigLen q2 = t / period;
        const BigLen r2 = t % period;
        if (q1 == q2) return window(n.first, r1, r2);
        Value head = alg_.identity();
        BigLen whole = q2 - q1;
        if (r1 != 0) {
          head = window(n.first, r1, period);
          whole -= 1;
        }
        Value middle = alg_.identity();
        if (whole == 1) {
          middle = full(n.first);
        } else if (whole > 1) {
          middle = alg_.power(full(n.first), static_cast<long long>(whole));
        }
        return alg_.mul(alg_.mul(head, middle), window(n.first, 0, r2));
      }
    }
    return alg_.identity();
  }

  Algebra alg_;
  std::unordered_map<const detail::Node*, Value> memo_;
  std::map<std::tuple<const detail::Node*, BigLen, BigLen>, Value> windows_;
};

}  // namespace ctw

#endif  // CTW_FOLD_HPP

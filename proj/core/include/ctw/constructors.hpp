// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_CONSTRUCTORS_HPP
#define CTW_CONSTRUCTORS_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ctw/expr.hpp"
#include "ctw/word.hpp"

namespace ctw {

/// Exponents of the construction and of the degenerate power forms.
namespace exponents {
inline constexpr long long u_left = 24;   // u(E, 1) = E^24
inline constexpr long long u_right = 20;  // u(1, E) = E^20
inline constexpr long long u_both = 44;   // u(E, E) = E^44
inline constexpr long long a1 = 960;
inline constexpr long long a2 = 400;
inline constexpr long long a3 = 576;
inline constexpr long long b4 = 1936;

static_assert(a1 == u_right * u_left + u_left * u_right);
static_assert(a2 == u_right * u_right);
static_assert(a3 == u_left * u_left);
static_assert(b4 == u_both * u_left + u_both * u_right);

/// 960 * 400^(n-3), n >= 3.
BigLen b1(int n);
/// 400^(n-2), n >= 2.
BigLen b2(int n);
/// 576 * 400^(n-3), n >= 3.
BigLen b3(int n);
}  // namespace exponents

/// Ivanov's word with C = [a^8, b^8]:
/// C^100 a C^200 a C^300 a^-1 C^400 a^-1 C^500 b C^600 b C^700 b^-1 C^800 b^-1.
Expr build_w2(const Expr& a, const Expr& b);

/// Auxiliary word with D = [a^48, b^40]:
/// D^100 a^6 D^200 a^6 D^300 a^6 D^400 a^6 D^500 b^5 D^600 b^5 D^700 b^5 D^800 b^5.
Expr build_u(const Expr& a, const Expr& b);

/// v_2 = w_2; v_3 = u(u(v2(x1,x2), v2(x2,x3)), u(v2(x2,x3), v2(x3,x1)));
/// v_n = u(u(v(x1..x_{n-1}), M), u(M, v(x_n, x2, .., x_{n-2}, x1)))
/// with M = v(x_{n-1}, x2, .., x_{n-2}, x_n) built once.
/// Throws std::invalid_argument when args.size() != n or n < 2.
Expr build_v(int n, std::span<const Expr> args);

/// Same over Words (each wrapped with lit()).
Expr build_v(int n, std::span<const Word> args);

/// The generators x_1..x_m as Exprs.
std::vector<Expr> generator_exprs(Rank m);

/// u1 = v_m(x_1, .., x_m), u2 = v_{m+1}(x_{m-1}, x_{m-2}, .., x_1, x_m, x_1).
std::pair<Expr, Expr> corollary_words(Rank m);

/// Argument order of u2 as generator indices.
std::vector<int> corollary_u2_order(Rank m);

}  // namespace ctw

#endif  // CTW_CONSTRUCTORS_HPP

// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_MATRIX_ORACLE_HPP
#define CTW_MATRIX_ORACLE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ctw/expr.hpp"
#include "ctw/word.hpp"

namespace ctw {

/// Exact 2x2 integer matrix of determinant 1.
struct IntMatrix {
  std::array<BigLen, 4> e{1, 0, 0, 1};  // row-major a b / c d

  [[nodiscard]] bool is_identity() const { return e[0] == 1 && e[1] == 0 && e[2] == 0 && e[3] == 1; }
  [[nodiscard]] BigLen determinant() const { return e[0] * e[3] - e[1] * e[2]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
IntMatrix inverse(const IntMatrix& x);

/// 2x2 matrix over Z/p, p < 2^63.
struct MatMod {
  std::array<std::uint64_t, 4> e{1, 0, 0, 1};
  std::uint64_t p = 0;

  static MatMod identity(std::uint64_t p) { return MatMod{{1, 0, 0, 1}, p}; }
  [[nodiscard]] std::uint64_t determinant() const;
  friend bool operator==(const MatMod&, const MatMod&) = default;
};

MatMod mul(const MatMod& x, const MatMod& y);
MatMod inverse(const MatMod& x);
MatMod power(MatMod x, long long k);

/// Image of x_i in the Sanov-type representation of F_m: A = [[1,2],[0,1]],
/// B = [[1,0],[2,1]]; for m = 2, x1 -> A and x2 -> B; for m > 2,
/// x_i -> A^(i-1) B A^(1-i). Throws std::out_of_range for i outside [1, m].
IntMatrix gen_matrix(int i, Rank m);
IntMatrix eval_exact(const Word& w, Rank m);

MatMod eval_mod(const Word& w, Rank m, std::uint64_t p);
MatMod eval_mod(const Expr& a, Rank m, std::uint64_t p);

bool is_prime(std::uint64_t n);

struct OracleConfig {
  int prime_count = 5;
  int prime_bits = 62;
  std::uint64_t seed = 0;

  void validate() const;
  /// Lower bound on the number of primes in [2^(bits-1), 2^bits).
  [[nodiscard]] double candidate_pool() const;
};

/// k distinct primes in [2^(bits-1), 2^bits), reproducible from cfg.seed.
std::vector<std::uint64_t> sample_primes(const OracleConfig& cfg);

struct EqualityVerdict {
  enum class Kind { DefinitelyUnequal, ProbablyEqual };
  enum class Method { MonteCarlo, Exact, Fingerprint };

  Kind kind = Kind::ProbablyEqual;
  Method method = Method::MonteCarlo;
  std::uint64_t witness_prime = 0;  // DefinitelyUnequal by Monte Carlo
  double error_bound = 0.0;         // ProbablyEqual; 0 when proven exactly
  double log10_error_bound = 0.0;
  std::vector<std::uint64_t> primes;

  [[nodiscard]] bool probably_equal() const { return kind == Kind::ProbablyEqual; }
  [[nodiscard]] bool definitely_unequal() const { return kind == Kind::DefinitelyUnequal; }
};

std::string to_string(EqualityVerdict::Kind k);
/// "monte_carlo", "exact" or "fingerprint".
std::string to_string(EqualityVerdict::Method m);

/// Evaluation length used in the error bound: letters of x_i count as the
/// length of their Sanov word (1 for m = 2, 2m - 1 otherwise).
BigLen sanov_length(const BigLen& word_length, Rank m);

/// log10 of min(1, ((2 L + 1) / N_p)^k).
double log10_error_bound(const BigLen& max_length, Rank m, const OracleConfig& cfg);

EqualityVerdict equal_mc(const Expr& a, const Expr& b, Rank m, const OracleConfig& cfg);
EqualityVerdict is_identity_mc(const Expr& a, Rank m, const OracleConfig& cfg);

/// Monte Carlo verdict, upgraded to an exact one when a streaming comparison
/// settles the question within `exact_budget` letters. An exact Unequal always
/// wins; an exact Equal sets the error bound to 0. When the budget runs out,
/// cfg.prime_count Karp-Rabin fingerprints of the letter sequences are
/// compared: a mismatch is a proof of inequality, agreement keeps the smaller
/// of the two bounds.
inline constexpr std::uint64_t kDecideExactBudget = 1'000'000;
EqualityVerdict decide_equal(const Expr& a, const Expr& b, Rank m, const OracleConfig& cfg,
                             std::uint64_t exact_budget = kDecideExactBudget);

}  // namespace ctw

#endif  // CTW_MATRIX_ORACLE_HPP

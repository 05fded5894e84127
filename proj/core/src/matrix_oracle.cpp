// SPDX-License-Identifier: Apache-2.0

#include "ctw/matrix_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "ctw/fingerprint.hpp"
#include "ctw/fold.hpp"

namespace ctw {

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  const auto& a = x.e;
  const auto& b = y.e;
  return IntMatrix{{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                    a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]}};
}

IntMatrix inverse(const IntMatrix& x) { return IntMatrix{{x.e[3], -x.e[1], -x.e[2], x.e[0]}}; }

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;  // a, b < p < 2^63
  return s >= p ? s - p : s;
}

std::uint64_t negmod(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

std::uint64_t reduce_signed(const BigLen& v, std::uint64_t p) {
  BigLen r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

MatMod to_mod(const IntMatrix& m, std::uint64_t p) {
  return MatMod{{reduce_signed(m.e[0], p), reduce_signed(m.e[1], p), reduce_signed(m.e[2], p),
                 reduce_signed(m.e[3], p)},
                p};
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Generator images and their inverses modulo p.
class SanovAlgebra {
 public:
  using Value = MatMod;

  SanovAlgebra(Rank m, std::uint64_t p) : p_(p) {
    for (int i = 1; i <= m.value(); ++i) {
      const MatMod g = to_mod(gen_matrix(i, m), p);
      gens_.push_back(g);
      inverses_.push_back(ctw::inverse(g));
    }
  }

  [[nodiscard]] MatMod identity() const { return MatMod::identity(p_); }
  [[nodiscard]] MatMod mul(const MatMod& a, const MatMod& b) const { return ctw::mul(a, b); }
  [[nodiscard]] MatMod inverse(const MatMod& a) const { return ctw::inverse(a); }
  [[nodiscard]] MatMod power(const MatMod& a, long long k) const { return ctw::power(a, k); }
  [[nodiscard]] MatMod letter(Letter l) const {
    const auto i = static_cast<std::size_t>(l.generator() - 1);
    if (i >= gens_.size()) throw std::out_of_range("generator index exceeds the rank");
    return l.sign() > 0 ? gens_[i] : inverses_[i];
  }
  [[nodiscard]] MatMod literal(std::span<const Letter> letters) const {
    MatMod r = identity();
    for (Letter l : letters) r = ctw::mul(r, letter(l));
    return r;
  }

 private:
  std::uint64_t p_;
  std::vector<MatMod> gens_;
  std::vector<MatMod> inverses_;
};

}  // namespace

std::uint64_t MatMod::determinant() const {
  return addmod(mulmod(e[0], e[3], p), negmod(mulmod(e[1], e[2], p), p), p);
}

MatMod mul(const MatMod& x, const MatMod& y) {
  const std::uint64_t p = x.p;
  const auto& a = x.e;
  const auto& b = y.e;
  return MatMod{{addmod(mulmod(a[0], b[0], p), mulmod(a[1], b[2], p), p),
                 addmod(mulmod(a[0], b[1], p), mulmod(a[1], b[3], p), p),
                 addmod(mulmod(a[2], b[0], p), mulmod(a[3], b[2], p), p),
                 addmod(mulmod(a[2], b[1], p), mulmod(a[3], b[3], p), p)},
                p};
}

MatMod inverse(const MatMod& x) {
  return MatMod{{x.e[3], negmod(x.e[1], x.p), negmod(x.e[2], x.p), x.e[0]}, x.p};
}

MatMod power(MatMod x, long long k) {
  if (k < 0) {
    x = inverse(x);
    k = -k;
  }
  MatMod r = MatMod::identity(x.p);
  auto e = static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

IntMatrix gen_matrix(int i, Rank m) {
  if (i < 1 || i > m.value()) throw std::out_of_range("generator index outside [1, m]");
  const IntMatrix a{{1, 2, 0, 1}};
  const IntMatrix b{{1, 0, 2, 1}};
  if (m.value() == 2) return i == 1 ? a : b;
  const IntMatrix shift{{1, BigLen(2 * (i - 1)), 0, 1}};
  return shift * b * inverse(shift);
}

IntMatrix eval_exact(const Word& w, Rank m) {
  std::vector<IntMatrix> gens;
  for (int i = 1; i <= m.value(); ++i) gens.push_back(gen_matrix(i, m));
  IntMatrix r;
  for (Letter l : w.letters()) {
    const auto& g = gens.at(static_cast<std::size_t>(l.generator() - 1));
    r = r * (l.sign() > 0 ? g : inverse(g));
  }
  return r;
}

MatMod eval_mod(const Word& w, Rank m, std::uint64_t p) { return SanovAlgebra(m, p).literal(w.letters()); }

MatMod eval_mod(const Expr& a, Rank m, std::uint64_t p) {
  DagFold<SanovAlgebra> fold{SanovAlgebra(m, p)};
  return fold.full(a);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void OracleConfig::validate() const {
  if (prime_count < 1) throw std::invalid_argument("prime_count must be at least 1");
  if (prime_bits < 30 || prime_bits > 62) throw std::invalid_argument("prime_bits must lie in [30, 62]");
}

double OracleConfig::candidate_pool() const {
  // x / ln x < pi(x) < 1.25506 x / ln x for x >= 17.
  const double hi = std::ldexp(1.0, prime_bits);
  const double lo = std::ldexp(1.0, prime_bits - 1);
  return hi / std::log(hi) - 1.25506 * lo / std::log(lo);
}

std::vector<std::uint64_t> sample_primes(const OracleConfig& cfg) {
  cfg.validate();
  std::vector<std::uint64_t> primes;
  const std::uint64_t top = 1ull << (cfg.prime_bits - 1);
  for (int i = 0; i < cfg.prime_count; ++i) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(i) + 1)));
    std::uniform_int_distribution<std::uint64_t> dist(top, 2 * top - 1);
    for (;;) {
      const std::uint64_t c = dist(rng) | 1;
      if (is_prime(c) && std::find(primes.begin(), primes.end(), c) == primes.end()) {
        primes.push_back(c);
        break;
      }
    }
  }
  return primes;
}

std::string to_string(EqualityVerdict::Kind k) {
  return k == EqualityVerdict::Kind::ProbablyEqual ? "ProbablyEqual" : "DefinitelyUnequal";
}

std::string to_string(EqualityVerdict::Method m) {
  switch (m) {
    case EqualityVerdict::Method::MonteCarlo:
      return "monte_carlo";
    case EqualityVerdict::Method::Exact:
      return "exact";
    case EqualityVerdict::Method::Fingerprint:
      return "fingerprint";
  }
  return "unknown";
}

BigLen sanov_length(const BigLen& word_length, Rank m) {
  return m.value() == 2 ? word_length : word_length * (2 * m.value() - 1);
}

double log10_error_bound(const BigLen& max_length, Rank m, const OracleConfig& cfg) {
  // Entries of a product of L Sanov letters are bounded by 4^L, so a nonzero
  // difference of entries has at most 2L + 1 prime divisors above 2^(bits-1).
  const BigLen bad = 2 * sanov_length(max_length, m) + 1;
  const double per_prime = std::log10(bad.convert_to<double>()) - std::log10(cfg.candidate_pool());
  return per_prime >= 0 ? 0.0 : cfg.prime_count * per_prime;
}

EqualityVerdict equal_mc(const Expr& a, const Expr& b, Rank m, const OracleConfig& cfg) {
  EqualityVerdict v;
  v.method = EqualityVerdict::Method::MonteCarlo;
  v.primes = sample_primes(cfg);
  for (std::uint64_t p : v.primes) {
    DagFold<SanovAlgebra> fold{SanovAlgebra(m, p)};
    if (fold.full(a) != fold.full(b)) {
      v.kind = EqualityVerdict::Kind::DefinitelyUnequal;
      v.witness_prime = p;
      return v;
    }
  }
  v.kind = EqualityVerdict::Kind::ProbablyEqual;
  v.log10_error_bound = log10_error_bound(std::max(a.length(), b.length()), m, cfg);
  v.error_bound = std::pow(10.0, v.log10_error_bound);
  return v;
}

EqualityVerdict is_identity_mc(const Expr& a, Rank m, const OracleConfig& cfg) {
  return equal_mc(a, Expr{}, m, cfg);
}

EqualityVerdict decide_equal(const Expr& a, const Expr& b, Rank m, const OracleConfig& cfg,
                             std::uint64_t exact_budget) {
  EqualityVerdict v = equal_mc(a, b, m, cfg);
  if (v.definitely_unequal()) return v;
  switch (equal_exact(a, b, exact_budget)) {
    case ExactVerdict::Equal:
      v.method = EqualityVerdict::Method::Exact;
      v.error_bound = 0.0;
      v.log10_error_bound = -std::numeric_limits<double>::infinity();
      break;
    case ExactVerdict::Unequal:
      v.kind = EqualityVerdict::Kind::DefinitelyUnequal;
      v.method = EqualityVerdict::Method::Exact;
      v.error_bound = 0.0;
      v.log10_error_bound = 0.0;
      break;
    case ExactVerdict::BudgetExceeded: {
      const FingerprintVerdict fp = fingerprint_equal(a, b, cfg.prime_count, cfg.seed);
      if (!fp.equal) {
        v.kind = EqualityVerdict::Kind::DefinitelyUnequal;
        v.method = EqualityVerdict::Method::Fingerprint;
        v.error_bound = 0.0;
        v.log10_error_bound = 0.0;
      } else if (fp.log10_error_bound < v.log10_error_bound) {
        v.method = EqualityVerdict::Method::Fingerprint;
        v.log10_error_bound = fp.log10_error_bound;
        v.error_bound = std::pow(10.0, fp.log10_error_bound);
      }
      break;
    }
  }
  return v;
}

}  // namespace ctw

// SPDX-License-Identifier: Apache-2.0

#include "ctw/fingerprint.hpp"

#include <algorithm>
#include <cmath>

#include "ctw/fold.hpp"

namespace ctw {

namespace {

namespace mp = boost::multiprecision;
using Wide = mp::number<mp::cpp_int_backend<512, 512, mp::unsigned_magnitude, mp::unchecked, void>>;

const Residue256& modulus() {
  static const Residue256 p = (Residue256(1) << 255) - 19;
  return p;
}

Residue256 mulmod(const Residue256& a, const Residue256& b) {
  return static_cast<Residue256>((static_cast<Wide>(a) * static_cast<Wide>(b)) % static_cast<Wide>(modulus()));
}

Residue256 addmod(const Residue256& a, const Residue256& b) {
  Residue256 s = a + b;  // both below p < 2^255, no overflow
  if (s >= modulus()) s -= modulus();
  return s;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Fingerprints of w and of w^-1 (as letter sequences) with base^|w|.
struct Print {
  Residue256 shift = 1;
  Residue256 forward = 0;
  Residue256 backward = 0;
};

class PrintAlgebra {
 public:
  using Value = Print;
  static constexpr bool group_valued = false;

  explicit PrintAlgebra(Residue256 base) : base_(std::move(base)) {}

  [[nodiscard]] Print identity() const { return {}; }

  [[nodiscard]] Print literal(std::span<const Letter> letters) const {
    Print p;
    for (Letter l : letters) {
      p.shift = mulmod(p.shift, base_);
      p.forward = addmod(mulmod(p.forward, base_), code(l));
    }
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      p.backward = addmod(mulmod(p.backward, base_), code(it->inverse()));
    }
    return p;
  }

  [[nodiscard]] Print mul(const Print& a, const Print& b) const {
    return {mulmod(a.shift, b.shift), addmod(mulmod(a.forward, b.shift), b.forward),
            addmod(mulmod(b.backward, a.shift), a.backward)};
  }

  [[nodiscard]] Print inverse(const Print& a) const { return {a.shift, a.backward, a.forward}; }

  [[nodiscard]] Print power(Print a, long long k) const {
    Print r;
    while (k > 0) {
      if (k & 1) r = mul(r, a);
      k >>= 1;
      if (k > 0) a = mul(a, a);
    }
    return r;
  }

 private:
  static Residue256 code(Letter l) { return Residue256(2 * l.generator() + (l.sign() < 0 ? 1 : 0)); }

  Residue256 base_;
};

}  // namespace

Residue256 fingerprint(const Expr& a, const Residue256& base) {
  DagFold<PrintAlgebra> fold{PrintAlgebra(base % modulus())};
  return fold.full(a).forward;
}

std::vector<Residue256> fingerprint_bases(int count, std::uint64_t seed) {
  std::vector<Residue256> out;
  std::uint64_t state = seed ^ 0x5bd1e9955bd1e995ULL;
  while (static_cast<int>(out.size()) < count) {
    Residue256 b = 0;
    for (int i = 0; i < 4; ++i) b = (b << 64) | splitmix64(state);
    b %= modulus();
    if (b < 2) continue;
    out.push_back(b);
  }
  return out;
}

double log10_fingerprint_bound(const BigLen& length, int count) {
  if (length <= 1) return -std::numeric_limits<double>::infinity();
  // log10(p) for p = 2^255 - 19
  const double log10_p = 255.0 * std::log10(2.0);
  const double log10_len = std::log10(static_cast<double>(length));
  return std::min(0.0, count * (log10_len - log10_p));
}

FingerprintVerdict fingerprint_equal(const Expr& a, const Expr& b, int count, std::uint64_t seed) {
  FingerprintVerdict v;
  if (a.length() != b.length()) return v;
  for (const auto& base : fingerprint_bases(count, seed)) {
    if (fingerprint(a, base) != fingerprint(b, base)) return v;
  }
  v.equal = true;
  v.log10_error_bound = log10_fingerprint_bound(a.length(), count);
  return v;
}

}  // namespace ctw

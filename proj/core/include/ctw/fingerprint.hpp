// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_FINGERPRINT_HPP
#define CTW_FINGERPRINT_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ctw/expr.hpp"

namespace ctw {

using Residue256 = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    256, 256, boost::multiprecision::unsigned_magnitude, boost::multiprecision::unchecked, void>>;

/// Karp-Rabin fingerprint of the letter sequence of a denotation, evaluated
/// at `base` modulo the prime 2^255 - 19. Letters x_i^{+-1} are coded as
/// 2i and 2i + 1.
Residue256 fingerprint(const Expr& a, const Residue256& base);

/// `count` bases in [2, p - 1), reproducible from the seed.
std::vector<Residue256> fingerprint_bases(int count, std::uint64_t seed);

/// log10 of min(1, (L / p)^count): two different letter sequences of length
/// L agree at a uniformly random base with probability below L / p.
double log10_fingerprint_bound(const BigLen& length, int count);

struct FingerprintVerdict {
  bool equal = false;
  double log10_error_bound = 0.0;  // meaningful when equal
};

/// Since denotations are freely reduced, distinct fingerprints prove the
/// words unequal; agreement at every base is equality up to the bound.
FingerprintVerdict fingerprint_equal(const Expr& a, const Expr& b, int count, std::uint64_t seed);

}  // namespace ctw

#endif  // CTW_FINGERPRINT_HPP

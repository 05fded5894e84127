// SPDX-License-Identifier: Apache-2.0
//
// Letter-level reference implementations used as test oracles. Letters are
// signed ints (+i for x_i, -i for its inverse); nothing here calls the
// library.

#ifndef CTW_TESTS_NAIVE_HPP
#define CTW_TESTS_NAIVE_HPP

#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

namespace naive {

using Seq = std::vector<int>;

inline Seq reduce(const Seq& s) {
  Seq out;
  out.reserve(s.size());
  for (int x : s) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

inline Seq inverse(const Seq& s) {
  Seq out(s.rbegin(), s.rend());
  for (int& x : out) x = -x;
  return out;
}

inline void append(Seq& acc, const Seq& s) { acc.insert(acc.end(), s.begin(), s.end()); }

inline Seq power(const Seq& s, long long k) {
  const Seq base = k < 0 ? inverse(s) : s;
  Seq out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) append(out, base);
  return out;
}

inline Seq comm(const Seq& a, const Seq& b) {
  Seq out = a;
  append(out, b);
  append(out, inverse(a));
  append(out, inverse(b));
  return out;
}

// [a^8, b^8]^100 a [..]^200 a [..]^300 a^-1 [..]^400 a^-1
// [..]^500 b [..]^600 b [..]^700 b^-1 [..]^800 b^-1, reduced once at the end.
inline Seq w2(const Seq& a, const Seq& b) {
  const Seq c = comm(power(a, 8), power(b, 8));
  const Seq tails[] = {a, a, inverse(a), inverse(a), b, b, inverse(b), inverse(b)};
  Seq out;
  for (int i = 0; i < 8; ++i) {
    append(out, power(c, 100 * (i + 1)));
    append(out, tails[i]);
  }
  return reduce(out);
}

// [a^48, b^40]^100 a^6 ... with four a^6 tails then four b^5 tails.
inline Seq u(const Seq& a, const Seq& b) {
  const Seq d = comm(power(a, 48), power(b, 40));
  Seq out;
  for (int i = 0; i < 8; ++i) {
    append(out, power(d, 100 * (i + 1)));
    append(out, i < 4 ? power(a, 6) : power(b, 5));
  }
  return reduce(out);
}

inline bool is_cyclically_reduced(const Seq& s) { return s.size() < 2 || s.front() != -s.back(); }

inline Seq cyclic_core(Seq s) {
  s = reduce(s);
  std::size_t i = 0;
  std::size_t j = s.size();
  while (j - i >= 2 && s[i] == -s[j - 1]) {
    ++i;
    --j;
  }
  return Seq(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(j));
}

// Smallest d dividing |s| with s = (s[0..d))^(|s|/d), by direct comparison.
inline std::size_t root_length(const Seq& s) {
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = s[i] == s[i - d];
    if (ok) return d;
  }
  return n;
}

inline bool is_proper_power(const Seq& s) { return !s.empty() && root_length(s) < s.size(); }

// Every reduced word of length exactly len over m generators.
inline std::vector<Seq> all_reduced(int m, std::size_t len) {
  std::vector<Seq> out{Seq{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Seq> next;
    for (const auto& s : out) {
      for (int g = 1; g <= m; ++g) {
        for (int x : {g, -g}) {
          if (!s.empty() && s.back() == -x) continue;
          Seq t = s;
          t.push_back(x);
          next.push_back(std::move(t));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Seq> all_reduced_upto(int m, std::size_t len) {
  std::vector<Seq> out;
  for (std::size_t k = 0; k <= len; ++k) {
    auto v = all_reduced(m, k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// Conjugacy classes of the reduced words of length <= len. Two such words
// are conjugate iff they are joined by single-letter conjugations that never
// leave the ball (shorten to the cyclic core, rotate, lengthen), so
// union-find over those edges gives the classes exactly.
struct ConjugacyClasses {
  std::vector<Seq> words;
  std::map<Seq, std::size_t> index;
  std::vector<std::size_t> parent;

  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  bool conjugate(const Seq& x, const Seq& y) { return find(index.at(x)) == find(index.at(y)); }
};

inline ConjugacyClasses conjugacy_classes(int m, std::size_t len) {
  ConjugacyClasses c;
  c.words = all_reduced_upto(m, len);
  for (std::size_t i = 0; i < c.words.size(); ++i) c.index.emplace(c.words[i], i);
  c.parent.resize(c.words.size());
  std::iota(c.parent.begin(), c.parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    for (int g = 1; g <= m; ++g) {
      for (int x : {g, -g}) {
        Seq t{x};
        append(t, c.words[i]);
        t.push_back(-x);
        t = reduce(t);
        if (t.size() > len) continue;
        const std::size_t a = c.find(i);
        const std::size_t b = c.find(c.index.at(t));
        if (a != b) c.parent[a] = b;
      }
    }
  }
  return c;
}

}  // namespace naive

#endif  // CTW_TESTS_NAIVE_HPP

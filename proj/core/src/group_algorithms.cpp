// SPDX-License-Identifier: Apache-2.0

#include "ctw/group_algorithms.hpp"

#include <stdexcept>

namespace ctw {

namespace {

Word conj(const Word& s, const Word& x) { return concat(concat(s, x), invert(s)); }

// Offset of the first occurrence of `needle` in `hay`, KMP.
std::optional<std::size_t> find(std::span<const Letter> hay, std::span<const Letter> needle) {
  if (needle.empty()) return 0;
  std::vector<std::size_t> fail(needle.size(), 0);
  for (std::size_t i = 1; i < needle.size(); ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && needle[i] != needle[k]) k = fail[k - 1];
    if (needle[i] == needle[k]) ++k;
    fail[i] = k;
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < hay.size(); ++i) {
    while (k > 0 && hay[i] != needle[k]) k = fail[k - 1];
    if (hay[i] == needle[k]) ++k;
    if (k == needle.size()) return i + 1 - k;
  }
  return std::nullopt;
}

}  // namespace

Tuple parse_tuple(std::string_view text, Rank m) {
  Tuple t;
  std::size_t pos = 0;
  for (;;) {
    const auto semi = text.find(';', pos);
    t.push_back(parse_word(text.substr(pos, semi == text.npos ? text.npos : semi - pos), m));
    if (semi == text.npos) break;
    pos = semi + 1;
  }
  return t;
}

std::string format_tuple(const Tuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += "; ";
    out += format_word(t[i]);
  }
  return out;
}

bool commutes(const Word& a, const Word& b) { return commutator(a, b).empty(); }

std::optional<CyclicWitness> is_cyclic_tuple(const Tuple& t) {
  CyclicWitness w;
  w.exponents.assign(t.size(), 0);
  bool have_root = false;
  Word root_inverse;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].empty()) continue;
    const auto [root, exponent] = primitive_root(t[i]);
    if (!have_root) {
      w.root = root;
      root_inverse = invert(root);
      have_root = true;
      w.exponents[i] = exponent;
    } else if (root == w.root) {
      w.exponents[i] = exponent;
    } else if (root == root_inverse) {
      w.exponents[i] = -exponent;
    } else {
      return std::nullopt;
    }
  }
  return w;
}

std::optional<Word> conjugator_word(const Word& x, const Word& y) {
  if (x.size() % 2 != y.size() % 2) return std::nullopt;
  const auto cx = cyclic_reduce(x);
  const auto cy = cyclic_reduce(y);
  if (cx.core.size() != cy.core.size()) return std::nullopt;
  if (cx.core.empty()) return Word{};
  // cy.core is a rotation cx[j:] cx[:j] = p^-1 cx p of cx.core, with p = cx[:j].
  std::vector<Letter> doubled(cx.core.letters().begin(), cx.core.letters().end());
  doubled.insert(doubled.end(), cx.core.letters().begin(), cx.core.letters().end());
  const auto j = find(doubled, cy.core.letters());
  if (!j) return std::nullopt;
  const Word p = cx.core.subword(0, *j);
  // y = gy p^-1 gx^-1 x gx p gy^-1
  const Word z = concat(concat(cy.conjugator, invert(p)), invert(cx.conjugator));
  return z;
}

Word centralizer_gen(const Word& w) {
  if (w.empty()) throw std::invalid_argument("the centralizer of the empty word is the whole group");
  return primitive_root(w).root;
}

Tuple conjugate(const Tuple& t, const Word& s) {
  Tuple out;
  out.reserve(t.size());
  for (const Word& x : t) out.push_back(conj(s, x));
  return out;
}

std::optional<Word> conjugator_tuple(const Tuple& xs, const Tuple& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("tuples of different arity");
  std::size_t base = xs.size();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!xs[i].empty()) {
      base = i;
      break;
    }
  }
  const auto satisfies = [&](const Word& s) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (conj(s, xs[i]) != ys[i]) return false;
    }
    return true;
  };
  if (base == xs.size()) return satisfies(Word{}) ? std::optional<Word>(Word{}) : std::nullopt;

  const auto z0 = conjugator_word(xs[base], ys[base]);
  if (!z0) return std::nullopt;
  // Every solution has the form z0 r^t with r generating the centralizer of xs[base].
  const Word r = centralizer_gen(xs[base]);
  const Word z0_inv = invert(*z0);
  // r = g c g^-1 with c cyclically reduced; solve in the conjugate frame.
  const auto rc = cyclic_reduce(r);
  const Word g_inv = invert(rc.conjugator);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (commutes(xs[j], r)) continue;
    // c^t x c^-t == target has at most one solution t. Past |x| / |c| steps
    // each further step adds 2|c| letters, which bounds |t|.
    const Word x = conj(g_inv, xs[j]);
    const Word target = conj(g_inv, concat(concat(z0_inv, ys[j]), *z0));
    const auto bound = static_cast<long long>((2 * x.size() + target.size()) / rc.core.size() + 4);
    for (const long long sign : {1LL, -1LL}) {
      const Word step = sign > 0 ? rc.core : invert(rc.core);
      Word w = x;
      for (long long t = 0; t <= bound; ++t) {
        if (w == target) {
          const Word s = concat(*z0, power(r, sign * t));
          return satisfies(s) ? std::optional<Word>(s) : std::nullopt;
        }
        w = conj(step, w);
      }
    }
    return std::nullopt;
  }
  // Every entry commutes with r, hence with every candidate; z0 decides.
  return satisfies(*z0) ? z0 : std::nullopt;
}

}  // namespace ctw

// SPDX-License-Identifier: Apache-2.0

#include "ctw/endomorphism.hpp"

#include <stdexcept>

#include "ctw/fold.hpp"
#include "ctw/group_algorithms.hpp"

namespace ctw {

Endo::Endo(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.size() < 2) throw std::invalid_argument("an endomorphism needs rank >= 2");
  for (const auto& w : images_) {
    if (w.max_generator() > static_cast<int>(images_.size())) {
      throw std::invalid_argument("image uses a generator beyond the rank");
    }
  }
}

Endo Endo::identity(Rank m) {
  std::vector<Word> images;
  for (int i = 1; i <= m.value(); ++i) images.push_back(Word::generator(i));
  return Endo(std::move(images));
}

Endo parse_endo(std::string_view text, Rank m) {
  std::vector<Word> images;
  std::size_t pos = 0;
  for (;;) {
    const auto semi = text.find(';', pos);
    images.push_back(parse_word(text.substr(pos, semi == text.npos ? text.npos : semi - pos), m));
    if (semi == text.npos) break;
    pos = semi + 1;
  }
  if (static_cast<int>(images.size()) != m.value()) {
    throw ParseError("expected " + std::to_string(m.value()) + " images, got " + std::to_string(images.size()));
  }
  return Endo(std::move(images));
}

std::string format_endo(const Endo& e) {
  std::string out;
  for (const auto& w : e.images()) {
    if (!out.empty()) out += "; ";
    out += format_word(w);
  }
  return out;
}

Word apply_word(const Endo& e, const Word& w) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    if (l.generator() > e.rank().value()) throw std::invalid_argument("word uses a generator beyond the rank");
    const Word& img = e.image(l.generator());
    if (l.sign() > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(it->inverse());
    }
  }
  return Word::reduce(out);
}

Expr apply(const Endo& e, const Word& w) { return lit(apply_word(e, w)); }

namespace {

class SubstitutionAlgebra {
 public:
  using Value = Expr;

  explicit SubstitutionAlgebra(std::span<const Expr> images) : images_(images.begin(), images.end()) {}

  [[nodiscard]] Expr identity() const { return {}; }
  [[nodiscard]] Expr mul(const Expr& a, const Expr& b) const { return cat(a, b); }
  [[nodiscard]] Expr inverse(const Expr& a) const { return a.inverse(); }
  [[nodiscard]] Expr power(const Expr& a, long long k) const { return pow(a, k); }
  [[nodiscard]] Expr literal(std::span<const Letter> letters) const {
    Expr acc;
    for (std::size_t i = 0; i < letters.size();) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) ++j;
      const auto g = static_cast<std::size_t>(letters[i].generator() - 1);
      if (g >= images_.size()) throw std::invalid_argument("word uses a generator beyond the rank");
      const auto run = static_cast<long long>(j - i) * letters[i].sign();
      acc = cat(acc, pow(images_[g], run));
      i = j;
    }
    return acc;
  }

 private:
  std::vector<Expr> images_;
};

}  // namespace

Expr substitute(const Expr& a, std::span<const Expr> images) {
  DagFold<SubstitutionAlgebra> fold{SubstitutionAlgebra(images)};
  return fold.full(a);
}

Expr apply(const Endo& e, const Expr& a) {
  std::vector<Expr> images;
  for (const auto& w : e.images()) images.push_back(lit(w));
  return substitute(a, images);
}

Endo compose(const Endo& f, const Endo& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("composing endomorphisms of different rank");
  std::vector<Word> images;
  for (const auto& w : g.images()) images.push_back(apply_word(f, w));
  return Endo(std::move(images));
}

Endo inner(const Word& s, Rank m) {
  std::vector<Word> images;
  const Word si = invert(s);
  for (int i = 1; i <= m.value(); ++i) images.push_back(concat(concat(s, Word::generator(i)), si));
  return Endo(std::move(images));
}

bool image_is_cyclic(const Endo& e) { return is_cyclic_tuple(e.images()).has_value(); }

}  // namespace ctw

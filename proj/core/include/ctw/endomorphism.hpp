// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_ENDOMORPHISM_HPP
#define CTW_ENDOMORPHISM_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctw/expr.hpp"
#include "ctw/word.hpp"

namespace ctw {

/// Endomorphism of F_m given by the images of x_1..x_m.
class Endo {
 public:
  explicit Endo(std::vector<Word> images);

  static Endo identity(Rank m);

  [[nodiscard]] Rank rank() const { return Rank(static_cast<int>(images_.size())); }
  [[nodiscard]] const std::vector<Word>& images() const { return images_; }
  [[nodiscard]] const Word& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const Endo&, const Endo&) = default;

 private:
  std::vector<Word> images_;
};

/// "x2; x1 x2 x1^-1" (semicolon separated images in word syntax).
Endo parse_endo(std::string_view text, Rank m);
std::string format_endo(const Endo& e);

/// Homomorphic image of a word; throws std::invalid_argument if w uses a
/// generator beyond the rank.
Word apply_word(const Endo& e, const Word& w);
Expr apply(const Endo& e, const Word& w);
/// Substitutes the images at the literal leaves of the DAG.
Expr apply(const Endo& e, const Expr& a);

/// Substitutes x_i -> images[i-1] with Expr-valued images.
Expr substitute(const Expr& a, std::span<const Expr> images);

/// f o g: x_i -> f(g(x_i)).
Endo compose(const Endo& f, const Endo& g);
/// tau_S: x_i -> S x_i S^-1.
Endo inner(const Word& s, Rank m);

bool image_is_cyclic(const Endo& e);

}  // namespace ctw

#endif  // CTW_ENDOMORPHISM_HPP

// SPDX-License-Identifier: Apache-2.0

#include "ctw/constructors.hpp"

#include <map>
#include <stdexcept>

namespace ctw {

namespace exponents {

namespace {
BigLen pow400(int k) {
  BigLen r = 1;
  for (int i = 0; i < k; ++i) r *= 400;
  return r;
}
}  // namespace

BigLen b1(int n) { return BigLen(a1) * pow400(n - 3); }
BigLen b2(int n) { return pow400(n - 2); }
BigLen b3(int n) { return BigLen(a3) * pow400(n - 3); }

}  // namespace exponents

namespace {

struct Factor {
  long long block;  // exponent of the commutator block
  const Expr* tail;
};

// block^e1 t1 block^e2 t2 ... with the commutator split computed once.
Expr interleave(const Expr& block, std::span<const Factor> factors) {
  const ExprSplit split = cyclic_split(block);
  Expr acc;
  for (const auto& f : factors) {
    acc = cat(acc, pow_split(split, f.block));
    acc = cat(acc, *f.tail);
  }
  return acc;
}

using ArgKey = std::vector<std::pair<const void*, bool>>;

ArgKey key_of(std::span<const Expr> args) {
  ArgKey k;
  for (const auto& e : args) k.emplace_back(e.node(), e.inverted());
  return k;
}

class VBuilder {
 public:
  Expr build(std::span<const Expr> args) {
    const int n = static_cast<int>(args.size());
    auto key = key_of(args);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Expr result;
    if (n == 2) {
      result = build_w2(args[0], args[1]);
    } else if (n == 3) {
      const Expr v12 = build(std::vector<Expr>{args[0], args[1]});
      const Expr v23 = build(std::vector<Expr>{args[1], args[2]});
      const Expr v31 = build(std::vector<Expr>{args[2], args[0]});
      result = build_u(build_u(v12, v23), build_u(v23, v31));
    } else {
      std::vector<Expr> first(args.begin(), args.end() - 1);
      std::vector<Expr> middle(args.begin(), args.end() - 1);
      middle[0] = args[n - 2];
      middle[n - 2] = args[n - 1];
      std::vector<Expr> last = middle;
      last[0] = args[n - 1];
      last[n - 2] = args[0];
      const Expr a = build(first);
      const Expr m = build(middle);
      const Expr c = build(last);
      result = build_u(build_u(a, m), build_u(m, c));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<ArgKey, Expr> memo_;
};

}  // namespace

Expr build_w2(const Expr& a, const Expr& b) {
  const Expr c = comm(pow(a, 8), pow(b, 8));
  const Expr ai = a.inverse();
  const Expr bi = b.inverse();
  const Factor factors[] = {{100, &a}, {200, &a}, {300, &ai}, {400, &ai},
                            {500, &b}, {600, &b}, {700, &bi}, {800, &bi}};
  return interleave(c, factors);
}

Expr build_u(const Expr& a, const Expr& b) {
  const Expr d = comm(pow(a, 48), pow(b, 40));
  const Expr a6 = pow(a, 6);
  const Expr b5 = pow(b, 5);
  const Factor factors[] = {{100, &a6}, {200, &a6}, {300, &a6}, {400, &a6},
                            {500, &b5}, {600, &b5}, {700, &b5}, {800, &b5}};
  return interleave(d, factors);
}

Expr build_v(int n, std::span<const Expr> args) {
  if (n < 2) throw std::invalid_argument("v_n needs n >= 2");
  if (static_cast<int>(args.size()) != n) {
    throw std::invalid_argument("v_" + std::to_string(n) + " takes " + std::to_string(n) + " arguments, got " +
                                std::to_string(args.size()));
  }
  VBuilder builder;
  return builder.build(args);
}

Expr build_v(int n, std::span<const Word> args) {
  std::vector<Expr> exprs;
  exprs.reserve(args.size());
  for (const auto& w : args) exprs.push_back(lit(w));
  return build_v(n, exprs);
}

std::vector<Expr> generator_exprs(Rank m) {
  std::vector<Expr> gens;
  for (int i = 1; i <= m.value(); ++i) gens.push_back(lit(Word::generator(i)));
  return gens;
}

std::vector<int> corollary_u2_order(Rank m) {
  std::vector<int> order;
  for (int i = m.value() - 1; i >= 1; --i) order.push_back(i);
  order.push_back(m.value());
  order.push_back(1);
  return order;
}

std::pair<Expr, Expr> corollary_words(Rank m) {
  const auto gens = generator_exprs(m);
  std::vector<Expr> u2_args;
  for (int i : corollary_u2_order(m)) u2_args.push_back(gens[static_cast<std::size_t>(i - 1)]);
  return {build_v(m.value(), gens), build_v(m.value() + 1, u2_args)};
}

}  // namespace ctw

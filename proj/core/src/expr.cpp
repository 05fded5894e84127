// SPDX-License-Identifier: Apache-2.0

#include "ctw/expr.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ctw {

using detail::Kind;
using detail::Node;

namespace {

// Results this short are stored as one Literal so equal small values intern
// to the same node regardless of how they were built.
constexpr std::uint64_t kMaterializeLimit = 64;

std::atomic<std::uint64_t> g_seam_cap{1'000'000};

const BigLen& zero_length() {
  static const BigLen zero = 0;
  return zero;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ull;
  return h ^ (h >> 29);
}

std::uint64_t low64(const BigLen& n) {
  return static_cast<std::uint64_t>(n & BigLen(0xffffffffffffffffull));
}

}  // namespace

// Interning table: every node is created here, and structurally equal nodes
// (same kind, same fields, same child references) are returned shared.
class ExprFactory {
 public:
  static Expr make(Node node) {
    node.hash = hash_of(node);
    node.depth = 1 + std::max(depth_of(node.first), depth_of(node.second));
    auto& self = instance();
    std::lock_guard lock(self.mutex_);
    auto& bucket = self.table_[node.hash];
    for (auto& weak : bucket) {
      if (auto existing = weak.lock(); existing && same_fields(*existing, node)) {
        return Expr(std::move(existing), false);
      }
    }
    auto created = std::make_shared<const Node>(std::move(node));
    bucket.push_back(created);
    if (++self.inserted_ > self.next_sweep_) self.sweep();
    return Expr(std::move(created), false);
  }

  static Expr with_orientation(const Expr& e, bool inverted) { return Expr(e.node_, inverted); }

 private:
  static ExprFactory& instance() {
    static ExprFactory f;
    return f;
  }

  static std::uint32_t depth_of(const Expr& e) { return e.empty() ? 0 : e.node()->depth; }

  static std::uint64_t hash_of(const Node& n) {
    std::uint64_t h = mix(0x51ed270b27a3ef1dull, static_cast<std::uint64_t>(n.kind));
    h = mix(h, low64(n.length));
    switch (n.kind) {
      case Kind::Literal:
        h = mix(h, WordHash{}(n.word));
        break;
      case Kind::Concat:
        h = mix(h, n.first.structural_hash());
        h = mix(h, n.second.structural_hash());
        h = mix(h, low64(n.offset));
        break;
      case Kind::Slice:
        h = mix(h, n.first.structural_hash());
        h = mix(h, low64(n.offset));
        break;
      case Kind::Power:
        h = mix(h, n.first.structural_hash());
        h = mix(h, static_cast<std::uint64_t>(n.exponent));
        break;
    }
    return h;
  }

  static bool same_fields(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.length != b.length) return false;
    switch (a.kind) {
      case Kind::Literal: return a.word == b.word;
      case Kind::Concat: return a.first == b.first && a.second == b.second && a.offset == b.offset;
      case Kind::Slice: return a.first == b.first && a.offset == b.offset;
      case Kind::Power: return a.first == b.first && a.exponent == b.exponent;
    }
    return false;
  }

  // Called with mutex_ held. Drops buckets whose nodes have all expired.
  void sweep() {
    for (auto it = table_.begin(); it != table_.end();) {
      auto& bucket = it->second;
      std::erase_if(bucket, [](const std::weak_ptr<const Node>& w) { return w.expired(); });
      it = bucket.empty() ? table_.erase(it) : std::next(it);
    }
    inserted_ = 0;
    next_sweep_ = std::max<std::size_t>(1 << 16, 2 * table_.size());
  }

  std::mutex mutex_;
  std::unordered_map<std::uint64_t, std::vector<std::weak_ptr<const Node>>> table_;
  std::size_t inserted_ = 0;
  std::size_t next_sweep_ = 1 << 16;
};

const BigLen& Expr::length() const noexcept { return node_ ? node_->length : zero_length(); }

std::uint64_t Expr::structural_hash() const noexcept {
  return node_ ? mix(node_->hash, inverted_ ? 1 : 2) : 0;
}

void set_seam_cap(std::uint64_t cap) { g_seam_cap.store(cap); }
std::uint64_t seam_cap() { return g_seam_cap.load(); }

std::string to_string(const BigLen& n) { return n.str(); }

namespace {

// A window [start, end) of the denotation of an oriented reference.
struct Frame {
  Expr ref;
  BigLen start;
  BigLen end;
};

bool is_leaf(const Frame& f) { return f.ref.node()->kind == Kind::Literal; }

Expr oriented(const Expr& child, bool flip) {
  return flip ? child.inverse() : child;
}

// Pieces of a window, in order, as windows of child references.
void pieces(const Frame& f, std::vector<Frame>& out) {
  out.clear();
  const Node& n = *f.ref.node();
  if (n.kind == Kind::Power) {
    const Expr base = oriented(n.first, f.ref.inverted());
    const BigLen& period = base.length();
    const BigLen phase = f.start % period;
    const BigLen first_end = std::min<BigLen>(period, phase + (f.end - f.start));
    out.push_back({base, phase, first_end});
    const BigLen next = f.start + (first_end - phase);
    if (next < f.end) out.push_back({f.ref, next, f.end});
    return;
  }
  const bool inv = f.ref.inverted();
  const BigLen s = inv ? n.length - f.end : f.start;
  const BigLen e = inv ? n.length - f.start : f.end;
  switch (n.kind) {
    case Kind::Concat: {
      const BigLen keep = n.first.length() - n.offset;
      if (s < keep) out.push_back({n.first, s, std::min(e, keep)});
      if (e > keep) {
        const BigLen from = (s > keep ? s : keep) - keep + n.offset;
        out.push_back({n.second, from, e - keep + n.offset});
      }
      break;
    }
    case Kind::Slice:
      out.push_back({n.first, n.offset + s, n.offset + e});
      break;
    default:
      break;
  }
  if (inv) {
    std::reverse(out.begin(), out.end());
    for (auto& p : out) {
      const BigLen len = p.ref.length();
      p = Frame{p.ref.inverse(), len - p.end, len - p.start};
    }
  }
}

// Left-to-right cursor over an Expr denotation.
class Stream {
 public:
  explicit Stream(const Expr& e) {
    if (!e.empty()) stack_.push_back({e, 0, e.length()});
  }
  Stream(const Expr& e, const BigLen& from, const BigLen& to) {
    if (from < to) stack_.push_back({e, from, to});
  }

  [[nodiscard]] bool done() const { return stack_.empty(); }
  [[nodiscard]] const Frame& top() const { return stack_.back(); }

  void advance(BigLen n) {
    while (n > 0) {
      Frame& f = stack_.back();
      const BigLen rem = f.end - f.start;
      if (n >= rem) {
        n -= rem;
        stack_.pop_back();
      } else {
        f.start += n;
        n = 0;
      }
    }
  }

  void descend() {
    const Frame f = std::move(stack_.back());
    stack_.pop_back();
    pieces(f, scratch_);
    for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) stack_.push_back(std::move(*it));
  }

 private:
  std::vector<Frame> stack_;
  std::vector<Frame> scratch_;
};

struct LeafView {
  const Letter* data;
  std::size_t size;
  bool inverted;
  std::size_t start;

  [[nodiscard]] Letter at(std::size_t i) const {
    const std::size_t k = start + i;
    return inverted ? data[size - 1 - k].inverse() : data[k];
  }
};

LeafView leaf_view(const Frame& f) {
  const Word& w = f.ref.node()->word;
  return {w.letters().data(), w.size(), f.ref.inverted(), static_cast<std::size_t>(f.start)};
}

// Base and phase of a frame when viewed as part of a periodic run: a Power
// frame is periodic over its base; any other frame is a single period of itself.
struct Periodic {
  Expr base;
  BigLen phase;
};

Periodic periodic(const Frame& f) {
  const Node& n = *f.ref.node();
  if (n.kind == Kind::Power) {
    const Expr base = oriented(n.first, f.ref.inverted());
    return {base, f.start % base.length()};
  }
  return {f.ref, f.start};
}

Expr make_power(const Expr& base, long long k);

struct LcpContext {
  std::uint64_t budget = 0;
  std::uint64_t spent = 0;
  // Comparisons already made; pending ones read as false so a comparison
  // never waits on itself.
  std::map<std::tuple<const Node*, bool, const Node*, bool>, bool> same;
  std::map<std::tuple<const Node*, bool, BigLen, const Node*, bool>, bool> rotated;
};

std::optional<BigLen> lcp(Stream x, Stream y, LcpContext& ctx);

std::optional<bool> same_denotation(const Expr& a, const Expr& b, LcpContext& ctx) {
  const auto key = std::make_tuple(a.node(), a.inverted(), b.node(), b.inverted());
  if (auto it = ctx.same.find(key); it != ctx.same.end()) return it->second;
  ctx.same.emplace(key, false);
  const auto n = lcp(Stream(a), Stream(b), ctx);
  if (!n) return std::nullopt;
  const bool eq = *n == a.length();
  ctx.same[key] = eq;
  return eq;
}

// Whether letters [shift, shift + |target|) of the Power reference `power`
// spell `target`; shift is below one period, so the window fits.
std::optional<bool> same_rotation(const Expr& power, const BigLen& shift, const Expr& target, LcpContext& ctx) {
  const auto key = std::make_tuple(power.node(), power.inverted(), shift, target.node(), target.inverted());
  if (auto it = ctx.rotated.find(key); it != ctx.rotated.end()) return it->second;
  ctx.rotated.emplace(key, false);
  const BigLen& len = target.length();
  const auto n = lcp(Stream(power, shift, shift + len), Stream(target), ctx);
  if (!n) return std::nullopt;
  const bool eq = *n == len;
  ctx.rotated[key] = eq;
  return eq;
}

// True when a period of f1 spans a whole number of periods of f2 and the two
// periodic sequences agree from the current positions on; the windows then
// agree for n letters.
std::optional<bool> periods_agree(const Frame& f1, const Periodic& p1, const Frame& f2, const Periodic& p2,
                                  const BigLen& n, LcpContext& ctx) {
  const BigLen& len = p1.base.length();
  const BigLen& period = p2.base.length();
  if (len <= kMaterializeLimit || n < len) return false;
  if (f2.ref.node()->kind != Kind::Power) {
    if (len != period || p1.phase != p2.phase) return false;
    return same_denotation(p1.base, p2.base, ctx);
  }
  if (len % period != 0) return false;
  const BigLen reps = len / period;
  if (reps > std::numeric_limits<long long>::max()) return false;
  const Expr target = reps > 1 ? make_power(p2.base, static_cast<long long>(reps)) : p2.base;
  BigLen shift = (p1.phase - p2.phase) % period;
  if (shift < 0) shift += period;
  if (shift == 0) return same_denotation(p1.base, target, ctx);
  if (f1.ref.node()->kind != Kind::Power) return false;
  return same_rotation(f1.ref, shift, target, ctx);
}

std::optional<BigLen> lcp(Stream x, Stream y, LcpContext& ctx) {
  BigLen total = 0;
  while (!x.done() && !y.done()) {
    const Frame& fx = x.top();
    const Frame& fy = y.top();
    const BigLen rx = fx.end - fx.start;
    const BigLen ry = fy.end - fy.start;
    const Periodic px = periodic(fx);
    const Periodic py = periodic(fy);
    const bool lx = is_leaf(fx);
    const bool ly = is_leaf(fy);
    bool skip = px.base == py.base && px.phase == py.phase;
    if (!skip && !(lx && ly)) {
      const BigLen n = std::min(rx, ry);
      auto eq = periods_agree(fx, px, fy, py, n, ctx);
      if (eq && !*eq) eq = periods_agree(fy, py, fx, px, n, ctx);
      if (!eq) return std::nullopt;
      skip = *eq;
    }
    if (skip) {
      const BigLen n = std::min(rx, ry);
      total += n;
      x.advance(n);
      y.advance(n);
      continue;
    }
    if (lx && ly) {
      const auto vx = leaf_view(fx);
      const auto vy = leaf_view(fy);
      const auto m = static_cast<std::size_t>(std::min(rx, ry));
      std::size_t j = 0;
      while (j < m && vx.at(j) == vy.at(j)) ++j;
      ctx.spent += j + (j < m ? 1 : 0);
      if (ctx.spent > ctx.budget) return std::nullopt;
      total += j;
      if (j < m) return total;
      x.advance(m);
      y.advance(m);
    } else if (lx) {
      y.descend();
    } else if (ly) {
      x.descend();
    } else {
      // Keep Power frames whole while the other side is opened up to its own
      // periodic structure; only then split the one with the longer period.
      const bool wx = fx.ref.node()->kind == Kind::Power;
      const bool wy = fy.ref.node()->kind == Kind::Power;
      bool open_x = rx >= ry;
      if (wx != wy) {
        open_x = wy;
      } else if (wx) {
        const BigLen& px_len = px.base.length();
        const BigLen& py_len = py.base.length();
        open_x = px_len != py_len ? px_len > py_len : rx >= ry;
      }
      if (open_x) {
        x.descend();
      } else {
        y.descend();
      }
    }
  }
  return total;
}

std::optional<BigLen> lcp(const Expr& a, const Expr& b, std::uint64_t budget) {
  LcpContext ctx;
  ctx.budget = budget;
  return lcp(Stream(a), Stream(b), ctx);
}

BigLen seam_cancellation(const Expr& a, const Expr& b) {
  auto c = lcp(a.inverse(), b, seam_cap());
  if (!c) throw SeamCapExceeded("seam cancellation exceeded the letter-comparison cap");
  return *c;
}

std::vector<Letter> collect(const Expr& a, const BigLen& from, const BigLen& to) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(to - from));
  Stream s(a, from, to);
  while (!s.done()) {
    const Frame& f = s.top();
    if (is_leaf(f)) {
      const auto v = leaf_view(f);
      const auto n = static_cast<std::size_t>(f.end - f.start);
      for (std::size_t i = 0; i < n; ++i) out.push_back(v.at(i));
      s.advance(n);
    } else {
      s.descend();
    }
  }
  return out;
}

std::vector<Letter> collect(const Expr& a) { return collect(a, 0, a.length()); }

Expr materialize_if_small(const Expr& e) {
  if (e.empty() || e.node()->kind == Kind::Literal || e.length() > kMaterializeLimit) return e;
  return lit(Word::from_reduced(collect(e)));
}

Expr make_concat(const Expr& a, const Expr& b, const BigLen& cancel) {
  Node n;
  n.kind = Kind::Concat;
  n.length = a.length() + b.length() - 2 * cancel;
  n.first = a;
  n.second = b;
  n.offset = cancel;
  return ExprFactory::make(std::move(n));
}

// base: non-empty, cyclically reduced denotation.
Expr make_power(const Expr& base, long long k) {
  if (k == 1) return base;
  const Node& bn = *base.node();
  if (bn.kind == Kind::Power) {
    long long merged = 0;
    if (!__builtin_mul_overflow(bn.exponent, k, &merged)) {
      return make_power(oriented(bn.first, base.inverted()), merged);
    }
  }
  if (base.inverted()) return make_power(base.inverse(), k).inverse();
  Node n;
  n.kind = Kind::Power;
  n.length = base.length() * k;
  n.first = base;
  n.exponent = k;
  return ExprFactory::make(std::move(n));
}

}  // namespace

Expr lit(const Word& w) {
  if (w.empty()) return {};
  Node n;
  n.kind = Kind::Literal;
  n.length = w.size();
  n.word = w;
  return ExprFactory::make(std::move(n));
}

Expr inv(const Expr& a) { return a.inverse(); }

Expr slice(const Expr& a, const BigLen& offset, const BigLen& count) {
  if (count == 0) return {};
  if (offset < 0 || count < 0 || offset + count > a.length()) {
    throw std::out_of_range("slice outside the denotation");
  }
  if (offset == 0 && count == a.length()) return a;
  if (a.inverted()) return slice(a.inverse(), a.length() - offset - count, count).inverse();
  const Node& n = *a.node();
  switch (n.kind) {
    case Kind::Literal:
      if (count <= kMaterializeLimit) {
        return lit(n.word.subword(static_cast<std::size_t>(offset), static_cast<std::size_t>(count)));
      }
      break;
    case Kind::Slice:
      return slice(n.first, n.offset + offset, count);
    case Kind::Concat: {
      const BigLen keep = n.first.length() - n.offset;
      if (offset + count <= keep) return slice(n.first, offset, count);
      if (offset >= keep) return slice(n.second, n.offset + offset - keep, count);
      break;
    }
    case Kind::Power: {
      const BigLen& period = n.first.length();
      if (offset % period == 0 && count % period == 0) {
        return make_power(n.first, static_cast<long long>(count / period));
      }
      const BigLen phase = offset % period;
      if (phase + count <= period) return slice(n.first, phase, count);
      break;
    }
  }
  if (count <= kMaterializeLimit) return lit(Word::from_reduced(collect(a, offset, offset + count)));
  Node s;
  s.kind = Kind::Slice;
  s.length = count;
  s.first = a;
  s.offset = offset;
  return ExprFactory::make(std::move(s));
}

Expr cat(const Expr& a, const Expr& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const BigLen c = seam_cancellation(a, b);
  const BigLen& la = a.length();
  const BigLen& lb = b.length();
  if (c == la) return slice(b, c, lb - c);
  if (c == lb) return slice(a, 0, la - c);
  return materialize_if_small(make_concat(a, b, c));
}

ExprSplit cyclic_split(const Expr& a) {
  if (a.empty()) return {};
  auto t = lcp(a, a.inverse(), seam_cap());
  if (!t) throw SeamCapExceeded("cyclic reduction exceeded the letter-comparison cap");
  const BigLen core_len = a.length() - 2 * *t;
  return {slice(a, 0, *t), slice(a, *t, core_len)};
}

Expr pow_split(const ExprSplit& s, long long k) {
  if (k == 0 || s.core.empty()) return {};
  if (k < 0) return pow_split(s, -k).inverse();
  Expr body = make_power(s.core, k);
  if (!s.conjugator.empty()) {
    // g * core^k * g^-1 is reduced as written when g * core * g^-1 was.
    body = make_concat(make_concat(s.conjugator, body, 0), s.conjugator.inverse(), 0);
  }
  return materialize_if_small(body);
}

Expr pow(const Expr& a, long long k) {
  if (k == 0 || a.empty()) return {};
  if (k == 1) return a;
  if (k == -1) return a.inverse();
  return pow_split(cyclic_split(a), k);
}

Expr comm(const Expr& a, const Expr& b) {
  return cat(cat(cat(a, b), a.inverse()), b.inverse());
}

Letter letter_at(const Expr& a, const BigLen& index) {
  if (index < 0 || index >= a.length()) throw std::out_of_range("letter index outside the denotation");
  Expr ref = a;
  BigLen i = index;
  bool flip = false;
  for (;;) {
    const Node& n = *ref.node();
    const BigLen raw = ref.inverted() ? n.length - 1 - i : i;
    flip ^= ref.inverted();
    switch (n.kind) {
      case Kind::Literal: {
        const Letter l = n.word[static_cast<std::size_t>(raw)];
        return flip ? l.inverse() : l;
      }
      case Kind::Concat: {
        const BigLen keep = n.first.length() - n.offset;
        if (raw < keep) {
          ref = n.first;
          i = raw;
        } else {
          ref = n.second;
          i = raw - keep + n.offset;
        }
        break;
      }
      case Kind::Slice:
        ref = n.first;
        i = n.offset + raw;
        break;
      case Kind::Power:
        ref = n.first;
        i = raw % n.first.length();
        break;
    }
  }
}

std::optional<Word> expand(const Expr& a, std::uint64_t max_len) {
  if (a.length() > max_len) return std::nullopt;
  return Word::from_reduced(collect(a));
}

std::optional<BigLen> common_prefix(const Expr& a, const Expr& b, std::uint64_t budget) {
  return lcp(a, b, budget);
}

ExactVerdict equal_exact(const Expr& a, const Expr& b, std::uint64_t budget) {
  if (a.length() != b.length()) return ExactVerdict::Unequal;
  if (a == b) return ExactVerdict::Equal;
  const auto p = lcp(a, b, budget);
  if (!p) return ExactVerdict::BudgetExceeded;
  return *p == a.length() ? ExactVerdict::Equal : ExactVerdict::Unequal;
}

DagStats dag_stats(const Expr& a) {
  DagStats st;
  if (a.empty()) return st;
  st.depth = a.node()->depth;
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> todo{a.node()};
  while (!todo.empty()) {
    const Node* n = todo.back();
    todo.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->kind == Kind::Literal) st.literal_letters += n->word.size();
    if (!n->first.empty()) todo.push_back(n->first.node());
    if (!n->second.empty()) todo.push_back(n->second.node());
  }
  st.nodes = seen.size();
  return st;
}

}  // namespace ctw

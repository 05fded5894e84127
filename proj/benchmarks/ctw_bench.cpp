// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <benchmark/benchmark.h>

#include "ctw/constructors.hpp"
#include "ctw/fingerprint.hpp"
#include "ctw/group_algorithms.hpp"
#include "ctw/harness.hpp"
#include "ctw/matrix_oracle.hpp"

namespace {

using namespace ctw;

void BM_BuildV(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = generator_exprs(Rank(n));
  for (auto _ : state) benchmark::DoNotOptimize(build_v(n, g));
}
BENCHMARK(BM_BuildV)->DenseRange(2, 5);

void BM_ExpandW2(benchmark::State& state) {
  const auto g = generator_exprs(Rank(2));
  const Expr e = build_w2(g[0], g[1]);
  for (auto _ : state) benchmark::DoNotOptimize(expand(e, 1'000'000));
  state.SetItemsProcessed(state.iterations() * 115'200);
}
BENCHMARK(BM_ExpandW2)->Unit(benchmark::kMillisecond);

// v_n applied to non-cyclic generators is checked against the identity.
void BM_IdentityMcV(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = generator_exprs(Rank(n));
  const Expr v = build_v(n, g);
  const OracleConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(is_identity_mc(v, Rank(n), cfg));
}
BENCHMARK(BM_IdentityMcV)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DecideEqualConjugated(benchmark::State& state) {
  const auto g = generator_exprs(Rank(3));
  const Word s = parse_word("x1 x2^-1 x3", Rank(3));
  std::vector<Expr> conj;
  for (const auto& x : g) conj.push_back(cat(cat(lit(s), x), lit(invert(s))));
  const Expr lhs = build_v(3, conj);
  const Expr rhs = cat(cat(lit(s), build_v(3, g)), lit(invert(s)));
  const OracleConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(decide_equal(lhs, rhs, Rank(3), cfg));
}
BENCHMARK(BM_DecideEqualConjugated)->Unit(benchmark::kMillisecond);

void BM_Fingerprint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = generator_exprs(Rank(n));
  const Expr v = build_v(n, g);
  const auto bases = fingerprint_bases(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(v, bases[0]));
}
BENCHMARK(BM_Fingerprint)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_ConjugatorTuple(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto len = static_cast<std::size_t>(state.range(0));
  Tuple xs;
  for (int i = 0; i < 4; ++i) xs.push_back(random_word(rng, 3, len));
  const Tuple ys = conjugate(xs, random_word(rng, 3, len));
  for (auto _ : state) benchmark::DoNotOptimize(conjugator_tuple(xs, ys));
}
BENCHMARK(BM_ConjugatorTuple)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();

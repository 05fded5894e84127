// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_HARNESS_HPP
#define CTW_HARNESS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ctw/group_algorithms.hpp"
#include "ctw/matrix_oracle.hpp"
#include "ctw/word.hpp"

namespace ctw {

/// Sizes used by the verification suites.
struct SmallConfig {
  std::string name = "default";
  int cases = 25;                    // per claim variant
  int max_word_length = 8;           // lemma inputs
  int max_conjugator_length = 4;     // conjugacy recovery
  int equivariance_conjugator_length = 6;
  int rank = 2;
  OracleConfig oracle;               // seed is replaced per case
  std::uint64_t expand_budget = 8'000'000;
  std::uint64_t exact_budget = kDecideExactBudget;

  static SmallConfig tiny();
  static SmallConfig defaults();
  static SmallConfig acceptance();
  /// "tiny", "default" or "acceptance"; throws std::invalid_argument otherwise.
  static SmallConfig named(std::string_view name);
};

struct Finding {
  std::size_t case_index = 0;
  std::string inputs;    // word text
  std::string claim;     // expected statement and its anchor
  std::string observed;
  double error_bound = 0.0;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::string scale;
  std::size_t cases = 0;
  std::size_t passes = 0;
  std::vector<Finding> findings;  // sorted by case index
  double error_bound_total = 0.0;
  std::int64_t millis = 0;

  [[nodiscard]] bool ok() const { return findings.empty(); }
};

struct SuiteDescriptor {
  std::string name;
  std::string claim;
  std::string anchor;
};

std::vector<SuiteDescriptor> list_suites();

/// Deterministic in (name, seed, scale) apart from `millis`.
/// Throws std::invalid_argument for an unknown suite.
Report run_suite(std::string_view name, std::uint64_t seed, const SmallConfig& scale);

/// Reduced word of the given length by a uniform non-backtracking walk over
/// x_1..x_m and their inverses.
Word random_word(std::mt19937_64& rng, int m, std::size_t length);
/// Length drawn uniformly from [lo, hi].
Word random_word(std::mt19937_64& rng, int m, std::size_t lo, std::size_t hi);

}  // namespace ctw

#endif  // CTW_HARNESS_HPP

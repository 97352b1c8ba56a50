// Copyright 2026 The qudiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Signed base-d expansions l = sum_i s_i d^{m_i} with s_i = +-1,
// nondecreasing exponents and every suffix sum in (0, d^n]. Each term turns
// into one multi-controlled INC^{s_i} with n - m_i control levels, so the
// choice of expansion drives the gate count of an entangler.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qudiag/core.hpp"

namespace qudiag {

struct SignedTerm {
  int sign = 1;
  int exponent = 0;

  friend auto operator<=>(const SignedTerm&, const SignedTerm&) = default;
};

struct SignedExpansion {
  int d = 2;
  int n = 1;
  std::vector<SignedTerm> terms;

  /// sum_i s_i d^{m_i}; throws DomainError if an exponent is outside [0, n].
  Index value() const;

  friend bool operator==(const SignedExpansion&, const SignedExpansion&) = default;
};

enum class CostModel { ControlLevels, LadderGates, Lexicographic };

struct Cost {
  std::int64_t control_levels = 0;
  /// Number of AND_1 / AND_2 gates once every term is lowered.
  std::int64_t ladder_gates = 0;

  friend bool operator==(const Cost&, const Cost&) = default;
};

/// Comparison key of a cost under a model: (objective, secondary objective).
std::pair<std::int64_t, std::int64_t> cost_key(const Cost& cost, CostModel model);

/// AND_1 / AND_2 gates for a term with `controls` control levels: 0, 1, 1,
/// then 2c - 3 for the ladder.
std::int64_t ladder_gates_for(int controls);

bool validate_expansion(const SignedExpansion& e, Index l);

/// Both metrics of a valid expansion of some l; throws DomainError otherwise.
Cost expansion_cost(const SignedExpansion& e);

SignedExpansion standard_expansion(Index l, int d, int n);

/// Balanced base-d recoding. Never costs more control levels than the
/// standard expansion; falls back to it when the recoding is not valid.
SignedExpansion greedy_signed_expansion(Index l, int d, int n);

struct BruteForceLimits {
  Index max_register_size = 1'000'000;
  /// Guard on the control-level cost of the standard expansion.
  std::int64_t max_standard_cost = 128;
  /// Term-count cap; defaults to the term count of the standard expansion.
  std::optional<std::size_t> max_terms;
};

/// Exhaustive search for a minimum-cost expansion. Ties go to fewer terms,
/// then to the lexicographically smallest (sign, exponent) sequence.
/// Throws CapacityError when the guard in `limits` rejects the instance.
SignedExpansion brute_force_optimal(Index l, int d, int n, CostModel model,
                                    const BruteForceLimits& limits = {});

enum class ExpansionStrategy { Standard, Greedy, BruteForce };

SignedExpansion make_expansion(Index l, int d, int n, ExpansionStrategy strategy,
                               CostModel model = CostModel::ControlLevels);

std::string_view to_string(ExpansionStrategy strategy);
std::string_view to_string(CostModel model);
std::optional<ExpansionStrategy> parse_strategy(std::string_view text);
std::optional<CostModel> parse_cost_model(std::string_view text);

}  // namespace qudiag

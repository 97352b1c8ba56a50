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

#include "qudiag/expansion.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace qudiag {

namespace {

void require_l_in_range(Index l, int d, int n, const char* who) {
  const QuditParams params(d, n);
  if (l < 1 || l > params.register_size()) {
    throw DomainError(std::string(who) + ": l = " + std::to_string(l) +
                      " outside [1, d^n]");
  }
}

Cost term_cost(int controls) {
  return Cost{controls, ladder_gates_for(controls)};
}

Cost operator+(Cost a, const Cost& b) {
  return Cost{a.control_levels + b.control_levels, a.ladder_gates + b.ladder_gates};
}

}  // namespace

Index SignedExpansion::value() const {
  const QuditParams params(d, n);
  Index v = 0;
  for (const SignedTerm& t : terms) {
    v += t.sign * params.pow(t.exponent);
  }
  return v;
}

std::pair<std::int64_t, std::int64_t> cost_key(const Cost& cost, CostModel model) {
  switch (model) {
    case CostModel::ControlLevels:
      return {cost.control_levels, 0};
    case CostModel::LadderGates:
      return {cost.ladder_gates, 0};
    case CostModel::Lexicographic:
      return {cost.control_levels, cost.ladder_gates};
  }
  return {cost.control_levels, 0};
}

std::int64_t ladder_gates_for(int controls) {
  if (controls <= 0) return 0;
  if (controls <= 2) return 1;
  return 2 * std::int64_t{controls} - 3;
}

bool validate_expansion(const SignedExpansion& e, Index l) {
  if (e.d < 2 || e.n < 1 || l < 1 || e.terms.empty()) return false;
  Index size = 0;
  try {
    size = checked_pow(e.d, e.n);
  } catch (const DomainError&) {
    return false;
  }
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const SignedTerm& t = e.terms[i];
    if (t.sign != 1 && t.sign != -1) return false;
    if (t.exponent < 0 || t.exponent > e.n) return false;
    if (i > 0 && t.exponent < e.terms[i - 1].exponent) return false;
  }
  // Suffix sums, highest term first.
  Index suffix = 0;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    suffix += it->sign * checked_pow(e.d, it->exponent);
    if (suffix <= 0 || suffix > size) return false;
  }
  return suffix == l;
}

Cost expansion_cost(const SignedExpansion& e) {
  if (e.terms.empty() || !validate_expansion(e, e.value())) {
    throw DomainError("expansion_cost: not a valid signed base-d expansion");
  }
  Cost total;
  for (const SignedTerm& t : e.terms) total = total + term_cost(e.n - t.exponent);
  return total;
}

SignedExpansion standard_expansion(Index l, int d, int n) {
  require_l_in_range(l, d, n, "standard_expansion");
  SignedExpansion e{d, n, {}};
  Index rest = l;
  for (int j = 0; rest > 0; ++j) {
    const auto digit = static_cast<int>(rest % d);
    for (int c = 0; c < digit; ++c) e.terms.push_back({+1, j});
    rest /= d;
  }
  return e;
}

SignedExpansion greedy_signed_expansion(Index l, int d, int n) {
  require_l_in_range(l, d, n, "greedy_signed_expansion");

  // Plain digits, least significant first, with room for one carry out.
  std::vector<int> digits;
  for (Index rest = l; rest > 0; rest /= d) digits.push_back(static_cast<int>(rest % d));
  digits.resize(static_cast<std::size_t>(n) + 2, 0);

  std::vector<int> recoded(digits.size(), 0);
  int carry = 0;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    const int c = digits[j] + carry;
    const int next = j + 1 < digits.size() ? digits[j + 1] : 0;
    const bool negate = 2 * c > d || (d % 2 == 0 && 2 * c == d && 2 * next >= d);
    if (negate) {
      recoded[j] = c - d;
      carry = 1;
    } else {
      recoded[j] = c;
      carry = 0;
    }
  }

  SignedExpansion e{d, n, {}};
  bool fits = carry == 0;
  for (std::size_t j = 0; j < recoded.size() && fits; ++j) {
    if (recoded[j] == 0) continue;
    if (j > static_cast<std::size_t>(n)) {
      fits = false;
      break;
    }
    const int sign = recoded[j] > 0 ? 1 : -1;
    for (int c = 0; c < std::abs(recoded[j]); ++c) {
      e.terms.push_back({sign, static_cast<int>(j)});
    }
  }

  SignedExpansion standard = standard_expansion(l, d, n);
  if (!fits || !validate_expansion(e, l) ||
      expansion_cost(e).control_levels > expansion_cost(standard).control_levels) {
    return standard;
  }
  return e;
}

namespace {

// Depth-first search over expansions built from the most significant term
// down, so every prefix of the search is a suffix of the final expansion and
// the partial-sum bound prunes immediately.
class ExpansionSearch {
 public:
  ExpansionSearch(Index l, int d, int n, CostModel model, std::size_t max_terms)
      : l_(l), d_(d), n_(n), model_(model), max_terms_(max_terms) {
    const QuditParams params(d, n);
    size_ = params.register_size();
    for (int m = 0; m <= n; ++m) powers_.push_back(params.pow(m));
  }

  void seed(const SignedExpansion& e) {
    if (e.terms.size() <= max_terms_) offer(e.terms, expansion_cost(e));
  }

  void run() { descend(0, n_, Cost{}); }

  std::optional<SignedExpansion> result() const {
    if (!best_) return std::nullopt;
    return SignedExpansion{d_, n_, *best_};
  }

 private:
  using Key = std::pair<std::int64_t, std::int64_t>;

  bool beats_best(const Key& key, const std::vector<SignedTerm>& ascending) const {
    if (!best_) return true;
    if (key != best_key_) return key < best_key_;
    if (ascending.size() != best_->size()) return ascending.size() < best_->size();
    return ascending < *best_;
  }

  void offer(std::vector<SignedTerm> ascending, const Cost& cost) {
    const Key key = cost_key(cost, model_);
    if (beats_best(key, ascending)) {
      best_ = std::move(ascending);
      best_key_ = key;
    }
  }

  // Largest exponent m such that d^m divides value (capped at n).
  int valuation(Index value) const {
    if (value < 0) value = -value;
    int m = 0;
    while (m < n_ && value % powers_[static_cast<std::size_t>(m) + 1] == 0) ++m;
    return m;
  }

  void descend(Index sum, int max_exponent, const Cost& cost) {
    for (int m = max_exponent; m >= 0; --m) {
      const Index step = powers_[static_cast<std::size_t>(m)];
      for (int sign : {-1, +1}) {
        const Index next = sum + sign * step;
        if (next <= 0 || next > size_) continue;
        const Cost next_cost = cost + term_cost(n_ - m);
        stack_.push_back({sign, m});
        if (next == l_) {
          offer(std::vector<SignedTerm>(stack_.rbegin(), stack_.rend()), next_cost);
        } else if (stack_.size() < max_terms_) {
          const auto remaining = static_cast<Index>(max_terms_ - stack_.size());
          const Index diff = l_ - next;
          const Index reach = remaining * step;
          // Some later term has exponent <= min(m, v_d(diff)).
          const Cost bound =
              next_cost + term_cost(n_ - std::min(m, valuation(diff)));
          const bool reachable = (diff < 0 ? -diff : diff) <= reach;
          if (reachable && (!best_ || cost_key(bound, model_) <= best_key_)) {
            descend(next, m, next_cost);
          }
        }
        stack_.pop_back();
      }
    }
  }

  Index l_;
  int d_;
  int n_;
  CostModel model_;
  std::size_t max_terms_;
  Index size_ = 0;
  std::vector<Index> powers_;
  std::vector<SignedTerm> stack_;  // most significant term first
  std::optional<std::vector<SignedTerm>> best_;
  Key best_key_{};
};

}  // namespace

SignedExpansion brute_force_optimal(Index l, int d, int n, CostModel model,
                                    const BruteForceLimits& limits) {
  require_l_in_range(l, d, n, "brute_force_optimal");
  const QuditParams params(d, n);
  if (params.register_size() > limits.max_register_size) {
    throw CapacityError("brute_force_optimal: d^n = " +
                        std::to_string(params.register_size()) +
                        " exceeds the search limit of " +
                        std::to_string(limits.max_register_size));
  }
  const SignedExpansion standard = standard_expansion(l, d, n);
  const Cost standard_cost = expansion_cost(standard);
  if (standard_cost.control_levels > limits.max_standard_cost) {
    throw CapacityError("brute_force_optimal: standard cost " +
                        std::to_string(standard_cost.control_levels) +
                        " exceeds the search limit of " +
                        std::to_string(limits.max_standard_cost));
  }
  const std::size_t max_terms = limits.max_terms.value_or(standard.terms.size());
  if (max_terms == 0) {
    throw CapacityError("brute_force_optimal: term cap of zero admits no expansion");
  }

  ExpansionSearch search(l, d, n, model, max_terms);
  search.seed(standard);
  search.seed(greedy_signed_expansion(l, d, n));
  search.run();
  auto best = search.result();
  if (!best) {
    throw CapacityError("brute_force_optimal: no expansion within " +
                        std::to_string(max_terms) + " terms");
  }
  return *best;
}

SignedExpansion make_expansion(Index l, int d, int n, ExpansionStrategy strategy,
                               CostModel model) {
  switch (strategy) {
    case ExpansionStrategy::Standard:
      return standard_expansion(l, d, n);
    case ExpansionStrategy::Greedy:
      return greedy_signed_expansion(l, d, n);
    case ExpansionStrategy::BruteForce:
      return brute_force_optimal(l, d, n, model);
  }
  return standard_expansion(l, d, n);
}

std::string_view to_string(ExpansionStrategy strategy) {
  switch (strategy) {
    case ExpansionStrategy::Standard:
      return "standard";
    case ExpansionStrategy::Greedy:
      return "greedy";
    case ExpansionStrategy::BruteForce:
      return "brute";
  }
  return "standard";
}

std::string_view to_string(CostModel model) {
  switch (model) {
    case CostModel::ControlLevels:
      return "control-levels";
    case CostModel::LadderGates:
      return "ladder-gates";
    case CostModel::Lexicographic:
      return "lexicographic";
  }
  return "control-levels";
}

std::optional<ExpansionStrategy> parse_strategy(std::string_view text) {
  if (text == "standard") return ExpansionStrategy::Standard;
  if (text == "greedy") return ExpansionStrategy::Greedy;
  if (text == "brute" || text == "brute-force") return ExpansionStrategy::BruteForce;
  return std::nullopt;
}

std::optional<CostModel> parse_cost_model(std::string_view text) {
  if (text == "control-levels") return CostModel::ControlLevels;
  if (text == "ladder-gates") return CostModel::LadderGates;
  if (text == "lexicographic") return CostModel::Lexicographic;
  return std::nullopt;
}

}  // namespace qudiag

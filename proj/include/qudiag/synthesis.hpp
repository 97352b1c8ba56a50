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

// Lowering pipeline for diagonal unitaries:
//
//   diagonal --phase_context--> global phase x blocks V(ratio, l)
//   V(ratio, l) = CINC(l)^dagger (I (x) P(ratio)) CINC(l)
//   CINC(l) --synth_cinc--> multi-controlled INC^{+-1} (one per expansion term)
//   multi-controlled INC --lower_multicontrolled--> AND_1 / AND_2 + single-qudit
//
// Wire layout of a synthesized circuit: data wires 0..n-1 (wire 0 most
// significant), the phase target on wire n, then max(0, n - 2) ladder
// ancillas shared by every block.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qudiag/core.hpp"
#include "qudiag/expansion.hpp"

namespace qudiag {

inline constexpr double kDefaultPhaseTolerance = 1e-9;

struct PhaseRun {
  double theta = 0.0;  // phase e^{i theta}
  Index length = 1;

  friend bool operator==(const PhaseRun&, const PhaseRun&) = default;
};

/// Run-length description of diag(phi_1 x l_1, ..., phi_k x l_k).
class DiagonalSpec {
 public:
  /// Throws DomainError unless the run lengths are positive and sum to d^n
  /// and adjacent runs differ in phase by more than `tolerance`.
  DiagonalSpec(QuditParams params, std::vector<PhaseRun> runs,
               double tolerance = kDefaultPhaseTolerance);

  /// Compresses d^n angles into maximal runs of equal phase.
  static DiagonalSpec from_angles(QuditParams params, std::span<const double> thetas,
                                  double tolerance = kDefaultPhaseTolerance);

  const QuditParams& params() const { return params_; }
  const std::vector<PhaseRun>& runs() const { return runs_; }
  std::size_t run_count() const { return runs_.size(); }

  /// The d^n diagonal entries.
  std::vector<Complex> entries() const;

  friend bool operator==(const DiagonalSpec&, const DiagonalSpec&) = default;

 private:
  QuditParams params_;
  std::vector<PhaseRun> runs_;
};

/// diag(1, ..., 1, ratio, ..., ratio) with the last l entries set.
struct PhaseBlock {
  double ratio_theta = 0.0;
  Index l = 1;

  friend bool operator==(const PhaseBlock&, const PhaseBlock&) = default;
};

struct PhaseContext {
  double global_phase_theta = 0.0;
  std::vector<PhaseBlock> blocks;
  std::size_t run_count = 0;
};

PhaseContext phase_context(const QuditParams& params, std::span<const Complex> diagonal,
                           double tolerance = kDefaultPhaseTolerance);
PhaseContext phase_context(const DiagonalSpec& spec);

/// INC^{sign} on the phase target iff the top n - m data qudits hold
/// control_values.
struct MultiControlledInc {
  DitString control_values;
  int m = 0;
  int sign = 1;

  std::size_t control_count() const { return control_values.width(); }

  friend bool operator==(const MultiControlledInc&, const MultiControlledInc&) = default;
};

/// CINC(l) as a product of multi-controlled INC^{+-1}, one per term of e.
std::vector<MultiControlledInc> synth_cinc(Index l, const SignedExpansion& e);

/// Lowers one multi-controlled INC onto data wires 0..c-1 and `target`,
/// using the first c - 2 wires of `ancilla_pool` as the ladder. The ladder
/// ancillas must start in |0> and are returned to |0>.
std::vector<Gate> lower_multicontrolled(const MultiControlledInc& gate, int d,
                                        Wire target, std::span<const Wire> ancilla_pool);

/// Ancillas used by a synthesized circuit on n data qudits.
std::size_t ancilla_budget(int n);

/// Lowered CINC(l) with the phase target on wire n.
std::vector<Gate> lower_cinc(const QuditParams& params, Index l, const SignedExpansion& e);

/// V(ratio, l) over n data wires plus ancilla_budget(n) ancillas.
Circuit synth_block(const QuditParams& params, const PhaseBlock& block,
                    ExpansionStrategy strategy,
                    CostModel model = CostModel::ControlLevels);

Circuit synth_diagonal(const DiagonalSpec& spec, ExpansionStrategy strategy,
                       bool cancel = false,
                       CostModel model = CostModel::ControlLevels);

/// Removes pairs (g, g^-1) on identical wires and controls that are adjacent
/// once gates which do not write each other's wires are commuted past each
/// other. Repeats until no pair remains.
Circuit cancel_adjacent(const Circuit& circuit);

}  // namespace qudiag

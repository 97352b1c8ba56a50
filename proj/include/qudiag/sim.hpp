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

// Dense reference simulator and definition-level oracles.
//
// Basis states of a w-wire register are ordered by the integer value of the
// dit string with wire 0 most significant. A time-ordered gate list
// [g_1, ..., g_T] has unitary U(g_T) ... U(g_1).

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "qudiag/core.hpp"
#include "qudiag/synthesis.hpp"

namespace qudiag {

using UnitaryMatrix = Eigen::MatrixXcd;

inline constexpr Index kDefaultSimulationCap = 4096;

class StateVector {
 public:
  /// |index> on `wires` qudits of dimension d.
  static StateVector basis(int d, std::size_t wires, Index index);

  StateVector(int d, std::size_t wires, Eigen::VectorXcd amplitudes);

  int d() const { return d_; }
  std::size_t wires() const { return wires_; }
  Index dimension() const { return static_cast<Index>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](Index i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

 private:
  int d_;
  std::size_t wires_;
  Eigen::VectorXcd amplitudes_;
};

StateVector apply_gate(const StateVector& state, const Gate& gate);
StateVector apply_circuit(const StateVector& state, const Circuit& circuit);

/// Dense unitary of the gate list. The global phase is not included.
UnitaryMatrix circuit_unitary(const Circuit& circuit, Index cap = kDefaultSimulationCap);

/// A matrix with exactly one entry 1 per column: column j has its 1 in row
/// image[j]. Products and comparisons are exact.
class BasisPermutation {
 public:
  static BasisPermutation identity(Index dimension);
  explicit BasisPermutation(std::vector<Index> image);

  Index dimension() const { return static_cast<Index>(image_.size()); }
  Index operator()(Index column) const { return image_[static_cast<std::size_t>(column)]; }
  const std::vector<Index>& image() const { return image_; }

  BasisPermutation inverse() const;
  Eigen::MatrixXd to_dense() const;

  /// Matrix product: (a * b)(j) = a(b(j)), i.e. b acts first.
  friend BasisPermutation operator*(const BasisPermutation& a, const BasisPermutation& b);
  friend bool operator==(const BasisPermutation&, const BasisPermutation&) = default;

 private:
  std::vector<Index> image_;
};

/// CINC(p, q) on n data qudits plus the target on wire n: the target is
/// incremented for p <= j < q and decremented for q <= j < p.
BasisPermutation oracle_cinc(Index p, Index q, const QuditParams& params);

/// CINC(l) = CINC(d^n - l, d^n).
BasisPermutation oracle_entangler(Index l, const QuditParams& params);

BasisPermutation oracle_multicontrolled(const MultiControlledInc& gate,
                                        const QuditParams& params);

/// Image of a basis index under a phase-free gate; throws DomainError on a
/// Phase gate.
Index apply_gate_to_basis(Index index, const Gate& gate, int d, std::size_t wires);

/// Exact permutation of a phase-free circuit.
BasisPermutation circuit_permutation(const Circuit& circuit,
                                     Index cap = Index{1} << 24);

struct DiagonalCheckReport {
  bool passed = false;
  double max_deviation = 0.0;    // |lambda_j * global_phase - diag_j|
  double max_leakage = 0.0;      // norm outside the ancilla-|0> subspace
  double max_offdiagonal = 0.0;  // norm on other data states, ancillas |0>
  Index worst_index = 0;
};

/// Simulates the circuit on every |j>|0...0> and compares against the
/// diagonal. Throws CapacityError when d^wires exceeds cap.
DiagonalCheckReport check_diagonal_equiv(const Circuit& circuit, const DiagonalSpec& spec,
                                         double tolerance, double leakage_tolerance = 1e-12,
                                         Index cap = kDefaultSimulationCap);

}  // namespace qudiag

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

#include "qudiag/sim.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qudiag {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Index register_dimension(int d, std::size_t wires) {
  return checked_pow(d, static_cast<int>(wires));
}

// Strides of each wire; wire 0 is the most significant dit.
std::vector<Index> wire_strides(int d, std::size_t wires) {
  std::vector<Index> strides(wires, 1);
  for (std::size_t w = wires; w-- > 1;) strides[w - 1] = strides[w] * d;
  return strides;
}

int digit_of(Index index, Index stride, int d) {
  return static_cast<int>((index / stride) % d);
}

// Basis image and phase of one gate on one basis index.
std::pair<Index, Complex> gate_on_basis(Index index, const Gate& gate, int d,
                                        const std::vector<Index>& strides) {
  const auto shift = [&](Wire target, int power) {
    const Index stride = strides[target];
    const int t = digit_of(index, stride, d);
    return index + static_cast<Index>((t + power) % d - t) * stride;
  };
  return std::visit(
      Overloaded{
          [&](const IncPow& g) { return std::pair{shift(g.target, g.power), Complex{1.0}}; },
          [&](const Mul& g) {
            const Index stride = strides[g.target];
            const int t = digit_of(index, stride, d);
            return std::pair{index + static_cast<Index>((d - t) % d - t) * stride,
                             Complex{1.0}};
          },
          [&](const Phase& g) {
            const int t = digit_of(index, strides[g.target], d);
            if (t == 0) return std::pair{index, Complex{1.0}};
            const double theta =
                t == 1 ? g.theta : g.alpha_thetas[static_cast<std::size_t>(t - 2)];
            return std::pair{index, unit_phase(theta)};
          },
          [&](const Controlled& g) {
            for (const Control& c : g.controls) {
              if (digit_of(index, strides[c.wire], d) != c.value) {
                return std::pair{index, Complex{1.0}};
              }
            }
            return std::pair{shift(g.target, g.power), Complex{1.0}};
          },
      },
      gate);
}

}  // namespace

StateVector StateVector::basis(int d, std::size_t wires, Index index) {
  const Index dim = register_dimension(d, wires);
  if (index < 0 || index >= dim) throw DomainError("StateVector::basis: index out of range");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(d, wires, std::move(amps));
}

StateVector::StateVector(int d, std::size_t wires, Eigen::VectorXcd amplitudes)
    : d_(d), wires_(wires), amplitudes_(std::move(amplitudes)) {
  if (d < 2) throw DomainError("StateVector: d must be >= 2");
  if (amplitudes_.size() != register_dimension(d, wires)) {
    throw DomainError("StateVector: amplitude count must be d^wires");
  }
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
  validate_gate(gate, state.d(), state.wires());
  const auto strides = wire_strides(state.d(), state.wires());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.amplitudes().size());
  for (Index i = 0; i < state.dimension(); ++i) {
    const Complex amp = state[i];
    if (amp == Complex{0.0}) continue;
    const auto [dest, factor] = gate_on_basis(i, gate, state.d(), strides);
    out[static_cast<Eigen::Index>(dest)] += factor * amp;
  }
  return StateVector(state.d(), state.wires(), std::move(out));
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit) {
  if (state.d() != circuit.d() || state.wires() != circuit.wire_count()) {
    throw DomainError("apply_circuit: state does not match the circuit register");
  }
  StateVector s = state;
  for (const Gate& g : circuit.gates()) s = apply_gate(s, g);
  return s;
}

UnitaryMatrix circuit_unitary(const Circuit& circuit, Index cap) {
  const Index dim = register_dimension(circuit.d(), circuit.wire_count());
  if (dim > cap) {
    throw CapacityError("circuit_unitary: dimension " + std::to_string(dim) +
                        " exceeds the simulation cap " + std::to_string(cap));
  }
  const auto strides = wire_strides(circuit.d(), circuit.wire_count());
  UnitaryMatrix u = UnitaryMatrix::Zero(dim, dim);
  // Every IR gate maps a basis state to a phased basis state.
  for (Index j = 0; j < dim; ++j) {
    Index index = j;
    Complex amp{1.0};
    for (const Gate& g : circuit.gates()) {
      const auto [dest, factor] = gate_on_basis(index, g, circuit.d(), strides);
      index = dest;
      amp *= factor;
    }
    u(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(j)) = amp;
  }
  return u;
}

// ---------------------------------------------------------------------------

BasisPermutation BasisPermutation::identity(Index dimension) {
  std::vector<Index> image(static_cast<std::size_t>(dimension));
  for (Index i = 0; i < dimension; ++i) image[static_cast<std::size_t>(i)] = i;
  return BasisPermutation(std::move(image));
}

BasisPermutation::BasisPermutation(std::vector<Index> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Index target : image_) {
    if (target < 0 || target >= dimension() || hit[static_cast<std::size_t>(target)]) {
      throw DomainError("BasisPermutation: image is not a permutation");
    }
    hit[static_cast<std::size_t>(target)] = true;
  }
}

BasisPermutation BasisPermutation::inverse() const {
  std::vector<Index> inv(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) {
    inv[static_cast<std::size_t>(image_[j])] = static_cast<Index>(j);
  }
  return BasisPermutation(std::move(inv));
}

Eigen::MatrixXd BasisPermutation::to_dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dimension(), dimension());
  for (Index j = 0; j < dimension(); ++j) m((*this)(j), j) = 1.0;
  return m;
}

BasisPermutation operator*(const BasisPermutation& a, const BasisPermutation& b) {
  if (a.dimension() != b.dimension()) {
    throw DomainError("BasisPermutation: dimension mismatch in product");
  }
  std::vector<Index> image(b.image_.size());
  for (std::size_t j = 0; j < image.size(); ++j) {
    image[j] = a.image_[static_cast<std::size_t>(b.image_[j])];
  }
  return BasisPermutation(std::move(image));
}

BasisPermutation oracle_cinc(Index p, Index q, const QuditParams& params) {
  const Index size = params.register_size();
  if (p < 0 || p > size || q < 0 || q > size) {
    throw DomainError("oracle_cinc: p and q must lie in [0, d^n]");
  }
  const int d = params.d();
  const Index dim = checked_pow(d, params.n() + 1);
  std::vector<Index> image(static_cast<std::size_t>(dim));
  for (Index j = 0; j < size; ++j) {
    int delta = 0;
    if (p <= j && j < q) delta = 1;
    if (q <= j && j < p) delta = -1;
    for (int t = 0; t < d; ++t) {
      image[static_cast<std::size_t>(j * d + t)] = j * d + (t + delta + d) % d;
    }
  }
  return BasisPermutation(std::move(image));
}

BasisPermutation oracle_entangler(Index l, const QuditParams& params) {
  return oracle_cinc(params.register_size() - l, params.register_size(), params);
}

BasisPermutation oracle_multicontrolled(const MultiControlledInc& gate,
                                        const QuditParams& params) {
  const int d = params.d();
  if (gate.m < 0 || gate.m > params.n() ||
      gate.control_count() != static_cast<std::size_t>(params.n() - gate.m)) {
    throw DomainError("oracle_multicontrolled: control width must be n - m");
  }
  if (gate.sign != 1 && gate.sign != -1) {
    throw DomainError("oracle_multicontrolled: sign must be +1 or -1");
  }
  if (gate.control_values.base != d) {
    throw DomainError("oracle_multicontrolled: control values are not base d");
  }
  const Index b = dits_to_value(gate.control_values);
  const Index block = params.pow(gate.m);
  const Index size = params.register_size();
  std::vector<Index> image(static_cast<std::size_t>(size * d));
  for (Index j = 0; j < size; ++j) {
    const int delta = j / block == b ? gate.sign : 0;
    for (int t = 0; t < d; ++t) {
      image[static_cast<std::size_t>(j * d + t)] = j * d + (t + delta + d) % d;
    }
  }
  return BasisPermutation(std::move(image));
}

Index apply_gate_to_basis(Index index, const Gate& gate, int d, std::size_t wires) {
  if (std::holds_alternative<Phase>(gate)) {
    throw DomainError("apply_gate_to_basis: Phase gates have no basis image");
  }
  validate_gate(gate, d, wires);
  return gate_on_basis(index, gate, d, wire_strides(d, wires)).first;
}

BasisPermutation circuit_permutation(const Circuit& circuit, Index cap) {
  const Index dim = register_dimension(circuit.d(), circuit.wire_count());
  if (dim > cap) {
    throw CapacityError("circuit_permutation: dimension " + std::to_string(dim) +
                        " exceeds the cap " + std::to_string(cap));
  }
  for (const Gate& g : circuit.gates()) {
    if (std::holds_alternative<Phase>(g)) {
      throw DomainError("circuit_permutation: circuit contains a Phase gate");
    }
  }
  const auto strides = wire_strides(circuit.d(), circuit.wire_count());
  std::vector<Index> image(static_cast<std::size_t>(dim));
  for (Index j = 0; j < dim; ++j) {
    Index index = j;
    for (const Gate& g : circuit.gates()) {
      index = gate_on_basis(index, g, circuit.d(), strides).first;
    }
    image[static_cast<std::size_t>(j)] = index;
  }
  return BasisPermutation(std::move(image));
}

DiagonalCheckReport check_diagonal_equiv(const Circuit& circuit, const DiagonalSpec& spec,
                                         double tolerance, double leakage_tolerance,
                                         Index cap) {
  if (!(circuit.params() == spec.params())) {
    throw DomainError("check_diagonal_equiv: circuit and diagonal have different d or n");
  }
  const Index dim = register_dimension(circuit.d(), circuit.wire_count());
  if (dim > cap) {
    throw CapacityError("check_diagonal_equiv: register dimension " + std::to_string(dim) +
                        " exceeds the simulation cap " + std::to_string(cap));
  }
  const Index ancilla_block =
      register_dimension(circuit.d(), circuit.ancilla_wires());
  const auto diagonal = spec.entries();

  DiagonalCheckReport report;
  for (Index j = 0; j < spec.params().register_size(); ++j) {
    const Index input = j * ancilla_block;
    const StateVector out =
        apply_circuit(StateVector::basis(circuit.d(), circuit.wire_count(), input), circuit);
    double leak2 = 0.0;
    double offdiag2 = 0.0;
    for (Index i = 0; i < dim; ++i) {
      if (i == input) continue;
      const double p = std::norm(out[i]);
      if (i % ancilla_block != 0) {
        leak2 += p;
      } else {
        offdiag2 += p;
      }
    }
    const double deviation =
        std::abs(out[input] * circuit.global_phase() - diagonal[static_cast<std::size_t>(j)]);
    if (deviation > report.max_deviation) {
      report.max_deviation = deviation;
      report.worst_index = j;
    }
    report.max_leakage = std::max(report.max_leakage, std::sqrt(leak2));
    report.max_offdiagonal = std::max(report.max_offdiagonal, std::sqrt(offdiag2));
  }
  report.passed = report.max_deviation <= tolerance && report.max_offdiagonal <= tolerance &&
                  report.max_leakage <= leakage_tolerance;
  return report;
}

}  // namespace qudiag

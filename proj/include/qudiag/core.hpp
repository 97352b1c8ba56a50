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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

namespace qudiag {

/// Raised when an argument violates a documented precondition or invariant.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an instance is too large for the requested operation.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Complex = std::complex<double>;

/// Basis indices and the integers of the expansion arithmetic.
using Index = std::int64_t;

using Wire = std::uint32_t;

/// Upper bound on d^n. Keeps every partial sum and basis index in range of
/// a signed 64-bit integer.
inline constexpr Index kMaxRegisterSize = Index{1} << 62;

/// base^exponent, throwing DomainError when it would exceed kMaxRegisterSize.
Index checked_pow(Index base, int exponent);

/// e^{i theta}.
inline Complex unit_phase(double theta) { return std::polar(1.0, theta); }

/// Dimension d of every qudit and number n of data qudits.
class QuditParams {
 public:
  QuditParams(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  /// d^n, the dimension of the data register.
  Index register_size() const { return size_; }
  /// d^e for 0 <= e <= n.
  Index pow(int e) const;

  friend bool operator==(const QuditParams&, const QuditParams&) = default;

 private:
  int d_;
  int n_;
  Index size_;
};

/// Base-d digits, most significant first.
struct DitString {
  std::vector<int> digits;
  int base = 2;

  std::size_t width() const { return digits.size(); }

  friend bool operator==(const DitString&, const DitString&) = default;
};

DitString value_to_dits(Index value, int d, int width);
Index dits_to_value(const DitString& dits);

// ---------------------------------------------------------------------------
// Gate IR. Phases are carried as angles in radians so that files written
// with decimal angles read back to the identical gate.

/// INC^power: |t> -> |t + power mod d>. power is kept in [0, d-1].
struct IncPow {
  Wire target = 0;
  int power = 1;
  friend bool operator==(const IncPow&, const IncPow&) = default;
};

/// M: |t> -> |-t mod d>.
struct Mul {
  Wire target = 0;
  friend bool operator==(const Mul&, const Mul&) = default;
};

/// P = diag(1, e^{i theta}, e^{i alpha_2}, ..., e^{i alpha_{d-1}}).
struct Phase {
  Wire target = 0;
  double theta = 0.0;
  std::vector<double> alpha_thetas;  // d - 2 entries
  friend bool operator==(const Phase&, const Phase&) = default;
};

struct Control {
  Wire wire = 0;
  int value = 0;
  friend bool operator==(const Control&, const Control&) = default;
};

/// INC^power on target, applied iff every control wire holds its value.
/// Controls are sorted by wire and never empty (see controlled_inc).
struct Controlled {
  std::vector<Control> controls;
  Wire target = 0;
  int power = 1;
  friend bool operator==(const Controlled&, const Controlled&) = default;
};

using Gate = std::variant<IncPow, Mul, Phase, Controlled>;

Gate inc_gate(Wire target, int power, int d);
Gate mul_gate(Wire target);
/// Phase gate with the higher levels left at phase 1.
Gate phase_gate(Wire target, double theta, int d);
Gate phase_gate(Wire target, double theta, std::vector<double> alpha_thetas);
/// Controlled INC^power. With no controls this is a bare IncPow.
Gate controlled_inc(std::vector<Control> controls, Wire target, int power,
                    int d);

Gate gate_inverse(const Gate& gate, int d);
Wire gate_target(const Gate& gate);
std::vector<Wire> gate_wires(const Gate& gate);
std::size_t gate_control_count(const Gate& gate);

/// Throws DomainError if the gate breaks an IR invariant for dimension d on
/// a register of wire_count wires.
void validate_gate(const Gate& gate, int d, std::size_t wire_count);

// ---------------------------------------------------------------------------

/// Time-ordered gate list over n data wires followed by ancilla wires.
/// Wire 0 is the most significant dit. The global phase is metadata and is
/// never realized as a gate.
class Circuit {
 public:
  explicit Circuit(QuditParams params, std::size_t ancilla_wires = 0,
                   double global_phase_theta = 0.0);

  const QuditParams& params() const { return params_; }
  int d() const { return params_.d(); }
  std::size_t data_wires() const { return static_cast<std::size_t>(params_.n()); }
  std::size_t ancilla_wires() const { return ancilla_wires_; }
  std::size_t wire_count() const { return data_wires() + ancilla_wires_; }

  double global_phase_theta() const { return global_phase_theta_; }
  Complex global_phase() const { return unit_phase(global_phase_theta_); }
  void set_global_phase_theta(double theta) { global_phase_theta_ = theta; }

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void append(Gate gate);
  void append(const std::vector<Gate>& gates);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  QuditParams params_;
  std::size_t ancilla_wires_;
  double global_phase_theta_;
  std::vector<Gate> gates_;
};

Circuit circuit_inverse(const Circuit& circuit);

/// Gates of a followed by gates of b. Both must share QuditParams; the
/// result has the larger ancilla count and the product of global phases.
Circuit concat(const Circuit& a, const Circuit& b);

struct CountReport {
  std::int64_t inc = 0;        // IncPow
  std::int64_t mul = 0;        // M
  std::int64_t phase = 0;      // P
  std::int64_t single_qudit = 0;
  std::int64_t and1 = 0;       // one control
  std::int64_t and2 = 0;       // two controls
  std::int64_t and_many = 0;   // more than two controls (unlowered)
  std::int64_t control_levels = 0;
  std::int64_t total_gates = 0;
  std::int64_t ancillas = 0;

  CountReport& operator+=(const CountReport& other);
  friend CountReport operator+(CountReport a, const CountReport& b) {
    return a += b;
  }
  friend bool operator==(const CountReport&, const CountReport&) = default;
};

CountReport gate_count_report(const Circuit& circuit);

}  // namespace qudiag

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

#include "qudiag/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qudiag {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

int mod_d(int value, int d) {
  const int r = value % d;
  return r < 0 ? r + d : r;
}

}  // namespace

Index checked_pow(Index base, int exponent) {
  if (base < 1 || exponent < 0) {
    throw DomainError("checked_pow: base must be >= 1 and exponent >= 0");
  }
  Index result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (result > kMaxRegisterSize / base) {
      throw DomainError("checked_pow: " + std::to_string(base) + "^" +
                        std::to_string(exponent) + " overflows");
    }
    result *= base;
  }
  return result;
}

QuditParams::QuditParams(int d, int n) : d_(d), n_(n), size_(0) {
  if (d < 2) throw DomainError("QuditParams: d must be >= 2");
  if (n < 1) throw DomainError("QuditParams: n must be >= 1");
  size_ = checked_pow(d, n);
}

Index QuditParams::pow(int e) const {
  if (e < 0 || e > n_) {
    throw DomainError("QuditParams::pow: exponent outside [0, n]");
  }
  Index r = 1;
  for (int i = 0; i < e; ++i) r *= d_;
  return r;
}

DitString value_to_dits(Index value, int d, int width) {
  if (d < 2) throw DomainError("value_to_dits: d must be >= 2");
  if (width < 0) throw DomainError("value_to_dits: negative width");
  if (value < 0 || value >= checked_pow(d, width)) {
    throw DomainError("value_to_dits: value " + std::to_string(value) +
                      " outside [0, d^width)");
  }
  DitString out{std::vector<int>(static_cast<std::size_t>(width), 0), d};
  for (int i = width - 1; i >= 0; --i) {
    out.digits[static_cast<std::size_t>(i)] = static_cast<int>(value % d);
    value /= d;
  }
  return out;
}

Index dits_to_value(const DitString& dits) {
  if (dits.base < 2) throw DomainError("dits_to_value: base must be >= 2");
  Index v = 0;
  for (int digit : dits.digits) {
    if (digit < 0 || digit >= dits.base) {
      throw DomainError("dits_to_value: digit outside [0, base)");
    }
    v = v * dits.base + digit;
  }
  return v;
}

// ---------------------------------------------------------------------------

Gate inc_gate(Wire target, int power, int d) {
  return IncPow{target, mod_d(power, d)};
}

Gate mul_gate(Wire target) { return Mul{target}; }

Gate phase_gate(Wire target, double theta, int d) {
  return Phase{target, theta, std::vector<double>(static_cast<std::size_t>(d - 2), 0.0)};
}

Gate phase_gate(Wire target, double theta, std::vector<double> alpha_thetas) {
  return Phase{target, theta, std::move(alpha_thetas)};
}

Gate controlled_inc(std::vector<Control> controls, Wire target, int power,
                    int d) {
  if (controls.empty()) return inc_gate(target, power, d);
  std::sort(controls.begin(), controls.end(),
            [](const Control& a, const Control& b) { return a.wire < b.wire; });
  return Controlled{std::move(controls), target, mod_d(power, d)};
}

Gate gate_inverse(const Gate& gate, int d) {
  return std::visit(
      Overloaded{
          [d](const IncPow& g) -> Gate { return IncPow{g.target, mod_d(-g.power, d)}; },
          [](const Mul& g) -> Gate { return g; },
          [](const Phase& g) -> Gate {
            Phase inv{g.target, -g.theta, g.alpha_thetas};
            for (double& a : inv.alpha_thetas) a = -a;
            return inv;
          },
          [d](const Controlled& g) -> Gate {
            return Controlled{g.controls, g.target, mod_d(-g.power, d)};
          },
      },
      gate);
}

Wire gate_target(const Gate& gate) {
  return std::visit([](const auto& g) { return g.target; }, gate);
}

std::vector<Wire> gate_wires(const Gate& gate) {
  std::vector<Wire> wires;
  if (const auto* c = std::get_if<Controlled>(&gate)) {
    for (const Control& ctrl : c->controls) wires.push_back(ctrl.wire);
  }
  wires.push_back(gate_target(gate));
  return wires;
}

std::size_t gate_control_count(const Gate& gate) {
  if (const auto* c = std::get_if<Controlled>(&gate)) return c->controls.size();
  return 0;
}

void validate_gate(const Gate& gate, int d, std::size_t wire_count) {
  const auto wires = gate_wires(gate);
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] >= wire_count) {
      throw DomainError("gate references wire " + std::to_string(wires[i]) +
                        " but the circuit has " + std::to_string(wire_count) +
                        " wires");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (wires[i] == wires[j]) {
        throw DomainError("gate wires must be distinct (wire " +
                          std::to_string(wires[i]) + " repeated)");
      }
    }
  }
  std::visit(
      Overloaded{
          [d](const IncPow& g) {
            if (g.power < 0 || g.power >= d) {
              throw DomainError("IncPow power outside [0, d)");
            }
          },
          [](const Mul&) {},
          [d](const Phase& g) {
            if (g.alpha_thetas.size() != static_cast<std::size_t>(d - 2)) {
              throw DomainError("Phase gate needs exactly d - 2 higher phases");
            }
            if (!std::isfinite(g.theta)) throw DomainError("Phase angle is not finite");
            for (double a : g.alpha_thetas) {
              if (!std::isfinite(a)) throw DomainError("Phase angle is not finite");
            }
          },
          [d](const Controlled& g) {
            if (g.controls.empty()) {
              throw DomainError("Controlled gate without controls; use IncPow");
            }
            if (g.power < 0 || g.power >= d) {
              throw DomainError("Controlled power outside [0, d)");
            }
            for (const Control& c : g.controls) {
              if (c.value < 0 || c.value >= d) {
                throw DomainError("control value outside [0, d)");
              }
            }
          },
      },
      gate);
}

// ---------------------------------------------------------------------------

Circuit::Circuit(QuditParams params, std::size_t ancilla_wires,
                 double global_phase_theta)
    : params_(params),
      ancilla_wires_(ancilla_wires),
      global_phase_theta_(global_phase_theta) {
  if (!std::isfinite(global_phase_theta)) {
    throw DomainError("global phase angle is not finite");
  }
}

void Circuit::append(Gate gate) {
  validate_gate(gate, d(), wire_count());
  gates_.push_back(std::move(gate));
}

void Circuit::append(const std::vector<Gate>& gates) {
  for (const Gate& g : gates) append(g);
}

Circuit circuit_inverse(const Circuit& circuit) {
  Circuit inv(circuit.params(), circuit.ancilla_wires(),
              -circuit.global_phase_theta());
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    inv.append(gate_inverse(*it, circuit.d()));
  }
  return inv;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (!(a.params() == b.params())) {
    throw DomainError("concat: circuits have different qudit parameters");
  }
  Circuit out(a.params(), std::max(a.ancilla_wires(), b.ancilla_wires()),
              a.global_phase_theta() + b.global_phase_theta());
  out.append(a.gates());
  out.append(b.gates());
  return out;
}

// ---------------------------------------------------------------------------

// Ancillas are a wire-layout property rather than a per-gate tally, so they
// combine by max: concatenated fragments share the same ancilla pool.
CountReport& CountReport::operator+=(const CountReport& other) {
  inc += other.inc;
  mul += other.mul;
  phase += other.phase;
  single_qudit += other.single_qudit;
  and1 += other.and1;
  and2 += other.and2;
  and_many += other.and_many;
  control_levels += other.control_levels;
  total_gates += other.total_gates;
  ancillas = std::max(ancillas, other.ancillas);
  return *this;
}

CountReport gate_count_report(const Circuit& circuit) {
  CountReport r;
  for (const Gate& gate : circuit.gates()) {
    std::visit(Overloaded{
                   [&r](const IncPow&) { ++r.inc; },
                   [&r](const Mul&) { ++r.mul; },
                   [&r](const Phase&) { ++r.phase; },
                   [&r](const Controlled& g) {
                     const auto c = static_cast<std::int64_t>(g.controls.size());
                     r.control_levels += c;
                     if (c == 1) {
                       ++r.and1;
                     } else if (c == 2) {
                       ++r.and2;
                     } else {
                       ++r.and_many;
                     }
                   },
               },
               gate);
  }
  r.single_qudit = r.inc + r.mul + r.phase;
  r.total_gates = static_cast<std::int64_t>(circuit.size());
  r.ancillas = static_cast<std::int64_t>(circuit.ancilla_wires());
  return r;
}

}  // namespace qudiag

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

#include "qudiag/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qudiag {

namespace {

bool same_phase(double theta_a, double theta_b, double tolerance) {
  return std::abs(unit_phase(theta_b - theta_a) - 1.0) <= tolerance;
}

}  // namespace

DiagonalSpec::DiagonalSpec(QuditParams params, std::vector<PhaseRun> runs,
                           double tolerance)
    : params_(params), runs_(std::move(runs)) {
  if (runs_.empty()) throw DomainError("DiagonalSpec: at least one run is required");
  Index total = 0;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    const PhaseRun& run = runs_[i];
    if (run.length < 1) throw DomainError("DiagonalSpec: run lengths must be >= 1");
    if (!std::isfinite(run.theta)) throw DomainError("DiagonalSpec: phase angle is not finite");
    if (run.length > params_.register_size() - total) {
      throw DomainError("DiagonalSpec: run lengths must sum to d^n");
    }
    total += run.length;
    if (i > 0 && same_phase(runs_[i - 1].theta, run.theta, tolerance)) {
      throw DomainError("DiagonalSpec: adjacent runs " + std::to_string(i - 1) +
                        " and " + std::to_string(i) + " have equal phases");
    }
  }
  if (total != params_.register_size()) {
    throw DomainError("DiagonalSpec: run lengths sum to " + std::to_string(total) +
                      ", expected d^n = " + std::to_string(params_.register_size()));
  }
}

DiagonalSpec DiagonalSpec::from_angles(QuditParams params, std::span<const double> thetas,
                                       double tolerance) {
  if (static_cast<Index>(thetas.size()) != params.register_size()) {
    throw DomainError("DiagonalSpec: expected d^n = " +
                      std::to_string(params.register_size()) + " entries, got " +
                      std::to_string(thetas.size()));
  }
  std::vector<PhaseRun> runs;
  for (double theta : thetas) {
    if (!runs.empty() && same_phase(runs.back().theta, theta, tolerance)) {
      ++runs.back().length;
    } else {
      runs.push_back({theta, 1});
    }
  }
  return DiagonalSpec(params, std::move(runs), tolerance);
}

std::vector<Complex> DiagonalSpec::entries() const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(params_.register_size()));
  for (const PhaseRun& run : runs_) {
    out.insert(out.end(), static_cast<std::size_t>(run.length), unit_phase(run.theta));
  }
  return out;
}

PhaseContext phase_context(const QuditParams& params, std::span<const Complex> diagonal,
                           double tolerance) {
  if (static_cast<Index>(diagonal.size()) != params.register_size()) {
    throw DomainError("phase_context: expected d^n = " +
                      std::to_string(params.register_size()) + " entries, got " +
                      std::to_string(diagonal.size()));
  }
  for (std::size_t j = 0; j < diagonal.size(); ++j) {
    if (!(std::abs(std::abs(diagonal[j]) - 1.0) <= 1e-9)) {
      throw DomainError("phase_context: entry " + std::to_string(j) +
                        " is not unit modulus");
    }
  }

  // Run starts; each run is compared against its first entry.
  std::vector<std::size_t> starts;
  for (std::size_t j = 0; j < diagonal.size(); ++j) {
    if (starts.empty() || std::abs(diagonal[j] / diagonal[starts.back()] - 1.0) > tolerance) {
      starts.push_back(j);
    }
  }

  PhaseContext ctx;
  ctx.run_count = starts.size();
  ctx.global_phase_theta = std::arg(diagonal[0]);
  for (std::size_t i = 1; i < starts.size(); ++i) {
    const Complex ratio = diagonal[starts[i]] / diagonal[starts[i - 1]];
    ctx.blocks.push_back(
        {std::arg(ratio), params.register_size() - static_cast<Index>(starts[i])});
  }
  return ctx;
}

PhaseContext phase_context(const DiagonalSpec& spec) {
  PhaseContext ctx;
  const auto& runs = spec.runs();
  ctx.run_count = runs.size();
  ctx.global_phase_theta = runs.front().theta;
  Index remaining = spec.params().register_size();
  for (std::size_t i = 1; i < runs.size(); ++i) {
    remaining -= runs[i - 1].length;
    ctx.blocks.push_back({runs[i].theta - runs[i - 1].theta, remaining});
  }
  return ctx;
}

std::vector<MultiControlledInc> synth_cinc(Index l, const SignedExpansion& e) {
  if (!validate_expansion(e, l)) {
    throw DomainError("synth_cinc: not a valid signed base-" + std::to_string(e.d) +
                      " expansion of l = " + std::to_string(l));
  }
  const QuditParams params(e.d, e.n);
  std::vector<MultiControlledInc> gates;
  gates.reserve(e.terms.size());
  // CINC(l) = CINC(p_1, p_{h+1}) split at p_{i+1} = p_i + s_i d^{m_i}.
  Index p = params.register_size() - l;
  for (const SignedTerm& term : e.terms) {
    const Index step = params.pow(term.exponent);
    const Index prefix = p / step;  // p is a multiple of d^{m_i}
    const Index controls = term.sign > 0 ? prefix : prefix - 1;
    gates.push_back({value_to_dits(controls, e.d, e.n - term.exponent), term.exponent,
                     term.sign});
    p += term.sign * step;
  }
  return gates;
}

std::vector<Gate> lower_multicontrolled(const MultiControlledInc& gate, int d,
                                        Wire target, std::span<const Wire> ancilla_pool) {
  const std::size_t c = gate.control_count();
  if (gate.sign != 1 && gate.sign != -1) {
    throw DomainError("lower_multicontrolled: sign must be +1 or -1");
  }
  if (gate.control_values.base != d) {
    throw DomainError("lower_multicontrolled: control values are not base d");
  }
  if (c > 2 && ancilla_pool.size() < c - 2) {
    throw CapacityError("lower_multicontrolled: " + std::to_string(c) +
                        " controls need " + std::to_string(c - 2) + " ancillas, " +
                        std::to_string(ancilla_pool.size()) + " available");
  }

  std::vector<Gate> out;
  if (gate.sign < 0) out.push_back(mul_gate(target));

  // Shift each control so that it fires on value 1.
  std::vector<Wire> padded;
  for (std::size_t i = 0; i < c; ++i) {
    const int value = gate.control_values.digits[i];
    if (value != 1) {
      out.push_back(inc_gate(static_cast<Wire>(i), 1 - value, d));
      padded.push_back(static_cast<Wire>(i));
    }
  }

  const auto on_one = [](Wire w) { return Control{w, 1}; };
  if (c == 0) {
    out.push_back(inc_gate(target, 1, d));
  } else if (c <= 2) {
    std::vector<Control> controls;
    for (std::size_t i = 0; i < c; ++i) controls.push_back(on_one(static_cast<Wire>(i)));
    out.push_back(controlled_inc(std::move(controls), target, 1, d));
  } else {
    // anc_0 <- x_0 x_1, anc_{j} <- x_{j+1} anc_{j-1}, target <- x_{c-1} anc_{c-3}
    std::vector<Gate> compute;
    compute.push_back(controlled_inc({on_one(0), on_one(1)}, ancilla_pool[0], 1, d));
    for (std::size_t j = 1; j + 2 < c; ++j) {
      compute.push_back(controlled_inc({on_one(static_cast<Wire>(j + 1)),
                                        on_one(ancilla_pool[j - 1])},
                                       ancilla_pool[j], 1, d));
    }
    out.insert(out.end(), compute.begin(), compute.end());
    out.push_back(controlled_inc({on_one(static_cast<Wire>(c - 1)),
                                  on_one(ancilla_pool[c - 3])},
                                 target, 1, d));
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) {
      out.push_back(gate_inverse(*it, d));
    }
  }

  for (auto it = padded.rbegin(); it != padded.rend(); ++it) {
    const int value = gate.control_values.digits[*it];
    out.push_back(inc_gate(*it, value - 1, d));
  }
  if (gate.sign < 0) out.push_back(mul_gate(target));
  return out;
}

std::size_t ancilla_budget(int n) {
  return 1 + static_cast<std::size_t>(std::max(0, n - 2));
}

std::vector<Gate> lower_cinc(const QuditParams& params, Index l, const SignedExpansion& e) {
  if (e.d != params.d() || e.n != params.n()) {
    throw DomainError("lower_cinc: expansion does not match the qudit parameters");
  }
  const auto target = static_cast<Wire>(params.n());
  std::vector<Wire> pool;
  for (std::size_t i = 1; i < ancilla_budget(params.n()); ++i) {
    pool.push_back(target + static_cast<Wire>(i));
  }
  std::vector<Gate> out;
  for (const MultiControlledInc& g : synth_cinc(l, e)) {
    auto lowered = lower_multicontrolled(g, params.d(), target, pool);
    out.insert(out.end(), lowered.begin(), lowered.end());
  }
  return out;
}

Circuit synth_block(const QuditParams& params, const PhaseBlock& block,
                    ExpansionStrategy strategy, CostModel model) {
  if (block.l < 1 || block.l >= params.register_size()) {
    throw DomainError("synth_block: l = " + std::to_string(block.l) +
                      " outside [1, d^n)");
  }
  const auto target = static_cast<Wire>(params.n());
  const SignedExpansion e = make_expansion(block.l, params.d(), params.n(), strategy, model);
  const std::vector<Gate> entangler = lower_cinc(params, block.l, e);

  Circuit out(params, ancilla_budget(params.n()));
  out.append(entangler);
  out.append(phase_gate(target, block.ratio_theta, params.d()));
  // CINC(l)^dagger = (I (x) M) CINC(l) (I (x) M)
  out.append(mul_gate(target));
  out.append(entangler);
  out.append(mul_gate(target));
  return out;
}

Circuit synth_diagonal(const DiagonalSpec& spec, ExpansionStrategy strategy, bool cancel,
                       CostModel model) {
  const PhaseContext ctx = phase_context(spec);
  if (ctx.blocks.empty()) {
    return Circuit(spec.params(), 0, ctx.global_phase_theta);
  }
  Circuit out(spec.params(), ancilla_budget(spec.params().n()), ctx.global_phase_theta);
  for (const PhaseBlock& block : ctx.blocks) {
    out.append(synth_block(spec.params(), block, strategy, model).gates());
  }
  return cancel ? cancel_adjacent(out) : out;
}

namespace {

bool writes_to(const Gate& writer, const Gate& other) {
  const auto wires = gate_wires(other);
  return std::find(wires.begin(), wires.end(), gate_target(writer)) != wires.end();
}

// Both gates only modify their target, conditioned on their controls.
bool trivially_commute(const Gate& a, const Gate& b) {
  return !writes_to(a, b) && !writes_to(b, a);
}

bool cancel_pass(std::vector<Gate>& gates, int d) {
  bool changed = false;
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (Gate& g : gates) {
    const Gate inv = gate_inverse(g, d);
    bool removed = false;
    for (std::size_t k = out.size(); k-- > 0;) {
      if (out[k] == inv) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
        removed = true;
        break;
      }
      if (!trivially_commute(out[k], g)) break;
    }
    if (removed) {
      changed = true;
    } else {
      out.push_back(std::move(g));
    }
  }
  gates = std::move(out);
  return changed;
}

}  // namespace

Circuit cancel_adjacent(const Circuit& circuit) {
  std::vector<Gate> gates = circuit.gates();
  while (cancel_pass(gates, circuit.d())) {
  }
  Circuit out(circuit.params(), circuit.ancilla_wires(), circuit.global_phase_theta());
  out.append(gates);
  return out;
}

}  // namespace qudiag

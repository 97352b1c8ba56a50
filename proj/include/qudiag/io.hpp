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

// JSON file formats.
//
// Diagonal file:
//   {"d": 3, "n": 2, "runs": [{"theta": 0.0, "count": 4}, ...]}
//   {"d": 3, "n": 2, "entries": [theta_0, ..., theta_{d^n - 1}]}
// Angles are radians; an optional "tolerance" overrides the phase tolerance.
//
// Circuit file:
//   {"d": 3, "wires": {"data": 2, "ancilla": 1}, "global_phase_theta": 0.0,
//    "gates": [{"kind": "inc", "target": 2, "power": 1},
//              {"kind": "mul", "target": 2},
//              {"kind": "phase", "target": 2, "phi_theta": 0.5, "alphas_theta": [0.0]},
//              {"kind": "controlled", "target": 2, "power": 1,
//               "controls": [{"wire": 0, "value": 1}]}]}
//
// Doubles are written in shortest round-trip form, so parse(serialize(c))
// reproduces every angle bit for bit.

#include <json.hpp>
#include <string>
#include <string_view>

#include "qudiag/core.hpp"
#include "qudiag/expansion.hpp"
#include "qudiag/sim.hpp"
#include "qudiag/synthesis.hpp"

namespace qudiag {

nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);
std::string serialize_circuit(const Circuit& circuit);
Circuit parse_circuit(std::string_view text);

nlohmann::json diagonal_to_json(const DiagonalSpec& spec);
DiagonalSpec diagonal_from_json(const nlohmann::json& j);
DiagonalSpec parse_diagonal(std::string_view text);

nlohmann::json count_report_to_json(const CountReport& report);
nlohmann::json expansion_to_json(const SignedExpansion& e);
nlohmann::json check_report_to_json(const DiagonalCheckReport& report);

/// One gate per line, controls written as `wire=value`.
std::string render_pretty(const Circuit& circuit);

}  // namespace qudiag

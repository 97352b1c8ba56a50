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

#include "qudiag/io.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <vector>

namespace qudiag {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

template <class T>
T integer_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw DomainError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<T>();
}

double number_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw DomainError(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

Wire wire_field(const json& j, const char* key) {
  const auto w = integer_field<std::int64_t>(j, key);
  if (w < 0 || w > std::numeric_limits<Wire>::max()) {
    throw DomainError(std::string("field \"") + key + "\" is not a valid wire");
  }
  return static_cast<Wire>(w);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

json gate_to_json(const Gate& gate) {
  return std::visit(
      Overloaded{
          [](const IncPow& g) {
            return json{{"kind", "inc"}, {"target", g.target}, {"power", g.power}};
          },
          [](const Mul& g) { return json{{"kind", "mul"}, {"target", g.target}}; },
          [](const Phase& g) {
            return json{{"kind", "phase"},
                        {"target", g.target},
                        {"phi_theta", g.theta},
                        {"alphas_theta", g.alpha_thetas}};
          },
          [](const Controlled& g) {
            json controls = json::array();
            for (const Control& c : g.controls) {
              controls.push_back({{"wire", c.wire}, {"value", c.value}});
            }
            return json{{"kind", "controlled"},
                        {"target", g.target},
                        {"power", g.power},
                        {"controls", std::move(controls)}};
          },
      },
      gate);
}

Gate gate_from_json(const json& j, int d) {
  const json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) throw DomainError("gate \"kind\" must be a string");
  const auto kind = kind_field.get<std::string>();
  const Wire target = wire_field(j, "target");
  if (kind == "inc") {
    const int power = integer_field<int>(j, "power");
    if (power < 0 || power >= d) throw DomainError("inc gate power outside [0, d)");
    return IncPow{target, power};
  }
  if (kind == "mul") return Mul{target};
  if (kind == "phase") {
    std::vector<double> alphas;
    const json& a = field(j, "alphas_theta");
    if (!a.is_array()) throw DomainError("\"alphas_theta\" must be an array");
    for (const json& v : a) {
      if (!v.is_number()) throw DomainError("\"alphas_theta\" entries must be numbers");
      alphas.push_back(v.get<double>());
    }
    return Phase{target, number_field(j, "phi_theta"), std::move(alphas)};
  }
  if (kind == "controlled") {
    const int power = integer_field<int>(j, "power");
    if (power < 0 || power >= d) throw DomainError("controlled gate power outside [0, d)");
    const json& cs = field(j, "controls");
    if (!cs.is_array()) throw DomainError("\"controls\" must be an array");
    std::vector<Control> controls;
    for (const json& c : cs) {
      controls.push_back({wire_field(c, "wire"), integer_field<int>(c, "value")});
    }
    return controlled_inc(std::move(controls), target, power, d);
  }
  throw DomainError("unknown gate kind \"" + kind + "\"");
}

std::string format_angle(double theta) {
  std::ostringstream os;
  os << std::setprecision(17) << theta;
  return os.str();
}

}  // namespace

json circuit_to_json(const Circuit& circuit) {
  json gates = json::array();
  for (const Gate& g : circuit.gates()) gates.push_back(gate_to_json(g));
  return json{{"d", circuit.d()},
              {"wires", {{"data", circuit.data_wires()}, {"ancilla", circuit.ancilla_wires()}}},
              {"global_phase_theta", circuit.global_phase_theta()},
              {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
  const int d = integer_field<int>(j, "d");
  const json& wires = field(j, "wires");
  const int data = integer_field<int>(wires, "data");
  const auto ancilla = integer_field<std::int64_t>(wires, "ancilla");
  if (ancilla < 0) throw DomainError("ancilla wire count must be >= 0");
  double global = 0.0;
  if (j.contains("global_phase_theta")) global = number_field(j, "global_phase_theta");
  Circuit circuit(QuditParams(d, data), static_cast<std::size_t>(ancilla), global);
  const json& gates = field(j, "gates");
  if (!gates.is_array()) throw DomainError("\"gates\" must be an array");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    try {
      circuit.append(gate_from_json(gates[i], d));
    } catch (const DomainError& e) {
      throw DomainError("gate " + std::to_string(i) + ": " + e.what());
    }
  }
  return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
  return circuit_to_json(circuit).dump(2) + "\n";
}

Circuit parse_circuit(std::string_view text) { return circuit_from_json(parse_json(text)); }

json diagonal_to_json(const DiagonalSpec& spec) {
  json runs = json::array();
  for (const PhaseRun& r : spec.runs()) runs.push_back({{"theta", r.theta}, {"count", r.length}});
  return json{{"d", spec.params().d()}, {"n", spec.params().n()}, {"runs", std::move(runs)}};
}

DiagonalSpec diagonal_from_json(const json& j) {
  const QuditParams params(integer_field<int>(j, "d"), integer_field<int>(j, "n"));
  double tolerance = kDefaultPhaseTolerance;
  if (j.contains("tolerance")) tolerance = number_field(j, "tolerance");
  const bool has_runs = j.contains("runs");
  const bool has_entries = j.contains("entries");
  if (has_runs == has_entries) {
    throw DomainError("diagonal file needs exactly one of \"runs\" or \"entries\"");
  }
  if (has_runs) {
    const json& runs = field(j, "runs");
    if (!runs.is_array()) throw DomainError("\"runs\" must be an array");
    std::vector<PhaseRun> out;
    for (const json& r : runs) {
      out.push_back({number_field(r, "theta"), integer_field<Index>(r, "count")});
    }
    return DiagonalSpec(params, std::move(out), tolerance);
  }
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw DomainError("\"entries\" must be an array");
  std::vector<double> thetas;
  for (const json& v : entries) {
    if (!v.is_number()) throw DomainError("\"entries\" must hold angles in radians");
    thetas.push_back(v.get<double>());
  }
  return DiagonalSpec::from_angles(params, thetas, tolerance);
}

DiagonalSpec parse_diagonal(std::string_view text) {
  return diagonal_from_json(parse_json(text));
}

json count_report_to_json(const CountReport& r) {
  return json{{"inc", r.inc},
              {"mul", r.mul},
              {"phase", r.phase},
              {"single_qudit", r.single_qudit},
              {"and1", r.and1},
              {"and2", r.and2},
              {"and_many", r.and_many},
              {"control_levels", r.control_levels},
              {"total_gates", r.total_gates},
              {"ancillas", r.ancillas}};
}

json expansion_to_json(const SignedExpansion& e) {
  json terms = json::array();
  for (const SignedTerm& t : e.terms) {
    terms.push_back({{"sign", t.sign}, {"exponent", t.exponent}});
  }
  return terms;
}

json check_report_to_json(const DiagonalCheckReport& r) {
  return json{{"passed", r.passed},
              {"max_deviation", r.max_deviation},
              {"max_leakage", r.max_leakage},
              {"max_offdiagonal", r.max_offdiagonal},
              {"worst_index", r.worst_index}};
}

std::string render_pretty(const Circuit& circuit) {
  std::ostringstream os;
  os << "# d=" << circuit.d() << " data=" << circuit.data_wires()
     << " ancilla=" << circuit.ancilla_wires()
     << " global_phase_theta=" << format_angle(circuit.global_phase_theta()) << "\n";
  for (const Gate& gate : circuit.gates()) {
    std::visit(Overloaded{
                   [&os](const IncPow& g) { os << "INC^" << g.power << " q" << g.target; },
                   [&os](const Mul& g) { os << "M q" << g.target; },
                   [&os](const Phase& g) {
                     os << "P(" << format_angle(g.theta);
                     for (double a : g.alpha_thetas) os << ", " << format_angle(a);
                     os << ") q" << g.target;
                   },
                   [&os](const Controlled& g) {
                     os << "[";
                     for (std::size_t i = 0; i < g.controls.size(); ++i) {
                       if (i > 0) os << " ";
                       os << g.controls[i].wire << "=" << g.controls[i].value;
                     }
                     os << "] INC^" << g.power << " q" << g.target;
                   },
               },
               gate);
    os << "\n";
  }
  return os.str();
}

}  // namespace qudiag

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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qudiag/core.hpp"
#include "qudiag/expansion.hpp"
#include "qudiag/io.hpp"
#include "qudiag/sim.hpp"
#include "qudiag/synthesis.hpp"

namespace py = pybind11;
using namespace qudiag;

namespace {

using TermList = std::vector<std::pair<int, int>>;
using RunList = std::vector<std::pair<double, Index>>;

TermList to_terms(const SignedExpansion& e) {
  TermList out;
  for (const SignedTerm& t : e.terms) out.emplace_back(t.sign, t.exponent);
  return out;
}

SignedExpansion from_terms(const TermList& terms, int d, int n) {
  SignedExpansion e{d, n, {}};
  for (const auto& [sign, exponent] : terms) e.terms.push_back({sign, exponent});
  return e;
}

ExpansionStrategy strategy_arg(const std::string& name) {
  auto s = parse_strategy(name);
  if (!s) throw py::value_error("unknown strategy '" + name + "'");
  return *s;
}

CostModel model_arg(const std::string& name) {
  auto m = parse_cost_model(name);
  if (!m) throw py::value_error("unknown cost model '" + name + "'");
  return *m;
}

DiagonalSpec make_spec(int d, int n, const std::optional<RunList>& runs,
                       const std::optional<std::vector<double>>& entries, double tolerance) {
  if (runs.has_value() == entries.has_value()) {
    throw py::value_error("pass exactly one of runs= or entries=");
  }
  if (runs) {
    std::vector<PhaseRun> out;
    for (const auto& [theta, count] : *runs) out.push_back({theta, count});
    return DiagonalSpec(QuditParams(d, n), std::move(out), tolerance);
  }
  return DiagonalSpec::from_angles(QuditParams(d, n), *entries, tolerance);
}

py::dict counts_dict(const CountReport& r) {
  py::dict out;
  out["inc"] = r.inc;
  out["mul"] = r.mul;
  out["phase"] = r.phase;
  out["single_qudit"] = r.single_qudit;
  out["and1"] = r.and1;
  out["and2"] = r.and2;
  out["and_many"] = r.and_many;
  out["control_levels"] = r.control_levels;
  out["total_gates"] = r.total_gates;
  out["ancillas"] = r.ancillas;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Phase-context synthesis of diagonal qudit unitaries";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.def("value_to_dits",
        [](Index v, int d, int width) { return value_to_dits(v, d, width).digits; },
        py::arg("value"), py::arg("d"), py::arg("width"));

  m.def("standard_expansion",
        [](Index l, int d, int n) { return to_terms(standard_expansion(l, d, n)); },
        py::arg("l"), py::arg("d"), py::arg("n"));
  m.def("greedy_signed_expansion",
        [](Index l, int d, int n) { return to_terms(greedy_signed_expansion(l, d, n)); },
        py::arg("l"), py::arg("d"), py::arg("n"));
  m.def(
      "brute_force_optimal",
      [](Index l, int d, int n, const std::string& model) {
        return to_terms(brute_force_optimal(l, d, n, model_arg(model)));
      },
      py::arg("l"), py::arg("d"), py::arg("n"), py::arg("model") = "control-levels");
  m.def(
      "validate_expansion",
      [](const TermList& terms, Index l, int d, int n) {
        return validate_expansion(from_terms(terms, d, n), l);
      },
      py::arg("terms"), py::arg("l"), py::arg("d"), py::arg("n"));
  m.def(
      "expansion_cost",
      [](const TermList& terms, int d, int n) {
        const Cost c = expansion_cost(from_terms(terms, d, n));
        return std::make_pair(c.control_levels, c.ladder_gates);
      },
      py::arg("terms"), py::arg("d"), py::arg("n"),
      "(control_levels, ladder_gates) of a valid expansion");

  m.def(
      "synth_cinc",
      [](Index l, const TermList& terms, int d, int n) {
        std::vector<std::tuple<std::vector<int>, int, int>> out;
        for (const auto& g : synth_cinc(l, from_terms(terms, d, n))) {
          out.emplace_back(g.control_values.digits, g.m, g.sign);
        }
        return out;
      },
      py::arg("l"), py::arg("terms"), py::arg("d"), py::arg("n"),
      "List of (control_values, m, sign), one per expansion term");

  m.def(
      "phase_context",
      [](int d, int n, const std::vector<Complex>& diagonal, double tolerance) {
        const PhaseContext ctx = phase_context(QuditParams(d, n), diagonal, tolerance);
        std::vector<std::pair<double, Index>> blocks;
        for (const PhaseBlock& b : ctx.blocks) blocks.emplace_back(b.ratio_theta, b.l);
        return std::make_tuple(ctx.global_phase_theta, blocks, ctx.run_count);
      },
      py::arg("d"), py::arg("n"), py::arg("diagonal"),
      py::arg("tolerance") = kDefaultPhaseTolerance);

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("d", &Circuit::d)
      .def_property_readonly("data_wires", &Circuit::data_wires)
      .def_property_readonly("ancilla_wires", &Circuit::ancilla_wires)
      .def_property_readonly("global_phase_theta", &Circuit::global_phase_theta)
      .def("__len__", &Circuit::size)
      .def("to_json", &serialize_circuit)
      .def_static("from_json", [](const std::string& text) { return parse_circuit(text); })
      .def("counts", [](const Circuit& c) { return counts_dict(gate_count_report(c)); })
      .def("pretty", &render_pretty)
      .def("inverse", &circuit_inverse)
      .def(
          "unitary", [](const Circuit& c, Index cap) { return circuit_unitary(c, cap); },
          py::arg("cap") = kDefaultSimulationCap)
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("__repr__", [](const Circuit& c) {
        return "<qudiag.Circuit d=" + std::to_string(c.d()) +
               " wires=" + std::to_string(c.wire_count()) +
               " gates=" + std::to_string(c.size()) + ">";
      });

  m.def(
      "synth_diagonal",
      [](int d, int n, std::optional<RunList> runs, std::optional<std::vector<double>> entries,
         const std::string& strategy, bool cancel, const std::string& model,
         double tolerance) {
        return synth_diagonal(make_spec(d, n, runs, entries, tolerance),
                              strategy_arg(strategy), cancel, model_arg(model));
      },
      py::arg("d"), py::arg("n"), py::kw_only(), py::arg("runs") = py::none(),
      py::arg("entries") = py::none(), py::arg("strategy") = "standard",
      py::arg("cancel") = false, py::arg("model") = "control-levels",
      py::arg("tolerance") = kDefaultPhaseTolerance);

  m.def("cancel_adjacent", &cancel_adjacent, py::arg("circuit"));

  m.def(
      "check_diagonal_equiv",
      [](const Circuit& c, std::optional<RunList> runs,
         std::optional<std::vector<double>> entries, double tol, double leakage_tol) {
        const DiagonalSpec spec = make_spec(c.params().d(), c.params().n(), runs, entries,
                                            kDefaultPhaseTolerance);
        const DiagonalCheckReport r = check_diagonal_equiv(c, spec, tol, leakage_tol);
        py::dict out;
        out["passed"] = r.passed;
        out["max_deviation"] = r.max_deviation;
        out["max_leakage"] = r.max_leakage;
        out["max_offdiagonal"] = r.max_offdiagonal;
        out["worst_index"] = r.worst_index;
        return out;
      },
      py::arg("circuit"), py::kw_only(), py::arg("runs") = py::none(),
      py::arg("entries") = py::none(), py::arg("tol") = 1e-10,
      py::arg("leakage_tol") = 1e-12);

  m.def(
      "oracle_cinc",
      [](Index p, Index q, int d, int n) {
        return oracle_cinc(p, q, QuditParams(d, n)).to_dense();
      },
      py::arg("p"), py::arg("q"), py::arg("d"), py::arg("n"));
}

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

#include "qudiag/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "qudiag/io.hpp"

namespace qudiag {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot write \"" + path + "\"");
  out << contents;
}

const std::map<std::string, ExpansionStrategy> kStrategies{
    {"standard", ExpansionStrategy::Standard},
    {"greedy", ExpansionStrategy::Greedy},
    {"brute", ExpansionStrategy::BruteForce},
};

const std::map<std::string, CostModel> kModels{
    {"control-levels", CostModel::ControlLevels},
    {"ladder-gates", CostModel::LadderGates},
    {"lexicographic", CostModel::Lexicographic},
};

json cost_json(const SignedExpansion& e, CostModel model) {
  const Cost cost = expansion_cost(e);
  json value = model == CostModel::Lexicographic
                   ? json::array({cost.control_levels, cost.ladder_gates})
                   : json(cost_key(cost, model).first);
  return value;
}

// Synthesis summary shared by `synth` and `count`.
json synth_summary(const DiagonalSpec& spec, ExpansionStrategy strategy, CostModel model,
                   bool cancel, const Circuit& circuit) {
  const PhaseContext ctx = phase_context(spec);
  json entanglers = json::array();
  for (const PhaseBlock& block : ctx.blocks) {
    const SignedExpansion e = make_expansion(block.l, spec.params().d(),
                                             spec.params().n(), strategy, model);
    const Cost cost = expansion_cost(e);
    entanglers.push_back({{"l", block.l},
                          {"terms", expansion_to_json(e)},
                          {"control_levels", cost.control_levels},
                          {"ladder_gates", cost.ladder_gates}});
  }
  return json{{"d", spec.params().d()},
              {"n", spec.params().n()},
              {"strategy", std::string(to_string(strategy))},
              {"cancel", cancel},
              {"runs", ctx.run_count},
              {"counts", count_report_to_json(gate_count_report(circuit))},
              {"entanglers", std::move(entanglers)}};
}

struct SynthFlags {
  std::string strategy = "standard";
  std::string model = "control-levels";
  bool cancel = false;
  bool pretty = false;
};

void add_synth_flags(CLI::App* cmd, SynthFlags& flags) {
  cmd->add_option("--strategy", flags.strategy, "Expansion strategy")
      ->check(CLI::IsMember({"standard", "greedy", "brute"}));
  cmd->add_option("--model", flags.model, "Cost model for the brute-force strategy")
      ->check(CLI::IsMember({"control-levels", "ladder-gates", "lexicographic"}));
  cmd->add_flag("--cancel", flags.cancel, "Cancel adjacent inverse gate pairs");
  cmd->add_flag("--pretty", flags.pretty, "Also print a text rendering of the circuit");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qudiag: phase-context synthesis of diagonal qudit unitaries"};
  app.require_subcommand(1);

  SynthFlags synth_flags;
  std::string synth_input;
  std::string synth_output;
  auto* synth = app.add_subcommand("synth", "Synthesize a diagonal file into a circuit file");
  synth->add_option("input", synth_input, "Diagonal JSON file")->required();
  synth->add_option("-o,--out", synth_output, "Circuit JSON output path")->required();
  add_synth_flags(synth, synth_flags);

  SynthFlags count_flags;
  std::string count_input;
  auto* count = app.add_subcommand(
      "count", "Print gate counts for a diagonal file (synthesized) or a circuit file");
  count->add_option("input", count_input, "Diagonal or circuit JSON file")->required();
  add_synth_flags(count, count_flags);

  Index expand_l = 0;
  int expand_d = 0;
  int expand_n = 0;
  std::string expand_strategy = "standard";
  std::string expand_model = "control-levels";
  std::size_t expand_max_terms = 0;
  auto* expand = app.add_subcommand("expand", "Signed base-d expansion of an entangler size");
  expand->add_option("l", expand_l, "Entangler parameter, 1 <= l <= d^n")->required();
  expand->add_option("d", expand_d, "Qudit dimension")->required();
  expand->add_option("n", expand_n, "Number of data qudits")->required();
  expand->add_option("--strategy", expand_strategy, "Expansion strategy")
      ->check(CLI::IsMember({"standard", "greedy", "brute"}));
  expand->add_option("--model", expand_model, "Cost model")
      ->check(CLI::IsMember({"control-levels", "ladder-gates", "lexicographic"}));
  expand->add_option("--max-terms", expand_max_terms,
                     "Term cap for the brute-force search (0 = standard term count)");

  std::string verify_circuit;
  std::string verify_diagonal;
  double verify_tol = 1e-10;
  double verify_leak_tol = 1e-12;
  Index verify_cap = kDefaultSimulationCap;
  auto* verify = app.add_subcommand("verify", "Check a circuit against a diagonal by simulation");
  verify->add_option("circuit", verify_circuit, "Circuit JSON file")->required();
  verify->add_option("diagonal", verify_diagonal, "Diagonal JSON file")->required();
  verify->add_option("--tol", verify_tol, "Phase tolerance");
  verify->add_option("--leakage-tol", verify_leak_tol, "Ancilla leakage tolerance");
  verify->add_option("--cap", verify_cap, "Largest simulated register dimension");

  std::string simulate_circuit;
  Index simulate_cap = 729;
  auto* simulate = app.add_subcommand("simulate", "Print the unitary of a small circuit");
  simulate->add_option("circuit", simulate_circuit, "Circuit JSON file")->required();
  simulate->add_option("--cap", simulate_cap, "Largest register dimension to print");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*synth || *count) {
      const bool is_synth = static_cast<bool>(*synth);
      const SynthFlags& flags = is_synth ? synth_flags : count_flags;
      const json input = json::parse(read_file(is_synth ? synth_input : count_input),
                                     nullptr, false);
      if (input.is_discarded()) throw DomainError("input is not valid JSON");
      if (!is_synth && input.contains("gates")) {
        const Circuit circuit = circuit_from_json(input);
        out << json{{"counts", count_report_to_json(gate_count_report(circuit))}}.dump(2)
            << "\n";
        if (flags.pretty) out << render_pretty(circuit);
        return kExitOk;
      }
      const DiagonalSpec spec = diagonal_from_json(input);
      const ExpansionStrategy strategy = kStrategies.at(flags.strategy);
      const CostModel model = kModels.at(flags.model);
      const Circuit circuit = synth_diagonal(spec, strategy, flags.cancel, model);
      if (is_synth) write_file(synth_output, serialize_circuit(circuit));
      out << synth_summary(spec, strategy, model, flags.cancel, circuit).dump(2) << "\n";
      if (flags.pretty) out << render_pretty(circuit);
      return kExitOk;
    }

    if (*expand) {
      const ExpansionStrategy strategy = kStrategies.at(expand_strategy);
      const CostModel model = kModels.at(expand_model);
      SignedExpansion e;
      if (strategy == ExpansionStrategy::BruteForce) {
        BruteForceLimits limits;
        if (expand_max_terms > 0) limits.max_terms = expand_max_terms;
        e = brute_force_optimal(expand_l, expand_d, expand_n, model, limits);
      } else {
        e = make_expansion(expand_l, expand_d, expand_n, strategy, model);
      }
      const Cost cost = expansion_cost(e);
      const json report{{"l", expand_l},
                        {"d", expand_d},
                        {"n", expand_n},
                        {"strategy", expand_strategy},
                        {"model", expand_model},
                        {"terms", expansion_to_json(e)},
                        {"cost", cost_json(e, model)},
                        {"control_levels", cost.control_levels},
                        {"ladder_gates", cost.ladder_gates},
                        {"valid", validate_expansion(e, expand_l)}};
      out << report.dump(2) << "\n";
      return kExitOk;
    }

    if (*verify) {
      const Circuit circuit = parse_circuit(read_file(verify_circuit));
      const DiagonalSpec spec = parse_diagonal(read_file(verify_diagonal));
      const DiagonalCheckReport report =
          check_diagonal_equiv(circuit, spec, verify_tol, verify_leak_tol, verify_cap);
      out << (report.passed ? "PASS" : "FAIL") << " max_deviation=" << report.max_deviation
          << " max_leakage=" << report.max_leakage
          << " max_offdiagonal=" << report.max_offdiagonal << "\n";
      out << check_report_to_json(report).dump() << "\n";
      return report.passed ? kExitOk : kExitValidation;
    }

    if (*simulate) {
      const Circuit circuit = parse_circuit(read_file(simulate_circuit));
      const UnitaryMatrix u = circuit_unitary(circuit, simulate_cap);
      json real = json::array();
      json imag = json::array();
      for (Eigen::Index r = 0; r < u.rows(); ++r) {
        json re_row = json::array();
        json im_row = json::array();
        for (Eigen::Index c = 0; c < u.cols(); ++c) {
          re_row.push_back(u(r, c).real());
          im_row.push_back(u(r, c).imag());
        }
        real.push_back(std::move(re_row));
        imag.push_back(std::move(im_row));
      }
      out << json{{"dimension", u.rows()},
                  {"global_phase_theta", circuit.global_phase_theta()},
                  {"real", std::move(real)},
                  {"imag", std::move(imag)}}
                 .dump()
          << "\n";
      return kExitOk;
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace qudiag

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

#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <random>

#include "qudiag/io.hpp"
#include "test_util.hpp"

namespace qudiag {
namespace {

std::vector<std::uint64_t> angle_bits(const Circuit& c) {
  std::vector<std::uint64_t> out{std::bit_cast<std::uint64_t>(c.global_phase_theta())};
  for (const Gate& g : c.gates()) {
    if (const auto* p = std::get_if<Phase>(&g)) {
      out.push_back(std::bit_cast<std::uint64_t>(p->theta));
      for (double a : p->alpha_thetas) out.push_back(std::bit_cast<std::uint64_t>(a));
    }
  }
  return out;
}

TEST(CircuitJson, RandomCircuitsRoundTripBitExactly) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 5;
    const Circuit c = testing::random_circuit(rng, d, 1 + trial % 4, trial % 3, 25);
    const std::string text = serialize_circuit(c);
    const Circuit back = parse_circuit(text);
    ASSERT_EQ(back, c);
    ASSERT_EQ(angle_bits(back), angle_bits(c));
    ASSERT_EQ(serialize_circuit(back), text);
  }
}

TEST(CircuitJson, SynthesizedCircuitRoundTrips) {
  std::mt19937_64 rng(1);
  const DiagonalSpec spec = testing::random_spec(rng, 3, 3, 4);
  const Circuit c = synth_diagonal(spec, ExpansionStrategy::Greedy, true);
  EXPECT_EQ(parse_circuit(serialize_circuit(c)), c);
}

TEST(CircuitJson, AwkwardAnglesSurvive) {
  Circuit c(QuditParams(3, 1), 0, -0.0);
  c.append(phase_gate(0, 0.1 + 0.2, std::vector<double>{5e-324}));
  c.append(phase_gate(0, 1.7976931348623157e308, std::vector<double>{-3.141592653589793}));
  const Circuit back = parse_circuit(serialize_circuit(c));
  EXPECT_EQ(angle_bits(back), angle_bits(c));
}

TEST(CircuitJson, DocumentedLayout) {
  Circuit c(QuditParams(3, 2), 1, 0.5);
  c.append(inc_gate(2, 1, 3));
  c.append(controlled_inc({{0, 1}}, 2, 2, 3));
  const nlohmann::json j = circuit_to_json(c);
  EXPECT_EQ(j["d"], 3);
  EXPECT_EQ(j["wires"]["data"], 2);
  EXPECT_EQ(j["wires"]["ancilla"], 1);
  EXPECT_EQ(j["gates"][0]["kind"], "inc");
  EXPECT_EQ(j["gates"][1]["controls"][0]["value"], 1);
}

TEST(CircuitJson, RejectsMalformedInput) {
  EXPECT_THROW(parse_circuit("{"), DomainError);
  EXPECT_THROW(parse_circuit("[]"), DomainError);
  EXPECT_THROW(parse_circuit(R"({"d": 3, "wires": {"data": 1, "ancilla": 0}})"), DomainError);
  const char* bad_gates[] = {
      R"({"kind": "swap", "target": 0})",
      R"({"kind": "inc", "target": 0, "power": 3})",
      R"({"kind": "inc", "target": 5, "power": 1})",
      R"({"kind": "phase", "target": 0, "phi_theta": 0.1, "alphas_theta": []})",
      R"({"kind": "controlled", "target": 0, "power": 1, "controls": [{"wire": 0, "value": 1}]})",
      R"({"kind": "controlled", "target": 1, "power": 1, "controls": [{"wire": 0, "value": 7}]})",
      R"({"kind": "mul", "target": -1})",
  };
  for (const char* g : bad_gates) {
    const std::string text =
        std::string(R"({"d": 3, "wires": {"data": 2, "ancilla": 0}, "gates": [)") + g + "]}";
    EXPECT_THROW(parse_circuit(text), DomainError) << g;
  }
}

TEST(DiagonalJson, RunsAndEntries) {
  const DiagonalSpec runs = parse_diagonal(
      R"({"d": 2, "n": 2, "runs": [{"theta": 0.0, "count": 3}, {"theta": 1.5, "count": 1}]})");
  EXPECT_EQ(runs.runs(), (std::vector<PhaseRun>{{0.0, 3}, {1.5, 1}}));
  const DiagonalSpec entries = parse_diagonal(R"({"d": 2, "n": 2, "entries": [0, 0, 0, 1.5]})");
  EXPECT_EQ(entries, runs);
  EXPECT_EQ(diagonal_from_json(diagonal_to_json(runs)), runs);
}

TEST(DiagonalJson, RejectsMalformedInput) {
  EXPECT_THROW(parse_diagonal(R"({"d": 2, "n": 2})"), DomainError);
  EXPECT_THROW(parse_diagonal(R"({"d": 2, "n": 2, "entries": [0, 1]})"), DomainError);
  EXPECT_THROW(parse_diagonal(R"({"d": 2, "n": 2, "runs": [{"theta": 0, "count": 3}]})"),
               DomainError);
  EXPECT_THROW(parse_diagonal(R"({"d": 2, "n": 2, "entries": [0, 0, 0, "x"]})"), DomainError);
  EXPECT_THROW(
      parse_diagonal(R"({"d": 2, "n": 1, "runs": [{"theta": 0, "count": 2}], "entries": [0, 0]})"),
      DomainError);
}

TEST(DiagonalJson, ToleranceMergesNearbyEntries) {
  const DiagonalSpec loose =
      parse_diagonal(R"({"d": 2, "n": 1, "entries": [0, 1e-6], "tolerance": 1e-3})");
  EXPECT_EQ(loose.run_count(), 1u);
  const DiagonalSpec tight = parse_diagonal(R"({"d": 2, "n": 1, "entries": [0, 1e-6]})");
  EXPECT_EQ(tight.run_count(), 2u);
}

TEST(RenderPretty, Lines) {
  Circuit c(QuditParams(3, 2), 1, 0.25);
  c.append(inc_gate(2, 1, 3));
  c.append(mul_gate(2));
  c.append(phase_gate(2, 0.5, std::vector<double>{-1.0}));
  c.append(controlled_inc({{1, 0}, {0, 2}}, 2, 2, 3));
  EXPECT_EQ(render_pretty(c),
            "# d=3 data=2 ancilla=1 global_phase_theta=0.25\n"
            "INC^1 q2\n"
            "M q2\n"
            "P(0.5, -1) q2\n"
            "[0=2 1=0] INC^2 q2\n");
}

}  // namespace
}  // namespace qudiag

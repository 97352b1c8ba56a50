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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qudiag/io.hpp"

namespace qudiag {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qudiag_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& contents) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }

  std::string read(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

constexpr const char* kThreeRuns =
    R"({"d": 3, "n": 2, "runs": [{"theta": 0.0, "count": 2},
        {"theta": 2.0943951023931953, "count": 2}, {"theta": 4.1887902047863905, "count": 5}]})";

TEST_F(CliTest, SynthWritesVerifiableCircuit) {
  const std::string diag = write("diag.json", kThreeRuns);
  const std::string circ = path("circ.json");
  const Result r = run({"synth", diag, "-o", circ, "--strategy", "greedy", "--cancel"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json summary = json::parse(r.out);
  EXPECT_EQ(summary["runs"], 3);
  EXPECT_EQ(summary["counts"]["phase"], 2);
  EXPECT_EQ(summary["entanglers"].size(), 2u);
  EXPECT_EQ(summary["entanglers"][0]["l"], 7);

  const Result v = run({"verify", circ, diag});
  EXPECT_EQ(v.code, kExitOk) << v.out << v.err;
  EXPECT_EQ(v.out.rfind("PASS", 0), 0u);
}

TEST_F(CliTest, SynthIsDeterministic) {
  const std::string diag = write("diag.json", kThreeRuns);
  ASSERT_EQ(run({"synth", diag, "-o", path("a.json"), "--strategy", "brute"}).code, kExitOk);
  ASSERT_EQ(run({"synth", diag, "-o", path("b.json"), "--strategy", "brute"}).code, kExitOk);
  EXPECT_EQ(read(path("a.json")), read(path("b.json")));
}

TEST_F(CliTest, VerifyRejectsCorruptedCircuit) {
  const std::string diag = write("diag.json", kThreeRuns);
  const std::string circ = path("circ.json");
  ASSERT_EQ(run({"synth", diag, "-o", circ}).code, kExitOk);
  Circuit c = parse_circuit(read(circ));
  Circuit broken(c.params(), c.ancilla_wires(), c.global_phase_theta());
  for (const Gate& g : c.gates()) {
    if (const auto* p = std::get_if<Phase>(&g)) {
      broken.append(phase_gate(p->target, p->theta + 0.1, p->alpha_thetas));
    } else {
      broken.append(g);
    }
  }
  const std::string bad = write("bad.json", serialize_circuit(broken));
  const Result v = run({"verify", bad, diag});
  EXPECT_EQ(v.code, kExitValidation);
  EXPECT_EQ(v.out.rfind("FAIL", 0), 0u);
}

TEST_F(CliTest, VerifyOversizeIsCapacityError) {
  const std::string diag =
      write("diag.json", R"({"d": 2, "n": 12, "runs": [{"theta": 0, "count": 4095},
                                                        {"theta": 1, "count": 1}]})");
  const std::string circ = path("circ.json");
  ASSERT_EQ(run({"synth", diag, "-o", circ}).code, kExitOk);
  const Result v = run({"verify", circ, diag});
  EXPECT_EQ(v.code, kExitCapacity);
  EXPECT_NE(v.err.find("capacity"), std::string::npos);
}

TEST_F(CliTest, ExpandExamples) {
  const Result a = run({"expand", "7", "2", "3", "--strategy", "brute"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const json ja = json::parse(a.out);
  EXPECT_EQ(ja["cost"], 3);
  EXPECT_EQ(ja["terms"], json::parse(R"([{"sign": -1, "exponent": 0}, {"sign": 1, "exponent": 3}])"));
  EXPECT_TRUE(ja["valid"].get<bool>());

  const json jb = json::parse(run({"expand", "14", "5", "4", "--strategy", "brute"}).out);
  EXPECT_EQ(jb["cost"], 12);
  const json jc = json::parse(run({"expand", "14", "5", "4"}).out);
  EXPECT_EQ(jc["cost"], 22);
  const json jd =
      json::parse(run({"expand", "14", "5", "4", "--strategy", "brute", "--model",
                       "lexicographic"})
                      .out);
  EXPECT_EQ(jd["cost"], json::array({12, 12}));
}

TEST_F(CliTest, SynthSmallExamples) {
  const std::string six = write(
      "six.json", R"({"d": 2, "n": 6, "runs": [{"theta": 0, "count": 62}, {"theta": 0.9, "count": 2}]})");
  const Result a = run({"synth", six, "-o", path("six_circ.json")});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(json::parse(a.out)["counts"]["phase"], 1);
  EXPECT_EQ(json::parse(a.out)["entanglers"][0]["l"], 2);

  const std::string flat =
      write("flat.json", R"({"d": 3, "n": 2, "runs": [{"theta": 0.25, "count": 9}]})");
  const std::string circ = path("flat_circ.json");
  ASSERT_EQ(run({"synth", flat, "-o", circ}).code, kExitOk);
  const Circuit c = parse_circuit(read(circ));
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(c.global_phase_theta(), 0.25);

  const json full = json::parse(run({"expand", "27", "3", "3"}).out);
  EXPECT_EQ(full["cost"], 0);
  EXPECT_EQ(full["terms"], json::parse(R"([{"sign": 1, "exponent": 3}])"));
}

TEST_F(CliTest, ExpandErrors) {
  EXPECT_EQ(run({"expand", "9", "2", "3"}).code, kExitValidation);
  EXPECT_EQ(run({"expand", "7", "2", "3", "--strategy", "nope"}).code, kExitValidation);
  EXPECT_EQ(run({"expand", "5", "2", "25", "--strategy", "brute"}).code, kExitCapacity);
  EXPECT_EQ(run({"expand", "7", "2", "3", "--strategy", "brute", "--max-terms", "1"}).code,
            kExitCapacity);
  EXPECT_EQ(run({}).code, kExitValidation);
}

TEST_F(CliTest, CountAcceptsBothFileKinds) {
  const std::string diag = write("diag.json", kThreeRuns);
  const Result from_diag = run({"count", diag, "--strategy", "greedy"});
  ASSERT_EQ(from_diag.code, kExitOk);
  const std::string circ = path("circ.json");
  ASSERT_EQ(run({"synth", diag, "-o", circ, "--strategy", "greedy"}).code, kExitOk);
  const Result from_circ = run({"count", circ});
  ASSERT_EQ(from_circ.code, kExitOk);
  EXPECT_EQ(json::parse(from_diag.out)["counts"], json::parse(from_circ.out)["counts"]);
}

TEST_F(CliTest, MalformedInputIsValidationError) {
  const std::string junk = write("junk.json", "{not json");
  EXPECT_EQ(run({"synth", junk, "-o", path("x.json")}).code, kExitValidation);
  EXPECT_EQ(run({"count", path("missing.json")}).code, kExitValidation);
  const std::string bad_sum = write("sum.json", R"({"d": 2, "n": 1, "runs": [{"theta": 0, "count": 3}]})");
  EXPECT_EQ(run({"synth", bad_sum, "-o", path("x.json")}).code, kExitValidation);
}

TEST_F(CliTest, SimulatePrintsUnitary) {
  const std::string circ = write(
      "circ.json",
      R"({"d": 2, "wires": {"data": 1, "ancilla": 0}, "global_phase_theta": 0.5,
          "gates": [{"kind": "inc", "target": 0, "power": 1}]})");
  const Result r = run({"simulate", circ});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(j["real"], json::parse("[[0.0, 1.0], [1.0, 0.0]]"));
  EXPECT_EQ(j["global_phase_theta"], 0.5);
  EXPECT_EQ(run({"simulate", circ, "--cap", "1"}).code, kExitCapacity);
}

}  // namespace
}  // namespace qudiag

// Copyright 2026 The shadowprint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "test_support.hpp"

using sptest::run_process;
using sptest::slurp;

namespace {

const std::string kCli = SHADOWPRINT_CLI;
const std::string kAdapter = SHADOWPRINT_MOCK_ADAPTER;

sptest::ProcessResult cli(const std::string& args) { return run_process(kCli + " " + args); }

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST(Cli, HelpAndVersion) {
    EXPECT_EQ(cli("--help").exit_code, 0);
    const auto v = cli("--version");
    EXPECT_EQ(v.exit_code, 0);
    EXPECT_NE(v.output.find("1.0.0"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
    sptest::TempDir dir;
    const std::string out = quoted(dir.file("f.json"));
    EXPECT_EQ(cli("").exit_code, 1);
    EXPECT_EQ(cli("frobnicate").exit_code, 1);
    EXPECT_EQ(cli("fingerprint --channel bitflip --out " + out).exit_code, 1);
    EXPECT_EQ(cli("fingerprint --channel depolarizing --param 1.5 --out " + out).exit_code, 1);
    EXPECT_EQ(cli("fingerprint --channel depolarizing --shots 0 --out " + out).exit_code, 1);
    EXPECT_EQ(cli("fingerprint --channel depolarizing --shots many --out " + out).exit_code, 1);
    EXPECT_EQ(cli("fingerprint --channel depolarizing --backend builtin:variant-Q --out " + out).exit_code, 1);
    EXPECT_EQ(cli("scaling --max-qubits 17").exit_code, 1);
    EXPECT_FALSE(std::filesystem::exists(dir.file("f.json")));
}

TEST(Cli, FingerprintIsDeterministic) {
    sptest::TempDir dir;
    const std::string args = "fingerprint --backend builtin:variant-B --channel amplitude_damping --param 0.1 --seed 5";
    ASSERT_EQ(cli(args + " --out " + quoted(dir.file("a.json")) + " --heatmap " + quoted(dir.file("a.svg"))).exit_code,
              0);
    ASSERT_EQ(cli(args + " --out " + quoted(dir.file("b.json")) + " --heatmap " + quoted(dir.file("b.svg"))).exit_code,
              0);
    EXPECT_EQ(slurp(dir.file("a.json")), slurp(dir.file("b.json")));
    EXPECT_EQ(slurp(dir.file("a.svg")), slurp(dir.file("b.svg")));
    EXPECT_NE(slurp(dir.file("a.json")).find("\"timestamp\": null"), std::string::npos);
}

TEST(Cli, SeedFlagBeatsEnvironment) {
    sptest::TempDir dir;
    const std::string base = "fingerprint --channel depolarizing --param 0.05 --out ";
    ASSERT_EQ(run_process("SHADOWPRINT_SEED=17 " + kCli + " " + base + quoted(dir.file("env.json"))).exit_code, 0);
    ASSERT_EQ(cli(base + quoted(dir.file("flag.json")) + " --seed 17").exit_code, 0);
    ASSERT_EQ(run_process("SHADOWPRINT_SEED=3 " + kCli + " " + base + quoted(dir.file("both.json")) + " --seed 17")
                  .exit_code,
              0);
    EXPECT_EQ(slurp(dir.file("env.json")), slurp(dir.file("flag.json")));
    EXPECT_EQ(slurp(dir.file("both.json")), slurp(dir.file("flag.json")));
    EXPECT_NE(slurp(dir.file("flag.json")).find("\"master_seed\": 17"), std::string::npos);
    EXPECT_EQ(run_process("SHADOWPRINT_SEED=abc " + kCli + " " + base + quoted(dir.file("x.json"))).exit_code, 1);
}

TEST(Cli, TimestampOnRequest) {
    sptest::TempDir dir;
    ASSERT_EQ(cli("fingerprint --channel identity --shots exact --timestamp --out " + quoted(dir.file("t.json")))
                  .exit_code,
              0);
    EXPECT_EQ(slurp(dir.file("t.json")).find("\"timestamp\": null"), std::string::npos);
    EXPECT_NE(slurp(dir.file("t.json")).find("\"shots\": \"exact\""), std::string::npos);
}

TEST(Cli, CompareReportsSystematicDifference) {
    sptest::TempDir dir;
    const std::string a = quoted(dir.file("a.json")), b = quoted(dir.file("b.json"));
    ASSERT_EQ(cli("fingerprint --backend builtin:variant-A --channel depolarizing --param 0.05 --seed 1 --out " + a)
                  .exit_code,
              0);
    ASSERT_EQ(cli("fingerprint --backend builtin:variant-B --channel depolarizing --param 0.05 --seed 2 --out " + b)
                  .exit_code,
              0);
    const auto r = cli("compare " + a + " " + b + " --heatmap " + quoted(dir.file("d.svg")) + " --report " +
                       quoted(dir.file("r.json")));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("verdict: systematic"), std::string::npos) << r.output;
    EXPECT_NE(r.output.find("noise_floor: 0.734847"), std::string::npos) << r.output;
    EXPECT_NE(slurp(dir.file("r.json")).find("\"difference\""), std::string::npos);
    EXPECT_NE(slurp(dir.file("d.svg")).find("<svg"), std::string::npos);
    const auto j = cli("compare --json " + a + " " + a);
    EXPECT_EQ(j.exit_code, 0);
    EXPECT_NE(j.output.find("\"systematic\": false"), std::string::npos);
}

TEST(Cli, CompareAcrossSuitesExitsOne) {
    sptest::TempDir dir;
    const std::string suite = dir.file("mini.json");
    std::ofstream(suite) << R"({"version": "mini", "states": [{"id": "a", "gates": []}], "observables": ["ZZ"]})";
    ASSERT_EQ(cli("fingerprint --channel identity --shots exact --suite " + quoted(suite) + " --out " +
                  quoted(dir.file("m.json")))
                  .exit_code,
              0);
    ASSERT_EQ(cli("fingerprint --channel identity --shots exact --out " + quoted(dir.file("d.json"))).exit_code, 0);
    EXPECT_EQ(cli("compare " + quoted(dir.file("m.json")) + " " + quoted(dir.file("d.json"))).exit_code, 1);
    EXPECT_EQ(cli("compare " + quoted(dir.file("m.json")) + " " + quoted(dir.file("none.json"))).exit_code, 2);
}

TEST(Cli, ClassifyAndEstimate) {
    sptest::TempDir dir;
    const std::string f = quoted(dir.file("p.json"));
    ASSERT_EQ(cli("fingerprint --channel phase_damping --param 0.08 --shots exact --out " + f).exit_code, 0);
    const auto c = cli("classify " + f);
    EXPECT_EQ(c.exit_code, 0);
    EXPECT_NE(c.output.find("label: phase_damping"), std::string::npos) << c.output;
    EXPECT_NE(c.output.find("provenance: default"), std::string::npos);
    const auto e = cli("estimate --calibrate " + f);
    EXPECT_EQ(e.exit_code, 0);
    EXPECT_NE(e.output.find("estimated_parameter: 0.08\n"), std::string::npos) << e.output;
    EXPECT_NE(e.output.find("provenance: calibrated:variant-A:suite_v1"), std::string::npos);
    EXPECT_NE(e.output.find("relative_error: "), std::string::npos);
    const auto o = cli("estimate --c-phase 0.5 " + f);
    EXPECT_NE(o.output.find("provenance: user-supplied"), std::string::npos);
    EXPECT_EQ(cli("classify " + quoted(dir.file("missing.json"))).exit_code, 2);
}

TEST(Cli, ScalingTable) {
    const auto csv = cli("scaling --max-qubits 8 --shots 500 --format csv");
    EXPECT_EQ(csv.exit_code, 0);
    EXPECT_NE(csv.output.find("\n2,67500,128000,"), std::string::npos);
    EXPECT_NE(csv.output.find("\n8,1696500,2147483648000,"), std::string::npos);
    const auto table = cli("scaling --max-qubits 4");
    EXPECT_EQ(table.exit_code, 0);
    EXPECT_NE(table.output.find("67500"), std::string::npos);
}

TEST(Cli, SuitePrintAndValidate) {
    sptest::TempDir dir;
    const auto p = cli("suite print");
    EXPECT_EQ(p.exit_code, 0);
    std::ofstream(dir.file("s.json")) << p.output;
    const auto v = cli("suite validate " + quoted(dir.file("s.json")));
    EXPECT_EQ(v.exit_code, 0);
    EXPECT_NE(v.output.find("9 states x 15 observables"), std::string::npos);
    std::ofstream(dir.file("bad.json")) << R"({"states": [{"id": "a", "gates": [["t", 0]]}], "observables": ["Z"]})";
    EXPECT_EQ(cli("suite validate " + quoted(dir.file("bad.json"))).exit_code, 1);
}

TEST(Cli, CalibratePrintsConstants) {
    const auto r = cli("calibrate --profile variant-B");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("provenance: calibrated:variant-B:suite_v1"), std::string::npos);
}

TEST(Cli, BridgeFailureExitsTwoWithoutPartialFile) {
    sptest::TempDir dir;
    const std::string out = dir.file("crash.json");
    const auto r = cli("fingerprint --backend " + quoted("bridge:" + kAdapter + " --mode crash --after 50") +
                       " --channel depolarizing --param 0.05 --shots 20 --out " + quoted(out));
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_FALSE(std::filesystem::exists(out));
    for (const auto& entry : std::filesystem::directory_iterator(dir.path())) {
        ADD_FAILURE() << "stray file " << entry.path();
    }
    const auto hang = cli("fingerprint --backend " + quoted("bridge:" + kAdapter + " --mode hang") +
                          " --channel identity --shots 20 --timeout-ms 200 --out " + quoted(out));
    EXPECT_EQ(hang.exit_code, 2);
    EXPECT_FALSE(std::filesystem::exists(out));
}

TEST(Cli, BridgeFingerprintAndConformance) {
    sptest::TempDir dir;
    const std::string out = dir.file("bridge.json");
    const auto r = cli("fingerprint --backend " + quoted("bridge:" + kAdapter) +
                       " --channel phase_damping --param 0.08 --shots 100 --out " + quoted(out));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(slurp(out).find("mock-variant-A"), std::string::npos);
    EXPECT_EQ(cli("fingerprint --backend " + quoted("bridge:" + kAdapter) +
                  " --channel identity --shots exact --out " + quoted(out))
                  .exit_code,
              1);
    const auto conf = cli("conform " + quoted(kAdapter));
    EXPECT_EQ(conf.exit_code, 0) << conf.output;
    EXPECT_EQ(conf.output.find("FAIL"), std::string::npos) << conf.output;
    EXPECT_EQ(cli("conform " + quoted(kAdapter + " --mode crash --after 2")).exit_code, 2);
}

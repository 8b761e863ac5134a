// Copyright 2026 The topophase Authors
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

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "topophase/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = topophase::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(TOPOPHASE_TEST_TMPDIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::vector<std::pair<double, double>> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::vector<std::pair<double, double>> rows;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    return rows;
}

}  // namespace

TEST(Classify, CatalogClasses) {
    auto plus = invoke({"classify", "--class", "+"});
    ASSERT_EQ(plus.code, 0) << plus.err;
    EXPECT_EQ(plus.report()["class"], "+");
    EXPECT_EQ(plus.report()["crossings"], 0);
    EXPECT_EQ(plus.report()["agreement"], true);

    for (const char* spelling : {"-", "minus", "\xE2\x88\x92"}) {
        auto minus = invoke({"classify", "--class", spelling});
        ASSERT_EQ(minus.code, 0) << minus.err;
        EXPECT_EQ(minus.report()["class"], "-");
        EXPECT_EQ(minus.report()["crossings"], 1);
        EXPECT_EQ(minus.report()["gate_product_sign"], -1);
        EXPECT_EQ(minus.report()["mes_phase"], -1);
    }
}

TEST(Classify, FullTurnFile) {
    const auto path = tmp("full_turn.json");
    write(path, R"({"name":"turn","closed":true,"segments":[{"axis":[0,0,1],"angle":6.283185307179586}]})");
    auto r = invoke({"classify", "--trajectory", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report()["class"], "-");
    EXPECT_EQ(r.report()["crossings"], 1);
}

TEST(Classify, OpenTrajectoryFails) {
    const auto path = tmp("open.json");
    write(path, R"({"name":"open","closed":false,"segments":[{"axis":[0,0,1],"angle":1.0}]})");
    EXPECT_EQ(invoke({"classify", "--trajectory", path}).code, 1);
}

TEST(ExitCodes, UsageAndIo) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"classify"}).code, 2);
    EXPECT_EQ(invoke({"classify", "--class", "x"}).code, 2);
    EXPECT_EQ(invoke({"classify", "--class", "+", "--bogus"}).code, 2);
    EXPECT_EQ(invoke({"interferogram", "--class", "+", "--phi-steps", "1"}).code, 2);
    EXPECT_EQ(invoke({"classify", "--trajectory", tmp("does_not_exist.json")}).code, 3);
    EXPECT_EQ(invoke({"nmr", "--class", "+", "--out", "/nonexistent-dir/spec.csv"}).code, 3);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Phase, Signs) {
    EXPECT_EQ(invoke({"phase", "--class", "+"}).report()["phase"], 1);
    EXPECT_EQ(invoke({"phase", "--class", "-"}).report()["phase"], -1);
}

TEST(Interferogram, CircuitCurves) {
    auto minus = invoke({"interferogram", "--class", "-", "--phi-steps", "24"});
    ASSERT_EQ(minus.code, 0) << minus.err;
    const auto m = parse_csv(minus.out);
    ASSERT_EQ(m.size(), 24u);
    const auto p = parse_csv(invoke({"interferogram", "--class", "+", "--phi-steps", "24"}).out);
    EXPECT_NEAR(p[0].second, 1.0, 1e-12);
    for (std::size_t i = 0; i < m.size(); ++i) {
        EXPECT_NEAR(m[i].second, -std::cos(m[i].first), 1e-10);
        EXPECT_NEAR(m[i].second + p[i].second, 0.0, 2e-10);
    }
}

TEST(Interferogram, PulseLevelToFile) {
    const auto path = tmp("pulse.csv");
    auto r = invoke({"interferogram", "--class", "-", "--phi-steps", "8", "--level", "pulse", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_LT(r.report()["max_residual"].get<double>(), 0.1);
    for (const auto& [phi, v] : parse_csv(slurp(path))) {
        EXPECT_NEAR(v, -std::cos(phi), 0.1);
    }
}

TEST(Nmr, ClassReadout) {
    const auto path = tmp("spectrum.csv");
    auto plus = invoke({"nmr", "--class", "+", "--phi", "0", "--out", path});
    ASSERT_EQ(plus.code, 0) << plus.err;
    EXPECT_EQ(plus.report()["class_readout"], "+");
    EXPECT_NEAR(plus.report()["integral_normalized"].get<double>(), 1.0, 0.1);
    EXPECT_EQ(slurp(path).rfind("freq_hz,real,imag\n", 0), 0u);

    EXPECT_EQ(invoke({"nmr", "--class", "-", "--phi", "0"}).report()["class_readout"], "-");
    EXPECT_EQ(invoke({"nmr", "--class", "+", "--phi", "3.141592653589793"}).report()["class_readout"], "-");
}

TEST(Nmr, ConfigFile) {
    const auto cfg = tmp("cfg.json");
    write(cfg, R"({"dwell_s": 2.5e-4, "npoints": 4096, "t2eff_s": 0.2, "phase0_rad": 0.0, "epsilon": 1e-5})");
    auto r = invoke({"nmr", "--class", "-", "--config", cfg});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report()["class_readout"], "-");
    write(cfg, R"({"npoints": "lots"})");
    EXPECT_EQ(invoke({"nmr", "--class", "-", "--config", cfg}).code, 1);
}

TEST(Oracle, AgreementAndDeterminism) {
    auto a = invoke({"oracle", "--trials", "1000", "--seed", "42"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.report()["agreement"], 1000);
    EXPECT_EQ(a.report()["disagreement"], 0);
    auto b = invoke({"oracle", "--trials", "1000", "--seed", "42"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(invoke({"oracle", "--trials", "0"}).code, 2);
}

TEST(Manifest, ReproducesByteIdenticalOutputs) {
    const auto m = tmp("manifest.json");
    const auto csv1 = tmp("i1.csv");
    const auto csv2 = tmp("i2.csv");
    ASSERT_EQ(invoke({"interferogram", "--class", "+", "--phi-steps", "16", "--out", csv1, "--manifest", m}).code, 0);
    const auto manifest = json::parse(slurp(m));
    EXPECT_EQ(manifest["command"], "interferogram");
    EXPECT_EQ(manifest["outputs"][0], csv1);
    EXPECT_EQ(manifest["parameters"]["phi_steps"], 16);
    ASSERT_EQ(invoke({"interferogram", "--class", manifest["parameters"]["class"].get<std::string>(), "--phi-steps",
                      std::to_string(manifest["parameters"]["phi_steps"].get<int>()), "--out", csv2})
                  .code,
              0);
    EXPECT_EQ(slurp(csv1), slurp(csv2));
}

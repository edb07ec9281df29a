// Copyright 2026 The fermiqca Authors
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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fermiqca/cli.hpp"
#include "fermiqca/common.hpp"

using namespace fermiqca;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "fermiqca");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// Runs the installed binary; returns exit status and stdout.
Outcome run_binary(const std::string &args) {
  const char *bin = std::getenv("FERMIQCA_BIN");
  if (!bin) return {-1, "", ""};
  FILE *p = popen((std::string(bin) + " " + args + " 2>/dev/null").c_str(), "r");
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

}  // namespace

TEST(Cli, VerifyTrivialCar) {
  const Outcome r = run({"verify", "--suite", "car", "--modes", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "car");
  EXPECT_TRUE(j["pass"].get<bool>());
  for (const char *key : {"name", "value", "tol", "pass"}) EXPECT_TRUE(j["checks"][0].contains(key));
}

TEST(Cli, UnknownSuiteIsUsageError) {
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"verify"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_THROW(run_verify(VerifyConfig{"bogus"}), DomainError);
}

TEST(Cli, EverySuitePasses) {
  for (const auto &s : verify_suites()) {
    const Outcome r = run({"verify", "--suite", s, "--seed", "3"});
    EXPECT_EQ(r.code, 0) << s << "\n" << r.out << r.err;
  }
}

TEST(Cli, FactorizeSuiteOnSixModes) {
  const Outcome r = run({"verify", "--suite", "theorem1", "--modes", "6", "--seed", "42"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(j["checks"][0]["value"].get<double>(), 1e-10);
}

TEST(Cli, Dispersion1dRowsSatisfyRelation) {
  const Outcome r = run({"dirac", "dispersion1d", "--sites", "63", "--mass-coupling", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 64u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"k", "p", "M", "omega"}));
  for (size_t i = 1; i < rows.size(); ++i) {
    const double p = std::stod(rows[i][1]), m = std::stod(rows[i][2]), w = std::stod(rows[i][3]);
    EXPECT_NEAR(std::cos(w), std::cos(m) * std::cos(p), 1e-12);
  }
  const auto massless = csv_rows(run({"dirac", "dispersion1d", "--sites", "9"}).out);
  for (size_t i = 1; i < massless.size(); ++i)
    EXPECT_NEAR(std::stod(massless[i][3]), std::abs(std::stod(massless[i][1])), 1e-12);
}

TEST(Cli, Converge1dRatios) {
  const Outcome r = run({"dirac", "converge1d", "--m", "1", "--p", "1", "--t", "1", "--eps", "0.1,0.05,0.025"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 2), "# ");
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"epsilon", "steps", "error"}));
  for (size_t i = 2; i < rows.size(); ++i) {
    const double ratio = std::stod(rows[i][2]) / std::stod(rows[i - 1][2]);
    EXPECT_GE(ratio, 0.4);
    EXPECT_LE(ratio, 0.6);
  }
  EXPECT_EQ(rows[3][1], "40");
}

TEST(Cli, ThreeDimensionalSweeps) {
  for (const char *v : {"converge3d-weyl", "converge3d-dirac"}) {
    const Outcome r = run({"dirac", v});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(csv_rows(r.out).size(), 5u);
  }
  const Outcome d = run({"dirac", "dispersion3d", "--sites", "3"});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(csv_rows(d.out).size(), 28u);
}

TEST(Cli, InvalidModelParameters) {
  EXPECT_EQ(run({"dirac", "dispersion1d", "--sites", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"dirac", "converge1d", "--eps", "0.1,-0.05"}).code, kExitUsage);
  EXPECT_EQ(run({"dirac", "converge1d", "--eps", "0.3"}).code, kExitUsage);
  EXPECT_EQ(run({"dirac", "converge3d-weyl", "--p", "1,2"}).code, kExitUsage);
  EXPECT_EQ(run({"dirac", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(run({"compile", "dirac1d", "--sites", "6"}).code, kExitUsage);
  EXPECT_EQ(run({"compile", "ising"}).code, kExitUsage);
  EXPECT_EQ(run({"demo-noncausal", "--distance", "20"}).code, kExitUsage);
}

TEST(Cli, CompileSmallRingIsVerified) {
  const Outcome r = run({"compile", "dirac1d", "--sites", "3", "--mass-coupling", "0.5", "--steps", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_GE(j["fidelity"].get<double>(), 1.0 - 1e-10);
  EXPECT_EQ(j["step_layer_count"], 4);
  EXPECT_EQ(j["layer_count"], 20);
  EXPECT_EQ(j["circuit"]["num_qubits"], 6);
}

TEST(Cli, CompileLargeRingSkipsVerification) {
  const Outcome r9 = run({"compile", "dirac1d", "--sites", "9", "--mass-coupling", "0.5"});
  const Outcome r15 = run({"compile", "dirac1d", "--sites", "15", "--mass-coupling", "0.5"});
  ASSERT_EQ(r9.code, 0);
  ASSERT_EQ(r15.code, 0);
  EXPECT_NE(r15.err.find("verification skipped"), std::string::npos);
  const auto j9 = nlohmann::json::parse(r9.out), j15 = nlohmann::json::parse(r15.out);
  EXPECT_FALSE(j15["verified"].get<bool>());
  EXPECT_EQ(j9["layer_count"], j15["layer_count"]);
  EXPECT_EQ(j15["gate_count"].get<int>() * 9, j9["gate_count"].get<int>() * 15);
  EXPECT_EQ(j15["ancillas"].size(), 1u);
}

TEST(Cli, IdentityModelGivesEmptyCircuit) {
  const Outcome r = run({"compile", "dirac1d", "--sites", "3", "--mass-coupling", "0", "--steps", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["gate_count"], 0);
  EXPECT_TRUE(j["circuit"]["layers"].empty());
}

TEST(Cli, DemoNonCausal) {
  const Outcome r = run({"demo-noncausal", "--times", "0.001", "--distance", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  const double a = std::stod(rows[1][2]);
  EXPECT_GT(a, 0.0);
  EXPECT_NEAR(a, 1e-12 / 24, 1e-12 / 24);
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "fermiqca_cli_test.csv";
  const Outcome r = run({"dirac", "dispersion1d", "--sites", "5", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), run({"dirac", "dispersion1d", "--sites", "5"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, ReportsAreDeterministic) {
  EXPECT_EQ(run({"verify", "--suite", "endtoend", "--seed", "7"}).out,
            run({"verify", "--suite", "endtoend", "--seed", "7"}).out);
  EXPECT_NE(run({"verify", "--suite", "endtoend", "--seed", "7"}).out,
            run({"verify", "--suite", "endtoend", "--seed", "8"}).out);
  EXPECT_EQ(run({"dirac", "converge3d-dirac"}).out, run({"dirac", "converge3d-dirac"}).out);
}

TEST(Cli, ParallelMapKeepsIndexOrder) {
  const auto out = parallel_map(50, [](size_t i) { return std::to_string(i * i); });
  for (size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], std::to_string(i * i));
  EXPECT_THROW(parallel_map(5,
                            [](size_t i) -> std::string {
                              if (i == 3) throw DomainError("boom");
                              return "";
                            }),
               DomainError);
}

TEST(Cli, BinaryExitCodes) {
  if (!std::getenv("FERMIQCA_BIN")) GTEST_SKIP() << "FERMIQCA_BIN not set";
  EXPECT_EQ(run_binary("verify --suite car --modes 1").code, 0);
  EXPECT_EQ(run_binary("verify --suite bogus").code, 2);
  EXPECT_EQ(run_binary("dirac dispersion1d --sites 4").code, 2);
  const Outcome a = run_binary("verify --suite endtoend --seed 7");
  const Outcome b = run_binary("verify --suite endtoend --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

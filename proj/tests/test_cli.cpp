// Copyright 2026 The lindblad-fidelity Authors
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

// Drives the installed binary through popen and checks exit codes and output.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" LF_CLI_PATH "\" " + args + " 2>&1";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string("\"") + LF_TEST_DATA_DIR + "/" + name + "\"";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(cli, delta_f_values) {
  Result r = run("delta-f --channel sigma-minus --n 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= -0.444444444444444"), std::string::npos) << r.out;

  r = run("delta-f --channel sigma-z --n 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= -0.666666666666667"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Gamma_phi/2"), std::string::npos);

  r = run("delta-f --channel identity --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(") = 0\n"), std::string::npos) << r.out;

  r = run("delta-f --channel two-photon --n 2");
  EXPECT_NE(r.out.find("= -0.2"), std::string::npos) << r.out;
}

TEST(cli, usage_errors_exit_two) {
  EXPECT_EQ(run("delta-f --channel t2star").code, 2);
  EXPECT_EQ(run("delta-f --channel sigma-z --n 9").code, 2);
  EXPECT_EQ(run("delta-f --channel sigma-z --n 2 --qubit 2").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(cli, run_writes_report) {
  const auto dir = std::filesystem::temp_directory_path() / "lf_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = dir / "report.json";
  const auto csv = dir / "report.csv";
  const Result r = run("run --config " + data("grid.json") + " --out \"" + out.string() +
                       "\" --csv \"" + csv.string() + "\"");
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string report = slurp(out);
  EXPECT_NE(report.find("\"schema\": \"lindblad-fidelity/v1\""), std::string::npos);
  EXPECT_NE(report.find("\"config_hash\""), std::string::npos);
  EXPECT_NE(slurp(csv).find("index,name"), std::string::npos);
  EXPECT_NE(r.out.find("x180 with T1 and Tphi"), std::string::npos) << r.out;
  std::filesystem::remove_all(dir);
}

TEST(cli, run_to_stdout_and_seed) {
  const Result a = run("run --config " + data("identity_relaxation.json"));
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_NE(a.out.find("\"seed\": 20211"), std::string::npos);

  const Result b = run("--seed 5 run --config " + data("identity_relaxation.json"));
  EXPECT_NE(b.out.find("\"seed\": 5"), std::string::npos);

  const Result c = run("run --config " + data("identity_relaxation.json"), "LF_SEED=77");
  EXPECT_NE(c.out.find("\"seed\": 77"), std::string::npos);
}

TEST(cli, warning_flag) {
  const Result r = run("run --config " + data("strong_noise.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"expansion_warning\": true"), std::string::npos);
}

TEST(cli, config_errors_exit_two) {
  Result r = run("run --config " + data("bad_kind.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("noise[0].kind"), std::string::npos) << r.out;

  r = run("run --config " + data("malformed.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("invalid JSON"), std::string::npos) << r.out;

  EXPECT_EQ(run("run --config /nonexistent/config.json").code, 2);
}

TEST(cli, numerical_failure_exits_three) {
  const Result r = run("run --config " + data("overflow.json"));
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_NE(r.out.find("numerical failure"), std::string::npos);
}

TEST(cli, verify_fast) {
  const Result r = run("verify --fast");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("claims reproduced"), std::string::npos);
}

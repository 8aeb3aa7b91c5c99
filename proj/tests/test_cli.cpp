// SPDX-License-Identifier: Apache-2.0
//
// rissec - secrecy and outage analysis for RIS-aided underlay cognitive radio
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

int run(const std::string &args) {
    const std::string cmd = std::string(RISSEC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::filesystem::path scratch(const std::string &name) {
    auto d = std::filesystem::temp_directory_path() / ("rissec_cli_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

} // namespace

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run(""), 2);
    EXPECT_EQ(run("validate bogus"), 2);
    EXPECT_EQ(run("figure fig9"), 2);
    EXPECT_EQ(run("sweep"), 2);
}

TEST(Cli, BadConfigExitsTwo) {
    const auto d = scratch("badcfg");
    std::ofstream(d / "bad.conf") << "[sweep]\nvalues = 1:1:3\nmetric = nonsense\n";
    EXPECT_EQ(run("sweep --config " + (d / "bad.conf").string() + " --out " + d.string()), 2);
}

TEST(Cli, UnwritableOutputExitsThree) {
    EXPECT_EQ(run("validate specfun --out /proc/nonexistent/report.txt"), 3);
    EXPECT_EQ(run("sweep --config /nonexistent/none.conf"), 3);
}

TEST(Cli, SpecfunSuitePassesAndWritesReport) {
    const auto d = scratch("specfun");
    const auto report = d / "specfun-report.txt";
    EXPECT_EQ(run("validate specfun --out " + report.string()), 0);
    ASSERT_TRUE(std::filesystem::exists(report));
    std::ifstream f(report);
    std::string first;
    std::getline(f, first);
    EXPECT_EQ(first.rfind("PASS ", 0), 0u) << first;
}

TEST(Cli, SweepWritesCsv) {
    const auto d = scratch("sweep");
    std::ofstream(d / "ok.conf") << "[sweep]\nname = tiny\nvalues = 0, 10\n";
    EXPECT_EQ(run("sweep --config " + (d / "ok.conf").string() + " --out " + d.string()), 0);
    EXPECT_TRUE(std::filesystem::exists(d / "tiny.csv"));
}

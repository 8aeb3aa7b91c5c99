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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rissec/sweep.hpp"

using namespace rissec;
using namespace rissec::sweep;

namespace {

std::filesystem::path temp_dir(const std::string &name) {
    auto d = std::filesystem::temp_directory_path() / ("rissec_test_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

constexpr const char *kConfig = R"(# custom SOP sweep
[geometry]
eta = 3.5
d_pe = 1.5

[radio]
n_ris = 40
q_threshold = 10 dBW
gamma_bar_se = 5dB

[sweep]
name = sop_custom
metric = sop
parameter = omega_p
unit = dB
values = 0:5:20
schemes = sc, mrc
evaluators = closed, quadrature
omega_e = 10 dB
n_eav = 2   # override of a radio key

[sweep]
metric = sn_outage
parameter = q_threshold
unit = dBW
values = -10, -5, 0
)";

} // namespace

TEST(Config, ParsesSectionsUnitsAndOverrides) {
    const auto specs = parse_config(kConfig);
    ASSERT_EQ(specs.size(), 2u);
    const auto &a = specs[0];
    EXPECT_EQ(a.name, "sop_custom");
    EXPECT_EQ(a.output_path, "sop_custom.csv");
    EXPECT_EQ(a.metric, montecarlo::Metric::SOP);
    EXPECT_EQ(a.values, (std::vector<double>{0, 5, 10, 15, 20}));
    EXPECT_EQ(a.evaluators, (std::vector<Evaluator>{Evaluator::Closed, Evaluator::Quadrature}));
    EXPECT_DOUBLE_EQ(a.geometry.eta, 3.5);
    EXPECT_DOUBLE_EQ(a.geometry.d_pe, 1.5);
    EXPECT_EQ(a.radio.n_ris, 40);
    EXPECT_EQ(a.radio.n_eav, 2);
    EXPECT_DOUBLE_EQ(a.radio.q_threshold, 10.0);
    EXPECT_NEAR(a.radio.gamma_bar_se, std::pow(10.0, 0.5), 1e-12);
    EXPECT_DOUBLE_EQ(a.omega_e, 10.0);
    const auto &b = specs[1];
    EXPECT_EQ(b.name, "sweep2");
    EXPECT_EQ(b.radio.n_eav, RadioConfig{}.n_eav);
    EXPECT_EQ(b.unit, Unit::DBW);
    EXPECT_EQ(b.values, (std::vector<double>{-10, -5, 0}));
}

TEST(Config, ErrorsCarryLineNumbers) {
    auto line_of = [](const std::string &text) {
        try {
            parse_config(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("[sweep]\nvalues = 1:1:3\nmetric = nonsense\n"), 3);
    EXPECT_EQ(line_of("[radio]\n\nn_ris = abc\n"), 3);
    EXPECT_EQ(line_of("[radio]\nfoo = 1\n"), 2);
    EXPECT_EQ(line_of("[weird]\n"), 1);
    EXPECT_EQ(line_of("n_ris = 3\n"), 1);
    EXPECT_EQ(line_of("# only a comment\n[sweep]\nmetric = sop\n"), 2); // no values key
    EXPECT_EQ(line_of("[sweep]\nvalues = 1:0:3\n"), 2);
}

TEST(Config, MissingFileIsIoError) {
    EXPECT_THROW(load_config("/nonexistent/dir/none.conf"), IoError);
}

TEST(Sweep, ExactHeaderAndDeterministicColumnsEmpty) {
    auto s = parse_config(kConfig)[0];
    const auto rows = evaluate(s);
    ASSERT_EQ(rows.size(), 5u * 2u * 2u);
    const std::string csv = to_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
    EXPECT_NE(csv.find("\n0,dB,SC,closed,"), std::string::npos);
    EXPECT_NE(csv.find(",,,\n"), std::string::npos);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2)
        EXPECT_NEAR(rows[i].value, rows[i + 1].value, 1e-6); // closed vs quadrature
}

TEST(Sweep, EmptyValuesWriteNothing) {
    const auto dir = temp_dir("empty");
    auto s = parse_config("[sweep]\nvalues =\noutput = out.csv\n")[0];
    EXPECT_THROW(run_sweep(s, dir), ValidationError);
    EXPECT_FALSE(std::filesystem::exists(dir / "out.csv"));
}

TEST(Sweep, UnwritableOutputIsIoError) {
    auto s = parse_config(kConfig)[0];
    s.output_path = "/proc/definitely/not/here.csv";
    EXPECT_THROW(run_sweep(s, "."), IoError);
}

TEST(Sweep, MonteCarloRowsIdenticalAcrossWorkers) {
    const auto dir = temp_dir("workers");
    auto s = parse_config("[sweep]\nmetric = pnsc\nvalues = 0:10:20\nevaluators = montecarlo\ntrials = 20000\n")[0];
    s.output_path = "w1.csv";
    run_sweep(s, dir, {ModelOptions{}, 1});
    s.output_path = "w3.csv";
    run_sweep(s, dir, {ModelOptions{}, 3});
    EXPECT_EQ(slurp(dir / "w1.csv"), slurp(dir / "w3.csv"));
    EXPECT_NE(slurp(dir / "w1.csv").find(",20000,1\n"), std::string::npos);
}

TEST(Sweep, ValidationRejectsInconsistentSpecs) {
    auto s = parse_config(kConfig)[1];
    s.evaluators = {Evaluator::Asymptotic};
    EXPECT_THROW(evaluate(s), ValidationError);
    s = parse_config(kConfig)[1];
    s.parameter = SweptParameter::OmegaP;
    EXPECT_THROW(evaluate(s), ValidationError);
    s = parse_config(kConfig)[0];
    s.values = {1, 3, 2};
    EXPECT_THROW(evaluate(s), ValidationError);
    s = parse_config(kConfig)[0];
    s.evaluators = {Evaluator::MonteCarlo};
    s.n_trials = 10;
    EXPECT_THROW(evaluate(s), ValidationError);
}

TEST(Presets, Defaults) {
    const auto f2 = figure_preset("fig2", 1, 1'000'000);
    ASSERT_EQ(f2.size(), 2u);
    EXPECT_EQ(f2[0].output_path, "fig2_N20.csv");
    EXPECT_EQ(f2[1].radio.n_ris, 50);
    EXPECT_EQ(f2[0].values.size(), 21u);
    EXPECT_DOUBLE_EQ(f2[0].omega_e, 10.0);
    EXPECT_EQ(f2[0].n_trials, 1'000'000u);
    const auto f4 = figure_preset("fig4", 1, 1'000'000);
    ASSERT_EQ(f4.size(), 3u);
    EXPECT_EQ(f4[0].values.front(), -20.0);
    EXPECT_EQ(f4[0].values.back(), 0.0);
    const auto f5 = figure_preset("fig5", 1, 1'000'000);
    ASSERT_EQ(f5.size(), 3u);
    EXPECT_EQ(f5[1].scenario.kind, montecarlo::ScenarioKind::UniformPhaseError);
    EXPECT_EQ(f5[2].scenario.kind, montecarlo::ScenarioKind::NoDirectLink);
    EXPECT_THROW(figure_preset("fig9", 1, 1), ValidationError);
}

TEST(Format, RoundTripPrecision) {
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), std::stod("0.333333333333"));
    EXPECT_EQ(grid(0.0, 1.0, 0.25).size(), 5u);
}

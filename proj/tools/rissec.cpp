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


// Command-line driver: figure presets, config-driven sweeps and the
// validation suites.
//
// Exit status: 0 success, 1 failed check, 2 usage or config error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "rissec/error.hpp"
#include "rissec/sweep.hpp"
#include "rissec/validation.hpp"

#ifndef RISSEC_DATA_DIR
#define RISSEC_DATA_DIR "data"
#endif

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kIo = 3 };

struct Common {
    std::uint64_t seed = 1;
    std::uint64_t trials = 1'000'000;
    std::string out;
    bool strict = false;
    unsigned workers = 0;
};

void add_common(CLI::App *cmd, Common &c, const char *out_help) {
    cmd->add_option("--seed", c.seed, "base seed of the counter-based streams")->capture_default_str();
    cmd->add_option("--trials", c.trials, "Monte-Carlo trials per point")->capture_default_str();
    cmd->add_option("--out", c.out, out_help);
    cmd->add_flag("--strict-paper", c.strict, "evaluate the formulas exactly as printed");
    cmd->add_option("--workers", c.workers, "worker threads (0 = hardware concurrency)")->capture_default_str();
}

rissec::sweep::RunOptions run_options(const Common &c) {
    return {c.strict ? rissec::ModelOptions::strict() : rissec::ModelOptions{}, c.workers};
}

int run_specs(const std::vector<rissec::sweep::SweepSpec> &specs, const Common &c) {
    const std::filesystem::path dir = c.out.empty() ? "." : c.out;
    for (const auto &s : specs) {
        const auto path = rissec::sweep::run_sweep(s, dir, run_options(c));
        std::cout << "wrote " << path.string() << '\n';
    }
    return kOk;
}

int run_validate(const std::string &suite, const Common &c, const std::string &data_dir) {
    namespace v = rissec::validation;
    const std::filesystem::path data = data_dir;
    std::vector<v::Check> checks;
    if (suite == "specfun") {
        checks = v::specfun_checks(data / "specfun_grid.csv");
    } else if (suite == "oracle-grid") {
        const auto grid = v::load_oracle_grid(data / "oracle_grid.csv");
        for (auto &&group : {v::sop_oracle_checks(grid), v::pnsc_oracle_checks(grid), v::sn_oracle_checks(),
                             v::ordering_checks(grid), std::vector<v::Check>{v::identity_check(grid)}})
            checks.insert(checks.end(), group.begin(), group.end());
    } else {
        for (auto &&group : {v::mc_cross_checks({"fig2", "fig3", "fig4", "fig5"}, c.trials, c.seed, c.workers),
                             v::scenario_order_checks(c.trials, c.seed, c.workers),
                             v::distribution_checks(c.trials, c.seed, c.workers)})
            checks.insert(checks.end(), group.begin(), group.end());
    }
    std::string report;
    for (const auto &ch : checks) report += v::report_line(ch) + '\n';
    std::cout << report;
    const std::filesystem::path out = c.out.empty() ? suite + "-report.txt" : c.out;
    rissec::sweep::write_file(out, report);
    std::cout << "wrote " << out.string() << '\n';
    return v::all_pass(checks) ? kOk : kFail;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"rissec: secrecy and outage analysis for RIS-aided underlay cognitive radio"};
    app.require_subcommand(1);

    Common fig_opts, sweep_opts, val_opts;
    std::string figure, config, suite;
    std::string data_dir = RISSEC_DATA_DIR;

    auto *fig = app.add_subcommand("figure", "write the CSV of a figure preset");
    fig->add_option("name", figure, "fig2 | fig3 | fig4 | fig5")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5"}));
    add_common(fig, fig_opts, "output directory");

    auto *sw = app.add_subcommand("sweep", "run the sweeps of a configuration file");
    sw->add_option("--config", config, "configuration file")->required();
    add_common(sw, sweep_opts, "output directory for relative output paths");

    auto *val = app.add_subcommand("validate", "run a validation suite and write a report");
    val->add_option("suite", suite, "specfun | oracle-grid | mc-cross")
        ->required()
        ->check(CLI::IsMember({"specfun", "oracle-grid", "mc-cross"}));
    val->add_option("--data-dir", data_dir, "directory holding the oracle fixtures")->capture_default_str();
    add_common(val, val_opts, "report path (default <suite>-report.txt)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*fig) return run_specs(rissec::sweep::figure_preset(figure, fig_opts.seed, fig_opts.trials), fig_opts);
        if (*sw) {
            auto specs = rissec::sweep::load_config(config);
            if (sw->count("--seed"))
                for (auto &s : specs) s.seed = sweep_opts.seed;
            if (sw->count("--trials"))
                for (auto &s : specs) s.n_trials = sweep_opts.trials;
            return run_specs(specs, sweep_opts);
        }
        return run_validate(suite, val_opts, data_dir);
    } catch (const rissec::ParseError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const rissec::ValidationError &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const rissec::IoError &e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const rissec::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
}

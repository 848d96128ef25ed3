/*
   Copyright 2026 The d2dsel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "d2dsel/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Relay-selection outage simulator and closed-form calculator"};
    app.require_subcommand(1);

    d2dsel::SweepSpec spec;
    std::string axis = "alpha";
    std::string values;
    std::string variant = "both";
    std::string out_path;
    std::string config_path;

    auto* run = app.add_subcommand("run", "Sweep one parameter and write a CSV of outage estimates");
    run->add_option("--config", config_path, "JSON config")->required();
    run->add_option("--axis", axis, "alpha, rho or n_pairs")
        ->required()
        ->check(CLI::IsMember({"alpha", "rho", "n_pairs"}));
    run->add_option("--values", values, "comma-separated axis values")->required();
    run->add_option("--trials", spec.trials, "Monte Carlo trials per point")
        ->required()
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", spec.seed, "master seed")->required();
    run->add_option("--out", out_path, "output CSV path")->required();
    run->add_option("--variant", variant, "cellular closed form columns")
        ->check(CLI::IsMember({"literal", "corrected", "both"}));
    run->add_option("--workers", spec.workers, "worker threads (0: all cores)");

    std::string v_config;
    std::uint64_t v_trials = 1000000;
    std::uint64_t v_seed = 1;
    unsigned v_workers = 0;
    auto* val = app.add_subcommand("validate", "Compare Monte Carlo estimates with the closed forms");
    val->add_option("--config", v_config, "JSON config")->required();
    val->add_option("--trials", v_trials, "Monte Carlo trials")->required()->check(CLI::PositiveNumber);
    val->add_option("--seed", v_seed, "master seed")->required();
    val->add_option("--workers", v_workers, "worker threads (0: all cores)");

    CLI11_PARSE(app, argc, argv);

    if (*run) {
        spec.config_path = config_path;
        spec.out_path = out_path;
        spec.axis = *d2dsel::parse_axis(axis);
        spec.variant = *d2dsel::parse_variant(variant);
        try {
            spec.values = d2dsel::parse_value_list(values);
        } catch (const std::invalid_argument& e) {
            std::cerr << "invalid argument: --values: " << e.what() << '\n';
            return 2;
        }
        return d2dsel::cmd_run(spec, std::cerr);
    }
    return d2dsel::cmd_validate(v_config, v_trials, v_seed, v_workers, std::cout, std::cerr);
}

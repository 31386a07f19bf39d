// Copyright 2026 The stark-qsde Authors
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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "stark/errors.hpp"

namespace {

struct Common {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--config", c.config, "Key-value configuration file (or a .manifest)");
    sub->add_option("--out", c.out, "CSV output path; the manifest goes to <out>.manifest");
    sub->add_option("--seed", c.seed, "RNG seed (overrides mc.seed)");
    sub->add_option("--tol", c.tol, "Tolerance override (see README)");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace stark;
    CLI::App app{"Two-level emitter with Stark coupling to the vacuum: QSDE coefficients, "
                 "master equation, collision-model and Monte Carlo oracles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", STARK_VERSION);

    Common common;
    std::optional<double> chi, eta, eta_min, eta_max;
    std::optional<long> points;

    auto* derive = app.add_subcommand("derive", "Print QSDE and master-equation coefficients");
    add_common(derive, common);
    derive->add_option("--chi", chi, "Transition coupling chi");
    derive->add_option("--eta", eta, "Stark parameter eta");

    auto* simulate = app.add_subcommand(
        "simulate", "Closed form, RK4, collision and optional Monte Carlo time series");
    add_common(simulate, common);
    simulate->add_option("--chi", chi, "Transition coupling chi");
    simulate->add_option("--eta", eta, "Stark parameter eta");

    auto* sweep = app.add_subcommand("sweep", "Decay rate, shift and suppression versus eta");
    add_common(sweep, common);
    sweep->add_option("--chi", chi, "Transition coupling chi");
    sweep->add_option("--eta-min", eta_min, "First eta of the grid");
    sweep->add_option("--eta-max", eta_max, "Last eta of the grid");
    sweep->add_option("--points", points, "Number of grid points");

    auto* map = app.add_subcommand("map-params", "Map physical emitter data onto (chi, eta)");
    add_common(map, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        cli::Invocation inv;
        inv.command = sub->get_name();
        inv.out = common.out;
        inv.version = STARK_VERSION;
        if (!common.config.empty()) {
            inv.config = KeyValueConfig::load(common.config);
        } else if (inv.command == "map-params") {
            throw ConfigError("map-params requires --config");
        }

        auto set = [&](const char* key, const auto& v) {
            if (v) inv.config.set(key, format_double(static_cast<double>(*v)));
        };
        set("model.chi", chi);
        set("model.eta", eta);
        set("sweep.eta_min", eta_min);
        set("sweep.eta_max", eta_max);
        if (points) inv.config.set("sweep.points", std::to_string(*points));
        if (common.seed) inv.config.set("mc.seed", std::to_string(*common.seed));
        if (common.tol) {
            const char* key = inv.command == "simulate"     ? "tol.collision"
                              : inv.command == "map-params" ? "mapping.resonance_tolerance"
                                                            : "check.residual_tol";
            inv.config.set(key, format_double(*common.tol));
        }

        if (inv.command == "derive") return cli::cmd_derive(inv, std::cout);
        if (inv.command == "simulate") return cli::cmd_simulate(inv, std::cout);
        if (inv.command == "sweep") return cli::cmd_sweep(inv, std::cout);
        return cli::cmd_map_params(inv, std::cout);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return cli::kNumericalFailure;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return cli::kNumericalFailure;
    }
}

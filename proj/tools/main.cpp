// SPDX-License-Identifier: Apache-2.0
//
// thzirs - spherical-wavefront channel modeling and link analysis for
// terahertz intelligent reflecting surfaces
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

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "thzirs/commands.hpp"
#include "thzirs/verify.hpp"

namespace
{

    // Options shared by every subcommand.
    struct CommonOptions
    {
        std::string config_path;
        std::string out_path;
        std::string format = "csv";
        double lambda_nominal = 0.0; // 0 = derive from the carrier frequency
        std::string pl_mode;
        std::uint64_t seed = 12345;
    };

    void add_common_options(CLI::App *cmd, CommonOptions &options)
    {
        cmd->add_option("--config", options.config_path, "JSON scenario file");
        cmd->add_option("--out", options.out_path, "Output file (default: stdout)");
        cmd->add_option("--format", options.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--lambda-nominal", options.lambda_nominal,
                        "Override the carrier wavelength [m]");
        cmd->add_option("--pl-mode", options.pl_mode, "Path-loss magnitude mode")
            ->check(CLI::IsMember({"constant", "per-element"}));
        cmd->add_option("--seed", options.seed, "Seed for randomized self-checks");
    }

    // Figure defaults first, then the config file, then command-line flags.
    thzirs::Scenario build_scenario(const CommonOptions &options, const thzirs::Scenario &base)
    {
        thzirs::Scenario scenario = base;
        if (!options.config_path.empty())
            scenario.apply_config_file(options.config_path);
        if (options.lambda_nominal > 0.0)
            scenario.set_nominal_wavelength(options.lambda_nominal);
        if (!options.pl_mode.empty())
            scenario.pl_mode = thzirs::parse_pl_mode(options.pl_mode);
        scenario.validate();
        return scenario;
    }

    int emit(const CommonOptions &options, const std::function<void(std::ostream &)> &writer)
    {
        if (options.out_path.empty())
        {
            writer(std::cout);
            return 0;
        }
        std::ofstream out(options.out_path, std::ios::binary);
        if (!out)
        {
            std::cerr << "error: cannot open output file '" << options.out_path << "'\n";
            return 2;
        }
        writer(out);
        return 0;
    }

    thzirs::OutputFormat output_format(const CommonOptions &options)
    {
        return options.format == "json" ? thzirs::OutputFormat::Json : thzirs::OutputFormat::Csv;
    }

}

int main(int argc, char **argv)
{
    using namespace thzirs;

    CLI::App app{"Spherical-wavefront channel model and link analysis for reflecting surfaces "
                 "at terahertz carriers"};
    app.require_subcommand(1);

    int exit_code = 0;
    const auto run = [&](const std::function<int()> &body)
    {
        try
        {
            exit_code = body();
        }
        catch (const ConfigError &err)
        {
            std::cerr << "configuration error: " << err.what() << "\n";
            exit_code = 2;
        }
        catch (const std::exception &err)
        {
            std::cerr << "error: " << err.what() << "\n";
            exit_code = 1;
        }
    };

    // region-info
    auto *region_cmd = app.add_subcommand(
        "region-info", "Physical size and Fresnel bounds per grid size");
    auto region_common = std::make_shared<CommonOptions>();
    auto region_sides = std::make_shared<std::vector<int>>();
    add_common_options(region_cmd, *region_common);
    region_cmd->add_option("--n-side", *region_sides,
                           "Square grid sizes to tabulate (default: 80 100)");
    region_cmd->callback(
        [&, region_common, region_sides]
        {
            run(
                [&]() -> int
                {
                    const Scenario scenario =
                        build_scenario(*region_common, Scenario::defaults());
                    const std::vector<int> sides =
                        region_sides->empty() ? std::vector<int>{80, 100} : *region_sides;
                    const Table table = cmd_region_info(scenario, sides);
                    return emit(*region_common, [&](std::ostream &out)
                                { write_table(table, output_format(*region_common), out); });
                });
        });

    // scattered-field
    auto *scatter_cmd = app.add_subcommand(
        "scattered-field", "Single-element scattered field vs. observation angle");
    auto scatter_common = std::make_shared<CommonOptions>();
    auto scatter_options = std::make_shared<ScatteredFieldOptions>();
    add_common_options(scatter_cmd, *scatter_common);
    scatter_cmd->add_option("--theta-t-deg", scatter_options->theta_t_deg, "Incidence polar angle");
    scatter_cmd->add_option("--phi-r-deg", scatter_options->phi_r_deg, "Scattering-plane azimuth");
    scatter_cmd->add_option("--d-r", scatter_options->d_r, "Observation distance [m]");
    scatter_cmd->add_option("--e-i-sq", scatter_options->e_i_sq, "Incident squared field");
    scatter_cmd->add_option("--theta-min-deg", scatter_options->theta_r_deg.start, "Sweep start");
    scatter_cmd->add_option("--theta-max-deg", scatter_options->theta_r_deg.stop, "Sweep stop");
    scatter_cmd->add_option("--theta-step-deg", scatter_options->theta_r_deg.step, "Sweep step");
    scatter_cmd->callback(
        [&, scatter_common, scatter_options]
        {
            run(
                [&]() -> int
                {
                    const Scenario scenario =
                        build_scenario(*scatter_common, Scenario::defaults());
                    const Table table = cmd_scattered_field(scenario, *scatter_options);
                    return emit(*scatter_common, [&](std::ostream &out)
                                { write_table(table, output_format(*scatter_common), out); });
                });
        });

    // path-loss-map
    auto *plmap_cmd = app.add_subcommand(
        "path-loss-map", "Per-element path loss across the surface");
    auto plmap_common = std::make_shared<CommonOptions>();
    add_common_options(plmap_cmd, *plmap_common);
    plmap_cmd->callback(
        [&, plmap_common]
        {
            run(
                [&]() -> int
                {
                    Scenario base = Scenario::defaults();
                    base.tx = Placement::from_cartesian({0.0, -0.3, 0.6});
                    base.rx = Placement::from_cartesian({0.0, 1.0, 1.0});
                    const Scenario scenario = build_scenario(*plmap_common, base);
                    const Table table = cmd_path_loss_map(scenario);
                    return emit(*plmap_common, [&](std::ostream &out)
                                { write_table(table, output_format(*plmap_common), out); });
                });
        });

    // gain-vs-distance
    auto *gaind_cmd = app.add_subcommand(
        "gain-vs-distance", "Normalized power gain vs. Tx distance");
    auto gaind_common = std::make_shared<CommonOptions>();
    auto gaind_options = std::make_shared<GainVsDistanceOptions>();
    add_common_options(gaind_cmd, *gaind_common);
    gaind_cmd->add_option("--tx-x", gaind_options->tx_x, "Tx x-coordinate [m]");
    gaind_cmd->add_option("--tx-y", gaind_options->tx_y, "Tx y-coordinate [m]");
    gaind_cmd->add_option("--z-min", gaind_options->z.start, "Sweep start [m]");
    gaind_cmd->add_option("--z-max", gaind_options->z.stop, "Sweep stop [m]");
    gaind_cmd->add_option("--z-step", gaind_options->z.step, "Sweep step [m]");
    gaind_cmd->callback(
        [&, gaind_common, gaind_options]
        {
            run(
                [&]() -> int
                {
                    const Scenario scenario = build_scenario(*gaind_common, Scenario::defaults());
                    const Table table = cmd_gain_vs_distance(scenario, *gaind_options);
                    return emit(*gaind_common, [&](std::ostream &out)
                                { write_table(table, output_format(*gaind_common), out); });
                });
        });

    // gain-vs-elements
    auto *gainn_cmd = app.add_subcommand(
        "gain-vs-elements", "Beamforming gain vs. grid size");
    auto gainn_common = std::make_shared<CommonOptions>();
    auto gainn_options = std::make_shared<GainVsElementsOptions>();
    add_common_options(gainn_cmd, *gainn_common);
    gainn_cmd->add_option("--tx-x", gainn_options->tx_x, "Tx x-coordinate [m]");
    gainn_cmd->add_option("--tx-y", gainn_options->tx_y, "Tx y-coordinate [m]");
    gainn_cmd->add_option("--tx-z", gainn_options->tx_z, "Tx z-coordinate [m]");
    gainn_cmd->add_option("--n-min", gainn_options->n_min, "Smallest grid side");
    gainn_cmd->add_option("--n-max", gainn_options->n_max, "Largest grid side");
    gainn_cmd->add_option("--n-step", gainn_options->n_step, "Grid side increment");
    gainn_cmd->callback(
        [&, gainn_common, gainn_options]
        {
            run(
                [&]() -> int
                {
                    const Scenario scenario = build_scenario(*gainn_common, Scenario::defaults());
                    const Table table = cmd_gain_vs_elements(scenario, *gainn_options);
                    return emit(*gainn_common, [&](std::ostream &out)
                                { write_table(table, output_format(*gainn_common), out); });
                });
        });

    // ee-sweep
    auto *ee_cmd = app.add_subcommand(
        "ee-sweep", "Rate and energy efficiency of direct vs. assisted MIMO");
    auto ee_common = std::make_shared<CommonOptions>();
    auto ee_options = std::make_shared<EeSweepOptions>();
    add_common_options(ee_cmd, *ee_common);
    ee_cmd->add_option("--dr-min", ee_options->d_r.start, "Sweep start [m]");
    ee_cmd->add_option("--dr-max", ee_options->d_r.stop, "Sweep stop [m]");
    ee_cmd->add_option("--dr-step", ee_options->d_r.step, "Sweep step [m]");
    ee_cmd->callback(
        [&, ee_common, ee_options]
        {
            run(
                [&]() -> int
                {
                    const Scenario scenario = build_scenario(*ee_common, Scenario::defaults());
                    const Table table = cmd_ee_sweep(scenario, *ee_options);
                    return emit(*ee_common, [&](std::ostream &out)
                                { write_table(table, output_format(*ee_common), out); });
                });
        });

    // nstar-sweep
    auto *nstar_cmd = app.add_subcommand(
        "nstar-sweep", "Required element count vs. Rx distance");
    auto nstar_common = std::make_shared<CommonOptions>();
    auto nstar_options = std::make_shared<NStarSweepOptions>();
    auto nstar_mode = std::make_shared<std::string>("midpoint");
    add_common_options(nstar_cmd, *nstar_common);
    nstar_cmd->add_option("--dr-min", nstar_options->d_r.start, "Sweep start [m]");
    nstar_cmd->add_option("--dr-max", nstar_options->d_r.stop, "Sweep stop [m]");
    nstar_cmd->add_option("--dr-step", nstar_options->d_r.step, "Sweep step [m]");
    nstar_cmd->add_option("--placement", *nstar_mode, "Surface deployment")
        ->check(CLI::IsMember({"fixed-near-tx", "midpoint"}));
    nstar_cmd->callback(
        [&, nstar_common, nstar_options, nstar_mode]
        {
            run(
                [&]() -> int
                {
                    const Scenario scenario =
                        build_scenario(*nstar_common, Scenario::defaults());
                    nstar_options->mode = parse_placement_mode(*nstar_mode);
                    const Table table = cmd_nstar_sweep(scenario, *nstar_options);
                    return emit(*nstar_common, [&](std::ostream &out)
                                { write_table(table, output_format(*nstar_common), out); });
                });
        });

    // verify
    auto *verify_cmd = app.add_subcommand(
        "verify", "Run the built-in cross-check suites");
    auto verify_common = std::make_shared<CommonOptions>();
    add_common_options(verify_cmd, *verify_common);
    verify_cmd->callback(
        [&, verify_common]
        {
            run(
                [&]() -> int
                {
                    const Scenario scenario =
                        build_scenario(*verify_common, Scenario::defaults());
                    const VerifyReport report = run_verification(scenario, verify_common->seed);
                    const int rc = emit(*verify_common,
                                        [&](std::ostream &out) {
                                            write_verify_report(
                                                report, verify_common->format == "json", out);
                                        });
                    if (rc != 0)
                        return rc;
                    return report.all_pass() ? 0 : 1;
                });
        });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &err)
    {
        // CLI11 prints help/errors itself; fold parse failures into the
        // configuration-error exit code.
        const int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }
    return exit_code;
}

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

#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "thzirs/scenario.hpp"

// Experiment sweeps behind the CLI subcommands. Each command produces a
// numeric table with a stable column schema; rows are emitted in sweep order
// and the output is byte-deterministic for a given configuration.

namespace thzirs
{
    struct Table
    {
        std::vector<std::string> columns;
        std::vector<std::vector<double>> rows;
        std::map<std::string, double> summary; // trailing '#' comment lines in CSV
    };

    enum class OutputFormat
    {
        Csv, // header row, '.' decimal separator, LF endings, 12 significant digits
        Json
    };

    void write_table(const Table &table, OutputFormat format, std::ostream &out);

    // Inclusive sweep start..stop in increments of step.
    struct SweepRange
    {
        double start = 0.0;
        double stop = 0.0;
        double step = 1.0;
    };

    std::vector<double> sweep_points(const SweepRange &range);

    // Physical size and Fresnel bounds per square grid size.
    // Columns: nx, ny, size_x_m, size_y_m, fresnel_lo_m, fresnel_hi_m
    Table cmd_region_info(const Scenario &scenario, const std::vector<int> &n_sides);

    // Scattered-field magnitude of a single element versus observation angle.
    // Columns: theta_r_deg, exact, approx
    struct ScatteredFieldOptions
    {
        double theta_t_deg = 30.0;
        double phi_r_deg = 60.0;
        double d_r = 4.0;   // observation distance [m]
        double e_i_sq = 1.0; // incident squared field [(V/m)^2]
        SweepRange theta_r_deg{-90.0, 90.0, 0.25};
    };
    Table cmd_scattered_field(const Scenario &scenario, const ScatteredFieldOptions &options);

    // Per-element path loss across the surface for the configured terminals.
    // Columns: n, m, pl_db; summary: spread_db
    Table cmd_path_loss_map(const Scenario &scenario);

    // Normalized power gain versus Tx distance, with the Rx placed broadside
    // at rx_far_field_multiplier times the Fraunhofer distance.
    // Columns: z_m, d_t_m, g_beamfocus, g_beamform_exact, g_fresnel_sum, g_closed_form
    struct GainVsDistanceOptions
    {
        double tx_x = 0.4; // Tx x-coordinate [m]
        double tx_y = 0.4; // Tx y-coordinate [m]
        SweepRange z{0.5, 10.0, 0.1};
    };
    Table cmd_gain_vs_distance(const Scenario &scenario, const GainVsDistanceOptions &options);

    // Beamforming gain versus grid size at a fixed Tx position.
    // Columns: n_side, g_exact, g_closed_form
    struct GainVsElementsOptions
    {
        double tx_x = 0.4;
        double tx_y = 0.4;
        double tx_z = 1.0;
        int n_min = 1;
        int n_max = 100;
        int n_step = 1;
    };
    Table cmd_gain_vs_elements(const Scenario &scenario, const GainVsElementsOptions &options);

    // Rate/EE of direct MIMO vs. the assisted link over the Rx distance.
    // Columns: d_r_m, rate_mimo, rate_irs, ee_mimo, ee_irs, n_star
    struct EeSweepOptions
    {
        SweepRange d_r{1.0, 10.0, 0.5};
    };
    Table cmd_ee_sweep(const Scenario &scenario, const EeSweepOptions &options);

    // Required element count versus Rx distance for the two surface
    // deployments. Columns: d_r_m, n_star
    enum class IrsPlacementMode
    {
        FixedNearTx, // surface fixed at the scenario origin; right-angle layout bound
        Midpoint     // surface placed halfway between the terminals each sweep point
    };
    struct NStarSweepOptions
    {
        SweepRange d_r{1.0, 10.0, 0.5};
        IrsPlacementMode mode = IrsPlacementMode::Midpoint;
    };
    Table cmd_nstar_sweep(const Scenario &scenario, const NStarSweepOptions &options);

    IrsPlacementMode parse_placement_mode(const std::string &text);
}

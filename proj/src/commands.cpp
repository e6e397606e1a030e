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

#include "thzirs/commands.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

#include "thzirs/gain.hpp"
#include "thzirs/units.hpp"

namespace thzirs
{

    namespace
    {
        std::string format_number(double value)
        {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%.12g", value);
            return buf;
        }
    }

    void write_table(const Table &table, OutputFormat format, std::ostream &out)
    {
        if (format == OutputFormat::Csv)
        {
            for (std::size_t c = 0; c < table.columns.size(); ++c)
                out << (c ? "," : "") << table.columns[c];
            out << "\n";
            for (const auto &row : table.rows)
            {
                for (std::size_t c = 0; c < row.size(); ++c)
                    out << (c ? "," : "") << format_number(row[c]);
                out << "\n";
            }
            for (const auto &[key, value] : table.summary)
                out << "# " << key << " = " << format_number(value) << "\n";
            return;
        }
        nlohmann::json doc;
        doc["columns"] = table.columns;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &row : table.rows)
        {
            nlohmann::json obj;
            for (std::size_t c = 0; c < row.size(); ++c)
                obj[table.columns[c]] = row[c];
            rows.push_back(obj);
        }
        doc["rows"] = rows;
        if (!table.summary.empty())
        {
            nlohmann::json summary;
            for (const auto &[key, value] : table.summary)
                summary[key] = value;
            doc["summary"] = summary;
        }
        out << doc.dump(2) << "\n";
    }

    std::vector<double> sweep_points(const SweepRange &range)
    {
        if (range.step <= 0.0)
            throw ConfigError("sweep step must be positive");
        if (range.stop < range.start)
            throw ConfigError("sweep stop must not precede start");
        std::vector<double> points;
        const int count = static_cast<int>(std::floor((range.stop - range.start) / range.step + 0.5)) + 1;
        points.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
        {
            const double v = range.start + i * range.step;
            if (v <= range.stop + 0.5 * range.step)
                points.push_back(v);
        }
        return points;
    }

    Table cmd_region_info(const Scenario &scenario, const std::vector<int> &n_sides)
    {
        Table table;
        table.columns = {"nx", "ny", "size_x_m", "size_y_m", "fresnel_lo_m", "fresnel_hi_m"};
        for (int n : n_sides)
        {
            if (n < 1)
                throw ConfigError("region-info: grid side must be >= 1");
            IrsGrid grid = scenario.grid;
            grid.n_x = n;
            grid.n_y = n;
            grid.validate();
            const RegionBounds bounds = region_bounds(grid, scenario.rf.wavelength);
            table.rows.push_back({static_cast<double>(n), static_cast<double>(n),
                                  n * grid.pitch_x(), n * grid.pitch_y(), bounds.reactive_upper,
                                  bounds.fraunhofer});
        }
        return table;
    }

    Table cmd_scattered_field(const Scenario &scenario, const ScatteredFieldOptions &options)
    {
        Table table;
        table.columns = {"theta_r_deg", "exact", "approx"};
        const double theta_t = deg_to_rad(options.theta_t_deg);
        const double phi_r = deg_to_rad(options.phi_r_deg);
        for (double theta_deg : sweep_points(options.theta_r_deg))
        {
            const ScatterAngles angles{theta_t, deg_to_rad(theta_deg), phi_r};
            const double exact = scattered_field_sq_exact(options.e_i_sq, scenario.grid, angles,
                                                          options.d_r, scenario.rf.wavelength);
            const double approx = scattered_field_sq_approx(options.e_i_sq, scenario.grid, angles,
                                                            options.d_r, scenario.rf.wavelength);
            table.rows.push_back({theta_deg, exact, approx});
        }
        return table;
    }

    Table cmd_path_loss_map(const Scenario &scenario)
    {
        const PathLossMap map = path_loss_map(scenario.rf, scenario.grid, scenario.tx, scenario.rx);
        Table table;
        table.columns = {"n", "m", "pl_db"};
        table.rows.reserve(map.pl.size());
        for (int n = 0; n < map.n_x; ++n)
            for (int m = 0; m < map.n_y; ++m)
                table.rows.push_back({static_cast<double>(n), static_cast<double>(m),
                                      linear_to_db(map.at(n, m))});
        table.summary["spread_db"] = map.spread_db();
        return table;
    }

    namespace
    {
        // Far-field Rx along broadside, at the configured multiple of the
        // Fraunhofer distance.
        Placement far_field_rx(const Scenario &scenario, const IrsGrid &grid)
        {
            const RegionBounds bounds = region_bounds(grid, scenario.rf.wavelength);
            return Placement::from_spherical(scenario.rx_far_field_multiplier * bounds.fraunhofer,
                                             0.0, 0.0);
        }
    }

    Table cmd_gain_vs_distance(const Scenario &scenario, const GainVsDistanceOptions &options)
    {
        Table table;
        table.columns = {"z_m", "d_t_m", "g_beamfocus", "g_beamform_exact", "g_fresnel_sum",
                         "g_closed_form"};
        const IrsGrid &grid = scenario.grid;
        const double wavelength = scenario.rf.wavelength;
        const Placement rx = far_field_rx(scenario, grid);
        const Direction rx_dir{rx.azimuth, rx.polar};
        for (double z : sweep_points(options.z))
        {
            const Placement tx = Placement::from_cartesian({options.tx_x, options.tx_y, z});
            const Direction tx_dir{tx.azimuth, tx.polar};
            const double g_focus =
                normalized_gain(beamfocus_profile(grid, tx, rx, wavelength), grid, tx, rx,
                                wavelength)
                    .gain;
            const double g_beamform =
                normalized_gain(beamform_profile(grid, tx_dir, rx_dir, wavelength), grid, tx, rx,
                                wavelength)
                    .gain;
            const double g_fresnel = gain_fresnel_exactsum(grid, tx.dist, tx_dir, wavelength).gain;
            const double g_closed = gain_closed_form(grid, tx.dist, tx_dir, wavelength).gain;
            table.rows.push_back({z, tx.dist, g_focus, g_beamform, g_fresnel, g_closed});
        }
        return table;
    }

    Table cmd_gain_vs_elements(const Scenario &scenario, const GainVsElementsOptions &options)
    {
        if (options.n_min < 1 || options.n_max < options.n_min || options.n_step < 1)
            throw ConfigError("gain-vs-elements: invalid grid-size sweep");
        Table table;
        table.columns = {"n_side", "g_exact", "g_closed_form"};
        const double wavelength = scenario.rf.wavelength;
        const Placement tx = Placement::from_cartesian({options.tx_x, options.tx_y, options.tx_z});
        const Direction tx_dir{tx.azimuth, tx.polar};
        for (int n = options.n_min; n <= options.n_max; n += options.n_step)
        {
            IrsGrid grid = scenario.grid;
            grid.n_x = n;
            grid.n_y = n;
            grid.validate();
            const Placement rx = far_field_rx(scenario, grid);
            const Direction rx_dir{rx.azimuth, rx.polar};
            const double g_exact =
                normalized_gain(beamform_profile(grid, tx_dir, rx_dir, wavelength), grid, tx, rx,
                                wavelength)
                    .gain;
            const double g_closed = gain_closed_form(grid, tx.dist, tx_dir, wavelength).gain;
            table.rows.push_back({static_cast<double>(n), g_exact, g_closed});
        }
        return table;
    }

    Table cmd_ee_sweep(const Scenario &scenario, const EeSweepOptions &options)
    {
        Table table;
        table.columns = {"d_r_m", "rate_mimo", "rate_irs", "ee_mimo", "ee_irs", "n_star"};
        for (double d_r : sweep_points(options.d_r))
        {
            const Placement rx =
                Placement::from_cartesian({scenario.rx.cart.x, d_r, scenario.rx.cart.z});
            const EeComparison cmp = ee_comparison(scenario.rf, scenario.hw, scenario.alpha,
                                                   scenario.tx, rx, scenario.grid);
            table.rows.push_back({d_r, cmp.direct.rate, cmp.irs.rate, cmp.direct.ee, cmp.irs.ee,
                                  static_cast<double>(cmp.irs.n_elements)});
        }
        return table;
    }

    IrsPlacementMode parse_placement_mode(const std::string &text)
    {
        if (text == "fixed-near-tx")
            return IrsPlacementMode::FixedNearTx;
        if (text == "midpoint")
            return IrsPlacementMode::Midpoint;
        throw ConfigError("placement mode must be 'fixed-near-tx' or 'midpoint', got '" + text +
                          "'");
    }

    Table cmd_nstar_sweep(const Scenario &scenario, const NStarSweepOptions &options)
    {
        Table table;
        table.columns = {"d_r_m", "n_star"};
        for (double d_r : sweep_points(options.d_r))
        {
            const Vec3 rx_pos{scenario.rx.cart.x, d_r, scenario.rx.cart.z};
            long long count = 0;
            if (options.mode == IrsPlacementMode::FixedNearTx)
            {
                // Surface kept at the scenario origin; the Rx slides away.
                const double d_r_hop = norm(rx_pos);
                if (d_r_hop <= scenario.tx.dist)
                    throw ConfigError("nstar-sweep: Rx distance " + std::to_string(d_r_hop) +
                                      " m does not exceed the Tx distance " +
                                      std::to_string(scenario.tx.dist) +
                                      " m; the fixed-surface bound is undefined there");
                count = n_star_fixed_irs(scenario.alpha, scenario.rf, scenario.tx.dist, d_r_hop,
                                         scenario.tx.polar, scenario.grid);
            }
            else
            {
                // Surface re-deployed halfway between the terminals at every
                // sweep point, facing the link axis broadside on both sides.
                const Vec3 tx_pos = scenario.tx.cart;
                const Vec3 irs_pos{0.0, 0.5 * (d_r - tx_pos.y), tx_pos.z};
                const double d_t = distance(tx_pos, irs_pos);
                const double d_r_hop = distance(rx_pos, irs_pos);
                const double d_d = distance(rx_pos, tx_pos);
                const ScatterAngles broadside{0.0, 0.0, 0.5 * pi};
                count = n_star(scenario.alpha, scenario.rf, d_t, d_r_hop, d_d, broadside,
                               scenario.grid);
            }
            table.rows.push_back({d_r, static_cast<double>(count)});
        }
        return table;
    }

}

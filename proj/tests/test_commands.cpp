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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "thzirs/commands.hpp"
#include "thzirs/units.hpp"
#include "thzirs/verify.hpp"

using namespace thzirs;

namespace
{
    Scenario pl_map_scenario()
    {
        Scenario s = Scenario::defaults();
        s.tx = Placement::from_cartesian({0.0, -0.3, 0.6});
        s.rx = Placement::from_cartesian({0.0, 1.0, 1.0});
        return s;
    }
}

TEST_CASE("sweep_points spans inclusive ranges")
{
    CHECK(sweep_points({-90.0, 90.0, 0.25}).size() == 721);
    CHECK(sweep_points({0.5, 10.0, 0.1}).size() == 96);
    const auto pts = sweep_points({1.0, 3.0, 1.0});
    REQUIRE(pts.size() == 3);
    CHECK(pts.front() == doctest::Approx(1.0));
    CHECK(pts.back() == doctest::Approx(3.0));
    CHECK_THROWS_AS(sweep_points({1.0, 3.0, 0.0}), ConfigError);
    CHECK_THROWS_AS(sweep_points({3.0, 1.0, 0.5}), ConfigError);
}

TEST_CASE("region-info tabulates the reference grids")
{
    const Table table = cmd_region_info(Scenario::defaults(), {80, 100});
    REQUIRE(table.rows.size() == 2);
    CHECK(table.columns ==
          std::vector<std::string>{"nx", "ny", "size_x_m", "size_y_m", "fresnel_lo_m",
                                   "fresnel_hi_m"});
    CHECK(table.rows[0][2] == doctest::Approx(0.0399723277333).epsilon(1e-9));
    CHECK(table.rows[0][4] == doctest::Approx(0.15674046278).epsilon(1e-9));
    CHECK(table.rows[0][5] == doctest::Approx(3.19778621867).epsilon(1e-9));
    CHECK(table.rows[1][2] == doctest::Approx(0.0499654096667).epsilon(1e-9));
    CHECK(table.rows[1][4] == doctest::Approx(0.219051456).epsilon(1e-9));
    CHECK(table.rows[1][5] == doctest::Approx(4.99654096667).epsilon(1e-9));

    Scenario nominal = Scenario::defaults();
    nominal.set_nominal_wavelength(1e-3);
    const Table exact = cmd_region_info(nominal, {1, 80, 100});
    CHECK(exact.rows[0][2] == doctest::Approx(0.5e-3).epsilon(1e-12)); // single element
    CHECK(exact.rows[1][5] == doctest::Approx(3.2).epsilon(1e-12));
    CHECK(exact.rows[2][5] == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("CSV output format is stable")
{
    Table table;
    table.columns = {"a", "b"};
    table.rows = {{1.0, 0.123456789012345}, {2.0, 3.0}};
    table.summary["note"] = 0.5;
    std::ostringstream out;
    write_table(table, OutputFormat::Csv, out);
    CHECK(out.str() == "a,b\n1,0.123456789012\n2,3\n# note = 0.5\n");
}

TEST_CASE("JSON output carries the same rows")
{
    Table table;
    table.columns = {"x", "y"};
    table.rows = {{1.5, 2.5}};
    std::ostringstream out;
    write_table(table, OutputFormat::Json, out);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["columns"].size() == 2);
    CHECK(doc["rows"][0]["x"] == doctest::Approx(1.5));
    CHECK(doc["rows"][0]["y"] == doctest::Approx(2.5));
}

TEST_CASE("command output is byte-deterministic")
{
    const Scenario scenario = pl_map_scenario();
    std::ostringstream a;
    std::ostringstream b;
    write_table(cmd_path_loss_map(scenario), OutputFormat::Csv, a);
    write_table(cmd_path_loss_map(scenario), OutputFormat::Csv, b);
    CHECK(a.str() == b.str());

    std::ostringstream va;
    std::ostringstream vb;
    write_verify_report(run_verification(Scenario::defaults(), 99), false, va);
    write_verify_report(run_verification(Scenario::defaults(), 99), false, vb);
    CHECK(va.str() == vb.str());
}

TEST_CASE("scattered-field sweep matches the module level values")
{
    const Scenario scenario = Scenario::defaults();
    ScatteredFieldOptions options;
    const Table table = cmd_scattered_field(scenario, options);
    REQUIRE(table.rows.size() == 721);
    for (const auto &row : table.rows)
        CHECK(row[1] <= row[2]); // exact <= approx

    // Spot-check three rows against direct evaluations.
    for (std::size_t idx : {0UL, 360UL, 600UL})
    {
        const auto &row = table.rows[idx];
        const ScatterAngles angles{deg_to_rad(30.0), deg_to_rad(row[0]), deg_to_rad(60.0)};
        CHECK(row[1] == doctest::Approx(scattered_field_sq_exact(1.0, scenario.grid, angles, 4.0,
                                                                 scenario.rf.wavelength))
                            .epsilon(1e-12));
        CHECK(row[2] == doctest::Approx(scattered_field_sq_approx(1.0, scenario.grid, angles, 4.0,
                                                                  scenario.rf.wavelength))
                            .epsilon(1e-12));
    }
}

TEST_CASE("path-loss-map summary and shape")
{
    const Table table = cmd_path_loss_map(pl_map_scenario());
    CHECK(table.rows.size() == 10000);
    CHECK(table.summary.at("spread_db") == doctest::Approx(0.112191709555).epsilon(1e-6));
    CHECK(table.summary.at("spread_db") < 1.0);
}

TEST_CASE("gain-vs-distance columns behave per the model")
{
    const Scenario scenario = Scenario::defaults();
    GainVsDistanceOptions options;
    options.z = {0.5, 10.0, 0.5};
    const Table table = cmd_gain_vs_distance(scenario, options);
    REQUIRE(table.rows.size() == 20);

    for (const auto &row : table.rows)
    {
        CHECK(row[2] == doctest::Approx(1.0).epsilon(1e-12)); // beamfocusing
        for (std::size_t c = 2; c < 6; ++c)
        {
            CHECK(row[c] >= 0.0);
            CHECK(row[c] <= 1.0 + 1e-9);
        }
        // The quadratic-phase sum stays inside the closed form's band.
        CHECK(std::abs(row[4] - row[5]) < 0.05);
    }

    // Frozen regression for the top of the sweep (z = 10).
    const auto &last = table.rows.back();
    CHECK(last[1] == doctest::Approx(10.0159872204).epsilon(1e-9));  // d_t
    CHECK(last[3] == doctest::Approx(0.894683065994).epsilon(1e-6)); // beamform exact
    CHECK(last[5] == doctest::Approx(0.902543889214).epsilon(1e-6)); // closed form

    // All evaluators approach unity far beyond the Fraunhofer distance.
    GainVsDistanceOptions far;
    far.z = {100.0, 100.0, 1.0};
    const Table far_table = cmd_gain_vs_distance(scenario, far);
    REQUIRE(far_table.rows.size() == 1);
    for (std::size_t c = 2; c < 6; ++c)
        CHECK(far_table.rows[0][c] > 0.99);
}

TEST_CASE("gain-vs-elements decays and tracks the closed form")
{
    const Scenario scenario = Scenario::defaults();
    GainVsElementsOptions options;
    const Table table = cmd_gain_vs_elements(scenario, options);
    REQUIRE(table.rows.size() == 100);

    CHECK(table.rows[0][1] == doctest::Approx(1.0).epsilon(1e-9)); // single element
    CHECK(table.rows[0][2] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(table.rows.back()[1] < 0.01); // collapsed at 100x100

    // Frozen deviation regression: worst gap between the exact sum and the
    // closed form across the size sweep.
    double worst = 0.0;
    for (const auto &row : table.rows)
        worst = std::max(worst, std::abs(row[1] - row[2]));
    CHECK(worst == doctest::Approx(0.073406318229).epsilon(1e-6));
}

TEST_CASE("ee-sweep reproduces the two-fold efficiency picture")
{
    const Scenario scenario = Scenario::defaults();
    EeSweepOptions options;
    options.d_r = {2.0, 10.0, 1.0};
    const Table table = cmd_ee_sweep(scenario, options);
    REQUIRE(table.rows.size() == 9);
    for (const auto &row : table.rows)
    {
        CHECK(std::abs(row[2] / row[1] - 1.0) < 0.01); // rate parity
        const double ee_ratio = row[4] / row[3];
        CHECK(ee_ratio >= 1.95);
        CHECK(ee_ratio <= 2.01);
    }
    // Matches the direct link-performance call at d_r = 5.
    const EeComparison cmp = ee_comparison(scenario.rf, scenario.hw, scenario.alpha, scenario.tx,
                                           Placement::from_cartesian({0.0, 5.0, 1.0}),
                                           scenario.grid);
    CHECK(table.rows[3][5] == doctest::Approx(static_cast<double>(cmp.irs.n_elements)));
}

TEST_CASE("nstar-sweep: midpoint grows, fixed saturates, degenerate rejected")
{
    const Scenario scenario = Scenario::defaults();

    NStarSweepOptions midpoint;
    midpoint.d_r = {2.0, 10.0, 2.0};
    midpoint.mode = IrsPlacementMode::Midpoint;
    const Table grows = cmd_nstar_sweep(scenario, midpoint);
    for (std::size_t i = 1; i < grows.rows.size(); ++i)
        CHECK(grows.rows[i][1] > grows.rows[i - 1][1]);

    NStarSweepOptions fixed;
    fixed.d_r = {100.0, 1000.0, 450.0};
    fixed.mode = IrsPlacementMode::FixedNearTx;
    const Table saturates = cmd_nstar_sweep(scenario, fixed);
    const double asymptote = n_star_max_real(scenario.alpha, scenario.rf, scenario.tx.dist,
                                             scenario.tx.polar, scenario.grid);
    for (const auto &row : saturates.rows)
        CHECK(std::abs(row[1] - asymptote) / asymptote < 0.001);

    NStarSweepOptions degenerate;
    degenerate.d_r = {0.3, 0.3, 1.0}; // hop distance below the Tx distance
    degenerate.mode = IrsPlacementMode::FixedNearTx;
    CHECK_THROWS_AS(cmd_nstar_sweep(scenario, degenerate), ConfigError);

    CHECK(parse_placement_mode("midpoint") == IrsPlacementMode::Midpoint);
    CHECK(parse_placement_mode("fixed-near-tx") == IrsPlacementMode::FixedNearTx);
    CHECK_THROWS_AS(parse_placement_mode("corner"), ConfigError);
}

TEST_CASE("verification suite passes on the default scenario")
{
    const VerifyReport report = run_verification(Scenario::defaults(), 12345);
    for (const auto &check : report.checks)
    {
        INFO(check.name, " measured=", check.measured, " bound=", check.bound);
        CHECK(check.pass);
    }
    CHECK(report.all_pass());

    std::ostringstream json_out;
    write_verify_report(report, true, json_out);
    const auto doc = nlohmann::json::parse(json_out.str());
    CHECK(doc["all_pass"] == true);
    CHECK(doc["checks"].size() == report.checks.size());
}

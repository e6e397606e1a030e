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

#include "doctest.h"

#include "thzirs/scenario.hpp"
#include "thzirs/units.hpp"

using namespace thzirs;

TEST_CASE("default scenario carries the 300 GHz reference configuration")
{
    const Scenario s = Scenario::defaults();
    CHECK(s.rf.freq == doctest::Approx(300e9));
    CHECK(s.rf.wavelength == doctest::Approx(speed_of_light / 300e9));
    CHECK(s.rf.kappa_abs == doctest::Approx(0.0033));
    CHECK(s.rf.gain_tx == doctest::Approx(100.0));
    CHECK(s.rf.power_tx == doctest::Approx(0.01));
    CHECK(s.rf.noise_density == doctest::Approx(3.981071705535e-21).epsilon(1e-9));
    CHECK(s.rf.bandwidth == doctest::Approx(10e9));
    CHECK(s.grid.n_x == 100);
    CHECK(s.grid.elem_len_x == doctest::Approx(0.5 * s.rf.wavelength));
    CHECK(s.tx.cart.y == doctest::Approx(-0.6));
    CHECK(s.rx.cart.y == doctest::Approx(5.0));
    CHECK(s.hw.n_t == 100);
    CHECK(s.hw.p_ps == doctest::Approx(0.042));
    CHECK(s.hw.p_pa == doctest::Approx(0.060));
    CHECK(s.alpha == doctest::Approx(2.0));
    CHECK(s.pl_mode == PlMode::Constant);
    CHECK(s.rx_far_field_multiplier == doctest::Approx(100.0));
    CHECK_NOTHROW(s.validate());
}

TEST_CASE("config JSON overrides with boundary-unit conversion")
{
    Scenario s = Scenario::defaults();
    s.apply_config_text(R"({
        "rf": {
            "freq_ghz": 150.0,
            "kappa_abs_per_m": 0.001,
            "gain_tx_dbi": 10.0,
            "gain_rx_dbi": 3.0,
            "power_tx_dbm": 20.0,
            "noise_density_dbm_per_hz": -170.0,
            "bandwidth_ghz": 1.0
        },
        "grid": { "n_x": 64, "n_y": 32 },
        "tx": { "position_m": [0.0, -0.3, 0.6] },
        "rx": { "spherical": { "dist_m": 2.0, "polar_deg": 45.0, "azimuth_deg": 90.0 } },
        "hw": { "n_tx": 16, "n_rx": 8, "phase_shifter_w": 0.03, "power_amp_w": 0.05 },
        "alpha": 4.0,
        "pl_mode": "per-element",
        "rx_far_field_multiplier": 50.0
    })");

    CHECK(s.rf.freq == doctest::Approx(150e9));
    CHECK(s.rf.wavelength == doctest::Approx(speed_of_light / 150e9));
    CHECK(s.rf.kappa_abs == doctest::Approx(0.001));
    CHECK(s.rf.gain_tx == doctest::Approx(10.0));
    CHECK(s.rf.gain_rx == doctest::Approx(db_to_linear(3.0)));
    CHECK(s.rf.power_tx == doctest::Approx(0.1));
    CHECK(s.rf.noise_density == doctest::Approx(dbm_to_watts(-170.0)));
    CHECK(s.rf.bandwidth == doctest::Approx(1e9));
    CHECK(s.grid.n_x == 64);
    CHECK(s.grid.n_y == 32);
    // Element size follows the new wavelength when not set explicitly.
    CHECK(s.grid.elem_len_x == doctest::Approx(0.5 * s.rf.wavelength));
    CHECK(s.tx.dist == doctest::Approx(0.6708203932).epsilon(1e-9));
    CHECK(s.rx.dist == doctest::Approx(2.0));
    CHECK(s.rx.polar == doctest::Approx(deg_to_rad(45.0)));
    CHECK(s.rx.azimuth == doctest::Approx(deg_to_rad(90.0)));
    CHECK(s.hw.n_t == 16);
    CHECK(s.alpha == doctest::Approx(4.0));
    CHECK(s.pl_mode == PlMode::PerElement);
    CHECK(s.rx_far_field_multiplier == doctest::Approx(50.0));
}

TEST_CASE("explicit element dimensions survive wavelength overrides")
{
    Scenario s = Scenario::defaults();
    s.apply_config_text(R"({ "grid": { "elem_len_x_m": 4e-4, "elem_len_y_m": 3e-4 } })");
    CHECK(s.grid.elem_len_x == doctest::Approx(4e-4));
    s.set_nominal_wavelength(1e-3);
    CHECK(s.grid.elem_len_x == doctest::Approx(4e-4));
    CHECK(s.rf.wavelength == doctest::Approx(1e-3));

    Scenario t = Scenario::defaults();
    t.set_nominal_wavelength(1e-3);
    CHECK(t.grid.elem_len_x == doctest::Approx(0.5e-3));
}

TEST_CASE("config diagnostics carry the offending path")
{
    Scenario s = Scenario::defaults();
    CHECK_THROWS_WITH_AS(s.apply_config_text(R"({ "rff": {} })", "test.json"),
                         doctest::Contains("unknown key 'rff'"), ConfigError);
    CHECK_THROWS_WITH_AS(s.apply_config_text(R"({ "rf": { "freq_ghz": "fast" } })", "test.json"),
                         doctest::Contains("rf.freq_ghz"), ConfigError);
    CHECK_THROWS_WITH_AS(
        s.apply_config_text(R"({ "tx": { "position_m": [1, 2] } })", "test.json"),
        doctest::Contains("position_m"), ConfigError);
    CHECK_THROWS_AS(s.apply_config_text("{ not json", "broken.json"), ConfigError);
    CHECK_THROWS_AS(s.apply_config_text(R"({ "alpha": 0.25 })"), ConfigError);
    CHECK_THROWS_AS(
        s.apply_config_text(
            R"({ "tx": { "position_m": [0,0,1], "spherical": { "dist_m": 1 } } })"),
        ConfigError);
    CHECK_THROWS_AS(s.apply_config_text(R"({ "pl_mode": "sometimes" })"), ConfigError);
}

TEST_CASE("pl mode parsing")
{
    CHECK(parse_pl_mode("constant") == PlMode::Constant);
    CHECK(parse_pl_mode("per-element") == PlMode::PerElement);
    CHECK_THROWS_AS(parse_pl_mode("exact"), ConfigError);
}

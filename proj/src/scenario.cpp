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

#include "thzirs/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "thzirs/units.hpp"

namespace thzirs
{

    namespace
    {
        using nlohmann::json;

        [[noreturn]] void fail(const std::string &origin, const std::string &what)
        {
            throw ConfigError(origin + ": " + what);
        }

        void check_keys(const json &obj, std::initializer_list<const char *> allowed,
                        const std::string &origin, const std::string &section)
        {
            if (!obj.is_object())
                fail(origin, section + " must be an object");
            for (const auto &item : obj.items())
            {
                bool known = false;
                for (const char *key : allowed)
                    known = known || item.key() == key;
                if (!known)
                    fail(origin, "unknown key '" + item.key() + "' in " + section);
            }
        }

        double get_number(const json &obj, const char *key, const std::string &origin,
                          const std::string &section, double fallback)
        {
            if (!obj.contains(key))
                return fallback;
            if (!obj[key].is_number())
                fail(origin, section + "." + key + " must be a number");
            return obj[key].get<double>();
        }

        int get_int(const json &obj, const char *key, const std::string &origin,
                    const std::string &section, int fallback)
        {
            if (!obj.contains(key))
                return fallback;
            if (!obj[key].is_number_integer())
                fail(origin, section + "." + key + " must be an integer");
            return obj[key].get<int>();
        }

        Placement parse_placement(const json &obj, const std::string &origin,
                                  const std::string &section, const Placement &fallback)
        {
            check_keys(obj, {"position_m", "spherical"}, origin, section);
            if (obj.contains("position_m") && obj.contains("spherical"))
                fail(origin, section + ": give position_m or spherical, not both");
            if (obj.contains("position_m"))
            {
                const json &arr = obj["position_m"];
                if (!arr.is_array() || arr.size() != 3 || !arr[0].is_number() ||
                    !arr[1].is_number() || !arr[2].is_number())
                    fail(origin, section + ".position_m must be an array of 3 numbers");
                return Placement::from_cartesian(
                    {arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()});
            }
            if (obj.contains("spherical"))
            {
                const json &sph = obj["spherical"];
                check_keys(sph, {"dist_m", "polar_deg", "azimuth_deg"}, origin,
                           section + ".spherical");
                const double dist = get_number(sph, "dist_m", origin, section, -1.0);
                if (dist <= 0.0)
                    fail(origin, section + ".spherical.dist_m must be positive");
                return Placement::from_spherical(
                    dist, deg_to_rad(get_number(sph, "polar_deg", origin, section, 0.0)),
                    deg_to_rad(get_number(sph, "azimuth_deg", origin, section, 0.0)));
            }
            return fallback;
        }
    }

    PlMode parse_pl_mode(const std::string &text)
    {
        if (text == "constant")
            return PlMode::Constant;
        if (text == "per-element")
            return PlMode::PerElement;
        throw ConfigError("pl_mode must be 'constant' or 'per-element', got '" + text + "'");
    }

    Scenario Scenario::defaults()
    {
        Scenario s;
        s.rf = RfParams::thz_reference();
        s.grid = IrsGrid::half_wavelength(100, 100, s.rf.wavelength);
        s.tx = Placement::from_cartesian({0.0, -0.6, 1.0});
        s.rx = Placement::from_cartesian({0.0, 5.0, 1.0});
        s.hw = HardwareProfile{100, 100};
        return s;
    }

    void Scenario::set_nominal_wavelength(double wavelength)
    {
        if (wavelength <= 0.0)
            throw ConfigError("nominal wavelength must be positive");
        rf.wavelength = wavelength;
        if (!elem_len_explicit)
        {
            grid.elem_len_x = 0.5 * wavelength;
            grid.elem_len_y = 0.5 * wavelength;
        }
    }

    void Scenario::apply_config_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError(path + ": cannot open config file");
        std::stringstream buffer;
        buffer << in.rdbuf();
        apply_config_text(buffer.str(), path);
    }

    void Scenario::apply_config_text(const std::string &text, const std::string &origin)
    {
        json root;
        try
        {
            root = json::parse(text);
        }
        catch (const json::parse_error &err)
        {
            throw ConfigError(origin + ": " + err.what());
        }

        check_keys(root, {"rf", "grid", "tx", "rx", "hw", "alpha", "pl_mode",
                          "rx_far_field_multiplier"},
                   origin, "config");

        if (root.contains("rf"))
        {
            const json &obj = root["rf"];
            check_keys(obj,
                       {"freq_ghz", "wavelength_m", "kappa_abs_per_m", "gain_tx_dbi",
                        "gain_rx_dbi", "power_tx_dbm", "noise_density_dbm_per_hz",
                        "bandwidth_ghz"},
                       origin, "rf");
            const double freq_ghz = get_number(obj, "freq_ghz", origin, "rf", rf.freq / 1e9);
            if (freq_ghz <= 0.0)
                fail(origin, "rf.freq_ghz must be positive");
            rf.freq = freq_ghz * 1e9;
            rf.wavelength = speed_of_light / rf.freq;
            rf.kappa_abs = get_number(obj, "kappa_abs_per_m", origin, "rf", rf.kappa_abs);
            if (obj.contains("gain_tx_dbi"))
                rf.gain_tx = db_to_linear(obj["gain_tx_dbi"].get<double>());
            if (obj.contains("gain_rx_dbi"))
                rf.gain_rx = db_to_linear(obj["gain_rx_dbi"].get<double>());
            if (obj.contains("power_tx_dbm"))
                rf.power_tx = dbm_to_watts(obj["power_tx_dbm"].get<double>());
            if (obj.contains("noise_density_dbm_per_hz"))
                rf.noise_density = dbm_to_watts(obj["noise_density_dbm_per_hz"].get<double>());
            if (obj.contains("bandwidth_ghz"))
                rf.bandwidth = obj["bandwidth_ghz"].get<double>() * 1e9;
            if (obj.contains("wavelength_m"))
            {
                const double wl = obj["wavelength_m"].get<double>();
                if (wl <= 0.0)
                    fail(origin, "rf.wavelength_m must be positive");
                rf.wavelength = wl;
            }
        }

        if (root.contains("grid"))
        {
            const json &obj = root["grid"];
            check_keys(obj, {"n_x", "n_y", "elem_len_x_m", "elem_len_y_m", "gap_x_m", "gap_y_m"},
                       origin, "grid");
            grid.n_x = get_int(obj, "n_x", origin, "grid", grid.n_x);
            grid.n_y = get_int(obj, "n_y", origin, "grid", grid.n_y);
            grid.gap_x = get_number(obj, "gap_x_m", origin, "grid", grid.gap_x);
            grid.gap_y = get_number(obj, "gap_y_m", origin, "grid", grid.gap_y);
            if (obj.contains("elem_len_x_m") || obj.contains("elem_len_y_m"))
            {
                grid.elem_len_x = get_number(obj, "elem_len_x_m", origin, "grid", grid.elem_len_x);
                grid.elem_len_y = get_number(obj, "elem_len_y_m", origin, "grid", grid.elem_len_y);
                elem_len_explicit = true;
            }
        }
        if (!elem_len_explicit)
        {
            grid.elem_len_x = 0.5 * rf.wavelength;
            grid.elem_len_y = 0.5 * rf.wavelength;
        }

        if (root.contains("tx"))
            tx = parse_placement(root["tx"], origin, "tx", tx);
        if (root.contains("rx"))
            rx = parse_placement(root["rx"], origin, "rx", rx);

        if (root.contains("hw"))
        {
            const json &obj = root["hw"];
            check_keys(obj, {"n_tx", "n_rx", "phase_shifter_w", "power_amp_w"}, origin, "hw");
            hw.n_t = get_int(obj, "n_tx", origin, "hw", hw.n_t);
            hw.n_r = get_int(obj, "n_rx", origin, "hw", hw.n_r);
            hw.p_ps = get_number(obj, "phase_shifter_w", origin, "hw", hw.p_ps);
            hw.p_pa = get_number(obj, "power_amp_w", origin, "hw", hw.p_pa);
        }

        if (root.contains("alpha"))
        {
            if (!root["alpha"].is_number())
                fail(origin, "alpha must be a number");
            alpha = root["alpha"].get<double>();
        }
        if (root.contains("pl_mode"))
        {
            if (!root["pl_mode"].is_string())
                fail(origin, "pl_mode must be a string");
            pl_mode = parse_pl_mode(root["pl_mode"].get<std::string>());
        }
        if (root.contains("rx_far_field_multiplier"))
        {
            if (!root["rx_far_field_multiplier"].is_number())
                fail(origin, "rx_far_field_multiplier must be a number");
            rx_far_field_multiplier = root["rx_far_field_multiplier"].get<double>();
        }

        try
        {
            validate();
        }
        catch (const std::exception &err)
        {
            fail(origin, err.what());
        }
    }

    void Scenario::validate() const
    {
        rf.validate();
        grid.validate();
        hw.validate();
        if (alpha < 1.0)
            throw ConfigError("alpha must be >= 1");
        if (rx_far_field_multiplier <= 0.0)
            throw ConfigError("rx_far_field_multiplier must be positive");
        if (tx.dist <= 0.0 || rx.dist <= 0.0)
            throw ConfigError("terminal distances must be positive");
    }

}

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

#include <stdexcept>
#include <string>

#include "thzirs/channel.hpp"
#include "thzirs/linkperf.hpp"

// A complete experiment configuration. Scenarios carry linear/SI units
// internally; the JSON config format uses field-of-practice units (GHz, dBm,
// dBi, dBm/Hz, degrees, meters) converted once at parse time.

namespace thzirs
{
    // Raised for malformed or inconsistent configuration input; the CLI maps
    // it to exit code 2.
    class ConfigError : public std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct Scenario
    {
        RfParams rf = RfParams::thz_reference();
        IrsGrid grid;
        Placement tx;
        Placement rx;
        HardwareProfile hw{100, 100};
        double alpha = 2.0;
        PlMode pl_mode = PlMode::Constant;
        double rx_far_field_multiplier = 100.0;

        // Element dimensions track lambda/2 unless set explicitly (config file
        // or code); the flag keeps them consistent under wavelength overrides.
        bool elem_len_explicit = false;

        // Reference configuration: 300 GHz link, 100x100 half-wavelength
        // elements, Tx at (0, -0.6, 1), Rx at (0, 5, 1), 100-antenna arrays.
        static Scenario defaults();

        // Parse a JSON config file / string on top of the current values.
        // Unknown keys and malformed values raise ConfigError with the
        // offending path.
        void apply_config_file(const std::string &path);
        void apply_config_text(const std::string &text, const std::string &origin = "<config>");

        // Override the carrier wavelength (nominal-wavelength mode). Element
        // dimensions follow unless explicitly configured.
        void set_nominal_wavelength(double wavelength);

        void validate() const;
    };

    PlMode parse_pl_mode(const std::string &text); // "constant" | "per-element"
}

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

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "thzirs/scenario.hpp"

// Built-in cross-check suites: closed-form vs. exact sums, coordinate round
// trips, threshold bracketing, and the reference-table regression. Every
// check reports its measured deviation next to the bound it must meet, and
// the whole report is byte-identical across runs for a fixed seed.

namespace thzirs
{
    struct VerifyCheck
    {
        std::string name;
        bool pass = false;
        double measured = 0.0;
        double bound = 0.0;
    };

    struct VerifyReport
    {
        std::vector<VerifyCheck> checks;
        bool all_pass() const;
    };

    VerifyReport run_verification(const Scenario &scenario, std::uint64_t seed);

    void write_verify_report(const VerifyReport &report, bool as_json, std::ostream &out);
}

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

#include <cmath>

#include "thzirs/constants.hpp"

// Unit conversions used at the configuration boundary. All core math is
// carried out in linear units: watts, meters, radians, Hz.

namespace thzirs
{
    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
    inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
    inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts / 1e-3); }
    inline double deg_to_rad(double deg) { return deg * pi / 180.0; }
    inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }

    // Wrap an angle to [-pi, pi]. IEEE remainder is exact, so wrapping a phase
    // changes it by an exact multiple of the double rounding of 2*pi.
    inline double wrap_to_pi(double angle) { return std::remainder(angle, two_pi); }
}

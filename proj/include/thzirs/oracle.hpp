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

#include "thzirs/channel.hpp"

// Independent reference evaluations used by the self-check command and the
// test suites. These deliberately avoid the production code paths: naive
// left-to-right summation in extended precision, distances recomputed from
// scratch. They exist to cross-check, not to be fast.

namespace thzirs::oracle
{
    // Naive left-to-right long-double phasor sum of tx * rx * exp(j phi).
    std::complex<double> compose_naive(const ChannelGrid &tx_grid, const ChannelGrid &rx_grid,
                                       const PhaseProfile &profile);

    // Normalized power gain by brute force: exact distances from long-double
    // arithmetic, naive accumulation.
    double normalized_gain_naive(const PhaseProfile &profile, const IrsGrid &grid,
                                 const Placement &tx, const Placement &rx, double wavelength);

    // Element distance recomputed from raw coordinates.
    double element_distance_direct(const Vec3 &p, int n, int m, const IrsGrid &grid);
}

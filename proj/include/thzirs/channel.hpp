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

#include <complex>
#include <vector>

#include "thzirs/scattering.hpp"

// Spherical-wavefront and far-field channel representations of the two-hop
// link, and the exact receive SNR. Channel grids are immutable after
// construction and safe to share across concurrent readers.

namespace thzirs
{
    // Per-element magnitude handling of the one-way channel.
    enum class PlMode
    {
        PerElement, // exact per-element distances in the magnitudes
        Constant    // (0,0)th-element distance in the magnitudes; phases stay exact
    };

    enum class LinkEnd
    {
        Tx,
        Rx
    };

    // One-way channel between a terminal and every element, entries
    // sqrt(PL_{n,m}) * exp(-j k D_{n,m}), row-major (index n*n_y + m).
    struct ChannelGrid
    {
        int n_x = 0;
        int n_y = 0;
        std::vector<std::complex<double>> amp;

        const std::complex<double> &at(int n, int m) const
        {
            return amp[static_cast<std::size_t>(n) * n_y + m];
        }
    };

    enum class ProfileKind
    {
        Beamfocus,
        FarFieldBeamform,
        Custom
    };

    // Per-element reflection phases, wrapped to [-pi, pi] on construction.
    struct PhaseProfile
    {
        int n_x = 0;
        int n_y = 0;
        std::vector<double> phases; // row-major (index n*n_y + m)
        ProfileKind kind = ProfileKind::Custom;

        static PhaseProfile from_phases(int n_x, int n_y, std::vector<double> raw);

        double at(int n, int m) const { return phases[static_cast<std::size_t>(n) * n_y + m]; }
    };

    // Channel grid of the given link end. The phase always uses the exact
    // per-element distance; pl_mode selects the magnitude convention.
    ChannelGrid one_way_channel(const Placement &place, const IrsGrid &grid, const RfParams &params,
                                PlMode pl_mode, LinkEnd end);

    // Coherent receive amplitude: sum over elements of
    // tx(n,m) * rx(n,m) * exp(j phi_{n,m}), pairwise-reduced in row-major order.
    // Throws std::invalid_argument on dimension mismatch.
    std::complex<double> compose_rx_amplitude(const ChannelGrid &tx_grid, const ChannelGrid &rx_grid,
                                              const PhaseProfile &profile);

    // Exact receive SNR, (P_t / sigma^2) * |compose_rx_amplitude|^2.
    double snr_exact(const ChannelGrid &tx_grid, const ChannelGrid &rx_grid,
                     const PhaseProfile &profile, const RfParams &params);

    // Far-field steering vector: entries exp(j k (n d_x cos(phi) sin(theta) +
    // m d_y sin(phi) sin(theta))), stacked column-major (row index n fastest).
    std::vector<std::complex<double>> steering_vector(double azimuth, double polar,
                                                      const IrsGrid &grid, double wavelength);

    // Rank-one factorization of the two-hop link when both terminals are far
    // from the surface. The array factors of multi-antenna terminals are
    // carried analytically by the link-performance formulas.
    struct FarFieldRankOne
    {
        std::complex<double> tx_factor; // sqrt(PL_t) * exp(-j k D_t)
        std::complex<double> rx_factor; // sqrt(PL_r) * exp(-j k D_r)
        double pl_t = 0.0;              // one-way Tx-side loss at the (0,0)th element
        double pl_r = 0.0;              // one-way Rx-side loss at the (0,0)th element
        int n_t = 1;                    // transmit antenna count
        int n_r = 1;                    // receive antenna count
        bool fresnel_warning = false;   // a terminal sits inside the Fraunhofer distance
    };

    FarFieldRankOne far_field_rank_one(const Placement &place_tx, const Placement &place_rx,
                                       const IrsGrid &grid, const RfParams &params, int n_t, int n_r);
}

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

#include "thzirs/scattering.hpp"

// Direct MIMO benchmark vs. surface-assisted MIMO: receive SNR, power
// consumption, achievable rate, energy efficiency, and the element count N*
// at which the assisted link with antenna arrays reduced by a factor alpha
// matches the direct link.

namespace thzirs
{
    struct HardwareProfile
    {
        int n_t = 1;          // transmit antennas
        int n_r = 1;          // receive antennas
        double p_ps = 0.042;  // per-antenna phase-shifter power [W]
        double p_pa = 0.060;  // per-antenna power-amplifier power [W]

        void validate() const;
    };

    struct LinkReport
    {
        double snr = 0.0;          // linear
        double rate = 0.0;         // [bit/s]
        double power = 0.0;        // [W]
        double ee = 0.0;           // rate / power [bit/J]
        long long n_elements = 0;  // reflecting elements (0 for the direct link)
    };

    // Direct-link SNR under analog beamforming/combining: N_r N_t P_t PL / sigma^2.
    double snr_mimo(const RfParams &params, const HardwareProfile &hw, double d_d);

    // Assisted-link SNR: N_t N_r N^2 P_t PL_IRS / sigma^2 with PL_IRS the
    // per-element two-hop loss.
    double snr_irs(const RfParams &params, const HardwareProfile &hw, long long n_elements,
                   const IrsGrid &grid, double d_t, double d_r, const ScatterAngles &angles);

    // P_t + (N_r + N_t)(P_PS + P_PA); reflecting elements draw no power.
    double power_consumption(const HardwareProfile &hw, double p_t);

    // B log2(1 + SNR)
    double achievable_rate(double bandwidth, double snr);

    // Real-valued element-count bound
    //   alpha * (lambda / (L_x L_y)) * D_t D_r / (sqrt(F) D_d) *
    //   exp(-kappa (D_d - D_r - D_t) / 2).
    // Throws std::domain_error when F vanishes (grazing geometry).
    double n_star_real(double alpha, const RfParams &params, double d_t, double d_r, double d_d,
                       const ScatterAngles &angles, const IrsGrid &grid);

    // Equivalent bound evaluated through the path-loss ratio,
    // sqrt(alpha^2 PL_MIMO / PL_IRS); agrees with n_star_real up to rounding.
    double n_star_real_from_path_loss(double alpha, const RfParams &params, double d_t, double d_r,
                                      double d_d, const ScatterAngles &angles, const IrsGrid &grid);

    // Integer ceiling of n_star_real.
    long long n_star(double alpha, const RfParams &params, double d_t, double d_r, double d_d,
                     const ScatterAngles &angles, const IrsGrid &grid);

    // Special case for a fixed surface near the Tx with phi_r = pi/2 and the
    // direct distance approximated by sqrt(D_r^2 - D_t^2); requires d_r > d_t.
    double n_star_fixed_irs_real(double alpha, const RfParams &params, double d_t, double d_r,
                                 double theta_t, const IrsGrid &grid);
    long long n_star_fixed_irs(double alpha, const RfParams &params, double d_t, double d_r,
                               double theta_t, const IrsGrid &grid);

    // Asymptote of the fixed-surface bound as D_r grows:
    //   alpha * (lambda / (L_x L_y)) * (D_t / cos(theta_t)) * exp(kappa D_t / 2).
    double n_star_max_real(double alpha, const RfParams &params, double d_t, double theta_t,
                           const IrsGrid &grid);
    long long n_star_max(double alpha, const RfParams &params, double d_t, double theta_t,
                         const IrsGrid &grid);

    // Side-by-side link reports of direct MIMO (full arrays) and the assisted
    // system (arrays reduced by alpha, N = ceil(N*) elements unless
    // overridden). Placements are relative to the surface; the direct-link
    // distance is the Tx-Rx separation.
    struct EeComparison
    {
        LinkReport direct;
        LinkReport irs;
        double n_star_real = 0.0;
        bool irs_meets_rate = false; // rate_irs >= rate_direct
    };

    EeComparison ee_comparison(const RfParams &params, const HardwareProfile &hw, double alpha,
                               const Placement &tx, const Placement &rx, const IrsGrid &grid,
                               long long n_elements_override = 0);
}

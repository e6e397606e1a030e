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

// Phase-profile synthesis and normalized power gain. The gain of a profile is
//
//   G = |sum_{n,m} exp(-j k (D^t_{n,m} + D^r_{n,m})) exp(j phi_{n,m})|^2 / (N_x^2 N_y^2)
//
// with exact per-element distances and unit magnitudes, so G is in [0, 1] and
// G = 1 exactly when the profile conjugates the two-hop phase (beamfocusing).
// Beamforming from angular information alone leaves a residual quadratic
// phase when a terminal sits in the Fresnel region; its loss is captured in
// closed form by a pair of Dirichlet-sinc factors.

namespace thzirs
{
    // Arrival/departure direction of a terminal.
    struct Direction
    {
        double azimuth = 0.0; // phi [rad]
        double polar = 0.0;   // theta [rad]
    };

    enum class GainMethod
    {
        ExactSum,  // direct evaluation of a phasor sum
        ClosedForm // Dirichlet-sinc approximation
    };

    struct GainResult
    {
        double gain = 0.0; // in [0, 1]
        GainMethod method = GainMethod::ExactSum;
        ProfileKind profile_kind = ProfileKind::Custom;
    };

    // phi_{n,m} = k (D^t_{n,m} + D^r_{n,m}), the profile that aligns all
    // element contributions; its normalized gain is 1.
    PhaseProfile beamfocus_profile(const IrsGrid &grid, const Placement &tx, const Placement &rx,
                                   double wavelength);

    // Far-field profile built from angular information only:
    // phi_{n,m} = -k (n d_x (cos(phi_t)sin(theta_t) + cos(phi_r)sin(theta_r))
    //              +  m d_y (sin(phi_t)sin(theta_t) + sin(phi_r)sin(theta_r))).
    PhaseProfile beamform_profile(const IrsGrid &grid, const Direction &tx_dir,
                                  const Direction &rx_dir, double wavelength);

    // Exact normalized power gain of an arbitrary profile.
    GainResult normalized_gain(const PhaseProfile &profile, const IrsGrid &grid, const Placement &tx,
                               const Placement &rx, double wavelength);

    // Second-order (Fresnel) expansion of the Tx distance to element (n,m):
    //   D_t + (n d_x)^2 (1 - cos^2(phi_t) sin^2(theta_t)) / (2 D_t) - n d_x cos(phi_t) sin(theta_t)
    //       + (m d_y)^2 (1 - sin^2(phi_t) sin^2(theta_t)) / (2 D_t) - m d_y sin(phi_t) sin(theta_t)
    double fresnel_tx_distance(int n, int m, const IrsGrid &grid, const Placement &tx);

    // Dirichlet sinc D_N(x) = sin(N x / 2) / (N sin(x / 2)) with the removable
    // singularities at x = 2 pi k evaluated by their analytic limit.
    double dirichlet_sinc(long long n, double x);

    // Closed-form beamforming gain for an Rx in the far field and a Tx in the
    // Fresnel zone at distance d_t:
    //   |D_{Nx^2}(k d_x^2 (1-cos^2(phi_t)sin^2(theta_t)) / (2 d_t))|^2 *
    //   |D_{Ny^2}(k d_y^2 (1-sin^2(phi_t)sin^2(theta_t)) / (2 d_t))|^2
    GainResult gain_closed_form(const IrsGrid &grid, double d_t, const Direction &tx_dir,
                                double wavelength);

    // Mid-fidelity comparator: the separable quadratic-phase (Gauss-type)
    // sums evaluated directly, before the index-squared approximation that
    // yields the Dirichlet form.
    GainResult gain_fresnel_exactsum(const IrsGrid &grid, double d_t, const Direction &tx_dir,
                                     double wavelength);
}

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

#include <vector>

#include "thzirs/constants.hpp"
#include "thzirs/geometry.hpp"

// Plate-scattering model of a single reflecting element and the resulting
// per-element and direct-link path loss at THz carriers. Each element is
// treated as a perfectly conducting plate under physical optics, with a
// transverse-electric, x-polarized incident plane wave arriving in the
// yz-plane. All path losses are linear power ratios.

namespace thzirs
{
    // Carrier and link-budget parameters. Linear units throughout; dB/dBm
    // conversions happen at the configuration boundary.
    struct RfParams
    {
        double freq = 0.0;          // carrier frequency f [Hz]
        double wavelength = 0.0;    // lambda [m]; c/f unless overridden
        double kappa_abs = 0.0;     // molecular absorption coefficient [1/m]
        double gain_tx = 1.0;       // transmit antenna gain, linear
        double gain_rx = 1.0;       // receive antenna gain, linear
        double power_tx = 0.0;      // transmit power P_t [W]
        double noise_density = 0.0; // noise power spectral density [W/Hz]
        double bandwidth = 0.0;     // signal bandwidth B [Hz]

        static RfParams from_frequency(double freq_hz, double kappa_abs, double gain_tx,
                                       double gain_rx, double power_tx, double noise_density,
                                       double bandwidth);

        // 300 GHz reference configuration: kappa 0.0033 1/m, 20 dBi gains,
        // 10 dBm transmit power, -174 dBm/Hz noise density, 10 GHz bandwidth.
        static RfParams thz_reference();

        double wavenumber() const { return two_pi / wavelength; } // k = 2*pi/lambda
        double noise_power() const { return noise_density * bandwidth; } // sigma^2 [W]
        void validate() const;
    };

    // Incidence/observation triple of the scattering pattern. theta_t is the
    // transmit polar angle, (theta_r, phi_r) the observation polar angle and
    // scattering-plane azimuth. The composite-link path loss uses angles in
    // [0, pi/2]; the scattered-field sweeps also accept signed theta_r.
    struct ScatterAngles
    {
        double theta_t = 0.0; // [rad]
        double theta_r = 0.0; // [rad]
        double phi_r = 0.0;   // [rad]

        // Angle triple seen from the (0,0)th element for a given Tx/Rx pair.
        static ScatterAngles from_placements(const Placement &tx, const Placement &rx);
    };

    // Scattering pattern F = cos^2(theta_t) * (cos^2(theta_r)cos^2(phi_r) + sin^2(phi_r)),
    // in [0, 1].
    double pattern_f(const ScatterAngles &angles);

    // Unnormalized sinc, sin(t)/t with sinc(0) = 1.
    double sinc(double t);

    // Squared magnitude of the field scattered by one element towards
    // (d_r, theta_r, phi_r), for incident squared field e_i_sq:
    //   (L_x L_y / lambda)^2 * e_i_sq / d_r^2 * F * sinc^2(X) * sinc^2(Y)
    // with X = (pi L_x/lambda) sin(theta_r) cos(phi_r) and
    //      Y = (pi L_y/lambda) (sin(theta_r) sin(phi_r) - sin(theta_t)).
    // Valid when the observer is in the far field of the individual element.
    double scattered_field_sq_exact(double e_i_sq, const IrsGrid &grid, const ScatterAngles &angles,
                                    double d_r, double wavelength);

    // Same with sinc terms dropped (accurate for sub-wavelength elements);
    // upper-bounds the exact value everywhere.
    double scattered_field_sq_approx(double e_i_sq, const IrsGrid &grid, const ScatterAngles &angles,
                                     double d_r, double wavelength);

    // Two-hop path loss through one element:
    //   G_t G_r (L_x L_y)^2 / (4 pi d_t d_r)^2 * F * exp(-kappa_abs (d_t + d_r))
    double element_path_loss(const RfParams &params, const IrsGrid &grid, double d_t, double d_r,
                             const ScatterAngles &angles);

    // Per-element path loss across the whole surface, row-major (index n*n_y + m).
    // Distances are exact per element; the angle triple is taken once from the
    // (0,0)th reference, matching the near-constant pattern across the small
    // aperture.
    struct PathLossMap
    {
        int n_x = 0;
        int n_y = 0;
        std::vector<double> pl; // linear power ratios, row-major

        double at(int n, int m) const { return pl[static_cast<std::size_t>(n) * n_y + m]; }
        double spread_db() const; // max - min over the map, in dB
    };

    PathLossMap path_loss_map(const RfParams &params, const IrsGrid &grid, const Placement &tx,
                              const Placement &rx);

    // Free-space direct-link path loss with molecular absorption:
    //   G_t G_r lambda^2 / (4 pi d_d)^2 * exp(-kappa_abs d_d)
    double mimo_path_loss(const RfParams &params, double d_d);

    // Split of the two-hop loss into one-way factors whose product recovers
    // element_path_loss. The pattern splits as F = F_t * F_r with
    // F_t = cos^2(theta_t) and F_r = cos^2(theta_r)cos^2(phi_r) + sin^2(phi_r).
    double one_way_path_loss_tx(const RfParams &params, const IrsGrid &grid, double d_t,
                                double polar_t);
    double one_way_path_loss_rx(const RfParams &params, const IrsGrid &grid, double d_r,
                                double polar_r, double azimuth_r);
}

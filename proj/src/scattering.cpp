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

#include "thzirs/scattering.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "thzirs/units.hpp"

namespace thzirs
{

    RfParams RfParams::from_frequency(double freq_hz, double kappa_abs, double gain_tx,
                                      double gain_rx, double power_tx, double noise_density,
                                      double bandwidth)
    {
        RfParams params;
        params.freq = freq_hz;
        params.wavelength = speed_of_light / freq_hz;
        params.kappa_abs = kappa_abs;
        params.gain_tx = gain_tx;
        params.gain_rx = gain_rx;
        params.power_tx = power_tx;
        params.noise_density = noise_density;
        params.bandwidth = bandwidth;
        params.validate();
        return params;
    }

    RfParams RfParams::thz_reference()
    {
        return from_frequency(300e9, 0.0033, db_to_linear(20.0), db_to_linear(20.0),
                              dbm_to_watts(10.0), dbm_to_watts(-174.0), 10e9);
    }

    void RfParams::validate() const
    {
        if (freq <= 0.0 || wavelength <= 0.0 || kappa_abs < 0.0)
            throw std::invalid_argument("RfParams: frequency, wavelength and absorption must be valid");
        if (gain_tx <= 0.0 || gain_rx <= 0.0)
            throw std::invalid_argument("RfParams: antenna gains must be positive");
        if (power_tx <= 0.0 || noise_density <= 0.0 || bandwidth <= 0.0)
            throw std::invalid_argument("RfParams: power, noise density and bandwidth must be positive");
    }

    ScatterAngles ScatterAngles::from_placements(const Placement &tx, const Placement &rx)
    {
        return {tx.polar, rx.polar, rx.azimuth};
    }

    double pattern_f(const ScatterAngles &angles)
    {
        const double ct = std::cos(angles.theta_t);
        const double cr = std::cos(angles.theta_r);
        const double cp = std::cos(angles.phi_r);
        const double sp = std::sin(angles.phi_r);
        return ct * ct * (cr * cr * cp * cp + sp * sp);
    }

    double sinc(double t)
    {
        if (t == 0.0)
            return 1.0;
        return std::sin(t) / t;
    }

    namespace
    {
        void check_distance(double d, const char *what)
        {
            if (d <= 0.0)
                throw std::domain_error(std::string(what) + ": distance must be positive");
        }
    }

    double scattered_field_sq_exact(double e_i_sq, const IrsGrid &grid, const ScatterAngles &angles,
                                    double d_r, double wavelength)
    {
        check_distance(d_r, "scattered_field_sq_exact");
        if (wavelength <= 0.0)
            throw std::domain_error("scattered_field_sq_exact: wavelength must be positive");
        const double sr = std::sin(angles.theta_r);
        const double x = pi * grid.elem_len_x / wavelength * sr * std::cos(angles.phi_r);
        const double y = pi * grid.elem_len_y / wavelength *
                         (sr * std::sin(angles.phi_r) - std::sin(angles.theta_t));
        const double sx = sinc(x);
        const double sy = sinc(y);
        return scattered_field_sq_approx(e_i_sq, grid, angles, d_r, wavelength) * sx * sx * sy * sy;
    }

    double scattered_field_sq_approx(double e_i_sq, const IrsGrid &grid, const ScatterAngles &angles,
                                     double d_r, double wavelength)
    {
        check_distance(d_r, "scattered_field_sq_approx");
        if (wavelength <= 0.0)
            throw std::domain_error("scattered_field_sq_approx: wavelength must be positive");
        const double area_ratio = grid.elem_len_x * grid.elem_len_y / wavelength;
        return area_ratio * area_ratio * e_i_sq / (d_r * d_r) * pattern_f(angles);
    }

    double element_path_loss(const RfParams &params, const IrsGrid &grid, double d_t, double d_r,
                             const ScatterAngles &angles)
    {
        check_distance(d_t, "element_path_loss");
        check_distance(d_r, "element_path_loss");
        const double area = grid.elem_len_x * grid.elem_len_y;
        const double spread = 4.0 * pi * d_t * d_r;
        return params.gain_tx * params.gain_rx * area * area / (spread * spread) *
               pattern_f(angles) * std::exp(-params.kappa_abs * (d_t + d_r));
    }

    double PathLossMap::spread_db() const
    {
        double lo = pl.front();
        double hi = pl.front();
        for (double v : pl)
        {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return linear_to_db(hi) - linear_to_db(lo);
    }

    PathLossMap path_loss_map(const RfParams &params, const IrsGrid &grid, const Placement &tx,
                              const Placement &rx)
    {
        grid.validate();
        const ScatterAngles angles = ScatterAngles::from_placements(tx, rx);
        PathLossMap map;
        map.n_x = grid.n_x;
        map.n_y = grid.n_y;
        map.pl.resize(static_cast<std::size_t>(grid.n_elements()));
        for (int n = 0; n < grid.n_x; ++n)
            for (int m = 0; m < grid.n_y; ++m)
            {
                const double d_t = element_distance(tx.cart, n, m, grid);
                const double d_r = element_distance(rx.cart, n, m, grid);
                map.pl[static_cast<std::size_t>(n) * grid.n_y + m] =
                    element_path_loss(params, grid, d_t, d_r, angles);
            }
        return map;
    }

    double mimo_path_loss(const RfParams &params, double d_d)
    {
        check_distance(d_d, "mimo_path_loss");
        const double spread = params.wavelength / (4.0 * pi * d_d);
        return params.gain_tx * params.gain_rx * spread * spread *
               std::exp(-params.kappa_abs * d_d);
    }

    double one_way_path_loss_tx(const RfParams &params, const IrsGrid &grid, double d_t,
                                double polar_t)
    {
        check_distance(d_t, "one_way_path_loss_tx");
        const double ct = std::cos(polar_t);
        return params.gain_tx * grid.elem_len_x * grid.elem_len_y * ct * ct *
               std::exp(-params.kappa_abs * d_t) / (4.0 * pi * d_t * d_t);
    }

    double one_way_path_loss_rx(const RfParams &params, const IrsGrid &grid, double d_r,
                                double polar_r, double azimuth_r)
    {
        check_distance(d_r, "one_way_path_loss_rx");
        const double cr = std::cos(polar_r);
        const double cp = std::cos(azimuth_r);
        const double sp = std::sin(azimuth_r);
        const double f_r = cr * cr * cp * cp + sp * sp;
        return params.gain_rx * grid.elem_len_x * grid.elem_len_y * f_r *
               std::exp(-params.kappa_abs * d_r) / (4.0 * pi * d_r * d_r);
    }

}

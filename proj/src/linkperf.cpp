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

#include "thzirs/linkperf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thzirs
{

    void HardwareProfile::validate() const
    {
        if (n_t < 1 || n_r < 1)
            throw std::invalid_argument("HardwareProfile: antenna counts must be >= 1");
        if (p_ps < 0.0 || p_pa < 0.0)
            throw std::invalid_argument("HardwareProfile: component powers must be non-negative");
    }

    double snr_mimo(const RfParams &params, const HardwareProfile &hw, double d_d)
    {
        hw.validate();
        return static_cast<double>(hw.n_r) * hw.n_t * params.power_tx *
               mimo_path_loss(params, d_d) / params.noise_power();
    }

    double snr_irs(const RfParams &params, const HardwareProfile &hw, long long n_elements,
                   const IrsGrid &grid, double d_t, double d_r, const ScatterAngles &angles)
    {
        hw.validate();
        if (n_elements < 1)
            throw std::invalid_argument("snr_irs: element count must be >= 1");
        const double n = static_cast<double>(n_elements);
        return static_cast<double>(hw.n_t) * hw.n_r * n * n * params.power_tx *
               element_path_loss(params, grid, d_t, d_r, angles) / params.noise_power();
    }

    double power_consumption(const HardwareProfile &hw, double p_t)
    {
        hw.validate();
        return p_t + static_cast<double>(hw.n_r + hw.n_t) * (hw.p_ps + hw.p_pa);
    }

    double achievable_rate(double bandwidth, double snr)
    {
        if (snr < 0.0)
            throw std::domain_error("achievable_rate: SNR must be non-negative");
        return bandwidth * std::log2(1.0 + snr);
    }

    namespace
    {
        // Guard ceil() against reals sitting a rounding error above an integer.
        long long ceil_count(double real_value)
        {
            const double slack = 1e-12 * std::max(1.0, real_value);
            return static_cast<long long>(std::ceil(real_value - slack));
        }

        void check_nstar_inputs(double alpha, double d_t, double d_r, double d_d)
        {
            if (alpha < 1.0)
                throw std::invalid_argument("n_star: alpha must be >= 1");
            if (d_t <= 0.0 || d_r <= 0.0 || d_d <= 0.0)
                throw std::domain_error("n_star: distances must be positive");
        }
    }

    double n_star_real(double alpha, const RfParams &params, double d_t, double d_r, double d_d,
                       const ScatterAngles &angles, const IrsGrid &grid)
    {
        check_nstar_inputs(alpha, d_t, d_r, d_d);
        const double f = pattern_f(angles);
        if (f < 1e-24)
            throw std::domain_error("n_star: scattering pattern vanishes for grazing geometry");
        const double area = grid.elem_len_x * grid.elem_len_y;
        return alpha * params.wavelength / area * d_t * d_r / (std::sqrt(f) * d_d) *
               std::exp(-0.5 * params.kappa_abs * (d_d - d_r - d_t));
    }

    double n_star_real_from_path_loss(double alpha, const RfParams &params, double d_t, double d_r,
                                      double d_d, const ScatterAngles &angles, const IrsGrid &grid)
    {
        check_nstar_inputs(alpha, d_t, d_r, d_d);
        if (pattern_f(angles) < 1e-24)
            throw std::domain_error("n_star: per-element path loss vanishes for grazing geometry");
        const double pl_irs = element_path_loss(params, grid, d_t, d_r, angles);
        return std::sqrt(alpha * alpha * mimo_path_loss(params, d_d) / pl_irs);
    }

    long long n_star(double alpha, const RfParams &params, double d_t, double d_r, double d_d,
                     const ScatterAngles &angles, const IrsGrid &grid)
    {
        return ceil_count(n_star_real(alpha, params, d_t, d_r, d_d, angles, grid));
    }

    double n_star_fixed_irs_real(double alpha, const RfParams &params, double d_t, double d_r,
                                 double theta_t, const IrsGrid &grid)
    {
        if (alpha < 1.0)
            throw std::invalid_argument("n_star_fixed_irs: alpha must be >= 1");
        if (d_t <= 0.0 || d_r <= d_t)
            throw std::domain_error("n_star_fixed_irs: requires d_r > d_t > 0");
        const double ct = std::cos(theta_t);
        if (ct < 1e-12)
            throw std::domain_error("n_star_fixed_irs: theta_t must be below pi/2");
        const double area = grid.elem_len_x * grid.elem_len_y;
        const double d_direct = std::sqrt(d_r * d_r - d_t * d_t);
        return alpha * params.wavelength / area * d_t * d_r / (ct * d_direct) *
               std::exp(-0.5 * params.kappa_abs * (d_direct - d_r - d_t));
    }

    long long n_star_fixed_irs(double alpha, const RfParams &params, double d_t, double d_r,
                               double theta_t, const IrsGrid &grid)
    {
        return ceil_count(n_star_fixed_irs_real(alpha, params, d_t, d_r, theta_t, grid));
    }

    double n_star_max_real(double alpha, const RfParams &params, double d_t, double theta_t,
                           const IrsGrid &grid)
    {
        if (alpha < 1.0)
            throw std::invalid_argument("n_star_max: alpha must be >= 1");
        if (d_t <= 0.0)
            throw std::domain_error("n_star_max: distance must be positive");
        const double ct = std::cos(theta_t);
        if (ct < 1e-12)
            throw std::domain_error("n_star_max: theta_t must be below pi/2");
        const double area = grid.elem_len_x * grid.elem_len_y;
        return alpha * params.wavelength / area * d_t / ct * std::exp(0.5 * params.kappa_abs * d_t);
    }

    long long n_star_max(double alpha, const RfParams &params, double d_t, double theta_t,
                         const IrsGrid &grid)
    {
        return ceil_count(n_star_max_real(alpha, params, d_t, theta_t, grid));
    }

    EeComparison ee_comparison(const RfParams &params, const HardwareProfile &hw, double alpha,
                               const Placement &tx, const Placement &rx, const IrsGrid &grid,
                               long long n_elements_override)
    {
        if (alpha < 1.0)
            throw std::invalid_argument("ee_comparison: alpha must be >= 1");
        hw.validate();

        const double d_d = distance(rx.cart, tx.cart);
        const ScatterAngles angles = ScatterAngles::from_placements(tx, rx);

        EeComparison cmp;
        cmp.n_star_real = n_star_real(alpha, params, tx.dist, rx.dist, d_d, angles, grid);
        const long long n_elements =
            n_elements_override > 0 ? n_elements_override : ceil_count(cmp.n_star_real);

        cmp.direct.snr = snr_mimo(params, hw, d_d);
        cmp.direct.rate = achievable_rate(params.bandwidth, cmp.direct.snr);
        cmp.direct.power = power_consumption(hw, params.power_tx);
        cmp.direct.ee = cmp.direct.rate / cmp.direct.power;
        cmp.direct.n_elements = 0;

        // The assisted link runs reduced arrays; non-integer N/alpha rounds to
        // the nearest count >= 1.
        HardwareProfile hw_irs = hw;
        hw_irs.n_t = std::max(1, static_cast<int>(std::lround(hw.n_t / alpha)));
        hw_irs.n_r = std::max(1, static_cast<int>(std::lround(hw.n_r / alpha)));

        cmp.irs.snr = snr_irs(params, hw_irs, n_elements, grid, tx.dist, rx.dist, angles);
        cmp.irs.rate = achievable_rate(params.bandwidth, cmp.irs.snr);
        cmp.irs.power = power_consumption(hw_irs, params.power_tx);
        cmp.irs.ee = cmp.irs.rate / cmp.irs.power;
        cmp.irs.n_elements = n_elements;

        cmp.irs_meets_rate = cmp.irs.rate >= cmp.direct.rate;
        return cmp;
    }

}

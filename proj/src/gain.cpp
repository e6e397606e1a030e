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

#include "thzirs/gain.hpp"

#include <cstdlib>
#include <stdexcept>

#include "thzirs/summation.hpp"
#include "thzirs/units.hpp"

namespace thzirs
{

    PhaseProfile beamfocus_profile(const IrsGrid &grid, const Placement &tx, const Placement &rx,
                                   double wavelength)
    {
        grid.validate();
        const double k = two_pi / wavelength;
        std::vector<double> phases(static_cast<std::size_t>(grid.n_elements()));
        for (int n = 0; n < grid.n_x; ++n)
            for (int m = 0; m < grid.n_y; ++m)
            {
                const double d_sum = element_distance(tx.cart, n, m, grid) +
                                     element_distance(rx.cart, n, m, grid);
                phases[static_cast<std::size_t>(n) * grid.n_y + m] = k * d_sum;
            }
        PhaseProfile profile = PhaseProfile::from_phases(grid.n_x, grid.n_y, std::move(phases));
        profile.kind = ProfileKind::Beamfocus;
        return profile;
    }

    PhaseProfile beamform_profile(const IrsGrid &grid, const Direction &tx_dir,
                                  const Direction &rx_dir, double wavelength)
    {
        grid.validate();
        const double k = two_pi / wavelength;
        const double ux = std::cos(tx_dir.azimuth) * std::sin(tx_dir.polar) +
                          std::cos(rx_dir.azimuth) * std::sin(rx_dir.polar);
        const double uy = std::sin(tx_dir.azimuth) * std::sin(tx_dir.polar) +
                          std::sin(rx_dir.azimuth) * std::sin(rx_dir.polar);
        std::vector<double> phases(static_cast<std::size_t>(grid.n_elements()));
        for (int n = 0; n < grid.n_x; ++n)
            for (int m = 0; m < grid.n_y; ++m)
                phases[static_cast<std::size_t>(n) * grid.n_y + m] =
                    -k * (n * grid.pitch_x() * ux + m * grid.pitch_y() * uy);
        PhaseProfile profile = PhaseProfile::from_phases(grid.n_x, grid.n_y, std::move(phases));
        profile.kind = ProfileKind::FarFieldBeamform;
        return profile;
    }

    GainResult normalized_gain(const PhaseProfile &profile, const IrsGrid &grid, const Placement &tx,
                               const Placement &rx, double wavelength)
    {
        grid.validate();
        if (profile.n_x != grid.n_x || profile.n_y != grid.n_y)
            throw std::invalid_argument("normalized_gain: profile does not match grid");
        const double k = two_pi / wavelength;
        std::vector<std::complex<double>> terms(static_cast<std::size_t>(grid.n_elements()));
        for (int n = 0; n < grid.n_x; ++n)
            for (int m = 0; m < grid.n_y; ++m)
            {
                const std::size_t i = static_cast<std::size_t>(n) * grid.n_y + m;
                const double d_sum = element_distance(tx.cart, n, m, grid) +
                                     element_distance(rx.cart, n, m, grid);
                terms[i] = std::polar(1.0, profile.phases[i] - k * d_sum);
            }
        const std::complex<double> sum = pairwise_sum(terms);
        const double n_total = static_cast<double>(grid.n_elements());
        return {std::norm(sum) / (n_total * n_total), GainMethod::ExactSum, profile.kind};
    }

    double fresnel_tx_distance(int n, int m, const IrsGrid &grid, const Placement &tx)
    {
        if (n < 0 || n >= grid.n_x || m < 0 || m >= grid.n_y)
            throw std::out_of_range("fresnel_tx_distance: element index outside grid");
        if (tx.dist <= 0.0)
            throw std::domain_error("fresnel_tx_distance: distance must be positive");
        const double ux = std::cos(tx.azimuth) * std::sin(tx.polar);
        const double uy = std::sin(tx.azimuth) * std::sin(tx.polar);
        const double nx = n * grid.pitch_x();
        const double my = m * grid.pitch_y();
        return tx.dist + nx * nx * (1.0 - ux * ux) / (2.0 * tx.dist) - nx * ux +
               my * my * (1.0 - uy * uy) / (2.0 * tx.dist) - my * uy;
    }

    double dirichlet_sinc(long long n, double x)
    {
        if (n < 1)
            throw std::invalid_argument("dirichlet_sinc: order must be >= 1");
        const double half_sin = std::sin(0.5 * x);
        if (std::abs(half_sin) < 1e-9)
        {
            // Removable singularity: near x = 2 pi k the limit is
            // (-1)^(k (n - 1)); evaluating the quotient there would lose all
            // precision.
            const long long k = std::llround(x / two_pi);
            const bool odd = ((std::llabs(k) % 2) * ((n - 1) % 2)) % 2 == 1;
            return odd ? -1.0 : 1.0;
        }
        return std::sin(0.5 * static_cast<double>(n) * x) / (static_cast<double>(n) * half_sin);
    }

    namespace
    {
        // Quadratic-phase coefficients of the Fresnel expansion along the two
        // grid axes, k d^2 (1 - u^2) / (2 D_t) with u the direction cosine.
        struct AxisCoefficients
        {
            double cx = 0.0;
            double cy = 0.0;
        };

        AxisCoefficients fresnel_axis_coefficients(const IrsGrid &grid, double d_t,
                                                   const Direction &tx_dir, double wavelength)
        {
            if (d_t <= 0.0)
                throw std::domain_error("gain: Tx distance must be positive");
            const double k = two_pi / wavelength;
            const double ux = std::cos(tx_dir.azimuth) * std::sin(tx_dir.polar);
            const double uy = std::sin(tx_dir.azimuth) * std::sin(tx_dir.polar);
            AxisCoefficients coef;
            coef.cx = k * grid.pitch_x() * grid.pitch_x() * (1.0 - ux * ux) / (2.0 * d_t);
            coef.cy = k * grid.pitch_y() * grid.pitch_y() * (1.0 - uy * uy) / (2.0 * d_t);
            return coef;
        }

        // |sum_{n<count} exp(-j c n^2)|^2 / count^2
        double quadratic_sum_gain(int count, double c)
        {
            std::vector<std::complex<double>> terms(static_cast<std::size_t>(count));
            for (int n = 0; n < count; ++n)
                terms[static_cast<std::size_t>(n)] =
                    std::polar(1.0, -c * static_cast<double>(n) * static_cast<double>(n));
            const std::complex<double> sum = pairwise_sum(terms);
            return std::norm(sum) / (static_cast<double>(count) * count);
        }
    }

    GainResult gain_closed_form(const IrsGrid &grid, double d_t, const Direction &tx_dir,
                                double wavelength)
    {
        grid.validate();
        const AxisCoefficients coef = fresnel_axis_coefficients(grid, d_t, tx_dir, wavelength);
        const long long nx_sq = static_cast<long long>(grid.n_x) * grid.n_x;
        const long long ny_sq = static_cast<long long>(grid.n_y) * grid.n_y;
        const double dx = dirichlet_sinc(nx_sq, coef.cx);
        const double dy = dirichlet_sinc(ny_sq, coef.cy);
        return {dx * dx * dy * dy, GainMethod::ClosedForm, ProfileKind::FarFieldBeamform};
    }

    GainResult gain_fresnel_exactsum(const IrsGrid &grid, double d_t, const Direction &tx_dir,
                                     double wavelength)
    {
        grid.validate();
        const AxisCoefficients coef = fresnel_axis_coefficients(grid, d_t, tx_dir, wavelength);
        const double gx = quadratic_sum_gain(grid.n_x, coef.cx);
        const double gy = quadratic_sum_gain(grid.n_y, coef.cy);
        return {gx * gy, GainMethod::ExactSum, ProfileKind::FarFieldBeamform};
    }

}

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

#include "thzirs/channel.hpp"

#include <stdexcept>
#include <utility>

#include "thzirs/summation.hpp"
#include "thzirs/units.hpp"

namespace thzirs
{

    PhaseProfile PhaseProfile::from_phases(int n_x, int n_y, std::vector<double> raw)
    {
        if (n_x < 1 || n_y < 1)
            throw std::invalid_argument("PhaseProfile: counts must be >= 1");
        if (raw.size() != static_cast<std::size_t>(n_x) * n_y)
            throw std::invalid_argument("PhaseProfile: phase vector size does not match grid");
        PhaseProfile profile;
        profile.n_x = n_x;
        profile.n_y = n_y;
        profile.phases = std::move(raw);
        for (double &p : profile.phases)
            p = wrap_to_pi(p);
        return profile;
    }

    ChannelGrid one_way_channel(const Placement &place, const IrsGrid &grid, const RfParams &params,
                                PlMode pl_mode, LinkEnd end)
    {
        grid.validate();
        const double k = params.wavenumber();
        const auto pl_at = [&](double d)
        {
            return end == LinkEnd::Tx
                       ? one_way_path_loss_tx(params, grid, d, place.polar)
                       : one_way_path_loss_rx(params, grid, d, place.polar, place.azimuth);
        };
        const double const_mag = std::sqrt(pl_at(place.dist));

        ChannelGrid channel;
        channel.n_x = grid.n_x;
        channel.n_y = grid.n_y;
        channel.amp.resize(static_cast<std::size_t>(grid.n_elements()));
        for (int n = 0; n < grid.n_x; ++n)
            for (int m = 0; m < grid.n_y; ++m)
            {
                const double d = element_distance(place.cart, n, m, grid);
                const double mag = pl_mode == PlMode::Constant ? const_mag : std::sqrt(pl_at(d));
                channel.amp[static_cast<std::size_t>(n) * grid.n_y + m] = std::polar(mag, -k * d);
            }
        return channel;
    }

    std::complex<double> compose_rx_amplitude(const ChannelGrid &tx_grid, const ChannelGrid &rx_grid,
                                              const PhaseProfile &profile)
    {
        if (tx_grid.n_x != rx_grid.n_x || tx_grid.n_y != rx_grid.n_y ||
            tx_grid.n_x != profile.n_x || tx_grid.n_y != profile.n_y)
            throw std::invalid_argument("compose_rx_amplitude: dimension mismatch");
        std::vector<std::complex<double>> terms(tx_grid.amp.size());
        for (std::size_t i = 0; i < terms.size(); ++i)
            terms[i] = tx_grid.amp[i] * rx_grid.amp[i] * std::polar(1.0, profile.phases[i]);
        return pairwise_sum(terms);
    }

    double snr_exact(const ChannelGrid &tx_grid, const ChannelGrid &rx_grid,
                     const PhaseProfile &profile, const RfParams &params)
    {
        const std::complex<double> amp = compose_rx_amplitude(tx_grid, rx_grid, profile);
        return params.power_tx / params.noise_power() * std::norm(amp);
    }

    std::vector<std::complex<double>> steering_vector(double azimuth, double polar,
                                                      const IrsGrid &grid, double wavelength)
    {
        grid.validate();
        const double k = two_pi / wavelength;
        const double ux = std::cos(azimuth) * std::sin(polar); // direction cosine along x
        const double uy = std::sin(azimuth) * std::sin(polar); // direction cosine along y
        std::vector<std::complex<double>> vec(static_cast<std::size_t>(grid.n_elements()));
        for (int m = 0; m < grid.n_y; ++m)
            for (int n = 0; n < grid.n_x; ++n)
                vec[static_cast<std::size_t>(m) * grid.n_x + n] =
                    std::polar(1.0, k * (n * grid.pitch_x() * ux + m * grid.pitch_y() * uy));
        return vec;
    }

    FarFieldRankOne far_field_rank_one(const Placement &place_tx, const Placement &place_rx,
                                       const IrsGrid &grid, const RfParams &params, int n_t, int n_r)
    {
        if (n_t < 1 || n_r < 1)
            throw std::invalid_argument("far_field_rank_one: antenna counts must be >= 1");
        const double k = params.wavenumber();
        const RegionBounds bounds = region_bounds(grid, params.wavelength);

        FarFieldRankOne link;
        link.pl_t = one_way_path_loss_tx(params, grid, place_tx.dist, place_tx.polar);
        link.pl_r = one_way_path_loss_rx(params, grid, place_rx.dist, place_rx.polar,
                                         place_rx.azimuth);
        link.tx_factor = std::polar(std::sqrt(link.pl_t), -k * place_tx.dist);
        link.rx_factor = std::polar(std::sqrt(link.pl_r), -k * place_rx.dist);
        link.n_t = n_t;
        link.n_r = n_r;
        // The factorization degrades inside the Fresnel region; flag it
        // rather than failing.
        link.fresnel_warning = place_tx.dist <= bounds.fraunhofer ||
                               place_rx.dist <= bounds.fraunhofer;
        return link;
    }

}

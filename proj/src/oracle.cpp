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

#include "thzirs/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace thzirs::oracle
{

    std::complex<double> compose_naive(const ChannelGrid &tx_grid, const ChannelGrid &rx_grid,
                                       const PhaseProfile &profile)
    {
        if (tx_grid.n_x != rx_grid.n_x || tx_grid.n_y != rx_grid.n_y ||
            tx_grid.n_x != profile.n_x || tx_grid.n_y != profile.n_y)
            throw std::invalid_argument("compose_naive: dimension mismatch");
        long double acc_re = 0.0L;
        long double acc_im = 0.0L;
        for (std::size_t i = 0; i < tx_grid.amp.size(); ++i)
        {
            const long double a_re = tx_grid.amp[i].real();
            const long double a_im = tx_grid.amp[i].imag();
            const long double b_re = rx_grid.amp[i].real();
            const long double b_im = rx_grid.amp[i].imag();
            const long double c_re = std::cos(static_cast<long double>(profile.phases[i]));
            const long double c_im = std::sin(static_cast<long double>(profile.phases[i]));
            const long double ab_re = a_re * b_re - a_im * b_im;
            const long double ab_im = a_re * b_im + a_im * b_re;
            acc_re += ab_re * c_re - ab_im * c_im;
            acc_im += ab_re * c_im + ab_im * c_re;
        }
        return {static_cast<double>(acc_re), static_cast<double>(acc_im)};
    }

    double element_distance_direct(const Vec3 &p, int n, int m, const IrsGrid &grid)
    {
        const long double ex = static_cast<long double>(n) *
                               (static_cast<long double>(grid.gap_x) + grid.elem_len_x);
        const long double ey = static_cast<long double>(m) *
                               (static_cast<long double>(grid.gap_y) + grid.elem_len_y);
        const long double dx = static_cast<long double>(p.x) - ex;
        const long double dy = static_cast<long double>(p.y) - ey;
        const long double dz = static_cast<long double>(p.z);
        return static_cast<double>(std::sqrt(dx * dx + dy * dy + dz * dz));
    }

    double normalized_gain_naive(const PhaseProfile &profile, const IrsGrid &grid,
                                 const Placement &tx, const Placement &rx, double wavelength)
    {
        if (profile.n_x != grid.n_x || profile.n_y != grid.n_y)
            throw std::invalid_argument("normalized_gain_naive: profile does not match grid");
        const long double k = 2.0L * 3.14159265358979323846264338327950288L /
                              static_cast<long double>(wavelength);
        const auto dist_ld = [&grid](const Vec3 &p, int n, int m)
        {
            const long double ex = static_cast<long double>(n) *
                                   (static_cast<long double>(grid.gap_x) + grid.elem_len_x);
            const long double ey = static_cast<long double>(m) *
                                   (static_cast<long double>(grid.gap_y) + grid.elem_len_y);
            const long double dx = static_cast<long double>(p.x) - ex;
            const long double dy = static_cast<long double>(p.y) - ey;
            const long double dz = static_cast<long double>(p.z);
            return std::sqrt(dx * dx + dy * dy + dz * dz);
        };
        long double acc_re = 0.0L;
        long double acc_im = 0.0L;
        for (int n = 0; n < grid.n_x; ++n)
            for (int m = 0; m < grid.n_y; ++m)
            {
                const long double d_sum = dist_ld(tx.cart, n, m) + dist_ld(rx.cart, n, m);
                const long double phase =
                    static_cast<long double>(profile.phases[static_cast<std::size_t>(n) * grid.n_y + m]) -
                    k * d_sum;
                acc_re += std::cos(phase);
                acc_im += std::sin(phase);
            }
        const long double n_total = static_cast<long double>(grid.n_elements());
        const long double mag_sq = acc_re * acc_re + acc_im * acc_im;
        return static_cast<double>(mag_sq / (n_total * n_total));
    }

}

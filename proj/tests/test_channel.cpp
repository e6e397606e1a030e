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

#include <random>
#include <stdexcept>

#include "doctest.h"

#include "thzirs/channel.hpp"
#include "thzirs/gain.hpp"
#include "thzirs/linkperf.hpp"
#include "thzirs/oracle.hpp"
#include "thzirs/units.hpp"

using namespace thzirs;

namespace
{
    const RfParams rf = RfParams::thz_reference();

    PhaseProfile random_profile(std::mt19937_64 &rng, const IrsGrid &grid)
    {
        std::uniform_real_distribution<double> dist(-pi, pi);
        std::vector<double> phases(static_cast<std::size_t>(grid.n_elements()));
        for (double &p : phases)
            p = dist(rng);
        return PhaseProfile::from_phases(grid.n_x, grid.n_y, std::move(phases));
    }
}

TEST_CASE("one_way_channel on a 1x1 grid is the scalar one-hop factor")
{
    const IrsGrid grid = IrsGrid::half_wavelength(1, 1, rf.wavelength);
    const Placement tx = Placement::from_cartesian({0.0, -0.3, 0.6});
    const ChannelGrid channel = one_way_channel(tx, grid, rf, PlMode::PerElement, LinkEnd::Tx);
    REQUIRE(channel.amp.size() == 1);
    const double pl = one_way_path_loss_tx(rf, grid, tx.dist, tx.polar);
    CHECK(std::abs(channel.at(0, 0)) == doctest::Approx(std::sqrt(pl)).epsilon(1e-13));
    CHECK(std::arg(channel.at(0, 0)) ==
          doctest::Approx(wrap_to_pi(-rf.wavenumber() * tx.dist)).epsilon(1e-9));
}

TEST_CASE("channel magnitudes: constant mode flattens, exact phases stay")
{
    const IrsGrid grid = IrsGrid::half_wavelength(20, 20, rf.wavelength);
    const Placement tx = Placement::from_cartesian({0.0, -0.3, 0.6});
    const ChannelGrid constant = one_way_channel(tx, grid, rf, PlMode::Constant, LinkEnd::Tx);
    const ChannelGrid exact = one_way_channel(tx, grid, rf, PlMode::PerElement, LinkEnd::Tx);

    const double mag0 = std::abs(constant.at(0, 0));
    for (int n = 0; n < grid.n_x; n += 5)
        for (int m = 0; m < grid.n_y; m += 5)
        {
            CHECK(std::abs(constant.at(n, m)) == doctest::Approx(mag0).epsilon(1e-13));
            // Same phase in both modes, fixed by the exact element distance.
            const double d = element_distance(tx.cart, n, m, grid);
            const double expected = wrap_to_pi(-rf.wavenumber() * d);
            CHECK(wrap_to_pi(std::arg(constant.at(n, m)) - expected) ==
                  doctest::Approx(0.0).epsilon(1e-8));
            CHECK(wrap_to_pi(std::arg(exact.at(n, m)) - expected) ==
                  doctest::Approx(0.0).epsilon(1e-8));
        }

    // |entry|^2 equals the per-element one-way loss factor.
    const double pl_corner = one_way_path_loss_tx(
        rf, grid, element_distance(tx.cart, 19, 19, grid), tx.polar);
    CHECK(std::norm(exact.at(19, 19)) == doctest::Approx(pl_corner).epsilon(1e-12));
}

TEST_CASE("phase difference between elements follows the distance difference")
{
    const IrsGrid grid = IrsGrid::half_wavelength(16, 16, rf.wavelength);
    const Placement tx = Placement::from_cartesian({0.1, -0.2, 0.4});
    const ChannelGrid channel = one_way_channel(tx, grid, rf, PlMode::Constant, LinkEnd::Tx);
    const double k = rf.wavenumber();
    for (int n = 0; n < 16; n += 3)
        for (int m = 0; m < 16; m += 3)
        {
            const double measured =
                std::arg(channel.at(n, m) * std::conj(channel.at(0, 0)));
            const double expected = wrap_to_pi(
                -k * (oracle::element_distance_direct(tx.cart, n, m, grid) -
                      oracle::element_distance_direct(tx.cart, 0, 0, grid)));
            CHECK(wrap_to_pi(measured - expected) == doctest::Approx(0.0).epsilon(1e-9));
        }
}

TEST_CASE("compose_rx_amplitude agrees with the naive long-double oracle")
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> side(1.0, 33.0);
    for (int i = 0; i < 20; ++i)
    {
        const IrsGrid grid = IrsGrid::half_wavelength(
            static_cast<int>(side(rng)), static_cast<int>(side(rng)), rf.wavelength);
        const RegionBounds bounds = region_bounds(grid, rf.wavelength);
        std::uniform_real_distribution<double> dist(1.01 * bounds.reactive_upper,
                                                    bounds.fraunhofer);
        std::uniform_real_distribution<double> polar(0.0, 1.3);
        std::uniform_real_distribution<double> az(-pi, pi);
        const Placement tx = Placement::from_spherical(dist(rng), polar(rng), az(rng));
        const Placement rx = Placement::from_spherical(dist(rng), polar(rng), az(rng));
        const ChannelGrid ctx = one_way_channel(tx, grid, rf, PlMode::PerElement, LinkEnd::Tx);
        const ChannelGrid crx = one_way_channel(rx, grid, rf, PlMode::PerElement, LinkEnd::Rx);
        const PhaseProfile profile = random_profile(rng, grid);
        const std::complex<double> fast = compose_rx_amplitude(ctx, crx, profile);
        const std::complex<double> slow = oracle::compose_naive(ctx, crx, profile);
        CHECK(std::abs(fast - slow) <= 1e-9 * std::abs(slow));
    }
}

TEST_CASE("conjugate-phase profile yields the real, maximal amplitude")
{
    const IrsGrid grid = IrsGrid::half_wavelength(12, 9, rf.wavelength);
    const Placement tx = Placement::from_cartesian({0.0, -0.05, 0.1});
    const Placement rx = Placement::from_cartesian({0.02, 0.06, 0.15});
    const ChannelGrid ctx = one_way_channel(tx, grid, rf, PlMode::PerElement, LinkEnd::Tx);
    const ChannelGrid crx = one_way_channel(rx, grid, rf, PlMode::PerElement, LinkEnd::Rx);
    const PhaseProfile focus = beamfocus_profile(grid, tx, rx, rf.wavelength);

    const std::complex<double> amp = compose_rx_amplitude(ctx, crx, focus);
    double sum_mags = 0.0;
    for (std::size_t i = 0; i < ctx.amp.size(); ++i)
        sum_mags += std::abs(ctx.amp[i]) * std::abs(crx.amp[i]);
    CHECK(amp.real() == doctest::Approx(sum_mags).epsilon(1e-12));
    CHECK(std::abs(amp.imag()) < 1e-12 * sum_mags);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 25; ++i)
        CHECK(std::abs(compose_rx_amplitude(ctx, crx, random_profile(rng, grid))) <=
              sum_mags * (1.0 + 1e-12));
}

TEST_CASE("compose_rx_amplitude rejects mismatched dimensions")
{
    const IrsGrid a = IrsGrid::half_wavelength(4, 4, rf.wavelength);
    const IrsGrid b = IrsGrid::half_wavelength(4, 5, rf.wavelength);
    const Placement p = Placement::from_cartesian({0.0, 0.0, 0.1});
    const ChannelGrid ca = one_way_channel(p, a, rf, PlMode::Constant, LinkEnd::Tx);
    const ChannelGrid cb = one_way_channel(p, b, rf, PlMode::Constant, LinkEnd::Rx);
    const PhaseProfile profile =
        PhaseProfile::from_phases(4, 4, std::vector<double>(16, 0.0));
    CHECK_THROWS_AS(compose_rx_amplitude(ca, cb, profile), std::invalid_argument);
}

TEST_CASE("snr_exact scales linearly in transmit power")
{
    const IrsGrid grid = IrsGrid::half_wavelength(8, 8, rf.wavelength);
    const Placement tx = Placement::from_cartesian({0.0, -0.3, 0.6});
    const Placement rx = Placement::from_cartesian({0.0, 1.0, 1.0});
    const ChannelGrid ctx = one_way_channel(tx, grid, rf, PlMode::PerElement, LinkEnd::Tx);
    const ChannelGrid crx = one_way_channel(rx, grid, rf, PlMode::PerElement, LinkEnd::Rx);
    const PhaseProfile focus = beamfocus_profile(grid, tx, rx, rf.wavelength);

    RfParams boosted = rf;
    boosted.power_tx *= 7.0;
    CHECK(snr_exact(ctx, crx, focus, boosted) ==
          doctest::Approx(7.0 * snr_exact(ctx, crx, focus, rf)).epsilon(1e-12));
}

TEST_CASE("beamfocused constant-mode SNR equals N^2 P_t PL / sigma^2")
{
    const IrsGrid grid = IrsGrid::half_wavelength(24, 24, rf.wavelength);
    const Placement tx = Placement::from_cartesian({0.0, -0.3, 0.6});
    const Placement rx = Placement::from_cartesian({0.0, 1.0, 1.0});
    const ChannelGrid ctx = one_way_channel(tx, grid, rf, PlMode::Constant, LinkEnd::Tx);
    const ChannelGrid crx = one_way_channel(rx, grid, rf, PlMode::Constant, LinkEnd::Rx);
    const PhaseProfile focus = beamfocus_profile(grid, tx, rx, rf.wavelength);

    const double pl = element_path_loss(rf, grid, tx.dist, rx.dist,
                                        ScatterAngles::from_placements(tx, rx));
    const double n = static_cast<double>(grid.n_elements());
    const double expected = n * n * rf.power_tx * pl / rf.noise_power();
    CHECK(snr_exact(ctx, crx, focus, rf) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("no profile beats beamfocusing")
{
    std::mt19937_64 rng(77);
    const IrsGrid grid = IrsGrid::half_wavelength(24, 24, rf.wavelength);
    const Placement tx = Placement::from_cartesian({0.0, -0.1, 0.3});
    const Placement rx = Placement::from_cartesian({0.05, 0.2, 0.5});
    const ChannelGrid ctx = one_way_channel(tx, grid, rf, PlMode::PerElement, LinkEnd::Tx);
    const ChannelGrid crx = one_way_channel(rx, grid, rf, PlMode::PerElement, LinkEnd::Rx);
    const double best = snr_exact(ctx, crx, beamfocus_profile(grid, tx, rx, rf.wavelength), rf);
    for (int i = 0; i < 1000; ++i)
        CHECK(snr_exact(ctx, crx, random_profile(rng, grid), rf) <= best * (1.0 + 1e-12));
}

TEST_CASE("phase wrapping and global shifts leave the physics unchanged")
{
    std::mt19937_64 rng(3);
    const IrsGrid grid = IrsGrid::half_wavelength(16, 16, rf.wavelength);
    const Placement tx = Placement::from_cartesian({0.0, -0.1, 0.3});
    const Placement rx = Placement::from_cartesian({0.05, 0.2, 0.5});
    const ChannelGrid ctx = one_way_channel(tx, grid, rf, PlMode::PerElement, LinkEnd::Tx);
    const ChannelGrid crx = one_way_channel(rx, grid, rf, PlMode::PerElement, LinkEnd::Rx);
    const PhaseProfile profile = random_profile(rng, grid);
    const std::complex<double> base = compose_rx_amplitude(ctx, crx, profile);

    // +-2 pi on every other entry.
    std::vector<double> shifted = profile.phases;
    for (std::size_t i = 0; i < shifted.size(); ++i)
        shifted[i] += (i % 2 == 0) ? two_pi : -two_pi;
    const std::complex<double> wrapped = compose_rx_amplitude(
        ctx, crx, PhaseProfile::from_phases(grid.n_x, grid.n_y, std::move(shifted)));
    CHECK(std::abs(wrapped - base) <= 1e-12 * std::abs(base));

    // A global offset rotates the amplitude without changing its magnitude.
    std::vector<double> offset = profile.phases;
    for (double &p : offset)
        p += 0.731;
    const std::complex<double> rotated = compose_rx_amplitude(
        ctx, crx, PhaseProfile::from_phases(grid.n_x, grid.n_y, std::move(offset)));
    CHECK(std::abs(rotated) == doctest::Approx(std::abs(base)).epsilon(1e-12));
}

TEST_CASE("constant-mode and exact-mode SNR stay within a quarter dB band")
{
    const IrsGrid grid = IrsGrid::half_wavelength(100, 100, rf.wavelength);
    const Placement tx = Placement::from_cartesian({0.0, -0.3, 0.6});
    const Placement rx = Placement::from_cartesian({0.0, 1.0, 1.0});
    const PhaseProfile focus = beamfocus_profile(grid, tx, rx, rf.wavelength);

    const double snr_const = snr_exact(one_way_channel(tx, grid, rf, PlMode::Constant, LinkEnd::Tx),
                                       one_way_channel(rx, grid, rf, PlMode::Constant, LinkEnd::Rx),
                                       focus, rf);
    const double snr_pe =
        snr_exact(one_way_channel(tx, grid, rf, PlMode::PerElement, LinkEnd::Tx),
                  one_way_channel(rx, grid, rf, PlMode::PerElement, LinkEnd::Rx), focus, rf);
    const double ratio = snr_const / snr_pe;
    CHECK(ratio >= 0.8);
    CHECK(ratio <= 1.25);
}

TEST_CASE("steering_vector structure and far-field limit")
{
    const IrsGrid grid = IrsGrid::half_wavelength(16, 16, rf.wavelength);

    SUBCASE("broadside gives the all-ones vector")
    {
        for (const auto &entry : steering_vector(0.3, 0.0, grid, rf.wavelength))
        {
            CHECK(entry.real() == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(std::abs(entry.imag()) < 1e-15);
        }
    }

    SUBCASE("entries are unit modulus with index-linear phases")
    {
        const double az = deg_to_rad(40.0);
        const double polar = deg_to_rad(30.0);
        const auto vec = steering_vector(az, polar, grid, rf.wavelength);
        const double k = rf.wavenumber();
        const double step_x = k * grid.pitch_x() * std::cos(az) * std::sin(polar);
        const double step_y = k * grid.pitch_y() * std::sin(az) * std::sin(polar);
        for (int m = 0; m < grid.n_y; m += 5)
            for (int n = 0; n < grid.n_x; n += 5)
            {
                const auto &entry = vec[static_cast<std::size_t>(m) * grid.n_x + n];
                CHECK(std::abs(entry) == doctest::Approx(1.0).epsilon(1e-14));
                CHECK(wrap_to_pi(std::arg(entry) - (n * step_x + m * step_y)) ==
                      doctest::Approx(0.0).epsilon(1e-9));
            }
    }

    SUBCASE("matches the spherical-wavefront phase at 100x the Fraunhofer distance")
    {
        const double az = deg_to_rad(40.0);
        const double polar = deg_to_rad(30.0);
        const RegionBounds bounds = region_bounds(grid, rf.wavelength);
        const Placement far = Placement::from_spherical(100.0 * bounds.fraunhofer, polar, az);
        const auto vec = steering_vector(az, polar, grid, rf.wavelength);
        const double k = rf.wavenumber();
        const double span = k * grid.max_dimension() * std::sin(polar);
        double worst = 0.0;
        for (int m = 0; m < grid.n_y; ++m)
            for (int n = 0; n < grid.n_x; ++n)
            {
                const double exact_phase =
                    k * (far.dist - element_distance(far.cart, n, m, grid));
                const auto &entry = vec[static_cast<std::size_t>(m) * grid.n_x + n];
                worst = std::max(
                    worst, std::abs(std::arg(entry * std::polar(1.0, -exact_phase))));
            }
        CHECK(worst / span < 1e-3);
    }
}

TEST_CASE("far_field_rank_one composes back to the closed-form SNR")
{
    const IrsGrid grid = IrsGrid::half_wavelength(20, 20, rf.wavelength);
    const RegionBounds bounds = region_bounds(grid, rf.wavelength);
    const Placement tx =
        Placement::from_spherical(5.0 * bounds.fraunhofer, deg_to_rad(20.0), deg_to_rad(-90.0));
    const Placement rx =
        Placement::from_spherical(8.0 * bounds.fraunhofer, deg_to_rad(35.0), deg_to_rad(90.0));

    const FarFieldRankOne link = far_field_rank_one(tx, rx, grid, rf, 16, 4);
    CHECK_FALSE(link.fresnel_warning);

    // Matched beamformer/combiner and aligned reflection phases recover
    // N_t N_r N^2 P_t PL / sigma^2.
    const double n = static_cast<double>(grid.n_elements());
    const double composed =
        16.0 * 4.0 * n * n * link.pl_t * link.pl_r * rf.power_tx / rf.noise_power();
    const HardwareProfile hw{16, 4};
    const double direct = snr_irs(rf, hw, grid.n_elements(), grid, tx.dist, rx.dist,
                                  ScatterAngles::from_placements(tx, rx));
    CHECK(composed == doctest::Approx(direct).epsilon(1e-9));

    // Factor magnitudes come from the one-way losses.
    CHECK(std::norm(link.tx_factor) == doctest::Approx(link.pl_t).epsilon(1e-12));
    CHECK(std::norm(link.rx_factor) == doctest::Approx(link.pl_r).epsilon(1e-12));
}

TEST_CASE("far_field_rank_one edge cases")
{
    SUBCASE("1x1 surface with single antennas reduces to a two-hop scalar link")
    {
        const IrsGrid tiny = IrsGrid::half_wavelength(1, 1, rf.wavelength);
        const Placement tx = Placement::from_spherical(0.5, 0.2, 0.1);
        const Placement rx = Placement::from_spherical(0.8, 0.3, 1.2);
        const FarFieldRankOne link = far_field_rank_one(tx, rx, tiny, rf, 1, 1);
        const double composed = link.pl_t * link.pl_r * rf.power_tx / rf.noise_power();
        const HardwareProfile hw{1, 1};
        CHECK(composed == doctest::Approx(snr_irs(rf, hw, 1, tiny, tx.dist, rx.dist,
                                                  ScatterAngles::from_placements(tx, rx)))
                              .epsilon(1e-12));
    }
    SUBCASE("swapping terminals with a symmetric pattern keeps the SNR")
    {
        const IrsGrid grid = IrsGrid::half_wavelength(10, 10, rf.wavelength);
        const double polar = deg_to_rad(25.0);
        const Placement a = Placement::from_spherical(1.5, polar, pi / 2.0);
        const Placement b = Placement::from_spherical(2.5, polar, pi / 2.0);
        const FarFieldRankOne fwd = far_field_rank_one(a, b, grid, rf, 4, 4);
        const FarFieldRankOne rev = far_field_rank_one(b, a, grid, rf, 4, 4);
        CHECK(fwd.pl_t * fwd.pl_r == doctest::Approx(rev.pl_t * rev.pl_r).epsilon(1e-12));
    }
    SUBCASE("Fresnel placements raise the warning flag")
    {
        const IrsGrid grid = IrsGrid::half_wavelength(100, 100, rf.wavelength);
        const Placement near = Placement::from_spherical(1.0, 0.2, 0.0);
        const Placement far = Placement::from_spherical(50.0, 0.2, 0.0);
        CHECK(far_field_rank_one(near, far, grid, rf, 2, 2).fresnel_warning);
        CHECK_FALSE(far_field_rank_one(far, far, grid, rf, 2, 2).fresnel_warning);
    }
}

TEST_CASE("PhaseProfile wraps on construction")
{
    const PhaseProfile profile =
        PhaseProfile::from_phases(1, 3, {7.0, -9.5, 0.25});
    for (double p : profile.phases)
    {
        CHECK(p <= pi);
        CHECK(p >= -pi);
    }
    CHECK(profile.at(0, 2) == doctest::Approx(0.25));
    CHECK_THROWS_AS(PhaseProfile::from_phases(2, 2, {0.0}), std::invalid_argument);
}

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

#include "thzirs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <utility>

#include "json.hpp"

#include "thzirs/gain.hpp"
#include "thzirs/oracle.hpp"
#include "thzirs/units.hpp"

namespace thzirs
{

    namespace
    {
        using Rng = std::mt19937_64;

        double uniform(Rng &rng, double lo, double hi)
        {
            return std::uniform_real_distribution<double>(lo, hi)(rng);
        }

        Placement random_fresnel_placement(Rng &rng, const IrsGrid &grid, double wavelength)
        {
            const RegionBounds bounds = region_bounds(grid, wavelength);
            const double dist = uniform(rng, 1.001 * bounds.reactive_upper, bounds.fraunhofer);
            return Placement::from_spherical(dist, uniform(rng, 0.0, 1.3),
                                             uniform(rng, -0.999 * pi, pi));
        }

        PhaseProfile random_profile(Rng &rng, const IrsGrid &grid)
        {
            std::vector<double> phases(static_cast<std::size_t>(grid.n_elements()));
            for (double &p : phases)
                p = uniform(rng, -pi, pi);
            return PhaseProfile::from_phases(grid.n_x, grid.n_y, std::move(phases));
        }

        VerifyCheck check_roundtrip(Rng &rng)
        {
            double worst = 0.0;
            for (int i = 0; i < 10000; ++i)
            {
                const Placement p = Placement::from_spherical(
                    uniform(rng, 1e-3, 1e3), uniform(rng, 0.0, pi), uniform(rng, -0.999 * pi, pi));
                const Placement q = Placement::from_cartesian(p.cart);
                worst = std::max(worst, distance(p.cart, q.cart) / p.dist);
                worst = std::max(worst, std::abs(q.dist - p.dist) / p.dist);
            }
            return {"spherical-roundtrip-rel-err", worst <= 1e-12, worst, 1e-12};
        }

        VerifyCheck check_compose_oracle(Rng &rng, const RfParams &params, PlMode pl_mode)
        {
            double worst = 0.0;
            for (int i = 0; i < 20; ++i)
            {
                const int nx = static_cast<int>(uniform(rng, 1.0, 33.0));
                const int ny = static_cast<int>(uniform(rng, 1.0, 33.0));
                const IrsGrid grid = IrsGrid::half_wavelength(nx, ny, params.wavelength);
                const Placement tx = random_fresnel_placement(rng, grid, params.wavelength);
                const Placement rx = random_fresnel_placement(rng, grid, params.wavelength);
                const ChannelGrid ctx = one_way_channel(tx, grid, params, pl_mode, LinkEnd::Tx);
                const ChannelGrid crx = one_way_channel(rx, grid, params, pl_mode, LinkEnd::Rx);
                const PhaseProfile profile = random_profile(rng, grid);
                const std::complex<double> fast = compose_rx_amplitude(ctx, crx, profile);
                const std::complex<double> slow = oracle::compose_naive(ctx, crx, profile);
                worst = std::max(worst, std::abs(fast - slow) / std::abs(slow));
            }
            return {"compose-vs-naive-rel-err", worst <= 1e-9, worst, 1e-9};
        }

        // Flat-magnitude SNR against the exact per-element magnitudes on the
        // reference map geometry; the loss varies by a fraction of a dB
        // there, so the two stay within a quarter-dB band.
        VerifyCheck check_pl_mode_ratio(const RfParams &params)
        {
            const IrsGrid grid = IrsGrid::half_wavelength(100, 100, params.wavelength);
            const Placement tx = Placement::from_cartesian({0.0, -0.3, 0.6});
            const Placement rx = Placement::from_cartesian({0.0, 1.0, 1.0});
            const PhaseProfile focus = beamfocus_profile(grid, tx, rx, params.wavelength);
            const double snr_const =
                snr_exact(one_way_channel(tx, grid, params, PlMode::Constant, LinkEnd::Tx),
                          one_way_channel(rx, grid, params, PlMode::Constant, LinkEnd::Rx), focus,
                          params);
            const double snr_pe =
                snr_exact(one_way_channel(tx, grid, params, PlMode::PerElement, LinkEnd::Tx),
                          one_way_channel(rx, grid, params, PlMode::PerElement, LinkEnd::Rx),
                          focus, params);
            const double ratio = snr_const / snr_pe;
            return {"snr-constant-vs-exact-ratio", ratio >= 0.8 && ratio <= 1.25, ratio, 1.25};
        }

        VerifyCheck check_beamfocus_unity(Rng &rng, const RfParams &params)
        {
            double worst = 0.0;
            for (int i = 0; i < 20; ++i)
            {
                const int nx = static_cast<int>(uniform(rng, 1.0, 33.0));
                const int ny = static_cast<int>(uniform(rng, 1.0, 33.0));
                const IrsGrid grid = IrsGrid::half_wavelength(nx, ny, params.wavelength);
                const Placement tx = random_fresnel_placement(rng, grid, params.wavelength);
                const Placement rx = random_fresnel_placement(rng, grid, params.wavelength);
                const PhaseProfile profile = beamfocus_profile(grid, tx, rx, params.wavelength);
                const double gain =
                    normalized_gain(profile, grid, tx, rx, params.wavelength).gain;
                worst = std::max(worst, std::abs(gain - 1.0));
            }
            return {"beamfocus-gain-deviation", worst <= 1e-12, worst, 1e-12};
        }

        // Exact beamforming gain vs. the quadratic-phase sum vs. the Dirichlet
        // closed form on small grids over the reference distance band, where
        // the brute-force double sum is cheap.
        std::pair<VerifyCheck, VerifyCheck> check_gain_chain(const RfParams &params,
                                                             double rx_multiplier)
        {
            double worst_exact_vs_sum = 0.0;
            double worst_sum_vs_closed = 0.0;
            for (int side : {8, 16})
            {
                const IrsGrid grid = IrsGrid::half_wavelength(side, side, params.wavelength);
                const RegionBounds bounds = region_bounds(grid, params.wavelength);
                const Placement rx =
                    Placement::from_spherical(rx_multiplier * bounds.fraunhofer, 0.0, 0.0);
                const Direction rx_dir{rx.azimuth, rx.polar};
                for (int i = 1; i <= 20; ++i)
                {
                    const double z = 0.5 * i;
                    const Placement tx = Placement::from_cartesian({0.4, 0.4, z});
                    const Direction tx_dir{tx.azimuth, tx.polar};
                    const double g_exact =
                        normalized_gain(beamform_profile(grid, tx_dir, rx_dir, params.wavelength),
                                        grid, tx, rx, params.wavelength)
                            .gain;
                    const double g_sum =
                        gain_fresnel_exactsum(grid, tx.dist, tx_dir, params.wavelength).gain;
                    const double g_closed =
                        gain_closed_form(grid, tx.dist, tx_dir, params.wavelength).gain;
                    worst_exact_vs_sum = std::max(worst_exact_vs_sum, std::abs(g_exact - g_sum));
                    worst_sum_vs_closed = std::max(worst_sum_vs_closed, std::abs(g_sum - g_closed));
                }
            }
            return {VerifyCheck{"gain-exact-vs-fresnel-sum", worst_exact_vs_sum <= 0.02,
                                worst_exact_vs_sum, 0.02},
                    VerifyCheck{"gain-fresnel-sum-vs-closed-form", worst_sum_vs_closed <= 0.05,
                                worst_sum_vs_closed, 0.05}};
        }

        struct RandomLinkGeometry
        {
            IrsGrid grid;
            double d_t = 0.0;
            double d_r = 0.0;
            double d_d = 0.0;
            ScatterAngles angles;
        };

        RandomLinkGeometry random_link_geometry(Rng &rng, const RfParams &params)
        {
            RandomLinkGeometry geom;
            geom.grid = IrsGrid::half_wavelength(static_cast<int>(uniform(rng, 1.0, 33.0)),
                                                 static_cast<int>(uniform(rng, 1.0, 33.0)),
                                                 params.wavelength);
            geom.d_t = uniform(rng, 0.3, 3.0);
            geom.d_r = uniform(rng, 0.3, 8.0);
            const double lo = std::abs(geom.d_t - geom.d_r) + 1e-3;
            const double hi = geom.d_t + geom.d_r - 1e-3;
            geom.d_d = uniform(rng, lo, std::max(lo + 1e-3, hi));
            geom.angles = ScatterAngles{uniform(rng, 0.0, 1.2), uniform(rng, 0.0, 1.2),
                                        uniform(rng, -0.999 * pi, pi)};
            return geom;
        }

        VerifyCheck check_nstar_routes(Rng &rng, const RfParams &params)
        {
            double worst = 0.0;
            for (int i = 0; i < 200; ++i)
            {
                const RandomLinkGeometry geom = random_link_geometry(rng, params);
                const double alpha = uniform(rng, 1.0, 4.0);
                const double direct = n_star_real(alpha, params, geom.d_t, geom.d_r, geom.d_d,
                                                  geom.angles, geom.grid);
                const double via_pl = n_star_real_from_path_loss(
                    alpha, params, geom.d_t, geom.d_r, geom.d_d, geom.angles, geom.grid);
                worst = std::max(worst, std::abs(std::ceil(direct) - std::ceil(via_pl)));
            }
            return {"nstar-route-count-gap", worst <= 1.0, worst, 1.0};
        }

        VerifyCheck check_prop1_bracketing(Rng &rng, const RfParams &params)
        {
            int violations = 0;
            for (int i = 0; i < 100; ++i)
            {
                RandomLinkGeometry geom = random_link_geometry(rng, params);
                const double alpha = 2.0;
                const int n_t = 2 * static_cast<int>(uniform(rng, 1.0, 100.0));
                const int n_r = 2 * static_cast<int>(uniform(rng, 1.0, 100.0));
                const HardwareProfile hw{n_t, n_r};
                const HardwareProfile hw_reduced{n_t / 2, n_r / 2};
                const double n_real = n_star_real(alpha, params, geom.d_t, geom.d_r, geom.d_d,
                                                  geom.angles, geom.grid);
                if (n_real < 2.0)
                {
                    --i; // keep the sample size; tiny bounds cannot bracket
                    continue;
                }
                const long long above = static_cast<long long>(std::ceil(n_real));
                const long long below = static_cast<long long>(std::floor(n_real)) - 1;
                const double reference = snr_mimo(params, hw, geom.d_d);
                if (snr_irs(params, hw_reduced, above, geom.grid, geom.d_t, geom.d_r,
                            geom.angles) < reference)
                    ++violations;
                if (below >= 1 && snr_irs(params, hw_reduced, below, geom.grid, geom.d_t,
                                          geom.d_r, geom.angles) >= reference)
                    ++violations;
            }
            return {"prop1-bracketing-violations", violations == 0,
                    static_cast<double>(violations), 0.0};
        }

        VerifyCheck check_scatter_inequality(const Scenario &scenario)
        {
            // 721-point observation sweep; the sinc envelope keeps the exact
            // field strictly below the flat approximation away from broadside
            // incidence alignment.
            double worst_ratio = 0.0;
            for (int i = 0; i <= 720; ++i)
            {
                const double theta_r = deg_to_rad(-90.0 + 0.25 * i);
                const ScatterAngles angles{deg_to_rad(30.0), theta_r, deg_to_rad(60.0)};
                const double exact = scattered_field_sq_exact(1.0, scenario.grid, angles, 4.0,
                                                              scenario.rf.wavelength);
                const double approx = scattered_field_sq_approx(1.0, scenario.grid, angles, 4.0,
                                                                scenario.rf.wavelength);
                worst_ratio = std::max(worst_ratio, exact / approx);
            }
            return {"scatter-exact-over-approx-max", worst_ratio < 1.0, worst_ratio, 1.0};
        }

        VerifyCheck check_region_partition(Rng &rng, const Scenario &scenario)
        {
            const IrsGrid &grid = scenario.grid;
            const double wavelength = scenario.rf.wavelength;
            const RegionBounds bounds = region_bounds(grid, wavelength);
            int violations = 0;
            const auto expect = [&](double dist, FieldRegion want)
            {
                if (classify_region(dist, grid, wavelength) != want)
                    ++violations;
            };
            expect(bounds.reactive_upper, FieldRegion::ReactiveNearField);
            expect(bounds.fraunhofer, FieldRegion::Fresnel);
            expect(std::nextafter(bounds.fraunhofer, 1e30), FieldRegion::FarField);
            for (int i = 0; i < 100; ++i)
            {
                const double dist = uniform(rng, 1e-6, 3.0 * bounds.fraunhofer);
                const FieldRegion region = classify_region(dist, grid, wavelength);
                FieldRegion want = FieldRegion::FarField;
                if (dist <= bounds.reactive_upper)
                    want = FieldRegion::ReactiveNearField;
                else if (dist <= bounds.fraunhofer)
                    want = FieldRegion::Fresnel;
                if (region != want)
                    ++violations;
            }
            return {"region-partition-violations", violations == 0,
                    static_cast<double>(violations), 0.0};
        }

        VerifyCheck check_wrap_invariance(Rng &rng, const RfParams &params)
        {
            const IrsGrid grid = IrsGrid::half_wavelength(16, 16, params.wavelength);
            const Placement tx = random_fresnel_placement(rng, grid, params.wavelength);
            const Placement rx = random_fresnel_placement(rng, grid, params.wavelength);
            const ChannelGrid ctx = one_way_channel(tx, grid, params, PlMode::PerElement, LinkEnd::Tx);
            const ChannelGrid crx = one_way_channel(rx, grid, params, PlMode::PerElement, LinkEnd::Rx);
            const PhaseProfile profile = random_profile(rng, grid);
            std::vector<double> shifted = profile.phases;
            for (std::size_t i = 0; i < shifted.size(); ++i)
                shifted[i] += (i % 2 == 0) ? two_pi : -two_pi;
            const PhaseProfile rewrapped =
                PhaseProfile::from_phases(grid.n_x, grid.n_y, std::move(shifted));
            const std::complex<double> a = compose_rx_amplitude(ctx, crx, profile);
            const std::complex<double> b = compose_rx_amplitude(ctx, crx, rewrapped);
            const double rel = std::abs(a - b) / std::abs(a);
            return {"phase-wrap-invariance-rel-err", rel <= 1e-12, rel, 1e-12};
        }
    }

    bool VerifyReport::all_pass() const
    {
        for (const auto &check : checks)
            if (!check.pass)
                return false;
        return true;
    }

    VerifyReport run_verification(const Scenario &scenario, std::uint64_t seed)
    {
        Rng rng(seed);
        VerifyReport report;
        report.checks.push_back(check_roundtrip(rng));
        report.checks.push_back(check_compose_oracle(rng, scenario.rf, scenario.pl_mode));
        report.checks.push_back(check_beamfocus_unity(rng, scenario.rf));
        report.checks.push_back(check_pl_mode_ratio(scenario.rf));
        const auto [chain_a, chain_b] =
            check_gain_chain(scenario.rf, scenario.rx_far_field_multiplier);
        report.checks.push_back(chain_a);
        report.checks.push_back(chain_b);
        report.checks.push_back(check_nstar_routes(rng, scenario.rf));
        report.checks.push_back(check_prop1_bracketing(rng, scenario.rf));
        report.checks.push_back(check_scatter_inequality(scenario));
        report.checks.push_back(check_region_partition(rng, scenario));
        report.checks.push_back(check_wrap_invariance(rng, scenario.rf));
        return report;
    }

    void write_verify_report(const VerifyReport &report, bool as_json, std::ostream &out)
    {
        const auto format = [](double v)
        {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%.12g", v);
            return std::string(buf);
        };
        if (as_json)
        {
            nlohmann::json doc;
            nlohmann::json checks = nlohmann::json::array();
            for (const auto &check : report.checks)
                checks.push_back({{"name", check.name},
                                  {"pass", check.pass},
                                  {"measured", check.measured},
                                  {"bound", check.bound}});
            doc["checks"] = checks;
            doc["all_pass"] = report.all_pass();
            out << doc.dump(2) << "\n";
            return;
        }
        out << "check,pass,measured,bound\n";
        for (const auto &check : report.checks)
            out << check.name << "," << (check.pass ? 1 : 0) << "," << format(check.measured)
                << "," << format(check.bound) << "\n";
    }

}

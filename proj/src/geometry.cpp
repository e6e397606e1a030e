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

#include "thzirs/geometry.hpp"

#include <stdexcept>
#include <string>

#include "thzirs/constants.hpp"

namespace thzirs
{

    IrsGrid IrsGrid::half_wavelength(int nx, int ny, double wavelength)
    {
        if (wavelength <= 0.0)
            throw std::invalid_argument("IrsGrid: wavelength must be positive");
        IrsGrid grid;
        grid.n_x = nx;
        grid.n_y = ny;
        grid.elem_len_x = 0.5 * wavelength;
        grid.elem_len_y = 0.5 * wavelength;
        grid.gap_x = 0.0;
        grid.gap_y = 0.0;
        grid.validate();
        return grid;
    }

    void IrsGrid::validate() const
    {
        if (n_x < 1 || n_y < 1)
            throw std::invalid_argument("IrsGrid: element counts must be >= 1");
        if (elem_len_x <= 0.0 || elem_len_y <= 0.0)
            throw std::invalid_argument("IrsGrid: element lengths must be positive");
        if (gap_x < 0.0 || gap_y < 0.0)
            throw std::invalid_argument("IrsGrid: gaps must be non-negative");
        if (pitch_x() <= 0.0 || pitch_y() <= 0.0)
            throw std::invalid_argument("IrsGrid: pitches must be positive");
    }

    Placement Placement::from_spherical(double dist, double polar, double azimuth)
    {
        if (dist <= 0.0)
            throw std::domain_error("Placement: distance must be positive");
        Placement place;
        place.dist = dist;
        place.polar = polar;
        place.azimuth = azimuth;
        place.cart = spherical_to_cartesian(dist, polar, azimuth);
        return place;
    }

    Placement Placement::from_cartesian(const Vec3 &p)
    {
        const Spherical s = cartesian_to_spherical(p);
        Placement place;
        place.dist = s.dist;
        place.polar = s.polar;
        place.azimuth = s.azimuth;
        place.cart = p;
        return place;
    }

    Vec3 spherical_to_cartesian(double dist, double polar, double azimuth)
    {
        if (dist < 0.0)
            throw std::domain_error("spherical_to_cartesian: distance must be non-negative");
        const double st = std::sin(polar);
        return {dist * std::cos(azimuth) * st, dist * std::sin(azimuth) * st, dist * std::cos(polar)};
    }

    Spherical cartesian_to_spherical(const Vec3 &p)
    {
        const double d = norm(p);
        if (d == 0.0)
            throw std::domain_error("cartesian_to_spherical: zero vector has no direction");
        Spherical s;
        s.dist = d;
        s.polar = std::acos(std::clamp(p.z / d, -1.0, 1.0));
        s.azimuth = (p.x == 0.0 && p.y == 0.0) ? 0.0 : std::atan2(p.y, p.x);
        if (s.azimuth == -pi)
            s.azimuth = pi; // keep phi in (-pi, pi]
        return s;
    }

    Vec3 element_position(int n, int m, const IrsGrid &grid)
    {
        if (n < 0 || n >= grid.n_x || m < 0 || m >= grid.n_y)
            throw std::out_of_range("element_position: index (" + std::to_string(n) + "," +
                                    std::to_string(m) + ") outside " + std::to_string(grid.n_x) +
                                    "x" + std::to_string(grid.n_y) + " grid");
        return {n * grid.pitch_x(), m * grid.pitch_y(), 0.0};
    }

    double element_distance(const Vec3 &p, int n, int m, const IrsGrid &grid)
    {
        return distance(p, element_position(n, m, grid));
    }

    RegionBounds region_bounds(const IrsGrid &grid, double wavelength)
    {
        if (wavelength <= 0.0)
            throw std::domain_error("region_bounds: wavelength must be positive");
        const double l = grid.max_dimension();
        RegionBounds bounds;
        bounds.reactive_upper = 0.62 * std::sqrt(l * l * l / wavelength);
        bounds.fraunhofer = 2.0 * l * l / wavelength;
        return bounds;
    }

    FieldRegion classify_region(double dist, const IrsGrid &grid, double wavelength)
    {
        if (dist <= 0.0)
            throw std::domain_error("classify_region: distance must be positive");
        const RegionBounds bounds = region_bounds(grid, wavelength);
        if (dist <= bounds.reactive_upper)
            return FieldRegion::ReactiveNearField;
        if (dist <= bounds.fraunhofer)
            return FieldRegion::Fresnel;
        return FieldRegion::FarField;
    }

    bool element_far_field_check(double dist, const IrsGrid &grid, double wavelength)
    {
        if (dist <= 0.0)
            throw std::domain_error("element_far_field_check: distance must be positive");
        if (wavelength <= 0.0)
            throw std::domain_error("element_far_field_check: wavelength must be positive");
        const double l_max = std::max(grid.elem_len_x, grid.elem_len_y);
        return dist > 2.0 * l_max * l_max / wavelength;
    }

}

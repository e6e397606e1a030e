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

#include <algorithm>
#include <cmath>

// Element-grid geometry of a planar reflecting surface, coordinate
// conversions, exact per-element distances and field-region classification.
//
// Conventions:
//   - The (0,0)th element sits at the coordinate origin, the surface lies in
//     the z = 0 plane and elements extend towards +x/+y.
//   - The polar angle theta is measured from the +z axis (surface broadside),
//     the azimuth phi from the +x axis, phi in (-pi, pi].
//   - All angles are radians, all lengths meters.

namespace thzirs
{
    struct Vec3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;
    };

    inline Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    inline double norm(const Vec3 &v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }
    inline double distance(const Vec3 &a, const Vec3 &b) { return norm(a - b); }

    // Rectangular grid of reflecting elements.
    struct IrsGrid
    {
        int n_x = 1;              // element count along x
        int n_y = 1;              // element count along y
        double elem_len_x = 0.0;  // element side L_x [m]
        double elem_len_y = 0.0;  // element side L_y [m]
        double gap_x = 0.0;       // edge-to-edge spacing along x [m]
        double gap_y = 0.0;       // edge-to-edge spacing along y [m]

        // Grid of nx*ny elements of side lambda/2 with zero gaps, the
        // configuration used throughout the bundled defaults.
        static IrsGrid half_wavelength(int nx, int ny, double wavelength);

        double pitch_x() const { return gap_x + elem_len_x; } // center-to-center d_x
        double pitch_y() const { return gap_y + elem_len_y; } // center-to-center d_y
        long long n_elements() const { return static_cast<long long>(n_x) * n_y; }
        double aperture_x() const { return n_x * elem_len_x + (n_x - 1) * gap_x; }
        double aperture_y() const { return n_y * elem_len_y + (n_y - 1) * gap_y; }

        // Maximum physical dimension of the surface.
        double max_dimension() const { return std::max(aperture_x(), aperture_y()); }

        // Throws std::invalid_argument when counts, lengths or pitches are
        // out of range.
        void validate() const;
    };

    // A terminal position held in both spherical and Cartesian form. The two
    // representations agree by construction.
    struct Placement
    {
        double dist = 1.0;    // D [m], > 0
        double polar = 0.0;   // theta [rad], in [0, pi]
        double azimuth = 0.0; // phi [rad], in (-pi, pi]
        Vec3 cart{0.0, 0.0, 1.0};

        static Placement from_spherical(double dist, double polar, double azimuth);
        static Placement from_cartesian(const Vec3 &p);
    };

    struct Spherical
    {
        double dist = 0.0;
        double polar = 0.0;
        double azimuth = 0.0;
    };

    // Field-region boundaries of the whole surface.
    struct RegionBounds
    {
        double reactive_upper = 0.0; // 0.62*sqrt(L^3/lambda) [m]
        double fraunhofer = 0.0;     // 2*L^2/lambda [m]
    };

    enum class FieldRegion
    {
        ReactiveNearField, // dist <= reactive_upper
        Fresnel,           // reactive_upper < dist <= fraunhofer
        FarField           // dist > fraunhofer
    };

    // (D*cos(phi)*sin(theta), D*sin(phi)*sin(theta), D*cos(theta)); total for dist >= 0.
    Vec3 spherical_to_cartesian(double dist, double polar, double azimuth);

    // Inverse conversion; throws std::domain_error for the zero vector.
    Spherical cartesian_to_spherical(const Vec3 &p);

    // Center of the (n,m)th element: (n*d_x, m*d_y, 0).
    // Throws std::out_of_range for indices outside the grid.
    Vec3 element_position(int n, int m, const IrsGrid &grid);

    // Euclidean distance from p to the (n,m)th element center.
    double element_distance(const Vec3 &p, int n, int m, const IrsGrid &grid);

    RegionBounds region_bounds(const IrsGrid &grid, double wavelength);

    // Partition of (0, inf) into the three field regions; dist must be > 0.
    FieldRegion classify_region(double dist, const IrsGrid &grid, double wavelength);

    // True when dist lies beyond the Fraunhofer distance of a single element,
    // 2*max(L_x, L_y)^2 / lambda (strict inequality).
    bool element_far_field_check(double dist, const IrsGrid &grid, double wavelength);
}

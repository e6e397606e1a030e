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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thzirs/gain.hpp"
#include "thzirs/linkperf.hpp"
#include "thzirs/oracle.hpp"
#include "thzirs/units.hpp"

namespace py = pybind11;
using namespace thzirs;

namespace
{
    std::vector<std::vector<double>> map_rows(const PathLossMap &map)
    {
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(map.n_x));
        for (int n = 0; n < map.n_x; ++n)
        {
            rows[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(map.n_y));
            for (int m = 0; m < map.n_y; ++m)
                rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = map.at(n, m);
        }
        return rows;
    }
}

PYBIND11_MODULE(_thzirs, m)
{
    m.doc() = "Spherical-wavefront channel model and link analysis for reflecting surfaces "
              "at terahertz carriers";

    // --- geometry -----------------------------------------------------------
    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("__repr__", [](const Vec3 &v)
             { return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
                      std::to_string(v.z) + ")"; });

    py::class_<IrsGrid>(m, "IrsGrid")
        .def(py::init(
                 [](int n_x, int n_y, double elem_len_x, double elem_len_y, double gap_x,
                    double gap_y)
                 {
                     IrsGrid grid{n_x, n_y, elem_len_x, elem_len_y, gap_x, gap_y};
                     grid.validate();
                     return grid;
                 }),
             py::arg("n_x"), py::arg("n_y"), py::arg("elem_len_x"), py::arg("elem_len_y"),
             py::arg("gap_x") = 0.0, py::arg("gap_y") = 0.0)
        .def_static("half_wavelength", &IrsGrid::half_wavelength, py::arg("n_x"), py::arg("n_y"),
                    py::arg("wavelength"))
        .def_readonly("n_x", &IrsGrid::n_x)
        .def_readonly("n_y", &IrsGrid::n_y)
        .def_readonly("elem_len_x", &IrsGrid::elem_len_x)
        .def_readonly("elem_len_y", &IrsGrid::elem_len_y)
        .def_readonly("gap_x", &IrsGrid::gap_x)
        .def_readonly("gap_y", &IrsGrid::gap_y)
        .def_property_readonly("pitch_x", &IrsGrid::pitch_x)
        .def_property_readonly("pitch_y", &IrsGrid::pitch_y)
        .def_property_readonly("n_elements", &IrsGrid::n_elements)
        .def_property_readonly("aperture_x", &IrsGrid::aperture_x)
        .def_property_readonly("aperture_y", &IrsGrid::aperture_y)
        .def_property_readonly("max_dimension", &IrsGrid::max_dimension);

    py::class_<Placement>(m, "Placement")
        .def_static("from_cartesian",
                    [](double x, double y, double z)
                    { return Placement::from_cartesian({x, y, z}); },
                    py::arg("x"), py::arg("y"), py::arg("z"))
        .def_static("from_spherical", &Placement::from_spherical, py::arg("dist"),
                    py::arg("polar"), py::arg("azimuth"))
        .def_readonly("dist", &Placement::dist)
        .def_readonly("polar", &Placement::polar)
        .def_readonly("azimuth", &Placement::azimuth)
        .def_readonly("cart", &Placement::cart);

    py::class_<RegionBounds>(m, "RegionBounds")
        .def_readonly("reactive_upper", &RegionBounds::reactive_upper)
        .def_readonly("fraunhofer", &RegionBounds::fraunhofer);

    py::enum_<FieldRegion>(m, "FieldRegion")
        .value("ReactiveNearField", FieldRegion::ReactiveNearField)
        .value("Fresnel", FieldRegion::Fresnel)
        .value("FarField", FieldRegion::FarField);

    m.def("spherical_to_cartesian", &spherical_to_cartesian, py::arg("dist"), py::arg("polar"),
          py::arg("azimuth"));
    m.def("cartesian_to_spherical",
          [](const Vec3 &p)
          {
              const Spherical s = cartesian_to_spherical(p);
              return py::make_tuple(s.dist, s.polar, s.azimuth);
          },
          py::arg("p"));
    m.def("element_position", &element_position, py::arg("n"), py::arg("m"), py::arg("grid"));
    m.def("element_distance", &element_distance, py::arg("p"), py::arg("n"), py::arg("m"),
          py::arg("grid"));
    m.def("region_bounds", &region_bounds, py::arg("grid"), py::arg("wavelength"));
    m.def("classify_region", &classify_region, py::arg("dist"), py::arg("grid"),
          py::arg("wavelength"));
    m.def("element_far_field_check", &element_far_field_check, py::arg("dist"), py::arg("grid"),
          py::arg("wavelength"));

    // --- scattering ----------------------------------------------------------
    py::class_<RfParams>(m, "RfParams")
        .def_static("from_frequency", &RfParams::from_frequency, py::arg("freq_hz"),
                    py::arg("kappa_abs"), py::arg("gain_tx"), py::arg("gain_rx"),
                    py::arg("power_tx"), py::arg("noise_density"), py::arg("bandwidth"))
        .def_static("thz_reference", &RfParams::thz_reference)
        .def_readwrite("freq", &RfParams::freq)
        .def_readwrite("wavelength", &RfParams::wavelength)
        .def_readwrite("kappa_abs", &RfParams::kappa_abs)
        .def_readwrite("gain_tx", &RfParams::gain_tx)
        .def_readwrite("gain_rx", &RfParams::gain_rx)
        .def_readwrite("power_tx", &RfParams::power_tx)
        .def_readwrite("noise_density", &RfParams::noise_density)
        .def_readwrite("bandwidth", &RfParams::bandwidth)
        .def_property_readonly("wavenumber", &RfParams::wavenumber)
        .def_property_readonly("noise_power", &RfParams::noise_power);

    py::class_<ScatterAngles>(m, "ScatterAngles")
        .def(py::init<double, double, double>(), py::arg("theta_t"), py::arg("theta_r"),
             py::arg("phi_r"))
        .def_static("from_placements", &ScatterAngles::from_placements, py::arg("tx"),
                    py::arg("rx"))
        .def_readwrite("theta_t", &ScatterAngles::theta_t)
        .def_readwrite("theta_r", &ScatterAngles::theta_r)
        .def_readwrite("phi_r", &ScatterAngles::phi_r);

    m.def("pattern_f", &pattern_f, py::arg("angles"));
    m.def("sinc", &sinc, py::arg("t"));
    m.def("scattered_field_sq_exact", &scattered_field_sq_exact, py::arg("e_i_sq"),
          py::arg("grid"), py::arg("angles"), py::arg("d_r"), py::arg("wavelength"));
    m.def("scattered_field_sq_approx", &scattered_field_sq_approx, py::arg("e_i_sq"),
          py::arg("grid"), py::arg("angles"), py::arg("d_r"), py::arg("wavelength"));
    m.def("element_path_loss", &element_path_loss, py::arg("params"), py::arg("grid"),
          py::arg("d_t"), py::arg("d_r"), py::arg("angles"));
    m.def("path_loss_map",
          [](const RfParams &params, const IrsGrid &grid, const Placement &tx,
             const Placement &rx) { return map_rows(path_loss_map(params, grid, tx, rx)); },
          py::arg("params"), py::arg("grid"), py::arg("tx"), py::arg("rx"),
          "Per-element linear path loss as a nested list indexed [n][m]");
    m.def("mimo_path_loss", &mimo_path_loss, py::arg("params"), py::arg("d_d"));

    // --- channel ---------------------------------------------------------------
    py::enum_<PlMode>(m, "PlMode")
        .value("PerElement", PlMode::PerElement)
        .value("Constant", PlMode::Constant);

    py::enum_<LinkEnd>(m, "LinkEnd").value("Tx", LinkEnd::Tx).value("Rx", LinkEnd::Rx);

    py::enum_<ProfileKind>(m, "ProfileKind")
        .value("Beamfocus", ProfileKind::Beamfocus)
        .value("FarFieldBeamform", ProfileKind::FarFieldBeamform)
        .value("Custom", ProfileKind::Custom);

    py::class_<ChannelGrid>(m, "ChannelGrid")
        .def_readonly("n_x", &ChannelGrid::n_x)
        .def_readonly("n_y", &ChannelGrid::n_y)
        .def("at", &ChannelGrid::at, py::arg("n"), py::arg("m"));

    py::class_<PhaseProfile>(m, "PhaseProfile")
        .def_static("from_phases", &PhaseProfile::from_phases, py::arg("n_x"), py::arg("n_y"),
                    py::arg("phases"))
        .def_readonly("n_x", &PhaseProfile::n_x)
        .def_readonly("n_y", &PhaseProfile::n_y)
        .def_readonly("phases", &PhaseProfile::phases)
        .def_readonly("kind", &PhaseProfile::kind)
        .def("at", &PhaseProfile::at, py::arg("n"), py::arg("m"));

    m.def("one_way_channel", &one_way_channel, py::arg("place"), py::arg("grid"),
          py::arg("params"), py::arg("pl_mode"), py::arg("end"));
    m.def("compose_rx_amplitude", &compose_rx_amplitude, py::arg("tx_grid"), py::arg("rx_grid"),
          py::arg("profile"));
    m.def("snr_exact", &snr_exact, py::arg("tx_grid"), py::arg("rx_grid"), py::arg("profile"),
          py::arg("params"));
    m.def("steering_vector", &steering_vector, py::arg("azimuth"), py::arg("polar"),
          py::arg("grid"), py::arg("wavelength"));

    // --- gain ---------------------------------------------------------------
    py::class_<Direction>(m, "Direction")
        .def(py::init<double, double>(), py::arg("azimuth"), py::arg("polar"))
        .def_readwrite("azimuth", &Direction::azimuth)
        .def_readwrite("polar", &Direction::polar);

    py::enum_<GainMethod>(m, "GainMethod")
        .value("ExactSum", GainMethod::ExactSum)
        .value("ClosedForm", GainMethod::ClosedForm);

    py::class_<GainResult>(m, "GainResult")
        .def_readonly("gain", &GainResult::gain)
        .def_readonly("method", &GainResult::method)
        .def_readonly("profile_kind", &GainResult::profile_kind);

    m.def("beamfocus_profile", &beamfocus_profile, py::arg("grid"), py::arg("tx"), py::arg("rx"),
          py::arg("wavelength"));
    m.def("beamform_profile", &beamform_profile, py::arg("grid"), py::arg("tx_dir"),
          py::arg("rx_dir"), py::arg("wavelength"));
    m.def("normalized_gain", &normalized_gain, py::arg("profile"), py::arg("grid"), py::arg("tx"),
          py::arg("rx"), py::arg("wavelength"));
    m.def("fresnel_tx_distance", &fresnel_tx_distance, py::arg("n"), py::arg("m"), py::arg("grid"),
          py::arg("tx"));
    m.def("dirichlet_sinc", &dirichlet_sinc, py::arg("n"), py::arg("x"));
    m.def("gain_closed_form", &gain_closed_form, py::arg("grid"), py::arg("d_t"),
          py::arg("tx_dir"), py::arg("wavelength"));
    m.def("gain_fresnel_exactsum", &gain_fresnel_exactsum, py::arg("grid"), py::arg("d_t"),
          py::arg("tx_dir"), py::arg("wavelength"));

    // --- link performance ------------------------------------------------------
    py::class_<HardwareProfile>(m, "HardwareProfile")
        .def(py::init<int, int, double, double>(), py::arg("n_t"), py::arg("n_r"),
             py::arg("p_ps") = 0.042, py::arg("p_pa") = 0.060)
        .def_readwrite("n_t", &HardwareProfile::n_t)
        .def_readwrite("n_r", &HardwareProfile::n_r)
        .def_readwrite("p_ps", &HardwareProfile::p_ps)
        .def_readwrite("p_pa", &HardwareProfile::p_pa);

    py::class_<LinkReport>(m, "LinkReport")
        .def_readonly("snr", &LinkReport::snr)
        .def_readonly("rate", &LinkReport::rate)
        .def_readonly("power", &LinkReport::power)
        .def_readonly("ee", &LinkReport::ee)
        .def_readonly("n_elements", &LinkReport::n_elements);

    py::class_<EeComparison>(m, "EeComparison")
        .def_readonly("direct", &EeComparison::direct)
        .def_readonly("irs", &EeComparison::irs)
        .def_readonly("n_star_real", &EeComparison::n_star_real)
        .def_readonly("irs_meets_rate", &EeComparison::irs_meets_rate);

    m.def("snr_mimo", &snr_mimo, py::arg("params"), py::arg("hw"), py::arg("d_d"));
    m.def("snr_irs", &snr_irs, py::arg("params"), py::arg("hw"), py::arg("n_elements"),
          py::arg("grid"), py::arg("d_t"), py::arg("d_r"), py::arg("angles"));
    m.def("power_consumption", &power_consumption, py::arg("hw"), py::arg("p_t"));
    m.def("achievable_rate", &achievable_rate, py::arg("bandwidth"), py::arg("snr"));
    m.def("n_star_real", &n_star_real, py::arg("alpha"), py::arg("params"), py::arg("d_t"),
          py::arg("d_r"), py::arg("d_d"), py::arg("angles"), py::arg("grid"));
    m.def("n_star", &n_star, py::arg("alpha"), py::arg("params"), py::arg("d_t"), py::arg("d_r"),
          py::arg("d_d"), py::arg("angles"), py::arg("grid"));
    m.def("n_star_fixed_irs_real", &n_star_fixed_irs_real, py::arg("alpha"), py::arg("params"),
          py::arg("d_t"), py::arg("d_r"), py::arg("theta_t"), py::arg("grid"));
    m.def("n_star_fixed_irs", &n_star_fixed_irs, py::arg("alpha"), py::arg("params"),
          py::arg("d_t"), py::arg("d_r"), py::arg("theta_t"), py::arg("grid"));
    m.def("n_star_max_real", &n_star_max_real, py::arg("alpha"), py::arg("params"),
          py::arg("d_t"), py::arg("theta_t"), py::arg("grid"));
    m.def("n_star_max", &n_star_max, py::arg("alpha"), py::arg("params"), py::arg("d_t"),
          py::arg("theta_t"), py::arg("grid"));
    m.def("ee_comparison", &ee_comparison, py::arg("params"), py::arg("hw"), py::arg("alpha"),
          py::arg("tx"), py::arg("rx"), py::arg("grid"), py::arg("n_elements_override") = 0);

    // --- helpers -----------------------------------------------------------------
    m.def("db_to_linear", &db_to_linear, py::arg("db"));
    m.def("linear_to_db", &linear_to_db, py::arg("lin"));
    m.def("dbm_to_watts", &dbm_to_watts, py::arg("dbm"));
    m.def("watts_to_dbm", &watts_to_dbm, py::arg("watts"));
    m.def("deg_to_rad", &deg_to_rad, py::arg("deg"));
    m.def("rad_to_deg", &rad_to_deg, py::arg("rad"));
    m.attr("SPEED_OF_LIGHT") = speed_of_light;

#ifdef THZIRS_VERSION
    m.attr("__version__") = THZIRS_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}

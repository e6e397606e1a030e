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

namespace thzirs
{
    inline constexpr double speed_of_light = 299792458.0; // [m/s]
    inline constexpr double pi = 3.14159265358979323846;
    inline constexpr double two_pi = 2.0 * pi;
}

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

#include <complex>
#include <span>

namespace thzirs
{
    // Deterministic pairwise (tree) reduction. Bounds the rounding error of
    // phasor sums with 1e4..1e6 terms; the order depends only on the input
    // layout, never on the execution schedule.
    inline std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms)
    {
        if (terms.size() <= 16)
        {
            std::complex<double> acc{0.0, 0.0};
            for (const auto &t : terms)
                acc += t;
            return acc;
        }
        const std::size_t half = terms.size() / 2;
        return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
    }
}

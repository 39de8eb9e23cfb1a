// Copyright 2026 The Randen Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANDEN_STATS_HPP_
#define RANDEN_STATS_HPP_

#include <cstdint>
#include <span>

namespace randen::stats {

// Fraction of set bits.
double ones_fraction(std::span<const std::uint8_t> bytes);

// Pearson chi-square of byte-value counts against uniform (255 df).
double byte_chi_square(std::span<const std::uint8_t> bytes);

// Upper tail P[X >= statistic] for a chi-square with `dof` degrees of freedom.
double chi_square_p_value(double statistic, double dof);

}  // namespace randen::stats

#endif  // RANDEN_STATS_HPP_

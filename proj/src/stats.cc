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

#include "randen/stats.hpp"

#include <array>
#include <bit>

#include <boost/math/special_functions/gamma.hpp>

namespace randen::stats {

double ones_fraction(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) return 0.0;
  std::uint64_t ones = 0;
  for (std::uint8_t b : bytes) ones += std::popcount(b);
  return static_cast<double>(ones) / (8.0 * static_cast<double>(bytes.size()));
}

double byte_chi_square(std::span<const std::uint8_t> bytes) {
  std::array<std::uint64_t, 256> counts{};
  for (std::uint8_t b : bytes) ++counts[b];
  const double expected = static_cast<double>(bytes.size()) / 256.0;
  double statistic = 0;
  for (std::uint64_t count : counts) {
    const double diff = static_cast<double>(count) - expected;
    statistic += diff * diff / expected;
  }
  return statistic;
}

double chi_square_p_value(double statistic, double dof) {
  return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

}  // namespace randen::stats

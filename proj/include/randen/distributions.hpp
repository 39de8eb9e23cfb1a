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

#ifndef RANDEN_DISTRIBUTIONS_HPP_
#define RANDEN_DISTRIBUTIONS_HPP_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "randen/error.hpp"

namespace randen {

template <class T>
concept BitSource = requires(T& source) {
  { source.next_u64() } -> std::same_as<std::uint64_t>;
};

// High 64 bits of r * bound: division-free map into [0, bound). Carries a
// bias of at most bound / 2^64, which the benchmarks accept.
constexpr std::uint64_t multiply_shift(std::uint64_t r, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(r) * bound) >> 64);
}

template <BitSource Source>
std::uint64_t uniform_below(Source& source, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kDomain, "uniform_below: bound is 0");
  return multiply_shift(source.next_u64(), bound);
}

// (r >> 11) * 2^-53: the top 53 bits on a uniform grid in [0, 1).
constexpr double unit_double(std::uint64_t r) {
  return static_cast<double>(r >> 11) * 0x1.0p-53;
}

// Swaps element i with uniform_below(i + 1), for i from size - 1 down to 1.
template <BitSource Source, class T>
void fisher_yates(Source& source, std::span<T> items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = uniform_below(source, i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

// Algorithm R. Element i >= k draws j in [0, i] and replaces slot j if j < k.
template <BitSource Source, class T>
void reservoir_sample(Source& source, std::span<const T> stream,
                      std::span<T> reservoir) {
  const std::size_t k = reservoir.size();
  if (k > stream.size()) {
    throw Error(ErrorCode::kDomain,
                "reservoir_sample: reservoir larger than stream");
  }
  for (std::size_t i = 0; i < k; ++i) reservoir[i] = stream[i];
  for (std::size_t i = k; i < stream.size(); ++i) {
    const std::uint64_t j = uniform_below(source, i + 1);
    if (j < k) reservoir[j] = stream[i];
  }
}

template <BitSource Source, class T>
std::vector<T> reservoir_sample(Source& source, std::span<const T> stream,
                                std::size_t k) {
  if (k > stream.size()) {
    throw Error(ErrorCode::kDomain,
                "reservoir_sample: reservoir larger than stream");
  }
  std::vector<T> reservoir(k);
  reservoir_sample(source, stream, std::span<T>(reservoir));
  return reservoir;
}

// Fraction of n points (two draws each) inside the quarter unit circle, x4.
template <BitSource Source>
double monte_carlo_pi(Source& source, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "monte_carlo_pi: n is 0");
  std::uint64_t inside = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = unit_double(source.next_u64());
    const double y = unit_double(source.next_u64());
    inside += (x * x + y * y <= 1.0) ? 1 : 0;
  }
  return 4.0 * static_cast<double>(inside) / static_cast<double>(n);
}

}  // namespace randen

#endif  // RANDEN_DISTRIBUTIONS_HPP_

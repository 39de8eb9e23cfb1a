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

#ifndef RANDEN_TESTS_TEST_SUPPORT_HPP_
#define RANDEN_TESTS_TEST_SUPPORT_HPP_

#include <array>
#include <cstdint>

#include "randen/aes.hpp"
#include "randen/baselines.hpp"
#include "randen/permutation.hpp"

namespace randen::testing {

inline Block128 random_block(SplitMix64& rng) {
  Block128 block;
  for (int half = 0; half < 2; ++half) {
    const std::uint64_t v = rng.next_u64();
    for (int i = 0; i < 8; ++i) {
      block.bytes[8 * half + i] = static_cast<std::uint8_t>(v >> (8 * i));
    }
  }
  return block;
}

inline PermutationState random_state(SplitMix64& rng) {
  PermutationState state;
  for (auto& branch : state.branches) branch = random_block(rng);
  return state;
}

inline KeySchedule random_keys(SplitMix64& rng) {
  std::array<std::uint8_t, kKeyBytes> bytes{};
  for (std::size_t i = 0; i < bytes.size(); i += 8) {
    const std::uint64_t v = rng.next_u64();
    for (int j = 0; j < 8; ++j) bytes[i + j] = static_cast<std::uint8_t>(v >> (8 * j));
  }
  return KeySchedule::from_bytes(bytes);
}

inline int hamming_distance(const PermutationState& a, const PermutationState& b) {
  int bits = 0;
  for (std::size_t i = 0; i < kStateBytes; ++i) {
    bits += __builtin_popcount(static_cast<unsigned>(a.bytes()[i] ^ b.bytes()[i]));
  }
  return bits;
}

}  // namespace randen::testing

#endif  // RANDEN_TESTS_TEST_SUPPORT_HPP_

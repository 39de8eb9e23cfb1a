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

#ifndef RANDEN_PERMUTATION_HPP_
#define RANDEN_PERMUTATION_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>

#include "randen/aes.hpp"

namespace randen {

inline constexpr int kFeistelBranches = 16;
inline constexpr int kFeistelFunctions = kFeistelBranches / 2;
inline constexpr int kFeistelRounds = 17;
inline constexpr int kRoundKeyCount = kFeistelRounds * kFeistelFunctions;  // 136
inline constexpr std::size_t kStateBytes = kFeistelBranches * 16;           // 256
inline constexpr std::size_t kKeyBytes = kRoundKeyCount * 16;               // 2176

// Output branch i takes input branch kBlockShuffle[i].
inline constexpr std::array<int, kFeistelBranches> kBlockShuffle = {
    7, 2, 13, 4, 11, 8, 3, 6, 15, 0, 9, 10, 1, 14, 5, 12};

constexpr bool is_permutation_of_branches(
    const std::array<int, kFeistelBranches>& perm) {
  std::array<bool, kFeistelBranches> seen{};
  for (int v : perm) {
    if (v < 0 || v >= kFeistelBranches || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}
static_assert(is_permutation_of_branches(kBlockShuffle));

// 2048-bit permutation state. Branch b occupies serialization bytes
// [16b, 16b + 16); the same bytes read as 32 little-endian 64-bit words give
// the word view used for seeding.
struct PermutationState {
  std::array<Block128, kFeistelBranches> branches{};

  friend bool operator==(const PermutationState&,
                         const PermutationState&) = default;

  std::span<std::uint8_t, kStateBytes> bytes() {
    return std::span<std::uint8_t, kStateBytes>(branches[0].bytes.data(),
                                                kStateBytes);
  }
  std::span<const std::uint8_t, kStateBytes> bytes() const {
    return std::span<const std::uint8_t, kStateBytes>(branches[0].bytes.data(),
                                                      kStateBytes);
  }

  std::uint64_t word(std::size_t index) const;
  void set_word(std::size_t index, std::uint64_t value);
};
static_assert(sizeof(PermutationState) == kStateBytes);

// Round constants: key for round r, function f is keys[8 * r + f].
class KeySchedule {
 public:
  // First 2176 bytes of the binary fraction of pi (0x24, 0x3f, 0x6a, ...).
  static const KeySchedule& builtin_pi();

  // Takes the bytes verbatim. Throws Error(kSize) unless exactly 2176 bytes.
  static KeySchedule from_bytes(std::span<const std::uint8_t> bytes);

  // Throws Error(kIo) when unreadable, Error(kSize) on a wrong length.
  static KeySchedule from_file(const std::filesystem::path& path);

  const Block128& key(int round, int function) const {
    return keys_[round * kFeistelFunctions + function];
  }
  std::span<const Block128, kFeistelFunctions> round_keys(int round) const {
    return std::span<const Block128, kFeistelFunctions>(
        keys_.data() + round * kFeistelFunctions, kFeistelFunctions);
  }
  const std::array<Block128, kRoundKeyCount>& keys() const { return keys_; }

  bool all_distinct() const;

  friend bool operator==(const KeySchedule&, const KeySchedule&) = default;

 private:
  KeySchedule() = default;

  std::array<Block128, kRoundKeyCount> keys_{};
};

// odd[p] := aes_round(aes_round(even[p], keys[p]), odd[p]) for all 8 pairs.
PermutationState round_functions(
    const PermutationState& state,
    std::span<const Block128, kFeistelFunctions> round_keys,
    Backend backend = default_backend());

PermutationState block_shuffle(const PermutationState& state);

PermutationState permute(const PermutationState& state,
                         const KeySchedule& schedule,
                         Backend backend = default_backend());

// Exact inverse of permute; only needs the forward round function.
PermutationState inverse_permute(const PermutationState& state,
                                 const KeySchedule& schedule,
                                 Backend backend = default_backend());

// In-place variant used by the generator's hot path.
void permute_in_place(PermutationState& state, const KeySchedule& schedule,
                      Backend backend);

namespace hardware {
void permute_in_place(PermutationState& state, const KeySchedule& schedule);
}  // namespace hardware

}  // namespace randen

#endif  // RANDEN_PERMUTATION_HPP_

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

#include "randen/permutation.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <vector>

#include "randen/error.hpp"

namespace randen {

namespace internal {
extern const std::array<std::uint8_t, kKeyBytes> kPiFractionBytes;
}  // namespace internal

std::uint64_t PermutationState::word(std::size_t index) const {
  const auto raw = bytes().subspan(8 * index, 8);
  std::uint64_t value = 0;
  for (int i = 7; i >= 0; --i) value = (value << 8) | raw[i];
  return value;
}

void PermutationState::set_word(std::size_t index, std::uint64_t value) {
  auto raw = bytes().subspan(8 * index, 8);
  for (int i = 0; i < 8; ++i) raw[i] = static_cast<std::uint8_t>(value >> (8 * i));
}

const KeySchedule& KeySchedule::builtin_pi() {
  static const KeySchedule schedule = from_bytes(internal::kPiFractionBytes);
  return schedule;
}

KeySchedule KeySchedule::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kKeyBytes) {
    throw Error(ErrorCode::kSize, "round keys must be exactly 2176 bytes, got " +
                                      std::to_string(bytes.size()));
  }
  KeySchedule schedule;
  for (int k = 0; k < kRoundKeyCount; ++k) {
    std::copy_n(bytes.begin() + 16 * k, 16, schedule.keys_[k].bytes.begin());
  }
  return schedule;
}

KeySchedule KeySchedule::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open key file " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(ErrorCode::kIo, "cannot read key file " + path.string());
  }
  return from_bytes(bytes);
}

bool KeySchedule::all_distinct() const {
  std::vector<std::array<std::uint8_t, 16>> sorted;
  sorted.reserve(keys_.size());
  for (const auto& key : keys_) sorted.push_back(key.bytes);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

PermutationState round_functions(
    const PermutationState& state,
    std::span<const Block128, kFeistelFunctions> round_keys, Backend backend) {
  require_backend(backend);
  PermutationState out = state;
  for (int f = 0; f < kFeistelFunctions; ++f) {
    const Block128& even = state.branches[2 * f];
    const Block128& odd = state.branches[2 * f + 1];
    out.branches[2 * f + 1] =
        aes_round(aes_round(even, round_keys[f], backend), odd, backend);
  }
  return out;
}

PermutationState block_shuffle(const PermutationState& state) {
  PermutationState out;
  for (int b = 0; b < kFeistelBranches; ++b) {
    out.branches[b] = state.branches[kBlockShuffle[b]];
  }
  return out;
}

namespace {

void software_permute(PermutationState& state, const KeySchedule& schedule) {
  for (int round = 0; round < kFeistelRounds; ++round) {
    state = block_shuffle(
        round_functions(state, schedule.round_keys(round), Backend::kSoftware));
  }
}

}  // namespace

void permute_in_place(PermutationState& state, const KeySchedule& schedule,
                      Backend backend) {
  if (backend == Backend::kHardware) {
    require_backend(backend);
    hardware::permute_in_place(state, schedule);
  } else {
    software_permute(state, schedule);
  }
}

PermutationState permute(const PermutationState& state,
                         const KeySchedule& schedule, Backend backend) {
  PermutationState out = state;
  permute_in_place(out, schedule, backend);
  return out;
}

PermutationState inverse_permute(const PermutationState& state,
                                 const KeySchedule& schedule, Backend backend) {
  require_backend(backend);
  PermutationState current = state;
  for (int round = kFeistelRounds - 1; round >= 0; --round) {
    PermutationState unshuffled;
    for (int b = 0; b < kFeistelBranches; ++b) {
      unshuffled.branches[kBlockShuffle[b]] = current.branches[b];
    }
    // Even branches passed through, so F(even) is recomputable and XORing it
    // back into the odd branch undoes the round.
    const auto keys = schedule.round_keys(round);
    for (int f = 0; f < kFeistelFunctions; ++f) {
      const Block128 mask = aes_round(
          aes_round(unshuffled.branches[2 * f], keys[f], backend), Block128{},
          backend);
      unshuffled.branches[2 * f + 1] ^= mask;
    }
    current = unshuffled;
  }
  return current;
}

}  // namespace randen

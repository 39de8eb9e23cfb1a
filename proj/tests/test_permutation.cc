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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "doctest.h"
#include "randen/error.hpp"
#include "randen/permutation.hpp"
#include "test_support.hpp"

namespace randen {
namespace {

#include "golden_vectors.inc"

using testing::random_keys;
using testing::random_state;

// Bailey-Borwein-Plouffe digit extraction: hex digit `position` (0-based,
// after the point) of pi.
long double bbp_series(int j, int position) {
  long double sum = 0;
  for (int k = 0; k <= position; ++k) {
    const std::uint64_t denominator = 8 * static_cast<std::uint64_t>(k) + j;
    std::uint64_t power = 1;
    std::uint64_t base = 16 % denominator;
    for (int e = position - k; e > 0; e >>= 1) {
      if (e & 1) power = power * base % denominator;
      base = base * base % denominator;
    }
    sum += static_cast<long double>(power) / denominator;
    sum -= std::floor(sum);
  }
  long double term = 1;
  for (int k = position + 1; term > 1e-20L; ++k) {
    term = std::pow(16.0L, position - k) / (8 * k + j);
    sum += term;
  }
  return sum - std::floor(sum);
}

int pi_hex_digit(int position) {
  long double x = 4 * bbp_series(1, position) - 2 * bbp_series(4, position) -
                  bbp_series(5, position) - bbp_series(6, position);
  x -= std::floor(x);
  return static_cast<int>(16 * x);
}

PermutationState labeled_state() {
  PermutationState state;
  for (int b = 0; b < kFeistelBranches; ++b) state.branches[b].bytes.fill(b);
  return state;
}

template <std::size_t N>
bool same_bytes(std::span<const std::uint8_t> actual,
                const std::array<std::uint8_t, N>& expected) {
  return actual.size() == N &&
         std::equal(actual.begin(), actual.end(), expected.begin());
}

std::vector<Backend> available_backends() {
  std::vector<Backend> backends = {Backend::kSoftware};
  if (hardware_aes_available()) backends.push_back(Backend::kHardware);
  return backends;
}

const KeySchedule& zero_keys() {
  static const KeySchedule keys =
      KeySchedule::from_bytes(std::array<std::uint8_t, kKeyBytes>{});
  return keys;
}

std::filesystem::path write_temp(const std::string& name, std::size_t size,
                                 std::uint8_t fill) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  const std::string bytes(size, static_cast<char>(fill));
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  return path;
}

TEST_CASE("shuffle table") {
  CHECK(is_permutation_of_branches(kBlockShuffle));
  std::array<int, kFeistelBranches> broken = kBlockShuffle;
  broken[0] = broken[1];
  CHECK_FALSE(is_permutation_of_branches(broken));
}

TEST_CASE("builtin keys are the binary fraction of pi") {
  const KeySchedule& keys = KeySchedule::builtin_pi();
  CHECK(keys.keys()[0].bytes == kPiFirstBlock);
  CHECK(keys.all_distinct());

  // Every byte against an independent digit-extraction computation.
  int mismatches = 0;
  for (int k = 0; k < kRoundKeyCount; ++k) {
    for (int i = 0; i < 16; ++i) {
      const int position = 2 * (16 * k + i);
      const int expected = 16 * pi_hex_digit(position) + pi_hex_digit(position + 1);
      mismatches += keys.keys()[k].bytes[i] != expected;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("key schedule from bytes and files") {
  const std::array<std::uint8_t, kKeyBytes> zeros{};
  const KeySchedule keys = KeySchedule::from_bytes(zeros);
  for (const auto& key : keys.keys()) CHECK(key == Block128{});
  CHECK_FALSE(keys.all_distinct());

  std::vector<std::uint8_t> counting(kKeyBytes);
  std::iota(counting.begin(), counting.end(), 0);
  const KeySchedule layout = KeySchedule::from_bytes(counting);
  CHECK(layout.key(1, 2).bytes[3] == static_cast<std::uint8_t>(16 * 10 + 3));

  try {
    KeySchedule::from_bytes(std::span(zeros).first(2175));
    FAIL("expected size error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSize);
  }

  const auto good = write_temp("randen_keys_good.bin", kKeyBytes, 0);
  CHECK(KeySchedule::from_file(good) == keys);
  const auto short_file = write_temp("randen_keys_short.bin", 2175, 0);
  try {
    KeySchedule::from_file(short_file);
    FAIL("expected size error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSize);
  }
  try {
    KeySchedule::from_file("/nonexistent/randen.keys");
    FAIL("expected I/O error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
  std::filesystem::remove(good);
  std::filesystem::remove(short_file);
}

TEST_CASE("word view is little-endian within each branch") {
  PermutationState state;
  state.set_word(5, 0x0807060504030201ull);
  CHECK(state.branches[2].bytes[8] == 0x01);
  CHECK(state.branches[2].bytes[15] == 0x08);
  CHECK(state.word(5) == 0x0807060504030201ull);
}

TEST_CASE("round functions") {
  for (Backend backend : available_backends()) {
    CAPTURE(backend_name(backend));
    const PermutationState out =
        round_functions({}, zero_keys().round_keys(0), backend);
    Block128 sixty_three;
    sixty_three.bytes.fill(0x63);
    const Block128 expected_odd = aes_round(sixty_three, {}, Backend::kSoftware);
    for (int f = 0; f < kFeistelFunctions; ++f) {
      CHECK(out.branches[2 * f] == Block128{});
      CHECK(out.branches[2 * f + 1] == expected_odd);
    }
  }

  SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const PermutationState state = random_state(rng);
    const KeySchedule keys = random_keys(rng);
    const PermutationState out = round_functions(state, keys.round_keys(trial % 17));
    for (int f = 0; f < kFeistelFunctions; ++f) {
      REQUIRE(out.branches[2 * f] == state.branches[2 * f]);
      const Block128& e = state.branches[2 * f];
      const Block128& o = state.branches[2 * f + 1];
      const Block128& k = keys.round_keys(trial % 17)[f];
      REQUIRE(out.branches[2 * f + 1] == (aes_round(aes_round(e, k), {}) ^ o));
    }
  }
}

TEST_CASE("block shuffle") {
  const PermutationState out = block_shuffle(labeled_state());
  for (int i = 0; i < kFeistelBranches; ++i) {
    CHECK(out.branches[i].bytes[0] == kBlockShuffle[i]);
  }
  const std::array<int, 16> expected = {7, 2, 13, 4, 11, 8, 3, 6,
                                        15, 0, 9, 10, 1, 14, 5, 12};
  for (int i = 0; i < kFeistelBranches; ++i) {
    CHECK(out.branches[i].bytes[0] == expected[i]);
  }

  PermutationState same;
  for (auto& branch : same.branches) branch.bytes.fill(0xa5);
  CHECK(block_shuffle(same) == same);

  SplitMix64 rng(11);
  const PermutationState state = random_state(rng);
  const PermutationState shuffled = block_shuffle(state);
  PermutationState restored;
  for (int i = 0; i < kFeistelBranches; ++i) {
    restored.branches[kBlockShuffle[i]] = shuffled.branches[i];
  }
  CHECK(restored == state);
}

TEST_CASE("permute golden vectors") {
  for (Backend backend : available_backends()) {
    CAPTURE(backend_name(backend));
    CHECK(same_bytes(permute({}, zero_keys(), backend).bytes(), kPermuteZeroZeroKeys));
    CHECK(same_bytes(permute({}, KeySchedule::builtin_pi(), backend).bytes(),
                     kPermuteZeroPiKeys));
  }
}

TEST_CASE("permute equals 17 explicit rounds") {
  SplitMix64 rng(5);
  const PermutationState state = random_state(rng);
  const KeySchedule keys = random_keys(rng);
  PermutationState expected = state;
  for (int r = 0; r < kFeistelRounds; ++r) {
    expected = block_shuffle(round_functions(expected, keys.round_keys(r)));
  }
  for (Backend backend : available_backends()) {
    CHECK(permute(state, keys, backend) == expected);
  }
}

TEST_CASE("inverse permutation") {
  PermutationState golden;
  std::copy(kPermuteZeroPiKeys.begin(), kPermuteZeroPiKeys.end(),
            golden.bytes().begin());
  CHECK(inverse_permute(golden, KeySchedule::builtin_pi()) == PermutationState{});
  CHECK(inverse_permute(permute({}, zero_keys()), zero_keys()) == PermutationState{});

  SplitMix64 rng(17);
  const KeySchedule keys = random_keys(rng);
  for (int trial = 0; trial < 100; ++trial) {
    const PermutationState state = random_state(rng);
    REQUIRE(inverse_permute(permute(state, keys), keys) == state);
    REQUIRE(permute(inverse_permute(state, keys), keys) == state);
  }
}

TEST_CASE("single bit flips avalanche") {
  SplitMix64 rng(23);
  const KeySchedule& keys = KeySchedule::builtin_pi();
  double total = 0;
  constexpr int kTrials = 200;
  for (int trial = 0; trial < kTrials; ++trial) {
    const PermutationState state = random_state(rng);
    PermutationState flipped = state;
    const std::uint64_t bit = rng.next_u64() % (8 * kStateBytes);
    flipped.bytes()[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    total += testing::hamming_distance(permute(state, keys), permute(flipped, keys));
  }
  const double mean = total / kTrials;
  CHECK(mean >= 1024 - 64);
  CHECK(mean <= 1024 + 64);
}

TEST_CASE("hardware and software permutations agree") {
  if (!hardware_aes_available()) return;
  SplitMix64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const PermutationState state = random_state(rng);
    const KeySchedule keys = random_keys(rng);
    REQUIRE(permute(state, keys, Backend::kHardware) ==
            permute(state, keys, Backend::kSoftware));
  }
}

}  // namespace
}  // namespace randen

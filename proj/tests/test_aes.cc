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

#include <set>

#include "doctest.h"
#include "randen/aes.hpp"
#include "randen/error.hpp"
#include "test_support.hpp"

namespace randen {
namespace {

using testing::random_block;

// Byte-at-a-time AES round straight from FIPS-197 (S-box table, xtime);
// independent of the library's table-driven path.
constexpr std::uint8_t kFipsSbox[256] = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};

std::uint8_t xtime(std::uint8_t x) {
  return static_cast<std::uint8_t>((x << 1) ^ ((x >> 7) * 0x1b));
}

Block128 oracle_round(const Block128& in, const Block128& key) {
  std::uint8_t s[4][4];  // [row][column]
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) s[r][c] = kFipsSbox[in.bytes[4 * ((c + r) % 4) + r]];
  }
  Block128 out;
  for (int c = 0; c < 4; ++c) {
    const std::uint8_t a0 = s[0][c], a1 = s[1][c], a2 = s[2][c], a3 = s[3][c];
    const std::uint8_t all = a0 ^ a1 ^ a2 ^ a3;
    out.bytes[4 * c + 0] = a0 ^ all ^ xtime(a0 ^ a1);
    out.bytes[4 * c + 1] = a1 ^ all ^ xtime(a1 ^ a2);
    out.bytes[4 * c + 2] = a2 ^ all ^ xtime(a2 ^ a3);
    out.bytes[4 * c + 3] = a3 ^ all ^ xtime(a3 ^ a0);
  }
  return out ^ key;
}

Block128 from_hex(const char* hex) {
  Block128 block;
  for (int i = 0; i < 16; ++i) {
    unsigned v = 0;
    std::sscanf(hex + 2 * i, "%2x", &v);
    block.bytes[i] = static_cast<std::uint8_t>(v);
  }
  return block;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> backends = {Backend::kSoftware};
  if (hardware_aes_available()) backends.push_back(Backend::kHardware);
  return backends;
}

TEST_CASE("oracle reproduces the FIPS-197 first cipher round") {
  const Block128 state = from_hex("193de3bea0f4e22b9ac68d2ae9f84808");
  const Block128 key = from_hex("a0fafe1788542cb123a339392a6c7605");
  CHECK(oracle_round(state, key) == from_hex("a49c7ff2689f352b6b5bea43026a5049"));
}

TEST_CASE("zero block and zero key give all 0x63") {
  Block128 expected;
  expected.bytes.fill(0x63);
  CHECK(oracle_round({}, {}) == expected);
  for (Backend backend : available_backends()) {
    CAPTURE(backend_name(backend));
    CHECK(aes_round({}, {}, backend) == expected);
  }
}

TEST_CASE("FIPS-197 round vector on every backend") {
  const Block128 state = from_hex("193de3bea0f4e22b9ac68d2ae9f84808");
  const Block128 key = from_hex("a0fafe1788542cb123a339392a6c7605");
  for (Backend backend : available_backends()) {
    CAPTURE(backend_name(backend));
    CHECK(aes_round(state, key, backend) == from_hex("a49c7ff2689f352b6b5bea43026a5049"));
  }
}

TEST_CASE("backends match the oracle on random pairs") {
  SplitMix64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Block128 x = random_block(rng);
    const Block128 k = random_block(rng);
    const Block128 expected = oracle_round(x, k);
    for (Backend backend : available_backends()) {
      REQUIRE(aes_round(x, k, backend) == expected);
    }
  }
}

TEST_CASE("key enters linearly") {
  SplitMix64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Block128 x = random_block(rng);
    const Block128 k1 = random_block(rng);
    const Block128 k2 = random_block(rng);
    REQUIRE(aes_round(x, k1) == (aes_round(x, {}) ^ k1));
    REQUIRE(aes_round(x, k1 ^ k2) == (aes_round(x, {}) ^ k1 ^ k2));
  }
}

TEST_CASE("round is injective on a sample") {
  SplitMix64 rng(99);
  const Block128 key = random_block(rng);
  std::set<std::array<std::uint8_t, 16>> inputs;
  std::set<std::array<std::uint8_t, 16>> outputs;
  while (inputs.size() < 100000) {
    const Block128 x = random_block(rng);
    if (inputs.insert(x.bytes).second) outputs.insert(aes_round(x, key).bytes);
  }
  CHECK(outputs.size() == inputs.size());
}

TEST_CASE("verify_backends") {
  CHECK_THROWS_AS(verify_backends(0), Error);
  if (hardware_aes_available()) {
    CHECK(verify_backends(1) == BackendCheck::kMatch);
    CHECK(verify_backends(10000) == BackendCheck::kMatch);
  } else {
    CHECK(verify_backends(1) == BackendCheck::kHardwareUnavailable);
    CHECK_THROWS_AS(require_backend(Backend::kHardware), Error);
  }
}

TEST_CASE("default backend follows CPU detection") {
  CHECK(default_backend() ==
        (hardware_aes_available() ? Backend::kHardware : Backend::kSoftware));
}

}  // namespace
}  // namespace randen

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

// Table-driven AES round. Correctness fallback only: it is slow and makes no
// attempt at constant-time table access.

#include <array>
#include <cstdint>

#include "randen/aes.hpp"

namespace randen::software {
namespace {

constexpr std::uint8_t xtime(std::uint8_t x) {
  return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t product = 0;
  while (b != 0) {
    if (b & 1) product ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return product;
}

constexpr std::uint8_t rotl8(std::uint8_t x, int shift) {
  return static_cast<std::uint8_t>((x << shift) | (x >> (8 - shift)));
}

constexpr std::array<std::uint8_t, 256> make_sbox() {
  std::array<std::uint8_t, 256> sbox{};
  for (int x = 0; x < 256; ++x) {
    std::uint8_t inverse = 0;
    for (int y = 1; x != 0 && y < 256; ++y) {
      if (gf_mul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)) ==
          1) {
        inverse = static_cast<std::uint8_t>(y);
        break;
      }
    }
    sbox[x] = inverse ^ rotl8(inverse, 1) ^ rotl8(inverse, 2) ^
              rotl8(inverse, 3) ^ rotl8(inverse, 4) ^ 0x63;
  }
  return sbox;
}

constexpr std::array<std::uint8_t, 256> kSbox = make_sbox();
static_assert(kSbox[0x00] == 0x63 && kSbox[0x01] == 0x7c &&
              kSbox[0x53] == 0xed && kSbox[0xff] == 0x16);

// kTable[x] = column (2s, s, s, 3s) for s = S(x), packed little-endian so
// byte r of the word lands in row r. Rows 1..3 use byte rotations of it.
constexpr std::array<std::uint32_t, 256> make_table() {
  std::array<std::uint32_t, 256> table{};
  for (int x = 0; x < 256; ++x) {
    const std::uint8_t s = kSbox[x];
    const std::uint8_t s2 = xtime(s);
    const std::uint8_t s3 = s2 ^ s;
    table[x] = std::uint32_t{s2} | (std::uint32_t{s} << 8) |
               (std::uint32_t{s} << 16) | (std::uint32_t{s3} << 24);
  }
  return table;
}

constexpr std::array<std::uint32_t, 256> kTable = make_table();

constexpr std::uint32_t rotl32(std::uint32_t x, int shift) {
  return (x << shift) | (x >> (32 - shift));
}

}  // namespace

Block128 aes_round(const Block128& state, const Block128& round_key) {
  const auto& in = state.bytes;
  Block128 out;
  for (int c = 0; c < 4; ++c) {
    // ShiftRows: row r of output column c comes from input column c + r.
    const std::uint32_t column =
        kTable[in[4 * c + 0]] ^
        rotl32(kTable[in[4 * ((c + 1) % 4) + 1]], 8) ^
        rotl32(kTable[in[4 * ((c + 2) % 4) + 2]], 16) ^
        rotl32(kTable[in[4 * ((c + 3) % 4) + 3]], 24);
    for (int r = 0; r < 4; ++r) {
      out.bytes[4 * c + r] = static_cast<std::uint8_t>(column >> (8 * r)) ^
                             round_key.bytes[4 * c + r];
    }
  }
  return out;
}

}  // namespace randen::software

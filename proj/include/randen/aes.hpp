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

#ifndef RANDEN_AES_HPP_
#define RANDEN_AES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace randen {

// One 128-bit Feistel branch / AES block. Byte i is offset i of the block's
// serialization; AES state cell (row r, column c) is bytes[4 * c + r]. This is
// the layout AESENC consumes from memory on little-endian hosts.
struct alignas(16) Block128 {
  std::array<std::uint8_t, 16> bytes{};

  friend bool operator==(const Block128&, const Block128&) = default;

  Block128& operator^=(const Block128& other) {
    for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] ^= other.bytes[i];
    return *this;
  }
  friend Block128 operator^(Block128 a, const Block128& b) { return a ^= b; }
};

enum class Backend {
  kHardware,
  kSoftware,
};

std::string_view backend_name(Backend backend);

// True if this CPU executes AESENC (or the platform equivalent).
bool hardware_aes_available();

// Hardware when available, software otherwise. Decided once per process.
Backend default_backend();

// Throws Error(kNoHardware) if `backend` is kHardware on a CPU without AES.
void require_backend(Backend backend);

// A single AES encryption round with AESENC semantics:
// MixColumns(ShiftRows(SubBytes(state))) ^ round_key.
Block128 aes_round(const Block128& state, const Block128& round_key,
                   Backend backend);

inline Block128 aes_round(const Block128& state, const Block128& round_key) {
  return aes_round(state, round_key, default_backend());
}

namespace software {
Block128 aes_round(const Block128& state, const Block128& round_key);
}  // namespace software

namespace hardware {
// Precondition: hardware_aes_available().
Block128 aes_round(const Block128& state, const Block128& round_key);
}  // namespace hardware

enum class BackendCheck {
  kMatch,
  kMismatch,
  kHardwareUnavailable,
};

// Compares both backends on `sample_count` pseudorandom (fixed-seed) pairs.
// Throws Error(kInvalidArgument) if sample_count is zero.
BackendCheck verify_backends(std::uint64_t sample_count);

}  // namespace randen

#endif  // RANDEN_AES_HPP_

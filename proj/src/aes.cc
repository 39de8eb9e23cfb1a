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

#include "randen/aes.hpp"


#include "randen/baselines.hpp"
#include "randen/error.hpp"

namespace randen {

std::string_view backend_name(Backend backend) {
  return backend == Backend::kHardware ? "hardware" : "software";
}

bool hardware_aes_available() {
#if defined(RANDEN_HAVE_AESNI)
  static const bool available = __builtin_cpu_supports("aes") &&
                                __builtin_cpu_supports("sse2");
  return available;
#else
  return false;
#endif
}

Backend default_backend() {
  static const Backend backend =
      hardware_aes_available() ? Backend::kHardware : Backend::kSoftware;
  return backend;
}

void require_backend(Backend backend) {
  if (backend == Backend::kHardware && !hardware_aes_available()) {
    throw Error(ErrorCode::kNoHardware, "hardware AES backend unavailable");
  }
}

Block128 aes_round(const Block128& state, const Block128& round_key,
                   Backend backend) {
  if (backend == Backend::kHardware) {
    require_backend(backend);
    return hardware::aes_round(state, round_key);
  }
  return software::aes_round(state, round_key);
}

namespace {

Block128 random_block(SplitMix64& source) {
  Block128 block;
  const std::uint64_t lo = source.next_u64();
  const std::uint64_t hi = source.next_u64();
  for (int i = 0; i < 8; ++i) {
    block.bytes[i] = static_cast<std::uint8_t>(lo >> (8 * i));
    block.bytes[8 + i] = static_cast<std::uint8_t>(hi >> (8 * i));
  }
  return block;
}

}  // namespace

BackendCheck verify_backends(std::uint64_t sample_count) {
  if (sample_count == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "verify_backends: sample_count must be at least 1");
  }
  if (!hardware_aes_available()) return BackendCheck::kHardwareUnavailable;

  SplitMix64 source(0x5eed'ae5'0000'0001ull);
  for (std::uint64_t i = 0; i < sample_count; ++i) {
    const Block128 state = random_block(source);
    const Block128 key = random_block(source);
    if (hardware::aes_round(state, key) != software::aes_round(state, key)) {
      return BackendCheck::kMismatch;
    }
  }
  return BackendCheck::kMatch;
}

}  // namespace randen

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

#ifndef RANDEN_ENGINE_HPP_
#define RANDEN_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>

#include "randen/permutation.hpp"

namespace randen {

struct Seed {
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;
  std::uint64_t s2 = 0;
  std::uint64_t s3 = 0;

  friend bool operator==(const Seed&, const Seed&) = default;
};

// Bytes [0, 16) of the state are the inner capacity and never leave the
// engine. Output is read in ascending byte order from offset 16.
inline constexpr std::size_t kCapacityBytes = 16;
inline constexpr std::size_t kOutputBytesPerBuffer = kStateBytes - kCapacityBytes;

// Sponge-style generator over the Randen permutation with feed-forward of the
// inner capacity. Satisfies std::uniform_random_bit_generator.
//
// Not thread-safe; distinct instances are independent.
class Engine {
 public:
  using result_type = std::uint64_t;

  explicit Engine(Seed seed = {});
  Engine(Seed seed, std::shared_ptr<const KeySchedule> keys,
         Backend backend = default_backend());

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return next_u64(); }

  std::uint64_t next_u64();
  std::uint32_t next_u32();

  // Same state as `count` calls to next_u64, without copying bytes out.
  void discard(std::uint64_t count);

  // Copies the next out.size() output bytes, refilling as needed. These are
  // the bytes next_u64 would return when out.size() is a multiple of 8.
  void fill(std::span<std::uint8_t> out);

  // Permute + inner feed-forward; resets the cursor to the first output byte.
  void generate();

  const PermutationState& state() const { return state_; }
  std::size_t cursor() const { return cursor_; }
  Backend backend() const { return backend_; }
  const KeySchedule& keys() const { return *keys_; }

 private:
  PermutationState state_;
  std::size_t cursor_ = kStateBytes;
  std::shared_ptr<const KeySchedule> keys_;
  Backend backend_;
};

// Zero state with the seed words at 4, 5, 8 and 9.
PermutationState seeded_state(Seed seed);

// One Generate step as a pure function (reference for structural checks).
PermutationState generate_state(const PermutationState& state,
                                const KeySchedule& keys,
                                Backend backend = default_backend());

}  // namespace randen

#endif  // RANDEN_ENGINE_HPP_

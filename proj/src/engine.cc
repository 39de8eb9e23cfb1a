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

#include "randen/engine.hpp"

#include <algorithm>

namespace randen {

namespace {

std::shared_ptr<const KeySchedule> builtin_keys() {
  static const std::shared_ptr<const KeySchedule> keys(
      &KeySchedule::builtin_pi(), [](const KeySchedule*) {});
  return keys;
}

}  // namespace

PermutationState seeded_state(Seed seed) {
  PermutationState state;
  state.set_word(4, seed.s0);
  state.set_word(5, seed.s1);
  state.set_word(8, seed.s2);
  state.set_word(9, seed.s3);
  return state;
}

PermutationState generate_state(const PermutationState& state,
                                const KeySchedule& keys, Backend backend) {
  PermutationState next = permute(state, keys, backend);
  next.branches[0] ^= state.branches[0];
  return next;
}

Engine::Engine(Seed seed) : Engine(seed, builtin_keys()) {}

Engine::Engine(Seed seed, std::shared_ptr<const KeySchedule> keys,
               Backend backend)
    : state_(seeded_state(seed)),
      keys_(keys ? std::move(keys) : builtin_keys()),
      backend_(backend) {
  require_backend(backend_);
}

void Engine::generate() {
  const Block128 prev_inner = state_.branches[0];
  permute_in_place(state_, *keys_, backend_);
  state_.branches[0] ^= prev_inner;
  cursor_ = kCapacityBytes;
}

std::uint64_t Engine::next_u64() {
  if (kStateBytes - cursor_ < 8) generate();
  const auto raw = state_.bytes().subspan(cursor_, 8);
  std::uint64_t result = 0;
  for (int i = 7; i >= 0; --i) result = (result << 8) | raw[i];
  cursor_ += 8;
  return result;
}

std::uint32_t Engine::next_u32() {
  if (kStateBytes - cursor_ < 4) generate();
  const auto raw = state_.bytes().subspan(cursor_, 4);
  std::uint32_t result = 0;
  for (int i = 3; i >= 0; --i) result = (result << 8) | raw[i];
  cursor_ += 4;
  return result;
}

void Engine::discard(std::uint64_t count) {
  // Consume whatever whole draws remain in the current buffer first.
  const std::uint64_t available = (kStateBytes - cursor_) / 8;
  if (count <= available) {
    cursor_ += 8 * count;
    return;
  }
  count -= available;
  constexpr std::uint64_t kDrawsPerBuffer = kOutputBytesPerBuffer / 8;
  const std::uint64_t buffers = (count + kDrawsPerBuffer - 1) / kDrawsPerBuffer;
  for (std::uint64_t i = 0; i < buffers; ++i) generate();
  cursor_ = kCapacityBytes + 8 * (count - (buffers - 1) * kDrawsPerBuffer);
}

void Engine::fill(std::span<std::uint8_t> out) {
  while (!out.empty()) {
    if (cursor_ == kStateBytes) generate();
    const std::size_t n = std::min(out.size(), kStateBytes - cursor_);
    std::copy_n(state_.bytes().begin() + cursor_, n, out.begin());
    cursor_ += n;
    out = out.subspan(n);
  }
}

}  // namespace randen

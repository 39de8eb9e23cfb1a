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

// AES-NI paths. This translation unit is the only one built with -maes; the
// dispatcher in aes.cc checks CPU support before calling into it.

#include <cstring>

#include "randen/aes.hpp"
#include "randen/error.hpp"
#include "randen/permutation.hpp"

#if defined(RANDEN_HAVE_AESNI)
#include <emmintrin.h>
#include <wmmintrin.h>
#endif

namespace randen::hardware {

#if defined(RANDEN_HAVE_AESNI)

namespace {

inline __m128i load(const Block128& block) {
  return _mm_load_si128(reinterpret_cast<const __m128i*>(block.bytes.data()));
}

inline void store(__m128i v, Block128& block) {
  _mm_store_si128(reinterpret_cast<__m128i*>(block.bytes.data()), v);
}

}  // namespace

Block128 aes_round(const Block128& state, const Block128& round_key) {
  Block128 out;
  store(_mm_aesenc_si128(load(state), load(round_key)), out);
  return out;
}

void permute_in_place(PermutationState& state, const KeySchedule& schedule) {
  __m128i branch[kFeistelBranches];
  for (int b = 0; b < kFeistelBranches; ++b) branch[b] = load(state.branches[b]);

  const Block128* keys = schedule.keys().data();
  for (int round = 0; round < kFeistelRounds; ++round) {
    // The second AESENC takes the odd branch as its round key, which folds
    // the Feistel XOR into the instruction.
    for (int f = 0; f < kFeistelFunctions; ++f) {
      const __m128i f1 = _mm_aesenc_si128(branch[2 * f], load(keys[f]));
      branch[2 * f + 1] = _mm_aesenc_si128(f1, branch[2 * f + 1]);
    }
    keys += kFeistelFunctions;

    __m128i source[kFeistelBranches];
    std::memcpy(source, branch, sizeof(source));
    for (int b = 0; b < kFeistelBranches; ++b) branch[b] = source[kBlockShuffle[b]];
  }

  for (int b = 0; b < kFeistelBranches; ++b) store(branch[b], state.branches[b]);
}

#else

Block128 aes_round(const Block128&, const Block128&) {
  throw Error(ErrorCode::kNoHardware, "built without AES hardware support");
}

void permute_in_place(PermutationState&, const KeySchedule&) {
  throw Error(ErrorCode::kNoHardware, "built without AES hardware support");
}

#endif

}  // namespace randen::hardware

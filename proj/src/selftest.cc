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

#include "randen/selftest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <vector>

#include "randen/aes.hpp"
#include "randen/engine.hpp"
#include "randen/permutation.hpp"
#include "randen/stats.hpp"

namespace randen {
namespace {

#include "golden_vectors.inc"

template <std::size_t N>
bool same_bytes(std::span<const std::uint8_t> actual,
                const std::array<std::uint8_t, N>& expected) {
  return actual.size() == N &&
         std::equal(actual.begin(), actual.end(), expected.begin());
}

std::string format(const char* fmt, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t samples) {
  std::vector<SelftestResult> results;

  {
    SelftestResult r{"aes-backends", true, ""};
    switch (verify_backends(samples)) {
      case BackendCheck::kMatch:
        r.detail = std::to_string(samples) + " samples agree";
        break;
      case BackendCheck::kHardwareUnavailable:
        r.detail = "hardware backend unavailable; skipped";
        break;
      case BackendCheck::kMismatch:
        r.passed = false;
        r.detail = "hardware and software AES rounds disagree";
        break;
    }
    results.push_back(r);
  }

  const Backend backend = default_backend();
  const std::array<std::uint8_t, kKeyBytes> zero_key_bytes{};
  const KeySchedule zero_keys = KeySchedule::from_bytes(zero_key_bytes);
  const KeySchedule& pi_keys = KeySchedule::builtin_pi();

  results.push_back({"golden-permute-zero-keys",
                     same_bytes(permute({}, zero_keys, backend).bytes(),
                                kPermuteZeroZeroKeys),
                     ""});
  results.push_back({"golden-permute-pi-keys",
                     same_bytes(permute({}, pi_keys, backend).bytes(),
                                kPermuteZeroPiKeys),
                     ""});

  auto first_output = [&](Seed seed) {
    Engine engine(seed, nullptr, backend);
    std::vector<std::uint8_t> out(kOutputBytesPerBuffer);
    engine.fill(out);
    return out;
  };
  results.push_back({"golden-output-seed-0000",
                     same_bytes(first_output({0, 0, 0, 0}), kFirstOutputSeed0000),
                     ""});
  results.push_back({"golden-output-seed-1234",
                     same_bytes(first_output({1, 2, 3, 4}), kFirstOutputSeed1234),
                     ""});

  {
    Engine engine({1, 2, 3, 4}, nullptr, backend);
    std::vector<std::uint8_t> stream(8u << 20);
    engine.fill(stream);
    const double ones = stats::ones_fraction(stream);
    results.push_back({"monobit", std::abs(ones - 0.5) <= 2.5e-4,
                       format("ones fraction %.6f (tolerance %.1e)", ones, 2.5e-4)});
    const double chi = stats::byte_chi_square(stream);
    const double p = stats::chi_square_p_value(chi, 255);
    results.push_back({"byte-chi-square", p >= 1e-6 && p <= 1 - 1e-6,
                       format("chi-square %.2f, p = %.6f", chi, p)});
  }
  return results;
}

}  // namespace randen

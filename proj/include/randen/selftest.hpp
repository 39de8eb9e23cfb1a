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

#ifndef RANDEN_SELFTEST_HPP_
#define RANDEN_SELFTEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace randen {

struct SelftestResult {
  std::string check;
  bool passed = false;
  std::string detail;
};

// Backend agreement on `samples` pairs (skipped without AES hardware), the
// frozen golden vectors, and a monobit / byte chi-square smoke test on 8 MB
// of output from seed (1, 2, 3, 4).
std::vector<SelftestResult> run_selftest(std::uint64_t samples);

}  // namespace randen

#endif  // RANDEN_SELFTEST_HPP_

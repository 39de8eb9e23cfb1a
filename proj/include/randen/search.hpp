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

#ifndef RANDEN_SEARCH_HPP_
#define RANDEN_SEARCH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace randen::search {

// Differential activity of a type-2 Feistel round, one bit per function:
// bit i of `even` is branch 2i, bit i of `odd` is branch 2i + 1.
struct ActivityMasks {
  std::uint8_t even = 0;
  std::uint8_t odd = 0;

  friend bool operator==(const ActivityMasks&, const ActivityMasks&) = default;
};

struct SearchNode {
  int round = 0;
  ActivityMasks masks;
  int active = 0;  // active functions in rounds [0, round)
};

// Half-width branch maps of a type-2 network with `functions` round
// functions (2 * functions branches):
//   new_odd[i]  = even[for_new_odd[i]]
//   new_even[i] = f_out[for_new_even[i]]
struct Topology {
  int functions = 8;
  std::array<std::uint8_t, 8> for_new_odd{};
  std::array<std::uint8_t, 8> for_new_even{};

  bool is_valid() const;
};

// 16 branches, improved block shuffle.
inline constexpr Topology kRandenTopology = {
    8, {3, 6, 5, 1, 7, 4, 0, 2}, {1, 2, 4, 3, 0, 5, 7, 6}};

// 4 branches, cyclic type-2 shift (the reduced instance used for oracles).
inline constexpr Topology kFourBranchTopology = {2, {1, 0}, {0, 1}};

// Derives half-width maps from a full branch shuffle where output branch i
// takes input branch shuffle[i]. Odd outputs must come from even inputs and
// vice versa.
std::optional<Topology> topology_from_block_shuffle(
    const std::vector<int>& shuffle);

inline constexpr int kMaxRounds = 24;

// Lower bounds on active functions for rounds 1..24 of the 16-branch network.
inline constexpr std::array<int, kMaxRounds> kPublishedBounds = {
    0, 1, 2, 3, 4, 6, 8, 11, 14, 18, 22, 24,
    27, 30, 32, 35, 36, 39, 41, 44, 45, 48, 50, 53};

// Activity of an XOR output given the F-input and XOR-input activity; the
// both-active case optimistically assumes the differences cancel.
constexpr int xor_result(int even_active, int xor_active) {
  if (even_active == 0 && xor_active == 0) return 0;
  if (even_active == 0 || xor_active == 0) return 1;
  return 0;
}

// One round of the optimistic propagation rule.
ActivityMasks fast_step(const ActivityMasks& masks, const Topology& topology);

// Minimum over all nonzero inputs of active functions under the
// always-cancel rule. An upper bound on the true minimum.
int fast_min_active(int rounds, const Topology& topology = kRandenTopology);

// True minimum: both outcomes are explored wherever an even branch and its
// odd partner are both active. Best-first over a bucket queue keyed by the
// accumulated active count, pruned against a shared incumbent that starts at
// fast_min_active(rounds). Initial masks are sharded across `workers`
// threads; the result does not depend on the worker count.
int exact_min_active(int rounds, int workers = 1,
                     const Topology& topology = kRandenTopology);

struct BoundRow {
  int round = 0;
  int bound = 0;
  std::optional<int> expected;  // published value, 16-branch topology only
  bool mismatch = false;
};

// exact_min_active for 1..max_rounds, checked against kPublishedBounds.
// Throws Error(kInvalidArgument) unless 1 <= max_rounds <= 24.
std::vector<BoundRow> bound_table(int max_rounds, int workers = 1,
                                  const Topology& topology = kRandenTopology,
                                  bool compare_to_published = true);

}  // namespace randen::search

#endif  // RANDEN_SEARCH_HPP_

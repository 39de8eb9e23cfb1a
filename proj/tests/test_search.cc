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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "search_oracles.hpp"
#include "randen/error.hpp"
#include "randen/permutation.hpp"
#include "randen/search.hpp"

namespace randen::search {
namespace {

using testing::brute_force_min_active;
using testing::list_fast_min_active;

constexpr Topology kEightBranchCyclic = {4, {1, 2, 3, 0}, {0, 1, 2, 3}};

TEST_CASE("xor propagation rule") {
  CHECK(xor_result(0, 0) == 0);
  CHECK(xor_result(0, 1) == 1);
  CHECK(xor_result(1, 0) == 1);
  CHECK(xor_result(1, 1) == 0);
}

TEST_CASE("topologies") {
  CHECK(kRandenTopology.is_valid());
  CHECK(kFourBranchTopology.is_valid());
  Topology broken = kRandenTopology;
  broken.for_new_odd[0] = broken.for_new_odd[1];
  CHECK_FALSE(broken.is_valid());

  // The block shuffle routes odd branches to even positions, so its derived
  // maps are the two published half-maps with roles exchanged.
  const auto derived = topology_from_block_shuffle(
      std::vector<int>(kBlockShuffle.begin(), kBlockShuffle.end()));
  REQUIRE(derived.has_value());
  CHECK(derived->for_new_even == kRandenTopology.for_new_odd);
  CHECK(derived->for_new_odd == kRandenTopology.for_new_even);
  CHECK_FALSE(topology_from_block_shuffle({0, 1, 2, 3}).has_value());
  CHECK_FALSE(topology_from_block_shuffle({1, 2, 3}).has_value());
}

TEST_CASE("fast step matches the explicit rule") {
  const ActivityMasks start{0b00000001, 0b00000001};
  const ActivityMasks next = fast_step(start, kRandenTopology);
  // Function 0 cancels; even bit 0 moves to new odd position where
  // for_new_odd[i] == 0, i.e. i = 6.
  CHECK(next.odd == (1 << 6));
  CHECK(next.even == 0);
}

TEST_CASE("fast rule values") {
  CHECK(fast_min_active(1) == 0);
  CHECK(fast_min_active(2) == 1);
  CHECK(fast_min_active(6) == 6);
  for (int r = 1; r <= 8; ++r) {
    CAPTURE(r);
    CHECK(fast_min_active(r) == list_fast_min_active(r, kRandenTopology));
  }
}

TEST_CASE("exact search reproduces the published table") {
  CHECK(exact_min_active(6) == 6);
  CHECK(exact_min_active(10) == 18);
  CHECK(exact_min_active(14) == 30);
  for (int r = 1; r <= kMaxRounds; ++r) {
    CAPTURE(r);
    CHECK(exact_min_active(r) == kPublishedBounds[r - 1]);
  }
}

TEST_CASE("exact is at most fast and non-decreasing") {
  int previous = 0;
  for (int r = 1; r <= 14; ++r) {
    CAPTURE(r);
    const int exact = exact_min_active(r);
    CHECK(exact <= fast_min_active(r));
    CHECK(exact >= previous);
    previous = exact;
  }
}

TEST_CASE("worker count does not change results") {
  for (int r = 1; r <= 12; ++r) {
    CAPTURE(r);
    CHECK(exact_min_active(r, 1) == exact_min_active(r, 4));
  }
  CHECK(exact_min_active(18, 3) == 39);
}

TEST_CASE("either orientation of the shuffle gives the same bounds") {
  const auto derived = topology_from_block_shuffle(
      std::vector<int>(kBlockShuffle.begin(), kBlockShuffle.end()));
  REQUIRE(derived.has_value());
  for (int r = 1; r <= 14; ++r) {
    CHECK(exact_min_active(r, 1, *derived) == kPublishedBounds[r - 1]);
  }
}

TEST_CASE("pruned search equals unpruned recursion on reduced networks") {
  for (int r = 1; r <= 8; ++r) {
    CAPTURE(r);
    CHECK(exact_min_active(r, 1, kFourBranchTopology) ==
          brute_force_min_active(r, kFourBranchTopology));
  }
  for (int r = 1; r <= 5; ++r) {
    CAPTURE(r);
    CHECK(exact_min_active(r, 2, kEightBranchCyclic) ==
          brute_force_min_active(r, kEightBranchCyclic));
  }
  // Four-branch type-2 networks reach six active functions after six rounds.
  CHECK(exact_min_active(6, 1, kFourBranchTopology) == 6);
}

TEST_CASE("pruned search equals unpruned recursion on two 16-branch rounds") {
  CHECK(exact_min_active(2) == brute_force_min_active(2, kRandenTopology));
}

TEST_CASE("bound table") {
  const auto rows = bound_table(6);
  REQUIRE(rows.size() == 6);
  const int expected[] = {0, 1, 2, 3, 4, 6};
  for (int i = 0; i < 6; ++i) {
    CHECK(rows[i].round == i + 1);
    CHECK(rows[i].bound == expected[i]);
    CHECK_FALSE(rows[i].mismatch);
  }
  const auto single = bound_table(1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].bound == 0);

  Topology perturbed = kRandenTopology;
  std::swap(perturbed.for_new_even[0], perturbed.for_new_even[1]);
  const auto wrong = bound_table(14, 1, perturbed);
  CHECK(std::any_of(wrong.begin(), wrong.end(),
                    [](const BoundRow& row) { return row.mismatch; }));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(fast_min_active(0), Error);
  CHECK_THROWS_AS(exact_min_active(25), Error);
  CHECK_THROWS_AS(exact_min_active(5, 0), Error);
  CHECK_THROWS_AS(bound_table(0), Error);
}

}  // namespace
}  // namespace randen::search

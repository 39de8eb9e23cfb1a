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

#include "randen/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

#include "randen/error.hpp"

namespace randen::search {
namespace {

// Both half-width maps expanded into 256-entry lookup tables.
struct PropagationTables {
  explicit PropagationTables(const Topology& topology)
      : functions(topology.functions) {
    for (int mask = 0; mask < 256; ++mask) {
      int odd = 0;
      int even = 0;
      for (int i = 0; i < functions; ++i) {
        odd |= ((mask >> topology.for_new_odd[i]) & 1) << i;
        even |= ((mask >> topology.for_new_even[i]) & 1) << i;
      }
      new_odd[mask] = static_cast<std::uint8_t>(odd);
      new_even[mask] = static_cast<std::uint8_t>(even);
    }
  }

  int functions;
  std::array<std::uint8_t, 256> new_odd{};
  std::array<std::uint8_t, 256> new_even{};
};

void check_arguments(int rounds, const Topology& topology) {
  if (rounds < 1 || rounds > kMaxRounds) {
    throw Error(ErrorCode::kInvalidArgument,
                "rounds must be in [1, 24], got " + std::to_string(rounds));
  }
  if (!topology.is_valid()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid Feistel topology");
  }
}

// Fixed-capacity min-priority structure over small integer keys: one stack
// per active count plus a bitmap of non-empty stacks.
class BucketQueue {
 public:
  explicit BucketQueue(int max_key)
      : buckets_(max_key + 1), occupied_((max_key + 64) / 64) {}

  void push(int key, std::uint32_t node) {
    buckets_[key].push_back(node);
    occupied_[key / 64] |= std::uint64_t{1} << (key % 64);
  }

  // Smallest non-empty key, or -1.
  int min_key() const {
    for (std::size_t w = 0; w < occupied_.size(); ++w) {
      if (occupied_[w] != 0) {
        return static_cast<int>(64 * w) + std::countr_zero(occupied_[w]);
      }
    }
    return -1;
  }

  std::uint32_t pop(int key) {
    auto& bucket = buckets_[key];
    const std::uint32_t node = bucket.back();
    bucket.pop_back();
    if (bucket.empty()) occupied_[key / 64] &= ~(std::uint64_t{1} << (key % 64));
    return node;
  }

 private:
  std::vector<std::vector<std::uint32_t>> buckets_;
  std::vector<std::uint64_t> occupied_;
};

// Node encoding: (round << 16) | (odd << functions) | even.
class ExactWorker {
 public:
  ExactWorker(const PropagationTables& tables, int rounds,
              std::atomic<int>& best)
      : tables_(tables),
        rounds_(rounds),
        state_bits_(2 * tables.functions),
        best_(best),
        queue_(tables.functions * rounds),
        visited_(((static_cast<std::size_t>(rounds) + 1) << state_bits_) / 64 +
                 1) {}

  void seed(std::uint32_t state) { queue_.push(0, state); }

  void run() {
    const std::uint32_t half_mask = (1u << tables_.functions) - 1;
    for (;;) {
      const int active = queue_.min_key();
      // Every queued node is at least `active`; none can beat the incumbent.
      if (active < 0 || active >= best_.load(std::memory_order_relaxed)) return;

      const std::uint32_t node = queue_.pop(active);
      if (test_and_set_visited(node)) continue;

      const int round = static_cast<int>(node >> 16);
      if (round == rounds_) {
        lower_best(active);
        return;
      }

      const std::uint32_t even = node & half_mask;
      const std::uint32_t odd = (node >> tables_.functions) & half_mask;
      const int next_active = active + std::popcount(even);
      if (next_active >= best_.load(std::memory_order_relaxed)) continue;

      const std::uint32_t next_odd = tables_.new_odd[even];
      // Positions where both inputs are active may or may not cancel.
      const std::uint32_t ambiguous = even & odd;
      const std::uint32_t certain = even ^ odd;
      const std::uint32_t next_round = static_cast<std::uint32_t>(round + 1)
                                       << 16;
      for (std::uint32_t subset = ambiguous;; subset = (subset - 1) & ambiguous) {
        const std::uint32_t next_even = tables_.new_even[certain | subset];
        const std::uint32_t child =
            next_round | (next_odd << tables_.functions) | next_even;
        if (!is_visited(child)) queue_.push(next_active, child);
        if (subset == 0) break;
      }
    }
  }

 private:
  std::size_t index(std::uint32_t node) const {
    return (static_cast<std::size_t>(node >> 16) << state_bits_) |
           (node & ((1u << state_bits_) - 1));
  }
  bool is_visited(std::uint32_t node) const {
    const std::size_t i = index(node);
    return (visited_[i / 64] >> (i % 64)) & 1;
  }
  bool test_and_set_visited(std::uint32_t node) {
    const std::size_t i = index(node);
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    const bool was = (visited_[i / 64] & bit) != 0;
    visited_[i / 64] |= bit;
    return was;
  }
  void lower_best(int value) {
    int current = best_.load();
    while (value < current && !best_.compare_exchange_weak(current, value)) {
    }
  }

  const PropagationTables& tables_;
  int rounds_;
  int state_bits_;
  std::atomic<int>& best_;
  BucketQueue queue_;
  std::vector<std::uint64_t> visited_;
};

}  // namespace

bool Topology::is_valid() const {
  if (functions < 1 || functions > 8) return false;
  auto is_perm = [this](const std::array<std::uint8_t, 8>& map) {
    std::array<bool, 8> seen{};
    for (int i = 0; i < functions; ++i) {
      if (map[i] >= functions || seen[map[i]]) return false;
      seen[map[i]] = true;
    }
    return true;
  };
  return is_perm(for_new_odd) && is_perm(for_new_even);
}

std::optional<Topology> topology_from_block_shuffle(
    const std::vector<int>& shuffle) {
  const int branches = static_cast<int>(shuffle.size());
  if (branches < 2 || branches > 16 || branches % 2 != 0) return std::nullopt;
  Topology topology;
  topology.functions = branches / 2;
  for (int i = 0; i < topology.functions; ++i) {
    const int to_even = shuffle[2 * i];
    const int to_odd = shuffle[2 * i + 1];
    if (to_even < 0 || to_even >= branches || to_even % 2 != 1) return std::nullopt;
    if (to_odd < 0 || to_odd >= branches || to_odd % 2 != 0) return std::nullopt;
    topology.for_new_even[i] = static_cast<std::uint8_t>(to_even / 2);
    topology.for_new_odd[i] = static_cast<std::uint8_t>(to_odd / 2);
  }
  if (!topology.is_valid()) return std::nullopt;
  return topology;
}

ActivityMasks fast_step(const ActivityMasks& masks, const Topology& topology) {
  ActivityMasks next;
  for (int i = 0; i < topology.functions; ++i) {
    const int even_bit = (masks.even >> topology.for_new_odd[i]) & 1;
    next.odd |= static_cast<std::uint8_t>(even_bit << i);
    const int j = topology.for_new_even[i];
    const int f_out = xor_result((masks.even >> j) & 1, (masks.odd >> j) & 1);
    next.even |= static_cast<std::uint8_t>(f_out << i);
  }
  return next;
}

int fast_min_active(int rounds, const Topology& topology) {
  check_arguments(rounds, topology);
  const PropagationTables tables(topology);
  const std::uint32_t limit = 1u << topology.functions;
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t start = 1; start < limit * limit; ++start) {
    std::uint32_t even = start % limit;
    std::uint32_t odd = start / limit;
    int active = 0;
    for (int r = 0; r < rounds && active < best; ++r) {
      active += std::popcount(even);
      const std::uint32_t next_odd = tables.new_odd[even];
      even = tables.new_even[even ^ odd];
      odd = next_odd;
    }
    best = std::min(best, active);
  }
  return best;
}

int exact_min_active(int rounds, int workers, const Topology& topology) {
  check_arguments(rounds, topology);
  if (workers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "workers must be at least 1");
  }
  const PropagationTables tables(topology);
  // The always-cancel path is one branch of the exact search, so its total is
  // a valid incumbent.
  std::atomic<int> best(fast_min_active(rounds, topology));

  const std::uint32_t states = 1u << (2 * topology.functions);
  auto work = [&](int shard) {
    ExactWorker worker(tables, rounds, best);
    for (std::uint32_t s = 1 + shard; s < states;
         s += static_cast<std::uint32_t>(workers)) {
      worker.seed(s);
    }
    worker.run();
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  return best.load();
}

std::vector<BoundRow> bound_table(int max_rounds, int workers,
                                  const Topology& topology,
                                  bool compare_to_published) {
  if (max_rounds < 1 || max_rounds > kMaxRounds) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_rounds must be in [1, 24], got " + std::to_string(max_rounds));
  }
  std::vector<BoundRow> rows;
  for (int r = 1; r <= max_rounds; ++r) {
    BoundRow row;
    row.round = r;
    row.bound = exact_min_active(r, workers, topology);
    if (compare_to_published) {
      row.expected = kPublishedBounds[r - 1];
      row.mismatch = row.bound != *row.expected;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace randen::search

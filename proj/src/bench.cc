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

#include "randen/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <variant>

#include "randen/baselines.hpp"
#include "randen/distributions.hpp"
#include "randen/engine.hpp"
#include "randen/error.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <cpuid.h>
#include <x86intrin.h>
#define RANDEN_HAVE_TSC 1
#endif

namespace randen::bench {
namespace {

template <class T>
inline void do_not_optimize(const T& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}

bool invariant_tsc() {
#if defined(RANDEN_HAVE_TSC)
  unsigned eax = 0, ebx = 0, ecx = 0, edx = 0;
  if (__get_cpuid_max(0x80000000u, nullptr) < 0x80000007u) return false;
  __get_cpuid(0x80000007u, &eax, &ebx, &ecx, &edx);
  return (edx & (1u << 8)) != 0;
#else
  return false;
#endif
}

std::uint64_t monotonic_ns() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

}  // namespace

std::string_view unit_name(TimeUnit unit) {
  return unit == TimeUnit::kCycles ? "cycles" : "ns";
}

Timer::Timer(std::optional<double> nominal_hz)
    : cycle_counter_(invariant_tsc()), nominal_hz_(nominal_hz) {
  if (nominal_hz_ && !(*nominal_hz_ > 0)) nominal_hz_.reset();
}

std::uint64_t Timer::begin() const {
#if defined(RANDEN_HAVE_TSC)
  if (cycle_counter_) {
    _mm_lfence();
    const std::uint64_t t = __rdtsc();
    _mm_lfence();
    return t;
  }
#endif
  std::atomic_signal_fence(std::memory_order_seq_cst);
  const std::uint64_t t = monotonic_ns();
  std::atomic_signal_fence(std::memory_order_seq_cst);
  return t;
}

std::uint64_t Timer::end() const {
#if defined(RANDEN_HAVE_TSC)
  if (cycle_counter_) {
    unsigned aux = 0;
    const std::uint64_t t = __rdtscp(&aux);
    _mm_lfence();
    return t;
  }
#endif
  std::atomic_signal_fence(std::memory_order_seq_cst);
  const std::uint64_t t = monotonic_ns();
  std::atomic_signal_fence(std::memory_order_seq_cst);
  return t;
}

TimeUnit Timer::unit() const {
  return (cycle_counter_ || nominal_hz_) ? TimeUnit::kCycles
                                         : TimeUnit::kNanoseconds;
}

double Timer::to_units(double ticks) const {
  if (!cycle_counter_ && nominal_hz_) return ticks * *nominal_hz_ * 1e-9;
  return ticks;
}

TimerCalibration calibrate_timer(const Timer& timer, int samples) {
  if (samples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "calibrate_timer: samples < 1");
  }
  std::vector<double> intervals;
  intervals.reserve(samples);
  double resolution = 0;
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t t0 = timer.begin();
    const std::uint64_t t1 = timer.end();
    if (t1 < t0) throw Error(ErrorCode::kTimer, "timer is not monotonic");
    const double dt = static_cast<double>(t1 - t0);
    intervals.push_back(dt);
    if (dt > 0 && (resolution == 0 || dt < resolution)) resolution = dt;
  }
  TimerCalibration calibration;
  calibration.overhead = median(std::move(intervals));
  calibration.resolution = resolution;
  return calibration;
}

double subtract_overhead(double ticks, const TimerCalibration& calibration) {
  return std::max(0.0, ticks - calibration.overhead);
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

double median_absolute_deviation(const std::vector<double>& values) {
  const double center = median(values);
  std::vector<double> deviations;
  deviations.reserve(values.size());
  for (double v : values) deviations.push_back(std::abs(v - center));
  return median(std::move(deviations));
}

std::optional<double> discrete_mode(const std::vector<double>& values) {
  std::map<double, std::size_t> counts;
  for (double v : values) ++counts[v];
  auto best = std::max_element(
      counts.begin(), counts.end(),
      [](const auto& a, const auto& b) { return a.second < b.second; });
  if (best == counts.end() || best->second < 2 ||
      8 * best->second < values.size()) {
    return std::nullopt;
  }
  return best->first;
}

Measurement robust_measure(const std::function<std::uint64_t()>& workload,
                           int repetitions, const Timer& timer,
                           const TimerCalibration& calibration) {
  if (repetitions < 5) {
    throw Error(ErrorCode::kInvalidArgument,
                "robust_measure: at least 5 repetitions required");
  }
  // Warm caches and branch predictors; also rejects empty workloads early.
  std::uint64_t bytes = workload();
  if (bytes == 0) {
    throw Error(ErrorCode::kDomain, "workload consumed zero bytes");
  }

  std::vector<double> costs;
  costs.reserve(repetitions);
  for (int rep = 0; rep < repetitions; ++rep) {
    const std::uint64_t t0 = timer.begin();
    bytes = workload();
    const std::uint64_t t1 = timer.end();
    if (t1 < t0) throw Error(ErrorCode::kTimer, "timer is not monotonic");
    if (bytes == 0) {
      throw Error(ErrorCode::kDomain, "workload consumed zero bytes");
    }
    const double ticks =
        subtract_overhead(static_cast<double>(t1 - t0), calibration);
    costs.push_back(timer.to_units(ticks) / static_cast<double>(bytes));
  }

  Measurement m;
  m.unit = timer.unit();
  m.bytes = bytes;
  m.central = median(costs);
  if (repetitions >= kModeThreshold) {
    if (auto mode = discrete_mode(costs)) m.central = *mode;
  }
  m.mad = median_absolute_deviation(costs);
  return m;
}

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kLoop: return "loop";
    case Kind::kShuffle: return "shuffle";
    case Kind::kSample: return "sample";
    case Kind::kMonteCarlo: return "montecarlo";
  }
  return "unknown";
}

std::optional<Kind> parse_kind(std::string_view name) {
  for (Kind kind : all_kinds()) {
    if (kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = {Kind::kLoop, Kind::kShuffle,
                                          Kind::kSample, Kind::kMonteCarlo};
  return kinds;
}

const std::vector<std::string>& engine_names() {
  static const std::vector<std::string> names = {"randen", "randen-soft",
                                                 "mt19937-64", "splitmix64"};
  return names;
}

std::uint64_t workload_bytes(Kind kind, const WorkloadSizes& sizes) {
  switch (kind) {
    case Kind::kLoop:
      return 8 * sizes.loop_draws;
    case Kind::kShuffle:
      return sizes.shuffle_elements > 1 ? 8 * (sizes.shuffle_elements - 1) : 0;
    case Kind::kSample:
      return sizes.sample_stream > sizes.sample_reservoir
                 ? 8 * (sizes.sample_stream - sizes.sample_reservoir)
                 : 0;
    case Kind::kMonteCarlo:
      return 8 * (sizes.monte_carlo_draws / 2 * 2);
  }
  return 0;
}

namespace {

using AnyEngine = std::variant<Engine, SplitMix64, Mt19937_64>;

AnyEngine make_engine(std::string_view name, std::uint64_t seed) {
  const Seed randen_seed{seed, 0, 0, 0};
  if (name == "randen") return Engine(randen_seed);
  if (name == "randen-soft") {
    return Engine(randen_seed, nullptr, Backend::kSoftware);
  }
  if (name == "mt19937-64") return Mt19937_64(seed);
  if (name == "splitmix64") return SplitMix64(seed);
  throw Error(ErrorCode::kInvalidArgument,
              "unknown engine '" + std::string(name) + "'");
}

void expect(bool ok, const char* what) {
  if (!ok) {
    throw Error(ErrorCode::kMismatch,
                std::string("benchmark workload produced bad output: ") + what);
  }
}

template <class Source>
Measurement measure_kind(Kind kind, Source& source, const BenchOptions& options,
                         const Timer& timer,
                         const TimerCalibration& calibration) {
  const WorkloadSizes& sizes = options.sizes;
  switch (kind) {
    case Kind::kLoop: {
      auto workload = [&]() -> std::uint64_t {
        std::uint64_t acc = 0;
        for (std::uint64_t i = 0; i < sizes.loop_draws; ++i) {
          acc ^= source.next_u64();
          do_not_optimize(acc);
        }
        return 8 * sizes.loop_draws;
      };
      return robust_measure(workload, options.repetitions, timer, calibration);
    }
    case Kind::kShuffle: {
      std::vector<std::uint32_t> items(sizes.shuffle_elements);
      std::iota(items.begin(), items.end(), 0u);
      auto workload = [&]() -> std::uint64_t {
        fisher_yates(source, std::span<std::uint32_t>(items));
        do_not_optimize(items.data());
        return items.size() > 1 ? 8 * (items.size() - 1) : 0;
      };
      const Measurement m =
          robust_measure(workload, options.repetitions, timer, calibration);
      std::vector<std::uint32_t> sorted = items;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        expect(sorted[i] == i, "shuffle is not a permutation");
      }
      return m;
    }
    case Kind::kSample: {
      if (sizes.sample_reservoir > sizes.sample_stream) {
        throw Error(ErrorCode::kDomain, "reservoir larger than stream");
      }
      std::vector<std::uint64_t> stream(sizes.sample_stream);
      std::iota(stream.begin(), stream.end(), std::uint64_t{0});
      std::vector<std::uint64_t> reservoir(sizes.sample_reservoir);
      auto workload = [&]() -> std::uint64_t {
        reservoir_sample(source, std::span<const std::uint64_t>(stream),
                         std::span<std::uint64_t>(reservoir));
        do_not_optimize(reservoir.data());
        return 8 * (stream.size() - reservoir.size());
      };
      const Measurement m =
          robust_measure(workload, options.repetitions, timer, calibration);
      expect(reservoir.size() == sizes.sample_reservoir, "reservoir size");
      std::vector<std::uint64_t> sorted = reservoir;
      std::sort(sorted.begin(), sorted.end());
      expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
             "reservoir holds duplicates");
      expect(sorted.empty() || sorted.back() < stream.size(),
             "reservoir element not from stream");
      return m;
    }
    case Kind::kMonteCarlo: {
      const std::uint64_t points = sizes.monte_carlo_draws / 2;
      double estimate = 0;
      auto workload = [&]() -> std::uint64_t {
        if (points == 0) return 0;
        estimate = monte_carlo_pi(source, points);
        do_not_optimize(estimate);
        return 16 * points;
      };
      const Measurement m =
          robust_measure(workload, options.repetitions, timer, calibration);
      expect(std::abs(estimate - std::numbers::pi) <= 0.05,
             "pi estimate off by more than 0.05");
      return m;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown benchmark kind");
}

}  // namespace

double speedup(const Measurement& randen, const Measurement& other) {
  return randen.central > 0 ? other.central / randen.central : 0.0;
}

BenchRow run_benchmark(Kind kind, std::string_view engine,
                       const BenchOptions& options) {
  AnyEngine source = make_engine(engine, options.seed);
  const Timer timer(options.tsc_hz);
  const TimerCalibration calibration = calibrate_timer(timer);
  BenchRow row;
  row.kind = kind;
  row.engine = std::string(engine);
  row.measurement = std::visit(
      [&](auto& e) {
        return measure_kind(kind, e, options, timer, calibration);
      },
      source);
  return row;
}

std::vector<BenchRow> run_suite(const std::vector<Kind>& kinds,
                                const std::vector<std::string>& engines,
                                const BenchOptions& options) {
  for (const auto& name : engines) {
    if (std::find(engine_names().begin(), engine_names().end(), name) ==
        engine_names().end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown engine '" + name + "'");
    }
  }
  const bool has_randen =
      std::find(engines.begin(), engines.end(), "randen") != engines.end();

  std::vector<BenchRow> rows;
  for (Kind kind : kinds) {
    std::optional<Measurement> reference;
    if (has_randen) {
      BenchRow row = run_benchmark(kind, "randen", options);
      reference = row.measurement;
      row.speedup_vs_randen = 1.0;
      rows.push_back(row);
    }
    for (const auto& name : engines) {
      if (name == "randen") continue;
      BenchRow row = run_benchmark(kind, name, options);
      if (reference) row.speedup_vs_randen = speedup(*reference, row.measurement);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace randen::bench

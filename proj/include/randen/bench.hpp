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

#ifndef RANDEN_BENCH_HPP_
#define RANDEN_BENCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace randen::bench {

enum class TimeUnit { kCycles, kNanoseconds };

std::string_view unit_name(TimeUnit unit);

// Ordering-fenced timestamp source: invariant TSC where the CPU has one,
// otherwise the monotonic clock in nanoseconds.
class Timer {
 public:
  // nominal_hz > 0 converts nanosecond readings to cycles.
  explicit Timer(std::optional<double> nominal_hz = std::nullopt);

  std::uint64_t begin() const;
  std::uint64_t end() const;

  // Reported unit after any conversion.
  TimeUnit unit() const;
  bool uses_cycle_counter() const { return cycle_counter_; }
  // Converts a raw tick difference into reported units.
  double to_units(double ticks) const;

 private:
  bool cycle_counter_;
  std::optional<double> nominal_hz_;
};

struct TimerCalibration {
  double overhead = 0;    // median back-to-back interval, raw ticks
  double resolution = 0;  // smallest nonzero back-to-back interval, raw ticks
};

// Throws Error(kTimer) if the timer runs backwards.
TimerCalibration calibrate_timer(const Timer& timer, int samples = 1001);

// Interval minus overhead, never negative.
double subtract_overhead(double ticks, const TimerCalibration& calibration);

struct Measurement {
  double central = 0;  // per byte
  double mad = 0;      // median absolute deviation from the median, per byte
  TimeUnit unit = TimeUnit::kNanoseconds;
  std::uint64_t bytes = 0;

  double variability() const { return central > 0 ? mad / central : 0.0; }
};

// Repetitions at or above this use the mode when samples are discrete.
inline constexpr int kModeThreshold = 64;

double median(std::vector<double> values);
double median_absolute_deviation(const std::vector<double>& values);
// Most frequent value if it occurs in at least 1/8 of the samples.
std::optional<double> discrete_mode(const std::vector<double>& values);

// Runs `workload` `repetitions` times; each call returns the bytes of random
// output it consumed. Throws Error(kInvalidArgument) if repetitions < 5 and
// Error(kDomain) if the workload reports zero bytes.
Measurement robust_measure(const std::function<std::uint64_t()>& workload,
                           int repetitions, const Timer& timer,
                           const TimerCalibration& calibration);

enum class Kind { kLoop, kShuffle, kSample, kMonteCarlo };

std::string_view kind_name(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);
const std::vector<Kind>& all_kinds();

// randen, randen-soft, mt19937-64, splitmix64.
const std::vector<std::string>& engine_names();

struct WorkloadSizes {
  std::uint64_t loop_draws = 819200 / 8;
  std::uint64_t shuffle_elements = 100000;
  std::uint64_t sample_stream = 51200;
  std::uint64_t sample_reservoir = 10240;
  std::uint64_t monte_carlo_draws = 200000;
};

struct BenchOptions {
  int repetitions = 21;
  std::optional<double> tsc_hz;
  WorkloadSizes sizes;
  std::uint64_t seed = 1;
};

struct BenchRow {
  Kind kind = Kind::kLoop;
  std::string engine;
  Measurement measurement;
  std::optional<double> speedup_vs_randen;
};

// Throws Error(kInvalidArgument) for an unknown engine and Error(kDomain)
// when the workload consumes no bytes (e.g. a one-element shuffle).
BenchRow run_benchmark(Kind kind, std::string_view engine,
                       const BenchOptions& options);

// Runs every (kind, engine) pair and fills speedup_vs_randen =
// other.central / randen.central when randen is among the engines.
std::vector<BenchRow> run_suite(const std::vector<Kind>& kinds,
                                const std::vector<std::string>& engines,
                                const BenchOptions& options);

double speedup(const Measurement& randen, const Measurement& other);

// Bytes of generator output one run of the workload consumes.
std::uint64_t workload_bytes(Kind kind, const WorkloadSizes& sizes);

}  // namespace randen::bench

#endif  // RANDEN_BENCH_HPP_

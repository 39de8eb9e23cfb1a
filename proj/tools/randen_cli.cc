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

// Command-line front end over the C API:
//   randen gen       raw generator bytes for external test batteries
//   randen bench     benchmark workloads with MAD and speedup reporting
//   randen search    active-function lower bounds
//   randen selftest  backend agreement, golden vectors, statistical smoke

#include <cerrno>
#include <charconv>
#include <csignal>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "randen/randen.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

std::uint64_t parse_u64(const std::string& text) {
  std::string_view digits = text;
  int base = 10;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  const auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
  if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
    throw UsageError{"not a 64-bit integer: '" + text + "'"};
  }
  return value;
}

std::array<std::uint64_t, 4> parse_seed(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) {
    throw UsageError{"--seed needs exactly four comma-separated values"};
  }
  std::array<std::uint64_t, 4> seed{};
  for (int i = 0; i < 4; ++i) seed[i] = parse_u64(parts[i]);
  return seed;
}

randen_backend parse_backend(const std::string& name) {
  if (name == "auto") return RANDEN_BACKEND_AUTO;
  if (name == "hardware") return RANDEN_BACKEND_HARDWARE;
  if (name == "software") return RANDEN_BACKEND_SOFTWARE;
  throw UsageError{"unknown backend '" + name + "'"};
}

int report(randen_status status, const char* what) {
  std::fprintf(stderr, "randen %s: %s: %s\n", what,
               randen_status_string(status), randen_last_error());
  return status == RANDEN_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
}

using KeysPtr = std::unique_ptr<randen_keys, decltype(&randen_keys_free)>;
using EnginePtr = std::unique_ptr<randen_engine, decltype(&randen_engine_free)>;

struct GenOptions {
  std::string seed = "0,0,0,0";
  std::string keys = "builtin-pi";
  std::string bytes = "infinite";
  std::string output;
  std::string backend = "auto";
};

int run_gen(const GenOptions& options) {
  const auto seed = parse_seed(options.seed);
  std::optional<std::uint64_t> limit;
  if (options.bytes != "infinite") limit = parse_u64(options.bytes);
  const randen_backend backend = parse_backend(options.backend);

  randen_keys* raw_keys = nullptr;
  const randen_status key_status =
      options.keys == "builtin-pi"
          ? randen_keys_builtin(&raw_keys)
          : randen_keys_from_file(options.keys.c_str(), &raw_keys);
  if (key_status != RANDEN_OK) return report(key_status, "gen");
  const KeysPtr keys(raw_keys, &randen_keys_free);

  randen_engine* raw_engine = nullptr;
  if (const randen_status s =
          randen_engine_create(seed.data(), keys.get(), backend, &raw_engine);
      s != RANDEN_OK) {
    return report(s, "gen");
  }
  const EnginePtr engine(raw_engine, &randen_engine_free);

  std::FILE* out = stdout;
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> file(nullptr, &std::fclose);
  if (!options.output.empty() && options.output != "-") {
    file.reset(std::fopen(options.output.c_str(), "wb"));
    if (!file) {
      std::fprintf(stderr, "randen gen: cannot open %s: %s\n",
                   options.output.c_str(), std::strerror(errno));
      return kExitFailure;
    }
    out = file.get();
  }

  // A consumer closing the pipe is the normal end of an infinite stream.
  std::signal(SIGPIPE, SIG_IGN);
  std::vector<std::uint8_t> buffer(1 << 16);
  std::uint64_t remaining = limit.value_or(0);
  while (!limit || remaining > 0) {
    const std::size_t n =
        limit ? static_cast<std::size_t>(std::min<std::uint64_t>(remaining, buffer.size()))
              : buffer.size();
    randen_fill(engine.get(), buffer.data(), n);
    if (std::fwrite(buffer.data(), 1, n, out) != n) {
      if (errno == EPIPE) return 0;
      std::fprintf(stderr, "randen gen: write failed: %s\n", std::strerror(errno));
      return kExitFailure;
    }
    if (limit) remaining -= n;
  }
  if (std::fflush(out) != 0) {
    if (errno == EPIPE) return 0;
    std::fprintf(stderr, "randen gen: write failed: %s\n", std::strerror(errno));
    return kExitFailure;
  }
  return 0;
}

struct SearchOptions {
  int rounds = 0;
  std::string mode = "exact";
  int workers = 1;
  bool table = false;
  bool json = false;
};

int run_search(const SearchOptions& options) {
  if (options.mode != "fast" && options.mode != "exact") {
    throw UsageError{"--mode must be fast or exact"};
  }
  auto compute = [&](int rounds, int* bound) {
    return options.mode == "fast"
               ? randen_search_fast(rounds, bound)
               : randen_search_exact(rounds, options.workers, bound);
  };

  if (!options.table) {
    int bound = 0;
    if (const randen_status s = compute(options.rounds, &bound); s != RANDEN_OK) {
      return report(s, "search");
    }
    if (options.json) {
      std::cout << nlohmann::json{{"round", options.rounds}, {"bound", bound}}.dump()
                << "\n";
    } else {
      std::cout << bound << "\n";
    }
    return 0;
  }

  nlohmann::json rows = nlohmann::json::array();
  bool mismatch = false;
  if (!options.json) std::printf("%6s  %6s  %9s\n", "rounds", "bound", "published");
  for (int r = 1; r <= options.rounds; ++r) {
    int bound = 0;
    int published = 0;
    if (const randen_status s = compute(r, &bound); s != RANDEN_OK) {
      return report(s, "search");
    }
    if (const randen_status s = randen_search_published(r, &published);
        s != RANDEN_OK) {
      return report(s, "search");
    }
    const bool differs = bound != published;
    mismatch |= differs;
    if (options.json) {
      rows.push_back({{"round", r}, {"bound", bound}, {"published", published},
                      {"mismatch", differs}});
    } else {
      std::printf("%6d  %6d  %9d%s\n", r, bound, published,
                  differs ? "  MISMATCH" : "");
    }
  }
  if (options.json) std::cout << rows.dump() << "\n";
  // The fast rule only bounds from above, so its divergence is expected.
  return (mismatch && options.mode == "exact") ? kExitFailure : 0;
}

struct BenchOptions {
  std::string kind = "all";
  std::string engine = "all";
  int reps = 21;
  bool json = false;
  double tsc_freq = 0;
};

int run_bench(const BenchOptions& options) {
  std::size_t count = 0;
  randen_status status = randen_bench(options.kind.c_str(), options.engine.c_str(),
                                      options.reps, options.tsc_freq, nullptr, 0,
                                      &count);
  if (status != RANDEN_OK && status != RANDEN_ERR_SIZE) return report(status, "bench");
  std::vector<randen_measurement> rows(count);
  status = randen_bench(options.kind.c_str(), options.engine.c_str(), options.reps,
                        options.tsc_freq, rows.data(), rows.size(), &count);
  if (status != RANDEN_OK) return report(status, "bench");
  rows.resize(count);

  if (options.json) {
    for (const auto& row : rows) {
      nlohmann::json j = {{"kind", row.kind},
                          {"engine", row.engine},
                          {"central", row.central},
                          {"mad", row.mad},
                          {"unit", row.unit_is_cycles ? "cycles" : "ns"},
                          {"bytes", row.bytes}};
      j["speedup_vs_randen"] =
          row.speedup_vs_randen < 0 ? nlohmann::json(nullptr)
                                    : nlohmann::json(row.speedup_vs_randen);
      std::cout << j.dump() << "\n";
    }
    return 0;
  }

  std::string current_kind;
  for (const auto& row : rows) {
    if (current_kind != row.kind) {
      current_kind = row.kind;
      std::printf("%s (%s per byte, %llu bytes per run)\n", row.kind,
                  row.unit_is_cycles ? "cycles" : "ns",
                  static_cast<unsigned long long>(row.bytes));
      std::printf("  %-12s %22s %8s\n", "Engine", "central (MAD)", "Speedup");
    }
    char speed[32] = "--";
    if (row.speedup_vs_randen >= 0 && std::strcmp(row.engine, "randen") != 0) {
      std::snprintf(speed, sizeof(speed), "%.1f", row.speedup_vs_randen);
    }
    std::printf("  %-12s %9.3f (+- %7.4f) %8s\n", row.engine, row.central, row.mad,
                speed);
  }
  return 0;
}

int run_selftest(std::uint64_t samples) {
  char failed[64] = {0};
  const randen_status status = randen_selftest(samples, failed, sizeof(failed));
  if (status != RANDEN_OK) {
    std::fprintf(stderr, "randen selftest: FAILED %s (%s)\n",
                 failed[0] ? failed : "?", randen_last_error());
    return kExitFailure;
  }
  std::printf("randen selftest: ok (%s AES)\n",
              randen_hardware_available() ? "hardware" : "software");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randen generator, benchmarks and active-function bound search"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Stream raw generator bytes");
  gen_cmd->add_option("--seed", gen.seed, "Four 64-bit values, decimal or 0x hex")
      ->capture_default_str();
  gen_cmd->add_option("--keys", gen.keys, "builtin-pi or a 2176-byte key file")
      ->capture_default_str();
  gen_cmd->add_option("--bytes", gen.bytes, "Byte count or 'infinite'")
      ->capture_default_str();
  gen_cmd->add_option("--output,-o", gen.output, "Output file (default stdout)");
  gen_cmd->add_option("--backend", gen.backend, "auto, hardware or software")
      ->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run benchmark workloads");
  bench_cmd->add_option("--kind", bench.kind, "loop|shuffle|sample|montecarlo|all")
      ->capture_default_str();
  bench_cmd->add_option("--engine", bench.engine,
                        "randen|randen-soft|mt19937-64|splitmix64|all")
      ->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "Repetitions (>= 5)")
      ->capture_default_str();
  bench_cmd->add_flag("--json", bench.json, "One JSON object per row");
  bench_cmd->add_option("--tsc-freq", bench.tsc_freq,
                        "Nominal Hz for converting nanoseconds to cycles");

  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "Active-function lower bounds");
  search_cmd->add_option("--rounds", search.rounds, "Rounds (1..24)")->required();
  search_cmd->add_option("--mode", search.mode, "fast or exact")->capture_default_str();
  search_cmd->add_option("--workers", search.workers, "Worker threads")
      ->capture_default_str();
  search_cmd->add_flag("--table", search.table, "Rows for 1..rounds vs published");
  search_cmd->add_flag("--json", search.json, "Machine-readable output");

  std::uint64_t samples = 10000;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run built-in checks");
  selftest_cmd->add_option("--samples", samples, "AES backend comparison samples")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*bench_cmd) return run_bench(bench);
    if (*search_cmd) return run_search(search);
    if (*selftest_cmd) return run_selftest(samples);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "randen: %s\n", e.message.c_str());
    return kExitUsage;
  }
  return kExitUsage;
}

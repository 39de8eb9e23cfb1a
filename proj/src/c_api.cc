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

#include "randen/randen.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "randen/bench.hpp"
#include "randen/engine.hpp"
#include "randen/error.hpp"
#include "randen/search.hpp"
#include "randen/selftest.hpp"

struct randen_keys {
  std::shared_ptr<const randen::KeySchedule> schedule;
};

struct randen_engine {
  randen::Engine engine;
};

namespace {

thread_local std::string last_error;

randen_status to_status(randen::ErrorCode code) {
  switch (code) {
    case randen::ErrorCode::kInvalidArgument: return RANDEN_ERR_INVALID_ARGUMENT;
    case randen::ErrorCode::kSize: return RANDEN_ERR_SIZE;
    case randen::ErrorCode::kIo: return RANDEN_ERR_IO;
    case randen::ErrorCode::kNoHardware: return RANDEN_ERR_NO_HARDWARE;
    case randen::ErrorCode::kMismatch: return RANDEN_ERR_MISMATCH;
    case randen::ErrorCode::kDomain: return RANDEN_ERR_DOMAIN;
    case randen::ErrorCode::kTimer: return RANDEN_ERR_TIMER;
  }
  return RANDEN_ERR_INTERNAL;
}

randen_status fail(randen_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
randen_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const randen::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RANDEN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RANDEN_ERR_INTERNAL, e.what());
  }
}

randen_status null_argument(const char* name) {
  return fail(RANDEN_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

randen_status resolve_backend(randen_backend requested,
                              randen::Backend* backend) {
  switch (requested) {
    case RANDEN_BACKEND_AUTO:
      *backend = randen::default_backend();
      return RANDEN_OK;
    case RANDEN_BACKEND_HARDWARE:
      if (!randen::hardware_aes_available()) {
        return fail(RANDEN_ERR_NO_HARDWARE, "hardware AES backend unavailable");
      }
      *backend = randen::Backend::kHardware;
      return RANDEN_OK;
    case RANDEN_BACKEND_SOFTWARE:
      *backend = randen::Backend::kSoftware;
      return RANDEN_OK;
  }
  return fail(RANDEN_ERR_INVALID_ARGUMENT, "unknown backend");
}

void copy_name(char (&dest)[16], std::string_view name) {
  const std::size_t n = std::min(name.size(), sizeof(dest) - 1);
  std::memcpy(dest, name.data(), n);
  dest[n] = '\0';
}

}  // namespace

extern "C" {

const char* randen_status_string(randen_status status) {
  switch (status) {
    case RANDEN_OK: return "ok";
    case RANDEN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RANDEN_ERR_SIZE: return "size error";
    case RANDEN_ERR_IO: return "I/O error";
    case RANDEN_ERR_NO_HARDWARE: return "hardware backend unavailable";
    case RANDEN_ERR_MISMATCH: return "mismatch";
    case RANDEN_ERR_DOMAIN: return "domain error";
    case RANDEN_ERR_TIMER: return "timer error";
    case RANDEN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* randen_last_error(void) { return last_error.c_str(); }

int randen_hardware_available(void) {
  return randen::hardware_aes_available() ? 1 : 0;
}

randen_status randen_keys_builtin(randen_keys** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    static const randen::KeySchedule* builtin = &randen::KeySchedule::builtin_pi();
    *out = new randen_keys{std::shared_ptr<const randen::KeySchedule>(
        builtin, [](const randen::KeySchedule*) {})};
    return RANDEN_OK;
  });
}

randen_status randen_keys_from_file(const char* path, randen_keys** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new randen_keys{std::make_shared<const randen::KeySchedule>(
        randen::KeySchedule::from_file(path))};
    return RANDEN_OK;
  });
}

randen_status randen_keys_from_bytes(const uint8_t* bytes, size_t size,
                                     randen_keys** out) {
  if (bytes == nullptr && size != 0) return null_argument("bytes");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new randen_keys{std::make_shared<const randen::KeySchedule>(
        randen::KeySchedule::from_bytes({bytes, size}))};
    return RANDEN_OK;
  });
}

void randen_keys_free(randen_keys* keys) { delete keys; }

randen_status randen_engine_create(const uint64_t seed[4],
                                   const randen_keys* keys,
                                   randen_backend backend,
                                   randen_engine** out) {
  if (out == nullptr) return null_argument("out");
  randen::Backend resolved;
  if (const randen_status s = resolve_backend(backend, &resolved); s != RANDEN_OK) {
    return s;
  }
  return guarded([&] {
    randen::Seed s;
    if (seed != nullptr) s = {seed[0], seed[1], seed[2], seed[3]};
    *out = new randen_engine{
        randen::Engine(s, keys ? keys->schedule : nullptr, resolved)};
    return RANDEN_OK;
  });
}

void randen_engine_free(randen_engine* engine) { delete engine; }

uint64_t randen_next_u64(randen_engine* engine) {
  return engine->engine.next_u64();
}

uint32_t randen_next_u32(randen_engine* engine) {
  return engine->engine.next_u32();
}

void randen_discard(randen_engine* engine, uint64_t count) {
  engine->engine.discard(count);
}

void randen_fill(randen_engine* engine, uint8_t* out, size_t size) {
  engine->engine.fill({out, size});
}

void randen_engine_state(const randen_engine* engine, uint8_t out[256],
                         size_t* cursor) {
  const auto bytes = engine->engine.state().bytes();
  std::copy(bytes.begin(), bytes.end(), out);
  if (cursor != nullptr) *cursor = engine->engine.cursor();
}

randen_status randen_permute(uint8_t state[256], const randen_keys* keys,
                             randen_backend backend) {
  if (state == nullptr) return null_argument("state");
  randen::Backend resolved;
  if (const randen_status s = resolve_backend(backend, &resolved); s != RANDEN_OK) {
    return s;
  }
  return guarded([&] {
    randen::PermutationState permuted;
    std::copy_n(state, randen::kStateBytes, permuted.bytes().begin());
    randen::permute_in_place(
        permuted, keys ? *keys->schedule : randen::KeySchedule::builtin_pi(),
        resolved);
    std::copy(permuted.bytes().begin(), permuted.bytes().end(), state);
    return RANDEN_OK;
  });
}

randen_status randen_verify_backends(uint64_t samples) {
  return guarded([&] {
    switch (randen::verify_backends(samples)) {
      case randen::BackendCheck::kMatch:
        return RANDEN_OK;
      case randen::BackendCheck::kHardwareUnavailable:
        return fail(RANDEN_ERR_NO_HARDWARE, "hardware AES backend unavailable");
      case randen::BackendCheck::kMismatch:
        return fail(RANDEN_ERR_MISMATCH, "hardware and software backends differ");
    }
    return RANDEN_ERR_INTERNAL;
  });
}

randen_status randen_selftest(uint64_t samples, char* failed_check,
                              size_t capacity) {
  return guarded([&] {
    for (const auto& result : randen::run_selftest(samples)) {
      if (result.passed) continue;
      if (failed_check != nullptr && capacity > 0) {
        const std::size_t n = std::min(result.check.size(), capacity - 1);
        std::memcpy(failed_check, result.check.data(), n);
        failed_check[n] = '\0';
      }
      return fail(RANDEN_ERR_MISMATCH,
                  result.check + (result.detail.empty() ? "" : ": " + result.detail));
    }
    return RANDEN_OK;
  });
}

randen_status randen_search_fast(int rounds, int* bound) {
  if (bound == nullptr) return null_argument("bound");
  return guarded([&] {
    *bound = randen::search::fast_min_active(rounds);
    return RANDEN_OK;
  });
}

randen_status randen_search_exact(int rounds, int workers, int* bound) {
  if (bound == nullptr) return null_argument("bound");
  return guarded([&] {
    *bound = randen::search::exact_min_active(rounds, workers);
    return RANDEN_OK;
  });
}

randen_status randen_search_published(int rounds, int* bound) {
  if (bound == nullptr) return null_argument("bound");
  if (rounds < 1 || rounds > randen::search::kMaxRounds) {
    return fail(RANDEN_ERR_INVALID_ARGUMENT, "rounds must be in [1, 24]");
  }
  *bound = randen::search::kPublishedBounds[rounds - 1];
  return RANDEN_OK;
}

randen_status randen_bench(const char* kind, const char* engine,
                           int repetitions, double tsc_hz,
                           randen_measurement* rows, size_t capacity,
                           size_t* count) {
  if (kind == nullptr) return null_argument("kind");
  if (engine == nullptr) return null_argument("engine");
  if (count == nullptr) return null_argument("count");
  return guarded([&] {
    namespace bench = randen::bench;
    std::vector<bench::Kind> kinds;
    if (std::string_view(kind) == "all") {
      kinds = bench::all_kinds();
    } else if (auto parsed = bench::parse_kind(kind)) {
      kinds.push_back(*parsed);
    } else {
      return fail(RANDEN_ERR_INVALID_ARGUMENT,
                  "unknown benchmark kind '" + std::string(kind) + "'");
    }
    std::vector<std::string> engines;
    if (std::string_view(engine) == "all") {
      engines = bench::engine_names();
    } else {
      engines.emplace_back(engine);
    }
    if (!randen::hardware_aes_available()) {
      // Without AES hardware "randen" already is the software backend.
      engines.erase(std::remove(engines.begin(), engines.end(), "randen-soft"),
                    engines.end());
      if (engines.empty()) engines.emplace_back("randen");
    }

    const std::size_t needed = kinds.size() * engines.size();
    *count = needed;
    if (rows == nullptr || capacity < needed) {
      return fail(RANDEN_ERR_SIZE, "need room for " + std::to_string(needed) +
                                       " benchmark rows");
    }

    bench::BenchOptions options;
    options.repetitions = repetitions;
    if (tsc_hz > 0) options.tsc_hz = tsc_hz;
    const auto results = bench::run_suite(kinds, engines, options);
    *count = results.size();
    for (std::size_t i = 0; i < results.size(); ++i) {
      randen_measurement& out = rows[i];
      copy_name(out.kind, bench::kind_name(results[i].kind));
      copy_name(out.engine, results[i].engine);
      out.central = results[i].measurement.central;
      out.mad = results[i].measurement.mad;
      out.bytes = results[i].measurement.bytes;
      out.unit_is_cycles =
          results[i].measurement.unit == bench::TimeUnit::kCycles ? 1 : 0;
      out.speedup_vs_randen = results[i].speedup_vs_randen.value_or(-1.0);
    }
    return RANDEN_OK;
  });
}

}  // extern "C"

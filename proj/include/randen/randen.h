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

/* C interface to the Randen generator, the active-function bound search and
 * the benchmark harness. All objects are opaque handles owned by the caller
 * and released with the matching *_free function. Functions that can fail
 * return a randen_status; randen_last_error() then describes the failure for
 * the calling thread. */

#ifndef RANDEN_RANDEN_H_
#define RANDEN_RANDEN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RANDEN_BUILDING_API)
#    define RANDEN_API __declspec(dllexport)
#  else
#    define RANDEN_API __declspec(dllimport)
#  endif
#else
#  define RANDEN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum randen_status {
  RANDEN_OK = 0,
  RANDEN_ERR_INVALID_ARGUMENT = 1,
  RANDEN_ERR_SIZE = 2,
  RANDEN_ERR_IO = 3,
  RANDEN_ERR_NO_HARDWARE = 4,
  RANDEN_ERR_MISMATCH = 5,
  RANDEN_ERR_DOMAIN = 6,
  RANDEN_ERR_TIMER = 7,
  RANDEN_ERR_INTERNAL = 8
} randen_status;

typedef enum randen_backend {
  RANDEN_BACKEND_AUTO = 0,
  RANDEN_BACKEND_HARDWARE = 1,
  RANDEN_BACKEND_SOFTWARE = 2
} randen_backend;

typedef struct randen_keys randen_keys;
typedef struct randen_engine randen_engine;

RANDEN_API const char* randen_status_string(randen_status status);

/* Message for the most recent failure on this thread; never NULL. */
RANDEN_API const char* randen_last_error(void);

RANDEN_API int randen_hardware_available(void);

/* ---- Round keys ---- */

#define RANDEN_KEY_BYTES 2176

RANDEN_API randen_status randen_keys_builtin(randen_keys** out);
RANDEN_API randen_status randen_keys_from_file(const char* path,
                                               randen_keys** out);
RANDEN_API randen_status randen_keys_from_bytes(const uint8_t* bytes,
                                                size_t size,
                                                randen_keys** out);
RANDEN_API void randen_keys_free(randen_keys* keys);

/* ---- Generator ---- */

/* seed may be NULL (all zero); keys may be NULL (built-in pi constants). The
 * engine copies what it needs from keys. */
RANDEN_API randen_status randen_engine_create(const uint64_t seed[4],
                                              const randen_keys* keys,
                                              randen_backend backend,
                                              randen_engine** out);
RANDEN_API void randen_engine_free(randen_engine* engine);

RANDEN_API uint64_t randen_next_u64(randen_engine* engine);
RANDEN_API uint32_t randen_next_u32(randen_engine* engine);
RANDEN_API void randen_discard(randen_engine* engine, uint64_t count);

/* Writes the next `size` output bytes in stream order. */
RANDEN_API void randen_fill(randen_engine* engine, uint8_t* out, size_t size);

/* Copies the 256-byte state; `cursor` (optional) receives the read offset. */
RANDEN_API void randen_engine_state(const randen_engine* engine,
                                    uint8_t out[256], size_t* cursor);

/* Applies the 2048-bit permutation to `state` in place. */
RANDEN_API randen_status randen_permute(uint8_t state[256],
                                        const randen_keys* keys,
                                        randen_backend backend);

/* ---- Self tests ---- */

/* RANDEN_OK when both AES backends agree on `samples` pairs,
 * RANDEN_ERR_NO_HARDWARE without AES hardware, RANDEN_ERR_MISMATCH otherwise. */
RANDEN_API randen_status randen_verify_backends(uint64_t samples);

/* Backend check, golden vectors and statistical smoke test. On failure the
 * failing check's name is copied into `failed_check` (may be NULL). */
RANDEN_API randen_status randen_selftest(uint64_t samples, char* failed_check,
                                         size_t capacity);

/* ---- Active-function bound search ---- */

RANDEN_API randen_status randen_search_fast(int rounds, int* bound);
RANDEN_API randen_status randen_search_exact(int rounds, int workers,
                                             int* bound);
/* Published lower bound for 1 <= rounds <= 24. */
RANDEN_API randen_status randen_search_published(int rounds, int* bound);

/* ---- Benchmarks ---- */

typedef struct randen_measurement {
  char kind[16];
  char engine[16];
  double central; /* cost per byte */
  double mad;     /* median absolute deviation, same unit */
  uint64_t bytes; /* generator bytes consumed per repetition */
  int unit_is_cycles;
  /* other.central / randen.central; negative when randen was not run. */
  double speedup_vs_randen;
} randen_measurement;

/* kind: loop|shuffle|sample|montecarlo|all; engine: randen|randen-soft|
 * mt19937-64|splitmix64|all. tsc_hz <= 0 keeps the native timer unit.
 * Writes up to `capacity` rows and the number of rows produced to `count`;
 * RANDEN_ERR_SIZE if capacity is too small. */
RANDEN_API randen_status randen_bench(const char* kind, const char* engine,
                                      int repetitions, double tsc_hz,
                                      randen_measurement* rows,
                                      size_t capacity, size_t* count);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* RANDEN_RANDEN_H_ */

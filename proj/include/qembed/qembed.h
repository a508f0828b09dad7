/* Copyright 2026 qembed developers
 *
 *    Licensed under the Apache License, Version 2.0 (the "License");
 *    you may not use this file except in compliance with the License.
 *    You may obtain a copy of the License at
 *
 *        http://www.apache.org/licenses/LICENSE-2.0
 *
 *    Unless required by applicable law or agreed to in writing, software
 *    distributed under the License is distributed on an "AS IS" BASIS,
 *    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *    See the License for the specific language governing permissions and
 *    limitations under the License.
 */

/* C interface of libqembed.
 *
 * Conventions: every fallible call returns a qe_status; out-parameters are
 * written only on QE_OK.  qe_last_error() returns a thread-local description
 * of the most recent failure on the calling thread.  Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * qe_string_free(); handles are released with their matching *_free().
 * Structured payloads (embeddings, Ising problems, reports, metrics, ground
 * states) travel as JSON documents; see the README for the schemas.
 */

#ifndef QEMBED_QEMBED_H
#define QEMBED_QEMBED_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QEMBED_API __declspec(dllexport)
#else
#define QEMBED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qe_status {
    QE_OK = 0,
    QE_INVALID_ARGUMENT = 1,
    QE_CAPACITY_EXCEEDED = 2,
    QE_PARSE_ERROR = 3,
    QE_EMBEDDING_FAILED = 4,
    QE_LIMIT_EXCEEDED = 5,
    QE_OUT_OF_MEMORY = 6,
    QE_INTERNAL_ERROR = 7
} qe_status;

typedef struct qe_lattice qe_lattice;      /* immutable hardware graph */
typedef struct qe_embedding qe_embedding;  /* chains of one embedding */

QEMBED_API const char* qe_version(void);
QEMBED_API const char* qe_status_name(qe_status status);
QEMBED_API const char* qe_last_error(void);
QEMBED_API void qe_string_free(char* text);

/* ---- lattice ---------------------------------------------------------- */

/* Builds the lattice G(tiles, alpha) with crossing-window offset `shift`;
 * shift < 0 selects the default alpha/2. */
QEMBED_API qe_status qe_lattice_create(int32_t tiles, int32_t alpha, int32_t shift,
                                       qe_lattice** out);
QEMBED_API void qe_lattice_free(qe_lattice* lattice);

QEMBED_API qe_status qe_lattice_qubit_count(const qe_lattice* lattice, int64_t* total,
                                            int64_t* per_orientation);
QEMBED_API qe_status qe_lattice_coupler_count(const qe_lattice* lattice, int64_t* count);

/* (u, w, k, z) <-> integer label */
QEMBED_API qe_status qe_linear_id(const qe_lattice* lattice, int32_t u, int32_t w, int32_t k,
                                  int32_t z, int64_t* id);
QEMBED_API qe_status qe_coord_of(const qe_lattice* lattice, int64_t id, int32_t* u, int32_t* w,
                                 int32_t* k, int32_t* z);

/* 1 when coupled, 0 when not (including disabled or out-of-range ids). */
QEMBED_API int qe_are_coupled(const qe_lattice* lattice, int64_t a, int64_t b);

/* New graph with the listed qubits and their couplers removed. */
QEMBED_API qe_status qe_lattice_disable(const qe_lattice* lattice, const int64_t* ids,
                                        size_t count, qe_lattice** out);

/* Edge-list text: "a b" per line, a < b, sorted, LF endings. */
QEMBED_API qe_status qe_lattice_export_edges(const qe_lattice* lattice, char** text);
QEMBED_API qe_status qe_lattice_import_edges(const char* text, qe_lattice** out);

/* ---- structured embedder ---------------------------------------------- */

/* Capacity of the lattice for the given hidden group size n and visible
 * start wire (both < 0 select defaults: n = 8, start = alpha). */
QEMBED_API qe_status qe_capacity(const qe_lattice* lattice, int32_t hidden_group,
                                 int32_t visible_start, int32_t* v_max, int32_t* h_max);

/* Deterministic structured embedding of K(visible, hidden).  Group sizes or
 * start < 0 select the defaults m = 4, n = 8, start = alpha. */
QEMBED_API qe_status qe_embed(const qe_lattice* lattice, int32_t visible, int32_t hidden,
                              int32_t visible_group, int32_t hidden_group,
                              int32_t visible_start, qe_embedding** out);

QEMBED_API void qe_embedding_free(qe_embedding* embedding);
QEMBED_API qe_status qe_embedding_shape(const qe_embedding* embedding, int32_t* visible,
                                        int32_t* hidden);
QEMBED_API qe_status qe_embedding_to_json(const qe_embedding* embedding, char** json);
QEMBED_API qe_status qe_embedding_from_json(const char* json, qe_embedding** out);

/* ---- heuristic baseline ------------------------------------------------ */

/* Seeded chain-growth embedding of the complete K(visible, hidden).  On
 * QE_EMBEDDING_FAILED, *best_overlap reports the smallest count of
 * doubly-used qubits reached (-1 when no full pass completed). */
QEMBED_API qe_status qe_heuristic_embed(const qe_lattice* lattice, int32_t visible,
                                        int32_t hidden, uint64_t seed, int32_t max_tries,
                                        double timeout_seconds, qe_embedding** out,
                                        int64_t* best_overlap);

/* ---- validation --------------------------------------------------------- */

/* Runs the four embedding checks; *is_valid gets 0/1 and *report_json the
 * full per-check report.  An invalid embedding still returns QE_OK. */
QEMBED_API qe_status qe_validate(const qe_embedding* embedding, const qe_lattice* lattice,
                                 int* is_valid, char** report_json);

/* Chain-length statistics with the given length threshold (< 0 selects 6). */
QEMBED_API qe_status qe_chain_metrics(const qe_embedding* embedding, int32_t threshold,
                                      char** metrics_json);

/* ---- Ising parameter mapping and oracle -------------------------------- */

/* Logical Ising JSON -> physical Ising JSON on the embedding. */
QEMBED_API qe_status qe_embed_parameters(const char* logical_json,
                                         const qe_embedding* embedding,
                                         const qe_lattice* lattice, double chain_strength,
                                         char** physical_json);

/* Exhaustive ground states of a logical ({"V",...}) or physical ({"h",...})
 * Ising JSON document; refuses more than `limit` variables (< 0 selects 24). */
QEMBED_API qe_status qe_ground_states(const char* ising_json, int32_t limit, char** states_json);

/* Embeds the logical problem, brute-forces both levels, unembeds, and
 * compares ground-state sets.  chain_strength <= 0 selects the default
 * 2 * (sum |h| + sum |J|).  *match gets 0/1; *detail_json the comparison. */
QEMBED_API qe_status qe_unembed_check(const char* logical_json, const qe_embedding* embedding,
                                      const qe_lattice* lattice, double chain_strength,
                                      int32_t limit, int* match, char** detail_json);

/* ---- rendering and benchmarking ---------------------------------------- */

/* Deterministic SVG diagram; embedding may be NULL for the bare lattice. */
QEMBED_API qe_status qe_render_svg(const qe_lattice* lattice, const qe_embedding* embedding,
                                   char** svg);

/* Timed embedding trials over (V, H) pairs, as CSV.  size_pairs holds
 * pair_count (V, H) pairs flattened; pair_count 0 selects the default square
 * sweep 40..120 step 20.  Negative group sizes/start select defaults. */
QEMBED_API qe_status qe_bench_csv(const qe_lattice* lattice, const int32_t* size_pairs,
                                  size_t pair_count, int32_t trials, int run_structured,
                                  int run_heuristic, uint64_t seed, int32_t visible_group,
                                  int32_t hidden_group, int32_t visible_start,
                                  int32_t heuristic_max_tries, double heuristic_timeout_seconds,
                                  char** csv);

#ifdef __cplusplus
}
#endif

#endif /* QEMBED_QEMBED_H */

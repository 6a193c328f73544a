// Copyright 2026 The Hidden History Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HIDDEN_HISTORY_H
#define HIDDEN_HISTORY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define HH_EXPORT __attribute__((visibility("default")))

typedef enum hh_status {
    HH_OK = 0,
    HH_ERR_INVALID_ARGUMENT = 1,
    HH_ERR_CONFIG = 2,
    HH_ERR_DIMENSION_CAP = 3,
    HH_ERR_NUMERIC = 4,
    HH_ERR_IO = 5,
    HH_ERR_INTERNAL = 6
} hh_status;

HH_EXPORT const char* hh_version(void);

/* Message of the last failed call on this thread, "" if none. */
HH_EXPORT const char* hh_last_error(void);

HH_EXPORT const char* hh_status_name(hh_status status);

/* Experiment configuration. Keys and values as in the key=value config
 * format (experiment, theory, granularity, sizes, trials, seed, out, strict,
 * timing, workers, batches, attempts, C, lambda, shape, programs, gates,
 * tv_tolerance, accuracy). */
typedef struct hh_experiment hh_experiment;

HH_EXPORT hh_status hh_experiment_create(const char* kind, hh_experiment** out);
HH_EXPORT void hh_experiment_destroy(hh_experiment* experiment);
HH_EXPORT hh_status hh_experiment_set(hh_experiment* experiment, const char* key, const char* value);
HH_EXPORT hh_status hh_experiment_load_config(hh_experiment* experiment, const char* path);
/* Copies of the resolved strict flag and output path (NULL when unset). */
HH_EXPORT int hh_experiment_strict(const hh_experiment* experiment);
HH_EXPORT const char* hh_experiment_out(const hh_experiment* experiment);

typedef struct hh_result hh_result;

HH_EXPORT hh_status hh_experiment_run(const hh_experiment* experiment, hh_result** out);
HH_EXPORT void hh_result_destroy(hh_result* result);
HH_EXPORT int hh_result_passed(const hh_result* result);
HH_EXPORT size_t hh_result_record_count(const hh_result* result);
/* Owned by the result. */
HH_EXPORT const char* hh_result_csv(const hh_result* result);
HH_EXPORT const char* hh_result_summary_json(const hh_result* result);
/* Writes <prefix>.csv and <prefix>.json. */
HH_EXPORT hh_status hh_result_write(const hh_result* result, const char* prefix);

/* Random sliced programs and single histories through them. */
typedef struct hh_program hh_program;
typedef struct hh_history hh_history;

HH_EXPORT hh_status hh_program_random(unsigned num_qubits, size_t num_gates, uint64_t seed, hh_program** out);
HH_EXPORT void hh_program_destroy(hh_program* program);
HH_EXPORT unsigned hh_program_num_qubits(const hh_program* program);
HH_EXPORT size_t hh_program_num_slices(const hh_program* program);

/* theory: "product", "flow" or "sinkhorn"; granularity: "gate" or "slice". */
HH_EXPORT hh_status hh_history_sample(const hh_program* program, const char* theory, const char* granularity,
                                      uint64_t seed, hh_history** out);
HH_EXPORT void hh_history_destroy(hh_history* history);
HH_EXPORT size_t hh_history_length(const hh_history* history);
HH_EXPORT uint64_t hh_history_value(const hh_history* history, size_t t);
HH_EXPORT uint64_t hh_history_queries(const hh_history* history);
/* Owned by the history. */
HH_EXPORT const char* hh_history_csv(const hh_history* history);
HH_EXPORT const char* hh_history_ledger_json(const hh_history* history);

#ifdef __cplusplus
}
#endif

#endif

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

#include "hidden_history/hidden_history.h"

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "hh/errors.h"
#include "hh/experiment.h"
#include "hh/history.h"
#include "hh/random_ops.h"

struct hh_experiment {
    hh::ExperimentConfig config;
};

struct hh_result {
    hh::ResultSet results;
    std::string csv;
    std::string json;
};

struct hh_program {
    hh::SlicedProgram program;
};

struct hh_history {
    hh::History history;
    std::string csv;
    std::string ledger;
};

namespace {

thread_local std::string g_last_error;

hh_status status_of(hh::ErrorKind kind) {
    switch (kind) {
        case hh::ErrorKind::InvalidArgument: return HH_ERR_INVALID_ARGUMENT;
        case hh::ErrorKind::Config: return HH_ERR_CONFIG;
        case hh::ErrorKind::DimensionCap: return HH_ERR_DIMENSION_CAP;
        case hh::ErrorKind::Numeric: return HH_ERR_NUMERIC;
        case hh::ErrorKind::Io: return HH_ERR_IO;
    }
    return HH_ERR_INTERNAL;
}

template <typename Fn>
hh_status guarded(Fn fn) {
    try {
        fn();
        g_last_error.clear();
        return HH_OK;
    } catch (const hh::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return HH_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HH_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) {
        throw hh::InvalidArgument(std::string(what) + " is null");
    }
}

}  // namespace

extern "C" {

const char* hh_version(void) {
    return "1.0.0";
}

const char* hh_last_error(void) {
    return g_last_error.c_str();
}

const char* hh_status_name(hh_status status) {
    switch (status) {
        case HH_OK: return "ok";
        case HH_ERR_INVALID_ARGUMENT: return "invalid argument";
        case HH_ERR_CONFIG: return "config error";
        case HH_ERR_DIMENSION_CAP: return "dimension cap exceeded";
        case HH_ERR_NUMERIC: return "numeric error";
        case HH_ERR_IO: return "i/o error";
        case HH_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

hh_status hh_experiment_create(const char* kind, hh_experiment** out) {
    return guarded([&] {
        require(kind, "kind");
        require(out, "out");
        auto e = std::make_unique<hh_experiment>();
        e->config.kind = hh::parse_experiment(kind);
        *out = e.release();
    });
}

void hh_experiment_destroy(hh_experiment* experiment) {
    delete experiment;
}

hh_status hh_experiment_set(hh_experiment* experiment, const char* key, const char* value) {
    return guarded([&] {
        require(experiment, "experiment");
        require(key, "key");
        require(value, "value");
        hh::apply_setting(experiment->config, key, value);
    });
}

hh_status hh_experiment_load_config(hh_experiment* experiment, const char* path) {
    return guarded([&] {
        require(experiment, "experiment");
        require(path, "path");
        std::ifstream f(path, std::ios::binary);
        if (!f) {
            throw hh::ConfigError(std::string("cannot read config file '") + path + "'");
        }
        std::stringstream ss;
        ss << f.rdbuf();
        experiment->config = hh::parse_config(ss.str(), experiment->config);
    });
}

int hh_experiment_strict(const hh_experiment* experiment) {
    return experiment != nullptr && experiment->config.strict ? 1 : 0;
}

const char* hh_experiment_out(const hh_experiment* experiment) {
    if (experiment == nullptr || experiment->config.out.empty()) {
        return nullptr;
    }
    return experiment->config.out.c_str();
}

hh_status hh_experiment_run(const hh_experiment* experiment, hh_result** out) {
    return guarded([&] {
        require(experiment, "experiment");
        require(out, "out");
        auto r = std::make_unique<hh_result>();
        r->results = hh::run_experiment(experiment->config);
        r->csv = hh::records_to_csv(r->results.records);
        r->json = r->results.summary.dump(2) + "\n";
        *out = r.release();
    });
}

void hh_result_destroy(hh_result* result) {
    delete result;
}

int hh_result_passed(const hh_result* result) {
    return result != nullptr && result->results.passed ? 1 : 0;
}

size_t hh_result_record_count(const hh_result* result) {
    return result == nullptr ? 0 : result->results.records.size();
}

const char* hh_result_csv(const hh_result* result) {
    return result == nullptr ? "" : result->csv.c_str();
}

const char* hh_result_summary_json(const hh_result* result) {
    return result == nullptr ? "" : result->json.c_str();
}

hh_status hh_result_write(const hh_result* result, const char* prefix) {
    return guarded([&] {
        require(result, "result");
        require(prefix, "prefix");
        hh::emit_results(result->results, prefix);
    });
}

hh_status hh_program_random(unsigned num_qubits, size_t num_gates, uint64_t seed, hh_program** out) {
    return guarded([&] {
        require(out, "out");
        if (num_qubits < 1 || num_qubits > 16) {
            throw hh::InvalidArgument("random programs take 1..16 qubits");
        }
        hh::CounterRng rng(seed);
        *out = new hh_program{hh::random_program(num_qubits, num_gates, rng)};
    });
}

void hh_program_destroy(hh_program* program) {
    delete program;
}

unsigned hh_program_num_qubits(const hh_program* program) {
    return program == nullptr ? 0 : program->program.num_qubits();
}

size_t hh_program_num_slices(const hh_program* program) {
    return program == nullptr ? 0 : program->program.num_slices();
}

hh_status hh_history_sample(const hh_program* program, const char* theory, const char* granularity, uint64_t seed,
                            hh_history** out) {
    return guarded([&] {
        require(program, "program");
        require(out, "out");
        hh::HistoryQuery q{program->program};
        q.theory = hh::parse_theory(theory == nullptr ? "flow" : theory);
        q.granularity = hh::parse_granularity(granularity == nullptr ? "gate" : granularity);
        q.seed = seed;
        auto h = std::make_unique<hh_history>();
        h->history = hh::sample_history(q);
        h->csv = hh::history_to_csv(h->history);
        h->ledger = hh::ledger_to_json(h->history);
        *out = h.release();
    });
}

void hh_history_destroy(hh_history* history) {
    delete history;
}

size_t hh_history_length(const hh_history* history) {
    return history == nullptr ? 0 : history->history.values.size();
}

uint64_t hh_history_value(const hh_history* history, size_t t) {
    if (history == nullptr || t >= history->history.values.size()) {
        return 0;
    }
    return history->history.values[t];
}

uint64_t hh_history_queries(const hh_history* history) {
    return history == nullptr ? 0 : history->history.ledger.total();
}

const char* hh_history_csv(const hh_history* history) {
    return history == nullptr ? "" : history->csv.c_str();
}

const char* hh_history_ledger_json(const hh_history* history) {
    return history == nullptr ? "" : history->ledger.c_str();
}

}  // extern "C"

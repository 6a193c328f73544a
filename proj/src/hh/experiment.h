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

#ifndef HH_EXPERIMENT_H
#define HH_EXPERIMENT_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hh/kernels.h"

namespace hh {

enum class ExperimentKind { Axioms, Marginals, Juggle, Sd, Collision, Gi, Search, Scaling };

std::string_view experiment_name(ExperimentKind kind);
ExperimentKind parse_experiment(std::string_view name);

/// Sizes are l for axioms/juggle, qubits for marginals, vertices for gi and n
/// otherwise. Empty sizes, zero trials and empty overrides select per-kind
/// defaults.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Axioms;
    TheoryKind theory = TheoryKind::Flow;
    Granularity granularity = Granularity::Gate;
    std::vector<unsigned> sizes;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string out;
    bool strict = false;
    bool timing = false;
    unsigned workers = 1;
    std::map<std::string, std::string> overrides;
};

/// Applies one key=value setting. Known keys: experiment, theory, granularity,
/// sizes (comma list), n (alias), trials, seed, out, strict, timing, workers,
/// and the constant overrides batches, attempts, C, lambda, shape, programs,
/// gates, tv_tolerance, accuracy.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Flat key=value lines; blank lines and lines starting with '#' are skipped.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});

/// Checks caps and fills per-kind defaults. Throws ConfigError.
ExperimentConfig resolve_config(ExperimentConfig config);

struct TrialRecord {
    std::string experiment;
    unsigned size = 0;
    std::uint64_t seed = 0;
    std::string verdict;
    bool success = false;
    std::uint64_t queries = 0;
    std::size_t batches = 0;
    double ms = 0.0;
};

struct ResultSet {
    std::vector<TrialRecord> records;
    nlohmann::ordered_json summary;
    bool passed = false;
};

ResultSet run_experiment(const ExperimentConfig& config);

/// Header experiment,size,seed,verdict,success,queries,batches,ms.
std::string records_to_csv(const std::vector<TrialRecord>& records);

/// Writes <out>.csv and <out>.json. Throws IoError.
void emit_results(const ResultSet& results, const std::string& out);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

/// Least squares y = slope x + intercept over at least two points.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hh

#endif

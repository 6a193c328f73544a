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

#ifndef HH_SEARCH_H
#define HH_SEARCH_H

#include <cstdint>
#include <vector>

#include "hh/history.h"
#include "hh/kernels.h"
#include "hh/ledger.h"
#include "hh/program.h"
#include "hh/rng.h"

namespace hh {

/// Unstructured search over N = 2^n items (3 divides n) with one marked item.
/// The item splits as x = (x_A, x_B): x_A is the high n/3 bits, x_B the low
/// 2n/3 bits.
struct SearchInstance {
    unsigned n = 0;
    BasisIndex marked = 0;
    OracleHandle f;
};

SearchInstance make_search_instance(unsigned n, std::uint64_t seed);

/// Target amplitudes of the pre-juggle state alpha |x> + beta sum_{z != x} |z>:
/// alpha = 1 / sqrt(2^{n/3} + 2^{1 - n/3} + 1), beta = 2^{-n/3} alpha.
struct SearchAmplitudes {
    double alpha = 0.0;
    double beta = 0.0;
};

SearchAmplitudes search_amplitudes(unsigned n);

/// Q in [0, 2^{n/3}] minimizing |sin((2Q + 1) asin(2^{-n/2})) - (alpha + beta)|.
std::uint64_t grover_iterations(unsigned n);

struct PreparedSearch {
    std::vector<Slice> slices;  // H^n, then one slice per Grover iteration
    std::uint64_t iterations = 0;
    double marked_amplitude = 0.0;  // simulated
    double alpha = 0.0;             // simulated: marked minus unmarked amplitude
    double beta = 0.0;              // simulated: unmarked amplitude
};

/// Builds and simulates the Grover stage, charging `ledger`.
PreparedSearch prepare_search_state(const SearchInstance& instance, QueryLedger& ledger);

struct SearchOptions {
    TheoryKind theory = TheoryKind::Flow;
    Granularity granularity = Granularity::Gate;
    std::size_t batch_factor = 4;  // C in C 2^{n/3} n batches
    std::size_t attempts = 1;      // juggle attempts per batch
};

struct SearchResult {
    bool success = false;
    BasisIndex found = 0;
    std::uint64_t grover_queries = 0;
    std::uint64_t juggle_queries = 0;  // ledger charges after the Grover stage
    std::uint64_t verification_queries = 0;
    std::uint64_t total_queries = 0;
    std::size_t batches = 0;
    std::vector<BasisIndex> candidates;  // distinct x_B, in order of discovery
    std::size_t checkpoints = 0;
    std::size_t zero_prefix_visits = 0;  // checkpoints reading |0^{n/3}>|x_B>
};

/// Layout: x_B on [0, 2n/3), x_A on [2n/3, n), tag on [n, 5n/3).
SlicedProgram build_search_program(const SearchInstance& instance, const SearchOptions& options, CounterRng& rng,
                                   QueryLedger& grover_ledger);

SearchResult dqp_search(const SearchInstance& instance, std::uint64_t seed, const SearchOptions& options = {});

}  // namespace hh

#endif

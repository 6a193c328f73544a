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

#ifndef HH_SD_H
#define HH_SD_H

#include <cstdint>
#include <string>
#include <string_view>

#include "hh/history.h"
#include "hh/kernels.h"
#include "hh/program.h"
#include "hh/rng.h"

namespace hh {

enum class SdShape { OneToOne, ManyToOne };

std::string_view shape_name(SdShape shape);

/// Two samplers P_0, P_1 : {0,1}^n -> {0,1}^m. `near` is ground truth for
/// testing only; solvers never read it.
struct SDInstance {
    std::string id;
    unsigned n = 0;
    unsigned output_width = 0;
    OracleHandle p0;
    OracleHandle p1;
    SdShape shape = SdShape::OneToOne;
    bool near = false;
};

/// Seeded polarized instances with m = n + 1 output bits, relabeled by a
/// random output permutation:
///   one-to-one near  P_b = sigma(pi_b(x))             (equal images)
///   one-to-one far   P_b = sigma(b || pi_b(x))        (disjoint images)
///   many-to-one near P_b = sigma(r(pi_b(x)))          (r a random map to n-1 bits)
///   many-to-one far  P_b = sigma(b || r_b(x))
SDInstance make_sd_instance(unsigned n, SdShape shape, bool near, std::uint64_t seed);

/// Exhaustive total-variation distance between the output laws of P_0 and P_1
/// on uniform inputs.
double variation_distance(const OracleFunction& p0, const OracleFunction& p1);

/// (b, x) -> P_b(x), with b the top input bit. Counts as a query.
OracleHandle joint_sampler_oracle(const SDInstance& instance);

struct SolverOptions {
    TheoryKind theory = TheoryKind::Flow;
    Granularity granularity = Granularity::Gate;
    std::size_t batches = 0;   // 0: solver default
    std::size_t attempts = 0;  // juggle attempts per batch, 0: solver default
};

/// Register layout shared by the SD solvers: x on [0, n), b on qubit n, the
/// sampler output on the next m qubits, then (general solver only) n + 1 hash
/// qubits of which the low k are written per batch.
struct SDLayout {
    unsigned n = 0;
    unsigned m = 0;
    unsigned hash_width = 0;
    unsigned num_qubits = 0;
    std::vector<unsigned> juggled;  // b and x
    QubitMap b;
    QubitMap tag;  // sampler output and hash registers
};

SDLayout sd_layout(unsigned n, unsigned m, bool with_hash);

struct Verdict {
    std::string instance_id;
    std::string verdict;
    bool positive = false;  // near / two-to-one
    std::size_t batches = 0;
    std::uint64_t queries = 0;
    std::uint64_t seed = 0;
};

/// {"instance_id", "verdict", "batches_used", "queries", "seed"}
std::string verdict_to_json(const Verdict& verdict);

/// True when some batch reads both values of the b register at its
/// checkpoints.
bool both_values_in_some_batch(const History& history, const QubitMap& reg);

/// True when some batch reads two distinct values of `reg` at its checkpoints.
bool distinct_values_in_some_batch(const History& history, const QubitMap& reg);

/// Default: one batch of 2 l^2 attempts, l = n + 1.
SlicedProgram build_sd_one_to_one_program(const SDInstance& instance, const SolverOptions& options,
                                          CounterRng& rng);
Verdict solve_sd_one_to_one(const SDInstance& instance, std::uint64_t seed, const SolverOptions& options = {});

/// Default: 16 n batches of l = n + 1 attempts. Each batch draws (k, h0, h1)
/// classically, prepares |b>|x>|P_b(x)>|h_b(x)>, juggles (b, x) and
/// uncomputes.
SlicedProgram build_sd_general_program(const SDInstance& instance, const SolverOptions& options, CounterRng& rng);
Verdict solve_sd_general(const SDInstance& instance, std::uint64_t seed, const SolverOptions& options = {});

struct CollisionInstance {
    std::string id;
    unsigned n = 0;
    OracleHandle g;
    bool two_to_one = false;
};

/// One-to-one: a random permutation. Two-to-one: random pairs mapped to
/// distinct random values.
CollisionInstance make_collision_instance(unsigned n, bool two_to_one, std::uint64_t seed);

/// Layout: x on [0, n), g(x) on [n, 2n). Default one batch of 2 n^2 attempts.
SlicedProgram build_collision_program(const CollisionInstance& instance, const SolverOptions& options,
                                      CounterRng& rng);
Verdict distinguish_collision(const CollisionInstance& instance, std::uint64_t seed,
                              const SolverOptions& options = {});

}  // namespace hh

#endif

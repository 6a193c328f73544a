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

#ifndef HH_JUGGLE_H
#define HH_JUGGLE_H

#include <cstdint>
#include <span>
#include <vector>

#include "hh/history.h"
#include "hh/program.h"
#include "hh/rng.h"

namespace hh {

/// 2 l^2.
std::size_t default_juggle_attempts(unsigned width);

/// One attempt with a fixed position i, followed by a checkpoint.
void append_juggle_attempt(ProgramBuilder& builder, std::span<const unsigned> qubits, unsigned i,
                           std::size_t batch);

/// Appends `attempts` juggle attempts on `qubits` to the builder. Each attempt
/// draws i uniformly from the register and adds three slices: Hadamards on
/// every register qubit except i, a Hadamard on i, then Hadamards on all of
/// them. A checkpoint tagged `batch` follows each attempt. Returns the drawn
/// positions (indices into `qubits`).
std::vector<unsigned> append_juggle(ProgramBuilder& builder, std::span<const unsigned> qubits, std::size_t attempts,
                                    std::size_t batch, CounterRng& rng);

/// Prep slices, a checkpoint, then `attempts` juggle attempts (all in batch 0).
/// Throws InvalidArgument for a register of fewer than 2 qubits.
SlicedProgram build_juggle_program(unsigned num_qubits, const std::vector<Slice>& prep,
                                   std::span<const unsigned> qubits, std::size_t attempts, std::uint64_t seed);

/// Distinct juggled-register values seen at the checkpoints of one batch that
/// share one tag-register value.
struct CheckpointGroup {
    std::size_t batch = 0;
    BasisIndex tag = 0;
    std::vector<BasisIndex> values;  // sorted, distinct
};

/// Groups checkpoint values by (batch, tag). An empty tag map puts each batch
/// in one group. Throws InvalidArgument when the history has no checkpoints.
std::vector<CheckpointGroup> extract_checkpoint_values(const History& history, const QubitMap& juggled,
                                                       const QubitMap& tag);

/// True when every batch reads a single tag value at all its checkpoints.
bool tags_pinned(const History& history, const QubitMap& tag);

/// Slices preparing (|a> + sign |b>)/sqrt(2) from |0...0> on a register of
/// `width` qubits: a Hadamard on the lowest differing qubit d, an optional
/// phase flip, then the permutation x -> x xor c(x_d) with c(0) = a and
/// c(1) = b xor e_d. Requires a != b.
std::vector<Slice> pair_state_prep(unsigned width, BasisIndex a, BasisIndex b, bool minus = false);

}  // namespace hh

#endif

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

#ifndef HH_RANDOM_OPS_H
#define HH_RANDOM_OPS_H

#include "hh/program.h"
#include "hh/rng.h"
#include "hh/simulator.h"
#include "hh/state.h"

namespace hh {

/// Normalized vector of independent complex Gaussians.
PureState random_state(unsigned num_qubits, CounterRng& rng);

/// Haar-random unitary (QR of a complex Gaussian matrix with phases fixed).
DenseUnitary haar_unitary(std::size_t dimension, CounterRng& rng);

/// Generalized block-diagonal unitary: the basis is split into random blocks
/// of size 1..max_block, each block gets a Haar-random unitary, and the
/// outputs are relabeled by a random permutation.
DenseUnitary random_block_unitary(std::size_t dimension, std::size_t max_block, CounterRng& rng);

/// Hermitian matrix with spectral norm 1.
DenseUnitary random_unit_hermitian(std::size_t dimension, CounterRng& rng);

/// (I + iA)(I - iA)^-1 for Hermitian A.
DenseUnitary cayley(const DenseUnitary& hermitian);

/// One gate per slice: Hadamards on random qubits half of the time, else a
/// random phase flip, a one-bit oracle write between two qubits, or a random
/// basis permutation. Oracle writes count as queries.
SlicedProgram random_program(unsigned num_qubits, std::size_t num_gates, CounterRng& rng);

}  // namespace hh

#endif

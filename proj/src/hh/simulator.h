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

#ifndef HH_SIMULATOR_H
#define HH_SIMULATOR_H

#include <Eigen/Dense>

#include "hh/ledger.h"
#include "hh/program.h"
#include "hh/state.h"

namespace hh {

/// Default cap on qubit count for dense 2^l x 2^l matrices.
inline constexpr unsigned kDefaultDenseCap = 12;

using DenseUnitary = Eigen::MatrixXcd;

/// Returns U|state> for the gate. Validates the gate against the state.
PureState apply_gate(const PureState& state, const Gate& gate);

/// In-place variant for already-validated gates. `scratch` is reused across
/// calls by permutation-type gates.
void apply_gate_inplace(PureState& state, const Gate& gate, std::vector<Amplitude>& scratch);

/// Applies the slice's gates in order, opening a new ledger slice and
/// charging one query per query gate.
PureState apply_slice(const PureState& state, const Slice& slice, QueryLedger& ledger);

/// Runs the whole program from |0...0>, filling `ledger` if given.
PureState run_program(const SlicedProgram& program, QueryLedger* ledger = nullptr);

/// Dense matrix of the slice (U[y][x] = <y|U|x>). Throws DimensionCapExceeded
/// when num_qubits > cap.
DenseUnitary slice_unitary(const Slice& slice, unsigned num_qubits, unsigned cap = kDefaultDenseCap);

/// max |(U^dagger U - I)_{ij}|.
double unitarity_residual(const DenseUnitary& u);

/// Phase oracle that flips the sign of |x> on the first `num_qubits` qubits
/// when f(x) = 1. Charged as a query when `f` counts as one.
Gate phase_oracle(const OracleHandle& f, unsigned num_qubits);

/// Diffusion operator 2|s><s| - I on the first `num_qubits` qubits, as
/// H^n, PhaseFlipIf(x != 0), H^n. The sign convention makes the marked
/// amplitude grow.
std::vector<Gate> diffusion_gates(unsigned num_qubits);

/// One Grover iteration (phase oracle then diffusion) as a single ledger
/// slice with one query.
PureState grover_iterate(const PureState& state, const OracleHandle& f, QueryLedger& ledger);

/// sin((2q + 1) asin(1/sqrt(N))), the marked amplitude after q iterations
/// from the uniform state with one marked item among N = 2^num_qubits.
double grover_marked_amplitude(unsigned num_qubits, std::uint64_t iterations);

}  // namespace hh

#endif

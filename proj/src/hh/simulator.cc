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

#include "hh/simulator.h"

#include <cmath>

#include "hh/errors.h"

namespace hh {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void apply_hadamard(std::vector<Amplitude>& amps, unsigned target) {
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t n = amps.size();
    Amplitude* data = amps.data();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; ++k) {
            const Amplitude a = data[k];
            const Amplitude b = data[k + stride];
            data[k] = (a + b) * kInvSqrt2;
            data[k + stride] = (a - b) * kInvSqrt2;
        }
    }
}

void apply_phase_flip(std::vector<Amplitude>& amps, const PhaseFlipIf& g) {
    const OracleFunction& f = *g.predicate;
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (f(g.inputs.gather(x)) != 0) {
            amps[x] = -amps[x];
        }
    }
}

void apply_oracle_xor(std::vector<Amplitude>& amps, const OracleXor& g, std::vector<Amplitude>& scratch) {
    const OracleFunction& f = *g.function;
    scratch.assign(amps.size(), Amplitude{});
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (amps[x] == Amplitude{}) {
            continue;
        }
        scratch[x ^ g.outputs.scatter(f(g.inputs.gather(x)))] = amps[x];
    }
    amps.swap(scratch);
}

void apply_permutation(std::vector<Amplitude>& amps, const Permutation& g, std::vector<Amplitude>& scratch) {
    const auto& image = *g.image;
    scratch.assign(amps.size(), Amplitude{});
    for (std::size_t x = 0; x < amps.size(); ++x) {
        scratch[image[x]] = amps[x];
    }
    amps.swap(scratch);
}

}  // namespace

void apply_gate_inplace(PureState& state, const Gate& gate, std::vector<Amplitude>& scratch) {
    auto& amps = state.mutable_amplitudes();
    if (const auto* h = std::get_if<Hadamard>(&gate)) {
        apply_hadamard(amps, h->target);
    } else if (const auto* p = std::get_if<PhaseFlipIf>(&gate)) {
        apply_phase_flip(amps, *p);
    } else if (const auto* o = std::get_if<OracleXor>(&gate)) {
        apply_oracle_xor(amps, *o, scratch);
    } else {
        apply_permutation(amps, std::get<Permutation>(gate), scratch);
    }
}

PureState apply_gate(const PureState& state, const Gate& gate) {
    validate_gate(gate, state.num_qubits());
    PureState out = state;
    std::vector<Amplitude> scratch;
    apply_gate_inplace(out, gate, scratch);
    return out;
}

PureState apply_slice(const PureState& state, const Slice& slice, QueryLedger& ledger) {
    for (const auto& gate : slice) {
        validate_gate(gate, state.num_qubits());
    }
    PureState out = state;
    std::vector<Amplitude> scratch;
    ledger.begin_slice();
    for (const auto& gate : slice) {
        apply_gate_inplace(out, gate, scratch);
        if (is_query(gate)) {
            ledger.charge();
        }
    }
    return out;
}

PureState run_program(const SlicedProgram& program, QueryLedger* ledger) {
    PureState state = PureState::basis(program.num_qubits());
    std::vector<Amplitude> scratch;
    for (const auto& slice : program.slices()) {
        if (ledger != nullptr) {
            ledger->begin_slice();
        }
        for (const auto& gate : slice) {
            apply_gate_inplace(state, gate, scratch);
            if (ledger != nullptr && is_query(gate)) {
                ledger->charge();
            }
        }
    }
    return state;
}

DenseUnitary slice_unitary(const Slice& slice, unsigned num_qubits, unsigned cap) {
    if (num_qubits > cap) {
        throw DimensionCapExceeded("dense unitary requested for " + std::to_string(num_qubits) +
                                   " qubits, cap is " + std::to_string(cap));
    }
    for (const auto& gate : slice) {
        validate_gate(gate, num_qubits);
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    DenseUnitary u(dim, dim);
    std::vector<Amplitude> scratch;
    for (std::size_t x = 0; x < dim; ++x) {
        PureState column = PureState::basis(num_qubits, x);
        for (const auto& gate : slice) {
            apply_gate_inplace(column, gate, scratch);
        }
        for (std::size_t y = 0; y < dim; ++y) {
            u(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = column[y];
        }
    }
    return u;
}

double unitarity_residual(const DenseUnitary& u) {
    const DenseUnitary product = u.adjoint() * u;
    const auto eye = DenseUnitary::Identity(u.rows(), u.cols());
    return (product - eye).cwiseAbs().maxCoeff();
}

Gate phase_oracle(const OracleHandle& f, unsigned num_qubits) {
    return make_phase_flip(qubit_range(0, num_qubits), f);
}

std::vector<Gate> diffusion_gates(unsigned num_qubits) {
    auto nonzero = std::make_shared<const OracleFunction>(OracleFunction::tabulate(
        "nonzero", num_qubits, 1, [](BasisIndex x) { return x != 0 ? BasisIndex{1} : BasisIndex{0}; }, false));
    std::vector<Gate> gates;
    for (unsigned q = 0; q < num_qubits; ++q) {
        gates.push_back(make_hadamard(q));
    }
    gates.push_back(make_phase_flip(qubit_range(0, num_qubits), nonzero));
    for (unsigned q = 0; q < num_qubits; ++q) {
        gates.push_back(make_hadamard(q));
    }
    return gates;
}

PureState grover_iterate(const PureState& state, const OracleHandle& f, QueryLedger& ledger) {
    if (f->width() != 1 || f->arity() > state.num_qubits()) {
        throw InvalidArgument("Grover oracle must map at most " + std::to_string(state.num_qubits()) +
                              " bits to one bit");
    }
    Slice slice{phase_oracle(f, f->arity())};
    for (auto& g : diffusion_gates(f->arity())) {
        slice.push_back(std::move(g));
    }
    return apply_slice(state, slice, ledger);
}

double grover_marked_amplitude(unsigned num_qubits, std::uint64_t iterations) {
    const double theta = std::asin(std::pow(2.0, -0.5 * num_qubits));
    return std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
}

}  // namespace hh

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

#include "hh/random_ops.h"

#include <algorithm>
#include <cmath>

#include "hh/errors.h"

namespace hh {

namespace {

DenseUnitary gaussian_matrix(std::size_t dimension, CounterRng& rng) {
    DenseUnitary m(dimension, dimension);
    for (std::size_t c = 0; c < dimension; ++c) {
        for (std::size_t r = 0; r < dimension; ++r) {
            const double re = rng.normal();
            const double im = rng.normal();
            m(r, c) = Amplitude(re, im);
        }
    }
    return m;
}

}  // namespace

PureState random_state(unsigned num_qubits, CounterRng& rng) {
    if (num_qubits > kMaxQubits) {
        throw DimensionCapExceeded("random_state above qubit cap");
    }
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    for (auto& a : amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = Amplitude(re, im);
    }
    return PureState::normalized(num_qubits, std::move(amps));
}

DenseUnitary haar_unitary(std::size_t dimension, CounterRng& rng) {
    const DenseUnitary g = gaussian_matrix(dimension, rng);
    Eigen::HouseholderQR<DenseUnitary> qr(g);
    DenseUnitary q = qr.householderQ();
    const DenseUnitary r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (std::size_t k = 0; k < dimension; ++k) {
        const double mag = std::abs(r(k, k));
        const Amplitude phase = mag > 0.0 ? r(k, k) / mag : Amplitude(1.0);
        q.col(k) *= phase;
    }
    return q;
}

DenseUnitary random_block_unitary(std::size_t dimension, std::size_t max_block, CounterRng& rng) {
    if (max_block == 0) {
        throw InvalidArgument("max_block must be positive");
    }
    const auto inputs = random_permutation(dimension, rng);
    const auto outputs = random_permutation(dimension, rng);
    DenseUnitary u = DenseUnitary::Zero(dimension, dimension);
    std::size_t start = 0;
    while (start < dimension) {
        const std::size_t size = std::min<std::size_t>(1 + rng.below(max_block), dimension - start);
        const DenseUnitary block = haar_unitary(size, rng);
        for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t c = 0; c < size; ++c) {
                u(outputs[start + r], inputs[start + c]) = block(r, c);
            }
        }
        start += size;
    }
    return u;
}

DenseUnitary random_unit_hermitian(std::size_t dimension, CounterRng& rng) {
    const DenseUnitary g = gaussian_matrix(dimension, rng);
    const DenseUnitary h = (g + g.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<DenseUnitary> solver(h, Eigen::EigenvaluesOnly);
    const double norm = solver.eigenvalues().cwiseAbs().maxCoeff();
    if (!(norm > 0.0)) {
        return DenseUnitary::Identity(dimension, dimension);
    }
    return h / norm;
}

DenseUnitary cayley(const DenseUnitary& hermitian) {
    const auto n = hermitian.rows();
    const DenseUnitary id = DenseUnitary::Identity(n, n);
    const Amplitude i(0.0, 1.0);
    const DenseUnitary plus = id + i * hermitian;
    const DenseUnitary minus = id - i * hermitian;
    return plus * minus.partialPivLu().inverse();
}

SlicedProgram random_program(unsigned num_qubits, std::size_t num_gates, CounterRng& rng) {
    if (num_qubits == 0 || num_qubits > kDefaultDenseCap) {
        throw InvalidArgument("random_program needs 1..12 qubits");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    ProgramBuilder b(num_qubits);
    for (std::size_t g = 0; g < num_gates; ++g) {
        const auto q = static_cast<unsigned>(rng.below(num_qubits));
        const std::uint64_t kind = rng.below(6);
        if (kind < 3 || num_qubits == 1) {
            b.add_gate(make_hadamard(q));
        } else if (kind == 3) {
            std::vector<BasisIndex> table(dim);
            for (auto& e : table) {
                e = rng.below(2);
            }
            auto f = std::make_shared<const OracleFunction>("flip", num_qubits, 1, std::move(table), false);
            b.add_gate(make_phase_flip(qubit_range(0, num_qubits), std::move(f)));
        } else if (kind == 4) {
            const auto target = static_cast<unsigned>((q + 1 + rng.below(num_qubits - 1)) % num_qubits);
            auto f = std::make_shared<const OracleFunction>("bit", 1, 1, std::vector<BasisIndex>{rng.below(2), rng.below(2)},
                                                            true);
            b.add_gate(make_oracle_xor({q}, {target}, std::move(f)));
        } else {
            b.add_gate(make_permutation(random_permutation(dim, rng), "shuffle"));
        }
    }
    return std::move(b).build();
}

}  // namespace hh

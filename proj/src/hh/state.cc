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

#include "hh/state.h"

#include <cmath>
#include <string>

#include "hh/errors.h"

namespace hh {

namespace {

void check_shape(unsigned num_qubits, std::size_t length) {
    if (num_qubits > kMaxQubits) {
        throw InvalidArgument("qubit count " + std::to_string(num_qubits) + " exceeds the simulator limit");
    }
    if (length != (std::size_t{1} << num_qubits)) {
        throw InvalidArgument(
            "amplitude vector has length " + std::to_string(length) + ", expected 2^" + std::to_string(num_qubits));
    }
}

double sum_norm(const std::vector<Amplitude>& amplitudes) {
    double total = 0.0;
    for (const auto& a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace

PureState PureState::basis(unsigned num_qubits, BasisIndex index) {
    if (num_qubits > kMaxQubits) {
        throw InvalidArgument("qubit count " + std::to_string(num_qubits) + " exceeds the simulator limit");
    }
    std::vector<Amplitude> amplitudes(std::size_t{1} << num_qubits);
    if (index >= amplitudes.size()) {
        throw InvalidArgument("basis index out of range");
    }
    amplitudes[index] = 1.0;
    return PureState(num_qubits, std::move(amplitudes));
}

PureState PureState::from_amplitudes(unsigned num_qubits, std::vector<Amplitude> amplitudes) {
    check_shape(num_qubits, amplitudes.size());
    const double total = sum_norm(amplitudes);
    if (!std::isfinite(total) || std::abs(total - 1.0) > kNormTolerance) {
        throw InvalidArgument("state is not normalized (norm^2 = " + std::to_string(total) + ")");
    }
    return PureState(num_qubits, std::move(amplitudes));
}

PureState PureState::normalized(unsigned num_qubits, std::vector<Amplitude> amplitudes) {
    check_shape(num_qubits, amplitudes.size());
    const double total = sum_norm(amplitudes);
    if (!std::isfinite(total) || total <= 0.0) {
        throw InvalidArgument("cannot normalize a zero or non-finite vector");
    }
    const double scale = 1.0 / std::sqrt(total);
    for (auto& a : amplitudes) {
        a *= scale;
    }
    return PureState(num_qubits, std::move(amplitudes));
}

double PureState::norm_squared() const {
    return sum_norm(amplitudes_);
}

std::vector<double> born_distribution(const PureState& state) {
    std::vector<double> out(state.dimension());
    for (std::size_t x = 0; x < out.size(); ++x) {
        out[x] = std::norm(state[x]);
    }
    return out;
}

double max_amplitude_difference(const PureState& a, const PureState& b) {
    if (a.dimension() != b.dimension()) {
        throw InvalidArgument("state dimensions differ");
    }
    double worst = 0.0;
    for (std::size_t x = 0; x < a.dimension(); ++x) {
        worst = std::max(worst, std::abs(a[x] - b[x]));
    }
    return worst;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw InvalidArgument("distribution lengths differ");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        total += std::abs(p[i] - q[i]);
    }
    return 0.5 * total;
}

}  // namespace hh

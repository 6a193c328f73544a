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

#ifndef HH_STATE_H
#define HH_STATE_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hh/bits.h"

namespace hh {

using Amplitude = std::complex<double>;

inline constexpr unsigned kMaxQubits = 30;
inline constexpr double kNormTolerance = 1e-10;

/// Pure state of `num_qubits` qubits as a dense amplitude vector of length
/// 2^num_qubits. Normalized to within kNormTolerance on construction.
class PureState {
   public:
    /// |index>, defaulting to |0...0>.
    static PureState basis(unsigned num_qubits, BasisIndex index = 0);

    /// Validates length and norm; does not renormalize.
    static PureState from_amplitudes(unsigned num_qubits, std::vector<Amplitude> amplitudes);

    /// Scales the vector to unit norm; throws on a zero or non-finite vector.
    static PureState normalized(unsigned num_qubits, std::vector<Amplitude> amplitudes);

    unsigned num_qubits() const {
        return num_qubits_;
    }
    std::size_t dimension() const {
        return amplitudes_.size();
    }
    const Amplitude& operator[](BasisIndex index) const {
        return amplitudes_[index];
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }

    /// Raw access for in-place gate application. Callers keep the norm.
    std::vector<Amplitude>& mutable_amplitudes() {
        return amplitudes_;
    }

    double norm_squared() const;
    double probability(BasisIndex index) const {
        return std::norm(amplitudes_[index]);
    }

   private:
    PureState(unsigned num_qubits, std::vector<Amplitude> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

    unsigned num_qubits_ = 0;
    std::vector<Amplitude> amplitudes_;
};

/// p[x] = |amplitude[x]|^2.
std::vector<double> born_distribution(const PureState& state);

/// Largest |a[x] - b[x]| over the two states (same dimension required).
double max_amplitude_difference(const PureState& a, const PureState& b);

/// Total-variation distance between two probability vectors of equal length.
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace hh

#endif

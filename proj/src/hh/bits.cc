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

#include "hh/bits.h"

namespace hh {

QubitMap::QubitMap(std::vector<unsigned> qubits) : qubits_(std::move(qubits)) {
    for (unsigned q : qubits_) {
        index_mask_ |= bit_of(q);
    }
    value_mask_ = low_mask(static_cast<unsigned>(qubits_.size()));
    first_ = qubits_.empty() ? 0 : qubits_.front();
    for (std::size_t k = 1; k < qubits_.size(); ++k) {
        if (qubits_[k] != qubits_[k - 1] + 1) {
            contiguous_ = false;
        }
    }
}

std::vector<unsigned> qubit_range(unsigned first, unsigned width) {
    std::vector<unsigned> out(width);
    for (unsigned k = 0; k < width; ++k) {
        out[k] = first + k;
    }
    return out;
}

std::string to_bitstring(BasisIndex value, unsigned num_qubits) {
    std::string out(num_qubits, '0');
    for (unsigned q = 0; q < num_qubits; ++q) {
        if (test_bit(value, q)) {
            out[num_qubits - 1 - q] = '1';
        }
    }
    return out;
}

}  // namespace hh

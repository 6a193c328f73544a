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

#ifndef HH_BITS_H
#define HH_BITS_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hh {

/// Index of a computational basis state. Qubit 0 is the least significant bit.
using BasisIndex = std::uint64_t;

inline constexpr BasisIndex bit_of(unsigned qubit) {
    return BasisIndex{1} << qubit;
}

inline constexpr BasisIndex low_mask(unsigned width) {
    return width >= 64 ? ~BasisIndex{0} : (BasisIndex{1} << width) - 1;
}

inline constexpr bool test_bit(BasisIndex value, unsigned qubit) {
    return ((value >> qubit) & 1U) != 0;
}

inline int parity(BasisIndex value) {
    return __builtin_parityll(value);
}

/// Gathers/scatters the bits of a basis index that belong to an ordered
/// qubit list. Entry k of the list becomes bit k of the gathered value.
class QubitMap {
   public:
    QubitMap() = default;
    explicit QubitMap(std::vector<unsigned> qubits);

    BasisIndex gather(BasisIndex index) const {
        if (contiguous_) {
            return (index >> first_) & value_mask_;
        }
        BasisIndex out = 0;
        for (std::size_t k = 0; k < qubits_.size(); ++k) {
            out |= ((index >> qubits_[k]) & 1U) << k;
        }
        return out;
    }

    BasisIndex scatter(BasisIndex value) const {
        if (contiguous_) {
            return (value & value_mask_) << first_;
        }
        BasisIndex out = 0;
        for (std::size_t k = 0; k < qubits_.size(); ++k) {
            out |= ((value >> k) & 1U) << qubits_[k];
        }
        return out;
    }

    /// Mask of the qubits in the list, in basis-index coordinates.
    BasisIndex index_mask() const {
        return index_mask_;
    }
    std::size_t width() const {
        return qubits_.size();
    }
    std::span<const unsigned> qubits() const {
        return qubits_;
    }

   private:
    std::vector<unsigned> qubits_;
    BasisIndex index_mask_ = 0;
    BasisIndex value_mask_ = 0;
    unsigned first_ = 0;
    bool contiguous_ = true;
};

/// Contiguous qubit range [first, first + width).
std::vector<unsigned> qubit_range(unsigned first, unsigned width);

/// Bitstring with qubit num_qubits-1 leftmost.
std::string to_bitstring(BasisIndex value, unsigned num_qubits);

}  // namespace hh

#endif

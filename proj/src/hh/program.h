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

#ifndef HH_PROGRAM_H
#define HH_PROGRAM_H

#include <cstddef>
#include <vector>

#include "hh/gates.h"

namespace hh {

using Slice = std::vector<Gate>;

/// Inspection point at history position `position` (the value v_position,
/// i.e. after `position` slices). `batch` groups checkpoints that belong to
/// the same prepare/juggle/uncompute run.
struct Checkpoint {
    std::size_t position;
    std::size_t batch;

    bool operator==(const Checkpoint&) const = default;
};

/// Ordered slices U_1..U_T over a fixed qubit count. Immutable once built;
/// every gate is validated against the qubit count on construction.
class SlicedProgram {
   public:
    SlicedProgram(unsigned num_qubits, std::vector<Slice> slices, std::vector<Checkpoint> checkpoints = {});

    unsigned num_qubits() const {
        return num_qubits_;
    }
    std::size_t num_slices() const {
        return slices_.size();
    }
    const Slice& slice(std::size_t t) const {
        return slices_[t];
    }
    const std::vector<Slice>& slices() const {
        return slices_;
    }
    const std::vector<Checkpoint>& checkpoints() const {
        return checkpoints_;
    }

    std::size_t num_gates() const;

    /// Static count of query gates in the whole program.
    std::uint64_t static_query_count() const;

   private:
    unsigned num_qubits_;
    std::vector<Slice> slices_;
    std::vector<Checkpoint> checkpoints_;
};

class ProgramBuilder {
   public:
    explicit ProgramBuilder(unsigned num_qubits) : num_qubits_(num_qubits) {}

    /// Appends a multi-gate slice.
    ProgramBuilder& add_slice(Slice slice);

    /// Appends `gate` as a slice of its own.
    ProgramBuilder& add_gate(Gate gate);

    /// Appends each gate as its own slice.
    ProgramBuilder& add_gates(const std::vector<Gate>& gates);

    /// Marks the current history position (after all slices so far).
    ProgramBuilder& checkpoint(std::size_t batch);

    std::size_t num_slices() const {
        return slices_.size();
    }
    unsigned num_qubits() const {
        return num_qubits_;
    }

    SlicedProgram build() &&;

   private:
    unsigned num_qubits_;
    std::vector<Slice> slices_;
    std::vector<Checkpoint> checkpoints_;
};

}  // namespace hh

#endif

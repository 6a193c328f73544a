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

#include "hh/program.h"

#include "hh/errors.h"
#include "hh/state.h"

namespace hh {

SlicedProgram::SlicedProgram(unsigned num_qubits, std::vector<Slice> slices, std::vector<Checkpoint> checkpoints)
    : num_qubits_(num_qubits), slices_(std::move(slices)), checkpoints_(std::move(checkpoints)) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw InvalidArgument("program qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    for (const auto& slice : slices_) {
        for (const auto& gate : slice) {
            validate_gate(gate, num_qubits_);
        }
    }
    for (const auto& c : checkpoints_) {
        if (c.position > slices_.size()) {
            throw InvalidArgument("checkpoint position " + std::to_string(c.position) + " beyond " +
                                  std::to_string(slices_.size()) + " slices");
        }
    }
}

std::size_t SlicedProgram::num_gates() const {
    std::size_t total = 0;
    for (const auto& slice : slices_) {
        total += slice.size();
    }
    return total;
}

std::uint64_t SlicedProgram::static_query_count() const {
    std::uint64_t total = 0;
    for (const auto& slice : slices_) {
        for (const auto& gate : slice) {
            total += is_query(gate) ? 1 : 0;
        }
    }
    return total;
}

ProgramBuilder& ProgramBuilder::add_slice(Slice slice) {
    slices_.push_back(std::move(slice));
    return *this;
}

ProgramBuilder& ProgramBuilder::add_gate(Gate gate) {
    slices_.push_back(Slice{std::move(gate)});
    return *this;
}

ProgramBuilder& ProgramBuilder::add_gates(const std::vector<Gate>& gates) {
    for (const auto& g : gates) {
        add_gate(g);
    }
    return *this;
}

ProgramBuilder& ProgramBuilder::checkpoint(std::size_t batch) {
    checkpoints_.push_back(Checkpoint{slices_.size(), batch});
    return *this;
}

SlicedProgram ProgramBuilder::build() && {
    return SlicedProgram(num_qubits_, std::move(slices_), std::move(checkpoints_));
}

}  // namespace hh

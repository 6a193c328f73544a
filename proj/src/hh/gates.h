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

#ifndef HH_GATES_H
#define HH_GATES_H

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hh/bits.h"

namespace hh {

/// A classical function {0,1}^arity -> {0,1}^width stored as a lookup table.
///
/// `counts_as_query` separates database/instance oracles (whose applications
/// are charged to the query ledger) from the algorithm's own reversible
/// bookkeeping, such as tag and hash registers, which are not queries.
class OracleFunction {
   public:
    OracleFunction(std::string name, unsigned arity, unsigned width, std::vector<BasisIndex> table,
                   bool counts_as_query);

    static OracleFunction tabulate(std::string name, unsigned arity, unsigned width,
                                   const std::function<BasisIndex(BasisIndex)>& fn, bool counts_as_query);

    BasisIndex operator()(BasisIndex input) const {
        return table_[input];
    }

    const std::string& name() const {
        return name_;
    }
    unsigned arity() const {
        return arity_;
    }
    unsigned width() const {
        return width_;
    }
    bool counts_as_query() const {
        return counts_as_query_;
    }
    const std::vector<BasisIndex>& table() const {
        return table_;
    }

   private:
    std::string name_;
    unsigned arity_;
    unsigned width_;
    std::vector<BasisIndex> table_;
    bool counts_as_query_;
};

using OracleHandle = std::shared_ptr<const OracleFunction>;

struct Hadamard {
    unsigned target;
};

/// Diagonal gate: multiplies |x> by -1 when predicate(inputs of x) != 0.
struct PhaseFlipIf {
    QubitMap inputs;
    OracleHandle predicate;
};

/// |x>|w> -> |x>|w xor f(x)>, with x read from `inputs` and w from `outputs`.
struct OracleXor {
    QubitMap inputs;
    QubitMap outputs;
    OracleHandle function;
};

/// Explicit basis permutation: |x> -> |image[x]>.
struct Permutation {
    std::shared_ptr<const std::vector<BasisIndex>> image;
    std::string name;
};

using Gate = std::variant<Hadamard, PhaseFlipIf, OracleXor, Permutation>;

Gate make_hadamard(unsigned target);
Gate make_phase_flip(std::vector<unsigned> inputs, OracleHandle predicate);
Gate make_oracle_xor(std::vector<unsigned> inputs, std::vector<unsigned> outputs, OracleHandle function);

/// Throws InvalidArgument unless `image` is a bijection of [0, image.size()).
Gate make_permutation(std::vector<BasisIndex> image, std::string name = "perm");

/// Throws InvalidArgument (qubit out of range, repeated qubit, oracle width
/// mismatch, permutation of the wrong dimension).
void validate_gate(const Gate& gate, unsigned num_qubits);

/// True for gates charged to the query ledger (oracle gates whose function
/// counts as a query).
bool is_query(const Gate& gate);

/// True when every block of the gate's unitary is 1x1, i.e. the gate maps
/// basis states to basis states up to sign.
bool is_classical(const Gate& gate);

/// Image of a basis state under a classical gate (identity for phase flips).
BasisIndex classical_image(const Gate& gate, BasisIndex index);

std::string describe(const Gate& gate);

}  // namespace hh

#endif

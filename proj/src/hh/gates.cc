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

#include "hh/gates.h"

#include <algorithm>
#include <sstream>

#include "hh/errors.h"

namespace hh {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_qubits(std::span<const unsigned> qubits, unsigned num_qubits, std::vector<bool>& used, const char* what) {
    for (unsigned q : qubits) {
        if (q >= num_qubits) {
            throw InvalidArgument(std::string(what) + " qubit " + std::to_string(q) + " out of range for " +
                                  std::to_string(num_qubits) + " qubits");
        }
        if (used[q]) {
            throw InvalidArgument(std::string(what) + " qubit " + std::to_string(q) + " used twice");
        }
        used[q] = true;
    }
}

}  // namespace

OracleFunction::OracleFunction(std::string name, unsigned arity, unsigned width, std::vector<BasisIndex> table,
                               bool counts_as_query)
    : name_(std::move(name)), arity_(arity), width_(width), table_(std::move(table)), counts_as_query_(counts_as_query) {
    if (arity > 30 || width > 63) {
        throw InvalidArgument("oracle '" + name_ + "' is too wide");
    }
    if (table_.size() != (std::size_t{1} << arity)) {
        throw InvalidArgument("oracle '" + name_ + "' table has " + std::to_string(table_.size()) +
                              " entries, expected 2^" + std::to_string(arity));
    }
    const BasisIndex mask = low_mask(width);
    for (BasisIndex v : table_) {
        if ((v & ~mask) != 0) {
            throw InvalidArgument("oracle '" + name_ + "' output exceeds width " + std::to_string(width));
        }
    }
}

OracleFunction OracleFunction::tabulate(std::string name, unsigned arity, unsigned width,
                                        const std::function<BasisIndex(BasisIndex)>& fn, bool counts_as_query) {
    std::vector<BasisIndex> table(std::size_t{1} << arity);
    for (std::size_t x = 0; x < table.size(); ++x) {
        table[x] = fn(x);
    }
    return OracleFunction(std::move(name), arity, width, std::move(table), counts_as_query);
}

Gate make_hadamard(unsigned target) {
    return Hadamard{target};
}

Gate make_phase_flip(std::vector<unsigned> inputs, OracleHandle predicate) {
    return PhaseFlipIf{QubitMap(std::move(inputs)), std::move(predicate)};
}

Gate make_oracle_xor(std::vector<unsigned> inputs, std::vector<unsigned> outputs, OracleHandle function) {
    return OracleXor{QubitMap(std::move(inputs)), QubitMap(std::move(outputs)), std::move(function)};
}

Gate make_permutation(std::vector<BasisIndex> image, std::string name) {
    std::vector<bool> seen(image.size(), false);
    for (BasisIndex y : image) {
        if (y >= image.size() || seen[y]) {
            throw InvalidArgument("permutation '" + name + "' is not a bijection");
        }
        seen[y] = true;
    }
    return Permutation{std::make_shared<const std::vector<BasisIndex>>(std::move(image)), std::move(name)};
}

void validate_gate(const Gate& gate, unsigned num_qubits) {
    std::vector<bool> used(num_qubits, false);
    std::visit(Overloaded{
                   [&](const Hadamard& g) {
                       const unsigned q[] = {g.target};
                       check_qubits(q, num_qubits, used, "Hadamard");
                   },
                   [&](const PhaseFlipIf& g) {
                       if (!g.predicate) {
                           throw InvalidArgument("phase flip without predicate");
                       }
                       check_qubits(g.inputs.qubits(), num_qubits, used, "phase flip");
                       if (g.predicate->arity() != g.inputs.width()) {
                           throw InvalidArgument("oracle width mismatch: predicate '" + g.predicate->name() +
                                                 "' has arity " + std::to_string(g.predicate->arity()) + " but " +
                                                 std::to_string(g.inputs.width()) + " input qubits");
                       }
                   },
                   [&](const OracleXor& g) {
                       if (!g.function) {
                           throw InvalidArgument("oracle gate without function");
                       }
                       check_qubits(g.inputs.qubits(), num_qubits, used, "oracle input");
                       check_qubits(g.outputs.qubits(), num_qubits, used, "oracle output");
                       if (g.function->arity() != g.inputs.width() || g.function->width() != g.outputs.width()) {
                           throw InvalidArgument("oracle width mismatch: '" + g.function->name() + "' maps " +
                                                 std::to_string(g.function->arity()) + " -> " +
                                                 std::to_string(g.function->width()) + " bits but gate has " +
                                                 std::to_string(g.inputs.width()) + " -> " +
                                                 std::to_string(g.outputs.width()));
                       }
                   },
                   [&](const Permutation& g) {
                       if (!g.image || g.image->size() != (std::size_t{1} << num_qubits)) {
                           throw InvalidArgument("permutation '" + g.name + "' does not match 2^" +
                                                 std::to_string(num_qubits) + " basis states");
                       }
                   },
               },
               gate);
}

bool is_query(const Gate& gate) {
    if (const auto* g = std::get_if<OracleXor>(&gate)) {
        return g->function->counts_as_query();
    }
    if (const auto* g = std::get_if<PhaseFlipIf>(&gate)) {
        return g->predicate->counts_as_query();
    }
    return false;
}

bool is_classical(const Gate& gate) {
    return !std::holds_alternative<Hadamard>(gate);
}

BasisIndex classical_image(const Gate& gate, BasisIndex index) {
    return std::visit(Overloaded{
                          [&](const Hadamard&) -> BasisIndex {
                              throw InvalidArgument("Hadamard has no classical image");
                          },
                          [&](const PhaseFlipIf&) { return index; },
                          [&](const OracleXor& g) {
                              return index ^ g.outputs.scatter((*g.function)(g.inputs.gather(index)));
                          },
                          [&](const Permutation& g) { return (*g.image)[index]; },
                      },
                      gate);
}

std::string describe(const Gate& gate) {
    std::ostringstream out;
    std::visit(Overloaded{
                   [&](const Hadamard& g) { out << "H(" << g.target << ")"; },
                   [&](const PhaseFlipIf& g) { out << "PhaseFlipIf(" << g.predicate->name() << ")"; },
                   [&](const OracleXor& g) { out << "OracleXor(" << g.function->name() << ")"; },
                   [&](const Permutation& g) { out << "Permutation(" << g.name << ")"; },
               },
               gate);
    return out.str();
}

}  // namespace hh

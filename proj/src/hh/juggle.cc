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

#include "hh/juggle.h"

#include <algorithm>
#include <map>
#include <set>

#include "hh/errors.h"

namespace hh {

std::size_t default_juggle_attempts(unsigned width) {
    return 2 * static_cast<std::size_t>(width) * width;
}

void append_juggle_attempt(ProgramBuilder& builder, std::span<const unsigned> qubits, unsigned i,
                           std::size_t batch) {
    if (qubits.size() < 2 || i >= qubits.size()) {
        throw InvalidArgument("juggle register needs at least 2 qubits and i inside it");
    }
    Slice u1;
    Slice u3;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        if (k != i) {
            u1.push_back(make_hadamard(qubits[k]));
        }
        u3.push_back(make_hadamard(qubits[k]));
    }
    builder.add_slice(std::move(u1));
    builder.add_slice({make_hadamard(qubits[i])});
    builder.add_slice(std::move(u3));
    builder.checkpoint(batch);
}

std::vector<unsigned> append_juggle(ProgramBuilder& builder, std::span<const unsigned> qubits, std::size_t attempts,
                                    std::size_t batch, CounterRng& rng) {
    if (qubits.size() < 2) {
        throw InvalidArgument("juggle register needs at least 2 qubits");
    }
    std::vector<unsigned> chosen;
    chosen.reserve(attempts);
    for (std::size_t a = 0; a < attempts; ++a) {
        const auto i = static_cast<unsigned>(rng.below(qubits.size()));
        chosen.push_back(i);
        append_juggle_attempt(builder, qubits, i, batch);
    }
    return chosen;
}

SlicedProgram build_juggle_program(unsigned num_qubits, const std::vector<Slice>& prep,
                                   std::span<const unsigned> qubits, std::size_t attempts, std::uint64_t seed) {
    ProgramBuilder b(num_qubits);
    for (const auto& s : prep) {
        b.add_slice(s);
    }
    b.checkpoint(0);
    CounterRng rng(seed);
    append_juggle(b, qubits, attempts, 0, rng);
    return std::move(b).build();
}

std::vector<CheckpointGroup> extract_checkpoint_values(const History& history, const QubitMap& juggled,
                                                       const QubitMap& tag) {
    if (history.checkpoints.empty()) {
        throw InvalidArgument("history carries no checkpoint annotations");
    }
    std::map<std::pair<std::size_t, BasisIndex>, std::set<BasisIndex>> groups;
    for (std::size_t k = 0; k < history.checkpoints.size(); ++k) {
        const BasisIndex v = history.checkpoint_values[k];
        groups[{history.checkpoints[k].batch, tag.gather(v)}].insert(juggled.gather(v));
    }
    std::vector<CheckpointGroup> out;
    out.reserve(groups.size());
    for (const auto& [key, values] : groups) {
        out.push_back({key.first, key.second, {values.begin(), values.end()}});
    }
    return out;
}

bool tags_pinned(const History& history, const QubitMap& tag) {
    std::map<std::size_t, BasisIndex> seen;
    for (std::size_t k = 0; k < history.checkpoints.size(); ++k) {
        const BasisIndex t = tag.gather(history.checkpoint_values[k]);
        const auto [it, inserted] = seen.emplace(history.checkpoints[k].batch, t);
        if (!inserted && it->second != t) {
            return false;
        }
    }
    return true;
}

std::vector<Slice> pair_state_prep(unsigned width, BasisIndex a, BasisIndex b, bool minus) {
    if (a == b || (a | b) > low_mask(width)) {
        throw InvalidArgument("pair state needs two distinct values inside the register");
    }
    const auto d = static_cast<unsigned>(__builtin_ctzll(a ^ b));
    if (test_bit(a, d)) {
        std::swap(a, b);  // flips the global sign of the minus state only
    }
    std::vector<Slice> prep{{make_hadamard(d)}};
    if (minus) {
        auto on = std::make_shared<const OracleFunction>("bit_set", 1, 1, std::vector<BasisIndex>{0, 1}, false);
        prep.push_back({make_phase_flip({d}, std::move(on))});
    }
    const std::size_t dim = std::size_t{1} << width;
    const BasisIndex c0 = a;
    const BasisIndex c1 = b ^ bit_of(d);
    std::vector<BasisIndex> image(dim);
    for (BasisIndex x = 0; x < dim; ++x) {
        image[x] = x ^ (test_bit(x, d) ? c1 : c0);
    }
    prep.push_back({make_permutation(std::move(image), "pair_prep")});
    return prep;
}

}  // namespace hh

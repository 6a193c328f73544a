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

#include "hh/search.h"

#include <algorithm>
#include <cmath>

#include "hh/errors.h"
#include "hh/juggle.h"
#include "hh/simulator.h"

namespace hh {

namespace {

void check_width(unsigned n) {
    if (n < 3 || n % 3 != 0 || n > 15) {
        throw InvalidArgument("search width must be a multiple of 3 in [3, 15]");
    }
}

}  // namespace

SearchInstance make_search_instance(unsigned n, std::uint64_t seed) {
    check_width(n);
    CounterRng rng(seed);
    SearchInstance inst;
    inst.n = n;
    inst.marked = rng.below(std::uint64_t{1} << n);
    const BasisIndex marked = inst.marked;
    inst.f = std::make_shared<const OracleFunction>(OracleFunction::tabulate(
        "f", n, 1, [marked](BasisIndex x) { return BasisIndex{x == marked}; }, true));
    return inst;
}

SearchAmplitudes search_amplitudes(unsigned n) {
    check_width(n);
    const double third = std::ldexp(1.0, static_cast<int>(n / 3));
    SearchAmplitudes a;
    a.alpha = 1.0 / std::sqrt(third + 2.0 / third + 1.0);
    a.beta = a.alpha / third;
    return a;
}

std::uint64_t grover_iterations(unsigned n) {
    const auto amps = search_amplitudes(n);
    const double target = amps.alpha + amps.beta;
    const std::uint64_t cap = std::uint64_t{1} << (n / 3);
    std::uint64_t best = 0;
    double best_err = std::abs(grover_marked_amplitude(n, 0) - target);
    for (std::uint64_t q = 1; q <= cap; ++q) {
        const double err = std::abs(grover_marked_amplitude(n, q) - target);
        if (err < best_err) {
            best = q;
            best_err = err;
        }
    }
    return best;
}

PreparedSearch prepare_search_state(const SearchInstance& instance, QueryLedger& ledger) {
    const unsigned n = instance.n;
    PreparedSearch out;
    out.iterations = grover_iterations(n);
    Slice h;
    for (unsigned q = 0; q < n; ++q) {
        h.push_back(make_hadamard(q));
    }
    out.slices.push_back(h);
    for (std::uint64_t it = 0; it < out.iterations; ++it) {
        Slice s{phase_oracle(instance.f, n)};
        for (auto& g : diffusion_gates(n)) {
            s.push_back(std::move(g));
        }
        out.slices.push_back(std::move(s));
    }
    PureState state = PureState::basis(n);
    for (const auto& s : out.slices) {
        state = apply_slice(state, s, ledger);
    }
    const BasisIndex other = instance.marked == 0 ? 1 : 0;
    out.marked_amplitude = state[instance.marked].real();
    out.beta = state[other].real();
    out.alpha = out.marked_amplitude - out.beta;
    return out;
}

SlicedProgram build_search_program(const SearchInstance& instance, const SearchOptions& options, CounterRng& rng,
                                   QueryLedger& grover_ledger) {
    const unsigned n = instance.n;
    const unsigned t = n / 3;
    const unsigned w_bits = 2 * t;
    const auto prepared = prepare_search_state(instance, grover_ledger);
    ProgramBuilder b(n + w_bits);
    for (const auto& s : prepared.slices) {
        b.add_slice(s);
    }
    Slice hy;
    for (unsigned q = w_bits; q < n; ++q) {
        hy.push_back(make_hadamard(q));
    }
    b.add_slice(std::move(hy));

    const auto reg = qubit_range(0, n);
    const auto tag = qubit_range(n, w_bits);
    const std::size_t batches = options.batch_factor * (std::size_t{1} << t) * n;
    const std::size_t dom = std::size_t{1} << n;
    for (std::size_t r = 0; r < batches; ++r) {
        const BasisIndex s = rng.below(std::uint64_t{1} << t);
        std::vector<BasisIndex> table(dom);
        for (BasisIndex v = 0; v < dom; ++v) {
            const BasisIndex y = v >> w_bits;
            const BasisIndex w = v & low_mask(w_bits);
            table[v] = y == 0 ? w : ((s << t) | y);
        }
        const auto g = std::make_shared<const OracleFunction>("tag", n, w_bits, std::move(table), false);
        b.add_gate(make_oracle_xor(reg, tag, g));
        b.checkpoint(r);
        append_juggle(b, reg, options.attempts, r, rng);
        b.add_gate(make_oracle_xor(reg, tag, g));
    }
    return std::move(b).build();
}

SearchResult dqp_search(const SearchInstance& instance, std::uint64_t seed, const SearchOptions& options) {
    const unsigned n = instance.n;
    const unsigned w_bits = 2 * (n / 3);
    CounterRng rng(substream(seed, 0));
    QueryLedger grover;
    const auto program = build_search_program(instance, options, rng, grover);
    const History h = sample_history({program, options.theory, substream(seed, 1), options.granularity});

    SearchResult res;
    res.grover_queries = grover.total();
    res.juggle_queries = h.ledger.total() - res.grover_queries;
    res.checkpoints = h.checkpoints.size();
    for (const auto& c : program.checkpoints()) {
        res.batches = std::max(res.batches, c.batch + 1);
    }
    const BasisIndex x_b = instance.marked & low_mask(w_bits);
    for (BasisIndex v : h.checkpoint_values) {
        const BasisIndex reg = v & low_mask(n);
        const BasisIndex y = reg >> w_bits;
        const BasisIndex w = reg & low_mask(w_bits);
        if (y == 0) {
            res.zero_prefix_visits += w == x_b ? 1 : 0;
        } else if (std::find(res.candidates.begin(), res.candidates.end(), w) == res.candidates.end()) {
            res.candidates.push_back(w);
        }
    }
    const std::uint64_t completions = std::uint64_t{1} << (n / 3);
    for (BasisIndex w : res.candidates) {
        for (BasisIndex a = 0; a < completions && !res.success; ++a) {
            const BasisIndex x = (a << w_bits) | w;
            ++res.verification_queries;
            if ((*instance.f)(x) != 0) {
                res.success = true;
                res.found = x;
            }
        }
        if (res.success) {
            break;
        }
    }
    res.total_queries = res.grover_queries + res.juggle_queries + res.verification_queries;
    return res;
}

}  // namespace hh

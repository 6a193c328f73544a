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

#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "hh/errors.h"
#include "hh/history.h"
#include "hh/random_ops.h"
#include "hh/rng.h"

namespace hh {
namespace {

SlicedProgram hadamard_twice() {
    ProgramBuilder b(1);
    b.add_gate(make_hadamard(0)).add_gate(make_hadamard(0));
    return std::move(b).build();
}

TEST(History, ClassicalProgramFollowsTheTrajectoryOfZero) {
    const auto inc = std::make_shared<const OracleFunction>(OracleFunction::tabulate(
        "inc", 2, 2, [](BasisIndex x) { return (x + 1) & 3; }, true));
    ProgramBuilder b(4);
    b.add_gate(make_permutation({1, 2, 3, 0, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}));
    b.add_gate(make_oracle_xor({0, 1}, {2, 3}, inc));
    b.add_gate(make_permutation({1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}));
    b.add_gate(make_oracle_xor({0, 1}, {2, 3}, inc));
    const auto program = std::move(b).build();
    // 0 -> 1 -> 1 ^ (2 << 2) = 9 -> 9 (8 + 1 maps to itself) -> 9 ^ (2 << 2) = 1.
    for (auto theory : {TheoryKind::Flow, TheoryKind::Sinkhorn}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto h = sample_history({program, theory, seed});
            EXPECT_EQ(h.values, (std::vector<BasisIndex>{0, 1, 9, 9, 1}));
        }
    }
}

TEST(History, SingleHadamardGivesUniformValue) {
    ProgramBuilder b(1);
    b.add_gate(make_hadamard(0));
    const auto program = std::move(b).build();
    for (auto theory : {TheoryKind::Product, TheoryKind::Flow, TheoryKind::Sinkhorn}) {
        int ones = 0;
        const int n = 20000;
        for (int seed = 0; seed < n; ++seed) {
            const auto h = sample_history({program, theory, substream(99, seed)});
            EXPECT_EQ(h.values[0], 0u);
            ones += static_cast<int>(h.values[1]);
        }
        EXPECT_NEAR(ones / static_cast<double>(n), 0.5, 0.015) << theory_name(theory);
    }
}

TEST(History, TwoStepJointMatchesDenseKernelChain) {
    const auto program = hadamard_twice();
    const auto u = slice_unitary(program.slice(0), 1);
    const auto s0 = PureState::basis(1);
    const auto s1 = apply_dense(s0, u);
    const auto k1 = flow_kernel_dense(s0, u);
    const auto k2 = flow_kernel_dense(s1, u);
    std::map<std::pair<BasisIndex, BasisIndex>, int> counts;
    const int n = 100000;
    const HistorySampler sampler(program, TheoryKind::Flow);
    for (int seed = 0; seed < n; ++seed) {
        const auto h = sampler.sample(substream(5, seed));
        ++counts[{h.values[1], h.values[2]}];
    }
    for (BasisIndex a = 0; a < 2; ++a) {
        for (BasisIndex b = 0; b < 2; ++b) {
            const double expected = k1.at(0, a) * k2.at(a, b);
            const double seen = counts[std::make_pair(a, b)] / static_cast<double>(n);
            EXPECT_NEAR(seen, expected, 0.01);
        }
    }
}

TEST(History, SamplerReproducesStreamingHistories) {
    CounterRng rng(17);
    for (int p = 0; p < 5; ++p) {
        const auto program = random_program(3, 12, rng);
        for (auto theory : {TheoryKind::Product, TheoryKind::Flow, TheoryKind::Sinkhorn}) {
            for (auto granularity : {Granularity::Gate, Granularity::Slice}) {
                const HistorySampler sampler(program, theory, granularity);
                for (std::uint64_t seed = 0; seed < 20; ++seed) {
                    const auto streamed = sample_history({program, theory, seed, granularity});
                    EXPECT_EQ(sampler.sample(seed).values, streamed.values);
                }
            }
        }
    }
}

TEST(History, PrefixDoesNotDependOnFutureSlices) {
    CounterRng rng(23);
    const auto base = random_program(3, 8, rng);
    const auto tail_a = random_program(3, 6, rng);
    const auto tail_b = random_program(3, 6, rng);
    auto join = [&](const SlicedProgram& tail) {
        std::vector<Slice> slices = base.slices();
        slices.insert(slices.end(), tail.slices().begin(), tail.slices().end());
        return SlicedProgram(3, slices);
    };
    const auto pa = join(tail_a);
    const auto pb = join(tail_b);
    for (auto theory : {TheoryKind::Product, TheoryKind::Flow, TheoryKind::Sinkhorn}) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto ha = sample_history({pa, theory, seed});
            const auto hb = sample_history({pb, theory, seed});
            for (std::size_t t = 0; t <= base.num_slices(); ++t) {
                ASSERT_EQ(ha.values[t], hb.values[t]);
            }
        }
    }
}

TEST(History, LedgerMatchesStaticQueryCount) {
    CounterRng rng(31);
    const auto program = random_program(3, 30, rng);
    for (auto theory : {TheoryKind::Product, TheoryKind::Flow, TheoryKind::Sinkhorn}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const auto h = sample_history({program, theory, seed});
            EXPECT_EQ(h.ledger.total(), program.static_query_count());
            EXPECT_EQ(h.ledger.num_slices(), program.num_slices());
            EXPECT_EQ(h.values.size(), program.num_slices() + 1);
        }
    }
}

TEST(History, ReproducibleForSameQuery) {
    CounterRng rng(37);
    const auto program = random_program(3, 20, rng);
    const HistoryQuery q{program, TheoryKind::Sinkhorn, 1234};
    EXPECT_EQ(sample_history(q).values, sample_history(q).values);
}

TEST(Marginals, ProductAndFlowTrackBornDistributions) {
    CounterRng rng(41);
    const auto program = random_program(3, 6, rng);
    for (auto theory : {TheoryKind::Product, TheoryKind::Flow}) {
        const auto report = empirical_marginals({program, theory, 77}, 100000);
        EXPECT_EQ(report.tv_per_step.size(), 7u);
        EXPECT_LE(report.max_tv, 0.02) << theory_name(theory);
    }
}

TEST(Marginals, BrokenKernelIsDetected) {
    // A sampler that never leaves 0 after one Hadamard on |0>.
    ProgramBuilder b(1);
    b.add_gate(make_hadamard(0));
    const HistorySampler sampler(std::move(b).build(), TheoryKind::Flow);
    const std::vector<std::vector<std::uint64_t>> counts{{1000, 0}, {1000, 0}};
    const auto report = compare_marginals(counts, sampler.born_marginals(), 1000);
    EXPECT_GE(report.max_tv, 0.1);
    const HistoryQuery few{sampler.program(), TheoryKind::Flow, 1};
    EXPECT_THROW(empirical_marginals(few, 10), InvalidArgument);
}

TEST(History, CheckpointsAndExports) {
    const auto f = std::make_shared<const OracleFunction>("id", 1, 1, std::vector<BasisIndex>{0, 1}, true);
    ProgramBuilder b(2);
    b.checkpoint(0).add_gate(make_permutation({1, 0, 2, 3})).add_gate(make_oracle_xor({0}, {1}, f)).checkpoint(1);
    const auto h = sample_history({std::move(b).build(), TheoryKind::Flow, 0});
    EXPECT_EQ(h.checkpoint_values, (std::vector<BasisIndex>{0, 3}));
    EXPECT_EQ(history_to_csv(h), "t,bitstring,is_checkpoint\n0,00,1\n1,01,0\n2,11,1\n");
    EXPECT_EQ(ledger_to_json(h), R"({"Q":1,"q":[0,1]})");
}

}  // namespace
}  // namespace hh

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
#include <complex>
#include <set>

#include <gtest/gtest.h>

#include "hh/bits.h"
#include "hh/errors.h"
#include "hh/ledger.h"
#include "hh/matrix_scaling.h"
#include "hh/max_flow.h"
#include "hh/program.h"
#include "hh/rng.h"
#include "hh/simulator.h"
#include "hh/state.h"

namespace hh {
namespace {

OracleHandle table_oracle(unsigned arity, unsigned width, std::vector<BasisIndex> table, bool query = true) {
    return std::make_shared<const OracleFunction>("t", arity, width, std::move(table), query);
}

// Kronecker product with the first factor on the most significant qubit.
DenseUnitary kron(const DenseUnitary& a, const DenseUnitary& b) {
    DenseUnitary out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DenseUnitary hadamard_matrix() {
    DenseUnitary h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

TEST(Bits, GatherScatterRoundTripOnScatteredQubits) {
    const QubitMap map({4, 1, 6});
    EXPECT_EQ(map.index_mask(), bit_of(4) | bit_of(1) | bit_of(6));
    for (BasisIndex v = 0; v < 8; ++v) {
        EXPECT_EQ(map.gather(map.scatter(v)), v);
    }
    EXPECT_EQ(map.gather(bit_of(6)), 4u);
    EXPECT_EQ(map.scatter(1), bit_of(4));
}

TEST(Bits, ContiguousRangeMatchesShiftAndMask) {
    const QubitMap map(qubit_range(3, 4));
    for (BasisIndex x : {0ULL, 0x78ULL, 0x1234ULL, 0xFFFFULL}) {
        EXPECT_EQ(map.gather(x), (x >> 3) & 0xF);
    }
}

TEST(Bits, BitstringPutsHighestQubitFirst) {
    EXPECT_EQ(to_bitstring(1, 3), "001");
    EXPECT_EQ(to_bitstring(6, 3), "110");
    EXPECT_EQ(to_bitstring(0, 0), "");
}

TEST(Rng, SameKeySameSequence) {
    CounterRng a(42);
    CounterRng b(42);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(a(), b());
    }
}

TEST(Rng, SubstreamsDiffer) {
    std::set<std::uint64_t> keys;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        keys.insert(substream(7, i));
    }
    EXPECT_EQ(keys.size(), 1000u);
    EXPECT_NE(substream(7, 0), substream(8, 0));
}

TEST(Rng, UniformAndBelowStayInRange) {
    CounterRng rng(1);
    double sum = 0.0;
    std::vector<int> hist(7, 0);
    const int n = 70000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        ++hist[rng.below(7)];
    }
    EXPECT_NEAR(sum / n, 0.5, 0.01);
    for (int c : hist) {
        EXPECT_NEAR(c, n / 7, 400);
    }
}

TEST(Rng, NormalHasUnitVariance) {
    CounterRng rng(3);
    double s1 = 0.0;
    double s2 = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        s1 += z;
        s2 += z * z;
    }
    EXPECT_NEAR(s1 / n, 0.0, 0.02);
    EXPECT_NEAR(s2 / n, 1.0, 0.02);
}

TEST(State, RejectsUnnormalizedAmplitudes) {
    EXPECT_THROW(PureState::from_amplitudes(1, {1.0, 1.0}), InvalidArgument);
    EXPECT_THROW(PureState::from_amplitudes(1, {1.0}), InvalidArgument);
    EXPECT_THROW(PureState::normalized(1, {0.0, 0.0}), Error);
    const auto s = PureState::normalized(1, {3.0, 4.0});
    EXPECT_NEAR(s.probability(0), 0.36, 1e-15);
    EXPECT_NEAR(s.probability(1), 0.64, 1e-15);
}

TEST(State, TotalVariation) {
    const std::vector<double> p{0.5, 0.5, 0.0};
    const std::vector<double> q{0.0, 0.5, 0.5};
    EXPECT_DOUBLE_EQ(total_variation(p, q), 0.5);
    EXPECT_DOUBLE_EQ(total_variation(p, p), 0.0);
}

TEST(Gates, ValidationRejectsBadGates) {
    EXPECT_THROW(validate_gate(make_hadamard(3), 3), InvalidArgument);
    const auto f = table_oracle(1, 1, {1, 0});
    EXPECT_THROW(validate_gate(make_oracle_xor({0}, {0}, f), 2), InvalidArgument);
    EXPECT_THROW(validate_gate(make_oracle_xor({0}, {1, 2}, f), 3), InvalidArgument);
    EXPECT_THROW(make_permutation({0, 0, 1, 2}), InvalidArgument);
    EXPECT_THROW(validate_gate(make_permutation({1, 0}), 2), InvalidArgument);
    EXPECT_NO_THROW(validate_gate(make_oracle_xor({0}, {1}, f), 2));
}

TEST(Gates, ClassicalImages) {
    const auto f = table_oracle(2, 1, {0, 1, 1, 0});
    const Gate g = make_oracle_xor({0, 1}, {2}, f);
    EXPECT_TRUE(is_classical(g));
    EXPECT_TRUE(is_query(g));
    EXPECT_EQ(classical_image(g, 0b001), 0b101u);
    EXPECT_EQ(classical_image(g, 0b111), 0b111u);
    EXPECT_EQ(classical_image(g, 0b011), 0b011u);
    EXPECT_FALSE(is_classical(make_hadamard(0)));
    const auto tag = table_oracle(1, 1, {0, 1}, false);
    EXPECT_FALSE(is_query(make_oracle_xor({0}, {1}, tag)));
}

TEST(Simulator, HadamardOnZero) {
    const auto s = apply_gate(PureState::basis(1), make_hadamard(0));
    EXPECT_NEAR(s[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
    const auto back = apply_gate(s, make_hadamard(0));
    EXPECT_NEAR(std::abs(back[0]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(back[1]), 0.0, 1e-15);
}

TEST(Simulator, SliceUnitaryMatchesKroneckerProduct) {
    const DenseUnitary h = hadamard_matrix();
    const DenseUnitary id = DenseUnitary::Identity(2, 2);
    // H on qubit 1 of two qubits is H (x) I with qubit 1 as the high factor.
    const auto u = slice_unitary({make_hadamard(1)}, 2);
    EXPECT_LT((u - kron(h, id)).cwiseAbs().maxCoeff(), 1e-15);
    const auto u2 = slice_unitary({make_hadamard(0), make_hadamard(2)}, 3);
    EXPECT_LT((u2 - kron(h, kron(id, h))).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(unitarity_residual(u2), 1e-14);
}

TEST(Simulator, OracleXorMatchesDirectTable) {
    const std::vector<BasisIndex> table{3, 1, 0, 2};
    const auto f = table_oracle(2, 2, table);
    const Gate g = make_oracle_xor({0, 1}, {2, 3}, f);
    const auto u = slice_unitary({g}, 4);
    for (BasisIndex x = 0; x < 16; ++x) {
        const BasisIndex expected = (x & 3) | ((((x >> 2) & 3) ^ table[x & 3]) << 2);
        EXPECT_NEAR(std::abs(u(expected, x)), 1.0, 1e-15);
    }
    EXPECT_LT(unitarity_residual(u), 1e-15);
}

TEST(Simulator, DenseCapIsEnforced) {
    EXPECT_THROW(slice_unitary({make_hadamard(0)}, 5, 4), DimensionCapExceeded);
}

TEST(Simulator, GroverAmplitudeMatchesClosedForm) {
    const unsigned n = 6;
    const BasisIndex marked = 37;
    const auto f = std::make_shared<const OracleFunction>(OracleFunction::tabulate(
        "f", n, 1, [&](BasisIndex x) { return BasisIndex{x == marked}; }, true));
    PureState s = PureState::basis(n);
    std::vector<Amplitude> scratch;
    for (unsigned q = 0; q < n; ++q) {
        apply_gate_inplace(s, make_hadamard(q), scratch);
    }
    QueryLedger ledger;
    for (int it = 1; it <= 5; ++it) {
        s = grover_iterate(s, f, ledger);
        const double theta = std::asin(1.0 / 8.0);
        EXPECT_NEAR(s[marked].real(), std::sin((2 * it + 1) * theta), 1e-12);
        EXPECT_NEAR(grover_marked_amplitude(n, it), std::sin((2 * it + 1) * theta), 1e-15);
    }
    EXPECT_EQ(ledger.total(), 5u);
    EXPECT_EQ(ledger.num_slices(), 5u);
}

TEST(Simulator, RunProgramChargesOnlyQueryGates) {
    const auto f = table_oracle(1, 1, {0, 1});
    const auto tag = table_oracle(1, 1, {1, 1}, false);
    ProgramBuilder b(2);
    b.add_gate(make_hadamard(0));
    b.add_slice({make_oracle_xor({0}, {1}, f), make_oracle_xor({0}, {1}, tag), make_oracle_xor({0}, {1}, f)});
    const auto program = std::move(b).build();
    QueryLedger ledger;
    run_program(program, &ledger);
    EXPECT_EQ(ledger.per_slice(), (std::vector<std::uint64_t>{0, 2}));
    EXPECT_EQ(program.static_query_count(), 2u);
}

TEST(Ledger, CumulativeAndJson) {
    QueryLedger ledger;
    ledger.begin_slice();
    ledger.charge(2);
    ledger.begin_slice();
    ledger.begin_slice();
    ledger.charge();
    EXPECT_EQ(ledger.cumulative(0), 0u);
    EXPECT_EQ(ledger.cumulative(1), 2u);
    EXPECT_EQ(ledger.cumulative(3), 3u);
    EXPECT_EQ(ledger.to_json(), R"({"Q":3,"q":[2,0,1]})");
}

TEST(Program, CheckpointsMustLieInsideTheHistory) {
    EXPECT_THROW(SlicedProgram(1, {{make_hadamard(0)}}, {{2, 0}}), InvalidArgument);
    EXPECT_NO_THROW(SlicedProgram(1, {}, {{0, 0}}));
    ProgramBuilder b(1);
    b.checkpoint(0).add_gate(make_hadamard(0)).checkpoint(1);
    const auto p = std::move(b).build();
    EXPECT_EQ(p.checkpoints(), (std::vector<Checkpoint>{{0, 0}, {1, 1}}));
}

TEST(MaxFlow, TextbookNetwork) {
    // Six-node network with known maximum flow 23.
    MaxFlow g(6);
    g.add_edge(0, 1, 16);
    g.add_edge(0, 2, 13);
    g.add_edge(1, 3, 12);
    g.add_edge(2, 1, 4);
    g.add_edge(2, 4, 14);
    g.add_edge(3, 2, 9);
    g.add_edge(3, 5, 20);
    g.add_edge(4, 3, 7);
    g.add_edge(4, 5, 4);
    EXPECT_DOUBLE_EQ(g.solve(0, 5), 23.0);
}

TEST(MaxFlow, FirstAugmentationTakesLexicographicallySmallestPath) {
    MaxFlow g(4);
    const auto s_a = g.add_edge(0, 1, 1.0);
    const auto s_b = g.add_edge(0, 2, 1.0);
    g.add_edge(1, 3, 0.5);
    g.add_edge(2, 3, 0.5);
    EXPECT_DOUBLE_EQ(g.solve(0, 3), 1.0);
    EXPECT_DOUBLE_EQ(g.flow(s_a), 0.5);
    EXPECT_DOUBLE_EQ(g.flow(s_b), 0.5);
    EXPECT_EQ(g.num_augmentations(), 2u);
}

TEST(MatrixScaling, MatchesMarginalsAndKeepsCrossRatios) {
    const std::vector<double> seed{1.0, 2.0, 0.5, 3.0, 1.0, 4.0, 2.0, 2.0, 1.0};
    const std::vector<double> rows{0.2, 0.3, 0.5};
    const std::vector<double> cols{0.4, 0.4, 0.2};
    const auto r = scale_to_marginals(seed, 3, 3, rows, cols);
    EXPECT_LE(r.residual, 1e-9);
    const auto& m = r.joint;
    for (int x = 0; x < 3; ++x) {
        EXPECT_NEAR(m[x * 3] + m[x * 3 + 1] + m[x * 3 + 2], rows[x], 1e-9);
    }
    // Diagonal scaling leaves every 2x2 cross ratio of the seed unchanged.
    auto cross = [](const std::vector<double>& a) { return a[0] * a[4] / (a[1] * a[3]); };
    EXPECT_NEAR(cross(m), cross(seed), 1e-9);
}

TEST(MatrixScaling, ThrowsWhenZeroPatternForbidsTheMarginals) {
    const std::vector<double> seed{1.0, 0.0, 0.0, 1.0};
    const std::vector<double> rows{0.5, 0.5};
    const std::vector<double> cols{0.3, 0.7};
    EXPECT_THROW(scale_to_marginals(seed, 2, 2, rows, cols, 1e-9, 1000), NumericError);
}

}  // namespace
}  // namespace hh

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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "hh/errors.h"
#include "hh/kernels.h"
#include "hh/max_flow.h"
#include "hh/random_ops.h"
#include "hh/rng.h"

namespace hh {
namespace {

constexpr double kRt2 = 1.4142135623730951;

DenseUnitary hadamard_on(unsigned target, unsigned num_qubits) {
    return slice_unitary({make_hadamard(target)}, num_qubits);
}

PureState real_state(unsigned n, std::vector<double> amps) {
    std::vector<Amplitude> a(amps.begin(), amps.end());
    return PureState::normalized(n, std::move(a));
}

// Lexicographic-max coupling of two 2-point marginals: the coupling set is the
// segment f_ll = t, f_lh = a_lo - t, f_hl = b_lo - t, f_hh = a_hi - b_lo + t,
// and maximizing f_ll first selects the largest feasible t.
std::array<std::array<double, 2>, 2> lex_max_coupling(double a_lo, double a_hi, double b_lo) {
    const double t = std::min(a_lo, b_lo);
    EXPECT_GE(t, std::max(0.0, b_lo - a_hi) - 1e-15);
    return {{{t, a_lo - t}, {b_lo - t, a_hi - b_lo + t}}};
}

TEST(TheoryNames, RoundTrip) {
    for (auto t : {TheoryKind::Product, TheoryKind::Flow, TheoryKind::Sinkhorn}) {
        EXPECT_EQ(parse_theory(theory_name(t)), t);
    }
    EXPECT_EQ(parse_theory("ft"), TheoryKind::Flow);
    EXPECT_THROW(parse_theory("dieks"), ConfigError);
    EXPECT_EQ(parse_granularity("slice"), Granularity::Slice);
    EXPECT_THROW(parse_granularity("merged"), ConfigError);
}

TEST(ProductKernel, PlusStateUnderHadamardGoesToZero) {
    const auto k = product_kernel(real_state(1, {1, 1}), hadamard_on(0, 1));
    for (int x = 0; x < 2; ++x) {
        EXPECT_NEAR(k.at(x, 0), 1.0, 1e-15);
        EXPECT_NEAR(k.at(x, 1), 0.0, 1e-15);
    }
}

TEST(ProductKernel, ZeroStateUnderHadamardIsUniform) {
    const auto k = product_kernel(PureState::basis(1), hadamard_on(0, 1));
    for (int x = 0; x < 2; ++x) {
        EXPECT_NEAR(k.at(x, 0), 0.5, 1e-15);
        EXPECT_NEAR(k.at(x, 1), 0.5, 1e-15);
    }
}

TEST(ProductKernel, IdentityGivesBornRows) {
    const auto s = real_state(2, {1, 2, 3, 4});
    const auto k = product_kernel(s, DenseUnitary::Identity(4, 4));
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) {
            EXPECT_NEAR(k.at(x, y), s.probability(y), 1e-15);
        }
    }
}

TEST(FlowKernel, IdentityGivesIdentity) {
    CounterRng rng(5);
    const auto s = random_state(3, rng);
    const auto k = flow_kernel_dense(s, DenseUnitary::Identity(8, 8));
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            EXPECT_NEAR(k.at(x, y), x == y ? 1.0 : 0.0, 1e-12);
        }
    }
}

TEST(FlowKernel, PointMassSplitsEvenly) {
    const auto k = flow_kernel_dense(PureState::basis(1), hadamard_on(0, 1));
    EXPECT_NEAR(k.at(0, 0), 0.5, 1e-12);
    EXPECT_NEAR(k.at(0, 1), 0.5, 1e-12);
}

TEST(FlowKernel, UnevenHadamardBlockMatchesLexicographicCoupling) {
    const auto s = real_state(1, {std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)});
    const auto u = hadamard_on(0, 1);
    const auto k = flow_kernel_dense(s, u);
    const auto after = apply_dense(s, u);
    const auto f = lex_max_coupling(1.0 / 3.0, 2.0 / 3.0, after.probability(0));
    EXPECT_NEAR(k.at(0, 0), f[0][0] * 3.0, 1e-12);
    EXPECT_NEAR(k.at(1, 0), f[1][0] * 1.5, 1e-12);
    // Frozen: K[0] = (1, 0), K[1] = (1/4 + sqrt(2)/2, 3/4 - sqrt(2)/2).
    EXPECT_NEAR(k.at(0, 0), 1.0, 1e-12);
    EXPECT_NEAR(k.at(0, 1), 0.0, 1e-12);
    EXPECT_NEAR(k.at(1, 0), 0.9571067811865476, 1e-12);
    EXPECT_NEAR(k.at(1, 1), 0.0428932188134524, 1e-12);
}

TEST(FlowKernel, PermutationIsDeterministicOnEveryRow) {
    const std::vector<BasisIndex> image{2, 0, 3, 1};
    const auto u = slice_unitary({make_permutation(image)}, 2);
    const auto k = flow_kernel_dense(PureState::basis(2), u);
    for (BasisIndex x = 0; x < 4; ++x) {
        for (BasisIndex y = 0; y < 4; ++y) {
            EXPECT_DOUBLE_EQ(k.at(x, y), y == image[x] ? 1.0 : 0.0);
        }
    }
    EXPECT_TRUE(check_indifference(k, u).empty());
    const auto blocks = block_structure(u);
    EXPECT_EQ(blocks.num_components, 4u);
}

TEST(FlowKernel, BlockRowClosedFormMatchesMaxFlow) {
    CounterRng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = random_state(1, rng);
        const auto u = hadamard_on(0, 1);
        const auto dense = flow_kernel_dense(s, u);
        const auto after = apply_dense(s, u);
        for (int from = 0; from < 2; ++from) {
            const auto r = flow_block_row(s.probability(0), s.probability(1), after.probability(0),
                                          after.probability(1), from == 1);
            EXPECT_NEAR(r[0], dense.at(from, 0), 1e-12);
            EXPECT_NEAR(r[1], dense.at(from, 1), 1e-12);
        }
    }
}

TEST(SinkhornKernel, SimpleCases) {
    const auto id = sinkhorn_kernel(real_state(2, {1, 2, 3, 4}), DenseUnitary::Identity(4, 4));
    for (int x = 0; x < 4; ++x) {
        EXPECT_NEAR(id.at(x, x), 1.0, 1e-12);
    }
    const auto k = sinkhorn_kernel(PureState::basis(1), hadamard_on(0, 1));
    EXPECT_NEAR(k.at(0, 0), 0.5, 1e-9);
    EXPECT_NEAR(k.at(0, 1), 0.5, 1e-9);
}

TEST(SinkhornKernel, UnevenHadamardBlockIsIndependentCoupling) {
    // The seed sqrt(a_x b_y) / sqrt(2) has rank one, so the scaled joint is a_x b_y.
    const auto s = real_state(1, {std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)});
    const auto u = hadamard_on(0, 1);
    const auto k = sinkhorn_kernel(s, u);
    const double b0 = 0.5 + kRt2 / 3.0;
    for (int x = 0; x < 2; ++x) {
        EXPECT_NEAR(k.at(x, 0), b0, 1e-9);
        EXPECT_NEAR(k.at(x, 1), 1.0 - b0, 1e-9);
    }
    const auto after = apply_dense(s, u);
    EXPECT_LE(check_marginalization(k, s, after), 1e-9);
    const auto r = sinkhorn_block_row(1.0 / 3.0, 2.0 / 3.0, b0, 1.0 - b0, true);
    EXPECT_NEAR(r[0], b0, 1e-9);
}

TEST(SinkhornKernel, JointKeepsSeedCrossRatios) {
    CounterRng rng(21);
    const auto s = random_state(2, rng);
    const auto u = haar_unitary(4, rng);
    const auto k = sinkhorn_kernel(s, u);
    const auto after = apply_dense(s, u);
    auto joint = [&](int x, int y) { return k.at(x, y) * s.probability(x); };
    auto seed = [&](int x, int y) { return std::sqrt(s.probability(x) * after.probability(y)) * std::abs(u(y, x)); };
    const double jr = joint(0, 0) * joint(1, 1) / (joint(0, 1) * joint(1, 0));
    const double sr = seed(0, 0) * seed(1, 1) / (seed(0, 1) * seed(1, 0));
    EXPECT_NEAR(jr / sr, 1.0, 1e-6);
}

TEST(Marginalization, CorruptedKernelIsDetected) {
    CounterRng rng(2);
    const auto s = random_state(2, rng);
    const auto u = haar_unitary(4, rng);
    auto k = flow_kernel_dense(s, u);
    const auto after = apply_dense(s, u);
    EXPECT_LE(check_marginalization(k, s, after), 1e-7);
    const auto born = born_distribution(s);
    const auto heavy = static_cast<std::size_t>(std::max_element(born.begin(), born.end()) - born.begin());
    k.entries[heavy * 4 + 1] += 0.1;
    EXPECT_GE(check_marginalization(k, s, after), 0.01);
}

// 200 seeded instances per theory with l <= 4 on generalized block-diagonal
// unitaries: stochastic rows, Born marginals, no cross-block transitions.
TEST(AxiomProperties, RandomBlockDiagonalInstances) {
    for (auto theory : {TheoryKind::Product, TheoryKind::Flow, TheoryKind::Sinkhorn}) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            CounterRng rng(substream(1000, seed));
            const unsigned l = 1 + static_cast<unsigned>(rng.below(4));
            const std::size_t dim = std::size_t{1} << l;
            const auto s = random_state(l, rng);
            const auto u = random_block_unitary(dim, 1 + rng.below(dim), rng);
            const auto k = dense_kernel(theory, s, u);
            const auto after = apply_dense(s, u);
            ASSERT_LE(max_row_sum_error(k, s), 1e-9) << theory_name(theory) << " seed " << seed;
            ASSERT_LE(check_marginalization(k, s, after), 1e-7) << theory_name(theory) << " seed " << seed;
            ASSERT_TRUE(std::all_of(k.entries.begin(), k.entries.end(), [](double e) { return e >= 0.0; }));
            if (theory != TheoryKind::Product) {
                ASSERT_TRUE(check_indifference(k, u).empty()) << theory_name(theory) << " seed " << seed;
            }
        }
    }
}

TEST(AxiomProperties, DenseHaarInstances) {
    for (auto theory : {TheoryKind::Flow, TheoryKind::Sinkhorn}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            CounterRng rng(substream(2000, seed));
            const auto s = random_state(3, rng);
            const auto u = haar_unitary(8, rng);
            const auto k = dense_kernel(theory, s, u);
            ASSERT_LE(check_marginalization(k, s, apply_dense(s, u)), 1e-7);
            ASSERT_LE(max_row_sum_error(k, s), 1e-9);
        }
    }
}

TEST(Indifference, ComponentsOfHadamardOnHighQubit) {
    const auto blocks = block_structure(hadamard_on(1, 2));
    EXPECT_EQ(blocks.num_components, 2u);
    EXPECT_EQ(blocks.input_component[0], blocks.input_component[2]);
    EXPECT_EQ(blocks.input_component[1], blocks.input_component[3]);
    EXPECT_NE(blocks.input_component[0], blocks.input_component[1]);
    EXPECT_EQ(blocks.input_component[0], blocks.output_component[2]);
}

TEST(Indifference, ProductTheoryViolatesOnWitness) {
    // Low qubit in superposition, U acts on the high qubit: the Born
    // distribution afterwards charges both blocks {0,2} and {1,3}.
    const auto s = real_state(2, {1, 1, 0, 0});
    const auto u = hadamard_on(1, 2);
    EXPECT_FALSE(check_indifference(product_kernel(s, u), u).empty());
    EXPECT_TRUE(check_indifference(flow_kernel_dense(s, u), u).empty());
    EXPECT_TRUE(check_indifference(sinkhorn_kernel(s, u), u).empty());
}

TEST(KernelRow, OracleGateIsDeterministic) {
    const auto f = std::make_shared<const OracleFunction>("f", 2, 1, std::vector<BasisIndex>{1, 0, 0, 1}, true);
    const Slice slice{make_oracle_xor({0, 1}, {2}, f)};
    CounterRng rng(4);
    const auto s = random_state(3, rng);
    const auto after = apply_gate(s, slice[0]);
    for (BasisIndex from = 0; from < 8; ++from) {
        const auto row = kernel_row(TheoryKind::Flow, s, after, slice, from);
        const BasisIndex to = classical_image(slice[0], from);
        for (BasisIndex y = 0; y < 8; ++y) {
            EXPECT_DOUBLE_EQ(row[y], y == to ? 1.0 : 0.0);
        }
    }
}

TEST(KernelRow, PointMassBlockSplitsEvenly) {
    const auto s = PureState::basis(3, 0b101);
    const Slice slice{make_hadamard(1)};
    const auto after = apply_gate(s, slice[0]);
    for (auto theory : {TheoryKind::Flow, TheoryKind::Sinkhorn}) {
        const auto row = kernel_row(theory, s, after, slice, 0b101);
        EXPECT_NEAR(row[0b101], 0.5, 1e-12);
        EXPECT_NEAR(row[0b111], 0.5, 1e-12);
    }
}

// Per gate, the block-local row must equal the dense kernel row of that gate.
TEST(KernelRow, BlockLocalAgreesWithDensePerGate) {
    for (auto theory : {TheoryKind::Flow, TheoryKind::Sinkhorn}) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            CounterRng rng(substream(3000, seed));
            const unsigned l = 1 + static_cast<unsigned>(rng.below(6));
            const auto s = random_state(l, rng);
            const Slice slice{make_hadamard(static_cast<unsigned>(rng.below(l)))};
            const auto after = apply_gate(s, slice[0]);
            const auto dense = dense_kernel(theory, s, slice_unitary(slice, l));
            for (BasisIndex from = 0; from < s.dimension(); ++from) {
                const auto row = kernel_row(theory, s, after, slice, from);
                for (BasisIndex y = 0; y < s.dimension(); ++y) {
                    ASSERT_NEAR(row[y], dense.at(from, y), 1e-7);
                }
            }
        }
    }
}

TEST(KernelRow, GateChainEqualsProductOfPerGateKernels) {
    CounterRng rng(8);
    const unsigned l = 3;
    const auto s = random_state(l, rng);
    const Slice slice{make_hadamard(0), make_hadamard(2), make_permutation({3, 5, 0, 1, 7, 2, 6, 4})};
    std::vector<PureState> states{s};
    for (const auto& g : slice) {
        states.push_back(apply_gate(states.back(), g));
    }
    DenseUnitary chain = DenseUnitary::Identity(8, 8);
    for (std::size_t g = 0; g < slice.size(); ++g) {
        const auto k = flow_kernel_dense(states[g], slice_unitary({slice[g]}, l));
        DenseUnitary m(8, 8);
        for (int x = 0; x < 8; ++x) {
            for (int y = 0; y < 8; ++y) {
                m(x, y) = k.at(x, y);
            }
        }
        chain = chain * m;
    }
    for (BasisIndex from = 0; from < 8; ++from) {
        const auto row = kernel_row(TheoryKind::Flow, s, states.back(), slice, from);
        for (BasisIndex y = 0; y < 8; ++y) {
            EXPECT_NEAR(row[y], chain(from, y).real(), 1e-12);
        }
    }
}

TEST(KernelRow, SliceGranularityUsesDenseKernel) {
    CounterRng rng(9);
    const auto s = random_state(2, rng);
    const Slice slice{make_hadamard(0), make_hadamard(1)};
    const auto after = apply_gate(apply_gate(s, slice[0]), slice[1]);
    const auto dense = flow_kernel_dense(s, slice_unitary(slice, 2));
    const auto row = kernel_row(TheoryKind::Flow, s, after, slice, 2, Granularity::Slice);
    for (BasisIndex y = 0; y < 4; ++y) {
        EXPECT_NEAR(row[y], dense.at(2, y), 1e-15);
    }
    EXPECT_THROW(kernel_row(TheoryKind::Flow, s, after, slice, 2, Granularity::Slice, 1), DimensionCapExceeded);
}

TEST(Robustness, ZeroEpsilonGivesZeroDeviation) {
    CounterRng rng(10);
    const auto s = random_state(2, rng);
    const auto u = haar_unitary(4, rng);
    for (auto theory : {TheoryKind::Product, TheoryKind::Flow, TheoryKind::Sinkhorn}) {
        EXPECT_LE(probe_robustness(theory, s, u, 0.0, 5, 1).max_deviation, 1e-12);
    }
}

// Overlap 1 - eps lets amplitudes move by up to sqrt(2 eps), so joint masses
// move by O(sqrt(eps)): |a - a~| <= 2 theta and |b - b~| <= 2 (theta + delta).
TEST(Robustness, ProductDeviationWithinAmplitudeBound) {
    CounterRng rng(12);
    const auto s = random_state(2, rng);
    const auto u = haar_unitary(4, rng);
    for (double eps : {1e-4, 1e-6, 1e-8}) {
        const auto probe = probe_robustness(TheoryKind::Product, s, u, eps, 50, 3);
        EXPECT_LE(probe.max_deviation, 4.0 * std::sqrt(2.0 * eps) + 2.0 * eps);
        EXPECT_GT(probe.max_deviation, 0.0);
    }
}

TEST(Robustness, FlowDeviationShrinksWithEpsilon) {
    CounterRng rng(12);
    const auto s = random_state(2, rng);
    const auto u = haar_unitary(4, rng);
    const double coarse = probe_robustness(TheoryKind::Flow, s, u, 1e-6, 50, 3).max_deviation;
    const double fine = probe_robustness(TheoryKind::Flow, s, u, 1e-10, 50, 3).max_deviation;
    // Regression baselines for this generic instance.
    EXPECT_LE(coarse, 1e-2);
    EXPECT_LE(fine, 1e-4);
    EXPECT_LT(fine, coarse);
}

TEST(Kernels, DeterministicAndExportable) {
    CounterRng rng(13);
    const auto s = random_state(2, rng);
    const auto u = random_block_unitary(4, 2, rng);
    const auto a = flow_kernel_dense(s, u);
    const auto b = flow_kernel_dense(s, u);
    EXPECT_EQ(a.entries, b.entries);
    const auto csv = kernel_to_csv(a);
    EXPECT_EQ(csv.rfind("# theory=flow dimension=4\nfrom,to_0,to_1,to_2,to_3\n0,", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
}

}  // namespace
}  // namespace hh

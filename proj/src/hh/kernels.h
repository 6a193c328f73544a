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

#ifndef HH_KERNELS_H
#define HH_KERNELS_H

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hh/program.h"
#include "hh/simulator.h"
#include "hh/state.h"

namespace hh {

enum class TheoryKind {
    Product,   // memoryless: every row is the post-slice Born distribution
    Flow,      // max-flow coupling on the nonzero pattern of U
    Sinkhorn,  // matrix scaling of |alpha_x| |U_yx| |beta_y|
};

std::string_view theory_name(TheoryKind theory);

/// Accepts "product", "flow", "sinkhorn" (also "pt", "ft", "st").
TheoryKind parse_theory(std::string_view name);

/// Unit the theory is applied to. Gate: one kernel per gate, chained across
/// the slice (block-local, O(1) per Hadamard). Slice: one dense kernel per
/// slice unitary (capped at kDefaultDenseCap qubits).
enum class Granularity { Gate, Slice };

std::string_view granularity_name(Granularity granularity);
Granularity parse_granularity(std::string_view name);

/// Entries with |U_yx| at or below this are structural zeros.
inline constexpr double kSparsityCutoff = 1e-12;
/// Required max-flow value deficit bound and flow marginal tolerance.
inline constexpr double kFlowTolerance = 1e-7;
/// Sinkhorn marginal tolerance.
inline constexpr double kSinkhornTolerance = 1e-9;
/// Kernel entries above this count as transitions in indifference checks.
inline constexpr double kTransitionThreshold = 1e-9;

/// Row-stochastic matrix: at(x, y) is the probability of moving from basis
/// state x before the slice to y after it.
struct TransitionKernel {
    TheoryKind theory = TheoryKind::Product;
    std::size_t dimension = 0;
    std::vector<double> entries;  // row-major

    double at(std::size_t from, std::size_t to) const {
        return entries[from * dimension + to];
    }
    std::span<const double> row(std::size_t from) const {
        return {entries.data() + from * dimension, dimension};
    }
};

TransitionKernel product_kernel(const PureState& before, const DenseUnitary& u);
TransitionKernel flow_kernel_dense(const PureState& before, const DenseUnitary& u);
TransitionKernel sinkhorn_kernel(const PureState& before, const DenseUnitary& u);
TransitionKernel dense_kernel(TheoryKind theory, const PureState& before, const DenseUnitary& u);

/// U|before> as a state, for a dense unitary.
PureState apply_dense(const PureState& before, const DenseUnitary& u);

/// max_y | sum_x K[x][y] |alpha_x|^2 - |beta_y|^2 |.
double check_marginalization(const TransitionKernel& kernel, const PureState& before, const PureState& after);

/// max over rows x with |alpha_x|^2 > 0 of |sum_y K[x][y] - 1|.
double max_row_sum_error(const TransitionKernel& kernel, const PureState& before);

/// Connected components of the bipartite graph with an edge x -> y whenever
/// |U_yx| > cutoff. Inputs and outputs share component ids.
struct BlockStructure {
    std::vector<std::size_t> input_component;
    std::vector<std::size_t> output_component;
    std::size_t num_components = 0;
};

BlockStructure block_structure(const DenseUnitary& u, double cutoff = kSparsityCutoff);

struct IndifferenceViolation {
    std::size_t from;
    std::size_t to;
    double probability;
};

/// Every (x, y) with K[x][y] > kTransitionThreshold whose endpoints lie in
/// different components of U. Empty means the kernel respects U's blocks.
std::vector<IndifferenceViolation> check_indifference(const TransitionKernel& kernel, const DenseUnitary& u);

/// Row of the flow coupling on one 2x2 Hadamard block, from pre-masses
/// (a_lo, a_hi) and post-masses (b_lo, b_hi). The result is (P[to lo],
/// P[to hi]) for the source selected by `from_hi`. Closed form of the
/// lexicographic shortest-path max flow on a complete 2x2 pattern.
std::array<double, 2> flow_block_row(double a_lo, double a_hi, double b_lo, double b_hi, bool from_hi);

/// Same for the Sinkhorn theory (2x2 scaling of sqrt(a_x b_y)).
std::array<double, 2> sinkhorn_block_row(double a_lo, double a_hi, double b_lo, double b_hi, bool from_hi);

/// Distribution over v_t given v_{t-1} = from, for one slice.
///
/// With Granularity::Gate the theory is applied gate by gate and the per-gate
/// rows are chained (Hadamards give 2x2 block-local rows, the other gates are
/// deterministic). With Granularity::Slice the dense kernel of the slice
/// unitary is used; this throws DimensionCapExceeded above `cap` qubits.
std::vector<double> kernel_row(TheoryKind theory, const PureState& before, const PureState& after, const Slice& slice,
                               BasisIndex from, Granularity granularity = Granularity::Gate,
                               unsigned cap = kDefaultDenseCap);

struct RobustnessProbe {
    double epsilon = 0.0;
    std::size_t trials = 0;
    /// max over trials and (x, y) of |K[x][y] |alpha_x|^2 - K~[x][y] |alpha~_x|^2|
    double max_deviation = 0.0;
};

/// Samples `trials` perturbed pairs (state with overlap >= 1 - epsilon, unitary
/// U V with V unitary and every entry of U V - U at most epsilon in modulus)
/// and reports the largest change of the joint mass.
RobustnessProbe probe_robustness(TheoryKind theory, const PureState& state, const DenseUnitary& u, double epsilon,
                                 std::size_t trials, std::uint64_t seed);

/// Header line "# theory=<name> dimension=<N>", a column header, then one
/// row per source state.
std::string kernel_to_csv(const TransitionKernel& kernel);

}  // namespace hh

#endif

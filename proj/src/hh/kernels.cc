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

#include "hh/kernels.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hh/errors.h"
#include "hh/matrix_scaling.h"
#include "hh/max_flow.h"
#include "hh/random_ops.h"

namespace hh {

namespace {

std::size_t check_shape(const PureState& before, const DenseUnitary& u) {
    const auto n = before.dimension();
    if (static_cast<std::size_t>(u.rows()) != n || static_cast<std::size_t>(u.cols()) != n) {
        throw InvalidArgument("unitary dimension does not match state");
    }
    return n;
}

// Zero-mass rows never fire. They go to the smallest output connected to x so
// the matrix stays stochastic and still respects U's blocks.
void fill_unobserved_row(TransitionKernel& k, const DenseUnitary& u, std::size_t x) {
    const std::size_t n = k.dimension;
    for (std::size_t y = 0; y < n; ++y) {
        if (std::abs(u(y, x)) > kSparsityCutoff) {
            k.entries[x * n + y] = 1.0;
            return;
        }
    }
    k.entries[x * n + x] = 1.0;
}

void normalize_rows(TransitionKernel& k, const std::vector<double>& joint, const DenseUnitary& u) {
    const std::size_t n = k.dimension;
    for (std::size_t x = 0; x < n; ++x) {
        double sum = 0.0;
        for (std::size_t y = 0; y < n; ++y) {
            sum += joint[x * n + y];
        }
        if (sum > 0.0) {
            for (std::size_t y = 0; y < n; ++y) {
                k.entries[x * n + y] = joint[x * n + y] / sum;
            }
        } else {
            fill_unobserved_row(k, u, x);
        }
    }
}

std::array<double, 2> pick_row(const double joint[2][2], bool from_hi) {
    const double* r = joint[from_hi ? 1 : 0];
    const double sum = r[0] + r[1];
    if (!(sum > 0.0)) {
        return {1.0, 0.0};
    }
    return {r[0] / sum, r[1] / sum};
}

}  // namespace

std::string_view theory_name(TheoryKind theory) {
    switch (theory) {
        case TheoryKind::Product:
            return "product";
        case TheoryKind::Flow:
            return "flow";
        case TheoryKind::Sinkhorn:
            return "sinkhorn";
    }
    return "unknown";
}

TheoryKind parse_theory(std::string_view name) {
    if (name == "product" || name == "pt") {
        return TheoryKind::Product;
    }
    if (name == "flow" || name == "ft") {
        return TheoryKind::Flow;
    }
    if (name == "sinkhorn" || name == "st") {
        return TheoryKind::Sinkhorn;
    }
    throw ConfigError("unknown theory '" + std::string(name) + "' (expected product, flow or sinkhorn)");
}

std::string_view granularity_name(Granularity granularity) {
    return granularity == Granularity::Gate ? "gate" : "slice";
}

Granularity parse_granularity(std::string_view name) {
    if (name == "gate") {
        return Granularity::Gate;
    }
    if (name == "slice") {
        return Granularity::Slice;
    }
    throw ConfigError("unknown granularity '" + std::string(name) + "' (expected gate or slice)");
}

PureState apply_dense(const PureState& before, const DenseUnitary& u) {
    const std::size_t n = check_shape(before, u);
    Eigen::VectorXcd a(n);
    for (std::size_t x = 0; x < n; ++x) {
        a(x) = before[x];
    }
    const Eigen::VectorXcd b = u * a;
    std::vector<Amplitude> out(b.data(), b.data() + n);
    return PureState::normalized(before.num_qubits(), std::move(out));
}

TransitionKernel product_kernel(const PureState& before, const DenseUnitary& u) {
    const std::size_t n = check_shape(before, u);
    const auto born = born_distribution(apply_dense(before, u));
    TransitionKernel k{TheoryKind::Product, n, std::vector<double>(n * n)};
    for (std::size_t x = 0; x < n; ++x) {
        std::copy(born.begin(), born.end(), k.entries.begin() + static_cast<std::ptrdiff_t>(x * n));
    }
    return k;
}

TransitionKernel flow_kernel_dense(const PureState& before, const DenseUnitary& u) {
    const std::size_t n = check_shape(before, u);
    const auto a = born_distribution(before);
    const auto b = born_distribution(apply_dense(before, u));

    // Nodes: 0 source, 1..n inputs, n+1..2n outputs, 2n+1 sink.
    const std::size_t source = 0;
    const std::size_t sink = 2 * n + 1;
    MaxFlow graph(2 * n + 2);
    for (std::size_t x = 0; x < n; ++x) {
        graph.add_edge(source, 1 + x, a[x]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> middle;  // (edge id, x * n + y)
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (std::abs(u(y, x)) > kSparsityCutoff) {
                middle.emplace_back(graph.add_edge(1 + x, 1 + n + y, MaxFlow::kInfinite), x * n + y);
            }
        }
    }
    for (std::size_t y = 0; y < n; ++y) {
        graph.add_edge(1 + n + y, sink, b[y]);
    }
    const double value = graph.solve(source, sink);
    if (value < 1.0 - kFlowTolerance) {
        throw NumericError("max flow value " + std::to_string(value) + " below 1");
    }
    std::vector<double> joint(n * n, 0.0);
    for (const auto& [id, cell] : middle) {
        joint[cell] = std::max(0.0, graph.flow(id));
    }
    TransitionKernel k{TheoryKind::Flow, n, std::vector<double>(n * n, 0.0)};
    normalize_rows(k, joint, u);
    return k;
}

TransitionKernel sinkhorn_kernel(const PureState& before, const DenseUnitary& u) {
    const std::size_t n = check_shape(before, u);
    const auto a = born_distribution(before);
    const auto b = born_distribution(apply_dense(before, u));
    std::vector<double> seed(n * n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const double mag = std::abs(u(y, x));
            if (mag > kSparsityCutoff) {
                seed[x * n + y] = std::sqrt(a[x]) * mag * std::sqrt(b[y]);
            }
        }
    }
    const auto scaled = scale_to_marginals(seed, n, n, a, b, kSinkhornTolerance);
    TransitionKernel k{TheoryKind::Sinkhorn, n, std::vector<double>(n * n, 0.0)};
    normalize_rows(k, scaled.joint, u);
    return k;
}

TransitionKernel dense_kernel(TheoryKind theory, const PureState& before, const DenseUnitary& u) {
    switch (theory) {
        case TheoryKind::Product:
            return product_kernel(before, u);
        case TheoryKind::Flow:
            return flow_kernel_dense(before, u);
        case TheoryKind::Sinkhorn:
            return sinkhorn_kernel(before, u);
    }
    throw InvalidArgument("unknown theory");
}

double check_marginalization(const TransitionKernel& kernel, const PureState& before, const PureState& after) {
    const std::size_t n = kernel.dimension;
    if (before.dimension() != n || after.dimension() != n) {
        throw InvalidArgument("kernel dimension does not match states");
    }
    std::vector<double> pushed(n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        const double px = before.probability(x);
        if (px == 0.0) {
            continue;
        }
        for (std::size_t y = 0; y < n; ++y) {
            pushed[y] += px * kernel.at(x, y);
        }
    }
    double worst = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
        worst = std::max(worst, std::abs(pushed[y] - after.probability(y)));
    }
    return worst;
}

double max_row_sum_error(const TransitionKernel& kernel, const PureState& before) {
    double worst = 0.0;
    for (std::size_t x = 0; x < kernel.dimension; ++x) {
        if (before.probability(x) == 0.0) {
            continue;
        }
        const auto r = kernel.row(x);
        worst = std::max(worst, std::abs(std::accumulate(r.begin(), r.end(), 0.0) - 1.0));
    }
    return worst;
}

BlockStructure block_structure(const DenseUnitary& u, double cutoff) {
    const auto n = static_cast<std::size_t>(u.rows());
    std::vector<std::size_t> parent(2 * n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (std::abs(u(y, x)) > cutoff) {
                const auto rx = find(x);
                const auto ry = find(n + y);
                if (rx != ry) {
                    parent[std::max(rx, ry)] = std::min(rx, ry);
                }
            }
        }
    }
    BlockStructure out;
    out.input_component.resize(n);
    out.output_component.resize(n);
    std::vector<std::size_t> label(2 * n, SIZE_MAX);
    for (std::size_t v = 0; v < 2 * n; ++v) {
        const auto root = find(v);
        if (label[root] == SIZE_MAX) {
            label[root] = out.num_components++;
        }
        (v < n ? out.input_component[v] : out.output_component[v - n]) = label[root];
    }
    return out;
}

std::vector<IndifferenceViolation> check_indifference(const TransitionKernel& kernel, const DenseUnitary& u) {
    const auto blocks = block_structure(u);
    std::vector<IndifferenceViolation> out;
    for (std::size_t x = 0; x < kernel.dimension; ++x) {
        for (std::size_t y = 0; y < kernel.dimension; ++y) {
            const double p = kernel.at(x, y);
            if (p > kTransitionThreshold && blocks.input_component[x] != blocks.output_component[y]) {
                out.push_back({x, y, p});
            }
        }
    }
    return out;
}

std::array<double, 2> flow_block_row(double a_lo, double a_hi, double b_lo, double b_hi, bool from_hi) {
    double f[2][2];
    f[0][0] = std::min(a_lo, b_lo);
    f[0][1] = std::max(0.0, std::min(a_lo - f[0][0], b_hi));
    f[1][0] = std::max(0.0, std::min(a_hi, b_lo - f[0][0]));
    f[1][1] = std::max(0.0, std::min(a_hi - f[1][0], b_hi - f[0][1]));
    return pick_row(f, from_hi);
}

std::array<double, 2> sinkhorn_block_row(double a_lo, double a_hi, double b_lo, double b_hi, bool from_hi) {
    const double a[2] = {a_lo, a_hi};
    const double b[2] = {b_lo, b_hi};
    double m[2][2];
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            m[x][y] = std::sqrt(a[x] * b[y]);
        }
    }
    for (int it = 0; it < 1000; ++it) {
        double worst = 0.0;
        for (int x = 0; x < 2; ++x) {
            worst = std::max(worst, std::abs(m[x][0] + m[x][1] - a[x]));
        }
        for (int y = 0; y < 2; ++y) {
            worst = std::max(worst, std::abs(m[0][y] + m[1][y] - b[y]));
        }
        if (worst <= kSinkhornTolerance) {
            break;
        }
        for (int x = 0; x < 2; ++x) {
            const double s = m[x][0] + m[x][1];
            if (s > 0.0) {
                m[x][0] *= a[x] / s;
                m[x][1] *= a[x] / s;
            }
        }
        for (int y = 0; y < 2; ++y) {
            const double s = m[0][y] + m[1][y];
            if (s > 0.0) {
                m[0][y] *= b[y] / s;
                m[1][y] *= b[y] / s;
            }
        }
    }
    return pick_row(m, from_hi);
}

std::vector<double> kernel_row(TheoryKind theory, const PureState& before, const PureState& after, const Slice& slice,
                               BasisIndex from, Granularity granularity, unsigned cap) {
    const std::size_t n = before.dimension();
    if (after.dimension() != n || from >= n) {
        throw InvalidArgument("kernel_row: dimension mismatch or source out of range");
    }
    if (theory == TheoryKind::Product) {
        return born_distribution(after);
    }
    if (granularity == Granularity::Slice) {
        const auto u = slice_unitary(slice, before.num_qubits(), cap);
        const auto k = dense_kernel(theory, before, u);
        const auto r = k.row(from);
        return {r.begin(), r.end()};
    }
    std::vector<double> dist(n, 0.0);
    std::vector<double> next(n, 0.0);
    dist[from] = 1.0;
    PureState state = before;
    std::vector<Amplitude> scratch;
    for (const auto& gate : slice) {
        validate_gate(gate, before.num_qubits());
        std::fill(next.begin(), next.end(), 0.0);
        if (const auto* h = std::get_if<Hadamard>(&gate)) {
            const BasisIndex bit = bit_of(h->target);
            PureState post = state;
            apply_gate_inplace(post, gate, scratch);
            for (BasisIndex x = 0; x < n; ++x) {
                if (dist[x] == 0.0) {
                    continue;
                }
                const BasisIndex lo = x & ~bit;
                const BasisIndex hi = x | bit;
                const double a_lo = state.probability(lo);
                const double a_hi = state.probability(hi);
                const double b_lo = post.probability(lo);
                const double b_hi = post.probability(hi);
                const auto r = theory == TheoryKind::Flow ? flow_block_row(a_lo, a_hi, b_lo, b_hi, (x & bit) != 0)
                                                          : sinkhorn_block_row(a_lo, a_hi, b_lo, b_hi, (x & bit) != 0);
                next[lo] += dist[x] * r[0];
                next[hi] += dist[x] * r[1];
            }
            state = std::move(post);
        } else {
            for (BasisIndex x = 0; x < n; ++x) {
                if (dist[x] != 0.0) {
                    next[classical_image(gate, x)] += dist[x];
                }
            }
            apply_gate_inplace(state, gate, scratch);
        }
        dist.swap(next);
    }
    return dist;
}

RobustnessProbe probe_robustness(TheoryKind theory, const PureState& state, const DenseUnitary& u, double epsilon,
                                 std::size_t trials, std::uint64_t seed) {
    const std::size_t n = check_shape(state, u);
    if (!(epsilon >= 0.0) || epsilon > 1.0) {
        throw InvalidArgument("robustness epsilon must lie in [0, 1]");
    }
    RobustnessProbe probe{epsilon, trials, 0.0};
    const auto base = dense_kernel(theory, state, u);
    const auto base_mass = born_distribution(state);
    for (std::size_t t = 0; t < trials; ++t) {
        CounterRng rng(substream(seed, t));
        // Orthogonal direction for the state perturbation.
        auto phi = random_state(state.num_qubits(), rng);
        Amplitude overlap = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
            overlap += std::conj(state[x]) * phi[x];
        }
        std::vector<Amplitude> dir(n);
        for (std::size_t x = 0; x < n; ++x) {
            dir[x] = phi[x] - overlap * state[x];
        }
        const auto perp = PureState::normalized(state.num_qubits(), std::move(dir));
        const double theta = std::acos(1.0 - epsilon) * rng.uniform();
        std::vector<Amplitude> mixed(n);
        for (std::size_t x = 0; x < n; ++x) {
            mixed[x] = std::cos(theta) * state[x] + std::sin(theta) * perp[x];
        }
        const auto perturbed = PureState::normalized(state.num_qubits(), std::move(mixed));

        // U V with V = Cayley(delta G / 2), so that ||V - I|| <= delta <= epsilon.
        const double delta = epsilon * rng.uniform();
        const DenseUnitary g = random_unit_hermitian(n, rng);
        const DenseUnitary v = cayley(g * (delta / 2.0));
        const DenseUnitary u2 = u * v;

        const auto k2 = dense_kernel(theory, perturbed, u2);
        const auto mass2 = born_distribution(perturbed);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                const double d = std::abs(base.at(x, y) * base_mass[x] - k2.at(x, y) * mass2[x]);
                probe.max_deviation = std::max(probe.max_deviation, d);
            }
        }
    }
    return probe;
}

std::string kernel_to_csv(const TransitionKernel& kernel) {
    std::ostringstream out;
    out.precision(17);
    out << "# theory=" << theory_name(kernel.theory) << " dimension=" << kernel.dimension << "\n";
    out << "from";
    for (std::size_t y = 0; y < kernel.dimension; ++y) {
        out << ",to_" << y;
    }
    out << "\n";
    for (std::size_t x = 0; x < kernel.dimension; ++x) {
        out << x;
        for (std::size_t y = 0; y < kernel.dimension; ++y) {
            out << "," << kernel.at(x, y);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace hh

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

#include "hh/history.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "hh/errors.h"
#include "hh/rng.h"

namespace hh {

namespace {

void require_finite(const PureState& state, std::size_t slice) {
    for (const auto& a : state.amplitudes()) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw NumericError("non-finite amplitude after slice " + std::to_string(slice + 1));
        }
    }
}

std::vector<double> cumulative_born(const PureState& state) {
    std::vector<double> cum(state.dimension());
    double running = 0.0;
    for (std::size_t x = 0; x < cum.size(); ++x) {
        running += state.probability(x);
        cum[x] = running;
    }
    return cum;
}

std::vector<double> cumulative_of(std::span<const double> row) {
    std::vector<double> cum(row.size());
    double running = 0.0;
    for (std::size_t x = 0; x < row.size(); ++x) {
        running += row[x];
        cum[x] = running;
    }
    return cum;
}

BasisIndex draw_from_cumulative(std::span<const double> cum, double u) {
    const double target = u * cum.back();
    const auto it = std::upper_bound(cum.begin(), cum.end(), target);
    if (it == cum.end()) {
        // u * total rounded up to total: take the last index carrying mass.
        std::size_t idx = cum.size() - 1;
        while (idx > 0 && cum[idx] == cum[idx - 1]) {
            --idx;
        }
        return idx;
    }
    return static_cast<BasisIndex>(it - cum.begin());
}

double lo_probability(TheoryKind theory, double a_lo, double a_hi, double b_lo, double b_hi, bool from_hi) {
    const auto r = theory == TheoryKind::Flow ? flow_block_row(a_lo, a_hi, b_lo, b_hi, from_hi)
                                              : sinkhorn_block_row(a_lo, a_hi, b_lo, b_hi, from_hi);
    return r[0];
}

bool slice_is_tabulated(TheoryKind theory, Granularity granularity) {
    return theory == TheoryKind::Product || granularity == Granularity::Slice;
}

void finish_history(History& h, const SlicedProgram& program) {
    h.checkpoints = program.checkpoints();
    h.checkpoint_values.reserve(h.checkpoints.size());
    for (const auto& c : h.checkpoints) {
        h.checkpoint_values.push_back(h.values[c.position]);
    }
}

}  // namespace

History sample_history(const HistoryQuery& query) {
    const SlicedProgram& program = query.program;
    History h;
    h.num_qubits = program.num_qubits();
    h.values.reserve(program.num_slices() + 1);
    h.values.push_back(0);
    CounterRng rng(query.seed);
    PureState state = PureState::basis(program.num_qubits());
    std::vector<Amplitude> scratch;
    BasisIndex v = 0;
    const bool tabulated = slice_is_tabulated(query.theory, query.granularity);
    for (std::size_t t = 0; t < program.num_slices(); ++t) {
        const Slice& slice = program.slice(t);
        h.ledger.begin_slice();
        for (const auto& gate : slice) {
            if (is_query(gate)) {
                h.ledger.charge();
            }
        }
        if (tabulated) {
            if (query.theory == TheoryKind::Product) {
                for (const auto& gate : slice) {
                    apply_gate_inplace(state, gate, scratch);
                }
                require_finite(state, t);
                v = draw_from_cumulative(cumulative_born(state), rng.uniform());
            } else {
                const auto u = slice_unitary(slice, program.num_qubits());
                const auto k = dense_kernel(query.theory, state, u);
                for (const auto& gate : slice) {
                    apply_gate_inplace(state, gate, scratch);
                }
                require_finite(state, t);
                v = draw_from_cumulative(cumulative_of(k.row(v)), rng.uniform());
            }
        } else {
            for (const auto& gate : slice) {
                if (const auto* hd = std::get_if<Hadamard>(&gate)) {
                    const BasisIndex bit = bit_of(hd->target);
                    const BasisIndex lo = v & ~bit;
                    const BasisIndex hi = v | bit;
                    const double a_lo = state.probability(lo);
                    const double a_hi = state.probability(hi);
                    apply_gate_inplace(state, gate, scratch);
                    const double p = lo_probability(query.theory, a_lo, a_hi, state.probability(lo),
                                                    state.probability(hi), (v & bit) != 0);
                    v = rng.uniform() < p ? lo : hi;
                } else {
                    v = classical_image(gate, v);
                    apply_gate_inplace(state, gate, scratch);
                }
            }
            require_finite(state, t);
        }
        h.values.push_back(v);
    }
    finish_history(h, program);
    return h;
}

HistorySampler::HistorySampler(SlicedProgram program, TheoryKind theory, Granularity granularity,
                               std::size_t max_doubles)
    : program_(std::move(program)), theory_(theory), granularity_(granularity) {
    const std::size_t dim = std::size_t{1} << program_.num_qubits();
    std::size_t stored = 0;
    auto reserve = [&](std::size_t count) {
        stored += count;
        if (stored > max_doubles) {
            throw DimensionCapExceeded("history sampler table exceeds " + std::to_string(max_doubles) + " entries");
        }
    };
    PureState state = PureState::basis(program_.num_qubits());
    std::vector<Amplitude> scratch;
    born_.push_back(born_distribution(state));
    const bool tabulated = slice_is_tabulated(theory_, granularity_);
    steps_.resize(program_.num_slices());
    for (std::size_t t = 0; t < program_.num_slices(); ++t) {
        const Slice& slice = program_.slice(t);
        ledger_.begin_slice();
        for (const auto& gate : slice) {
            if (is_query(gate)) {
                ledger_.charge();
            }
        }
        auto& steps = steps_[t];
        if (tabulated) {
            Step step;
            step.kind = StepKind::Table;
            if (theory_ == TheoryKind::Product) {
                for (const auto& gate : slice) {
                    apply_gate_inplace(state, gate, scratch);
                }
                reserve(dim);
                step.lo_prob = cumulative_born(state);
                step.shared_row = true;
            } else {
                const auto u = slice_unitary(slice, program_.num_qubits());
                const auto k = dense_kernel(theory_, state, u);
                for (const auto& gate : slice) {
                    apply_gate_inplace(state, gate, scratch);
                }
                reserve(dim * dim);
                step.lo_prob.reserve(dim * dim);
                for (std::size_t x = 0; x < dim; ++x) {
                    const auto cum = cumulative_of(k.row(x));
                    step.lo_prob.insert(step.lo_prob.end(), cum.begin(), cum.end());
                }
            }
            steps.push_back(std::move(step));
        } else {
            for (std::size_t g = 0; g < slice.size(); ++g) {
                const Gate& gate = slice[g];
                if (const auto* hd = std::get_if<Hadamard>(&gate)) {
                    Step step;
            step.kind = StepKind::Hadamard;
                    step.bit = bit_of(hd->target);
                    reserve(dim);
                    const std::vector<double> pre = born_distribution(state);
                    apply_gate_inplace(state, gate, scratch);
                    step.lo_prob.resize(dim);
                    for (BasisIndex lo = 0; lo < dim; ++lo) {
                        if ((lo & step.bit) != 0) {
                            continue;
                        }
                        const BasisIndex hi = lo | step.bit;
                        const double b_lo = state.probability(lo);
                        const double b_hi = state.probability(hi);
                        step.lo_prob[lo] = lo_probability(theory_, pre[lo], pre[hi], b_lo, b_hi, false);
                        step.lo_prob[hi] = lo_probability(theory_, pre[lo], pre[hi], b_lo, b_hi, true);
                    }
                    steps.push_back(std::move(step));
                } else {
                    Step step;
            step.kind = StepKind::Classical;
                    step.gate_index = g;
                    apply_gate_inplace(state, gate, scratch);
                    steps.push_back(std::move(step));
                }
            }
        }
        require_finite(state, t);
        born_.push_back(born_distribution(state));
    }
}

History HistorySampler::sample(std::uint64_t seed) const {
    History h;
    h.num_qubits = program_.num_qubits();
    h.ledger = ledger_;
    h.values.reserve(program_.num_slices() + 1);
    h.values.push_back(0);
    CounterRng rng(seed);
    const std::size_t dim = std::size_t{1} << program_.num_qubits();
    BasisIndex v = 0;
    for (std::size_t t = 0; t < steps_.size(); ++t) {
        for (const auto& step : steps_[t]) {
            switch (step.kind) {
                case StepKind::Hadamard:
                    v = rng.uniform() < step.lo_prob[v] ? (v & ~step.bit) : (v | step.bit);
                    break;
                case StepKind::Classical:
                    v = classical_image(program_.slice(t)[step.gate_index], v);
                    break;
                case StepKind::Table: {
                    std::span<const double> cum(step.lo_prob);
                    if (!step.shared_row) {
                        cum = cum.subspan(v * dim, dim);
                    }
                    v = draw_from_cumulative(cum, rng.uniform());
                    break;
                }
            }
        }
        h.values.push_back(v);
    }
    finish_history(h, program_);
    return h;
}

MarginalReport compare_marginals(const std::vector<std::vector<std::uint64_t>>& counts,
                                 const std::vector<std::vector<double>>& born, std::size_t trials) {
    if (counts.size() != born.size()) {
        throw InvalidArgument("marginal comparison: step count mismatch");
    }
    if (trials == 0) {
        throw InvalidArgument("marginal comparison needs at least one trial");
    }
    MarginalReport report;
    report.trials = trials;
    for (std::size_t t = 0; t < counts.size(); ++t) {
        std::vector<double> empirical(counts[t].size());
        for (std::size_t x = 0; x < empirical.size(); ++x) {
            empirical[x] = static_cast<double>(counts[t][x]) / static_cast<double>(trials);
        }
        const double tv = total_variation(empirical, born[t]);
        report.tv_per_step.push_back(tv);
        report.max_tv = std::max(report.max_tv, tv);
    }
    return report;
}

MarginalReport empirical_marginals(const HistoryQuery& query, std::size_t trials) {
    if (trials < 1000) {
        throw InvalidArgument("empirical_marginals needs at least 1000 trials");
    }
    const HistorySampler sampler(query.program, query.theory, query.granularity);
    const auto& born = sampler.born_marginals();
    std::vector<std::vector<std::uint64_t>> counts(born.size(), std::vector<std::uint64_t>(born[0].size(), 0));
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto h = sampler.sample(substream(query.seed, trial));
        for (std::size_t t = 0; t < h.values.size(); ++t) {
            ++counts[t][h.values[t]];
        }
    }
    return compare_marginals(counts, born, trials);
}

std::string history_to_csv(const History& history) {
    std::vector<bool> marked(history.values.size(), false);
    for (const auto& c : history.checkpoints) {
        marked[c.position] = true;
    }
    std::ostringstream out;
    out << "t,bitstring,is_checkpoint\n";
    for (std::size_t t = 0; t < history.values.size(); ++t) {
        out << t << "," << to_bitstring(history.values[t], history.num_qubits) << "," << (marked[t] ? 1 : 0)
            << "\n";
    }
    return out.str();
}

std::string ledger_to_json(const History& history) {
    return history.ledger.to_json();
}

}  // namespace hh

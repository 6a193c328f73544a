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

#include "hh/sd.h"

#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "hh/errors.h"
#include "hh/juggle.h"
#include "hh/vv_hash.h"

namespace hh {

namespace {

constexpr unsigned kMaxSdWidth = 10;

std::string instance_name(std::string_view kind, bool flag, unsigned n, std::uint64_t seed) {
    return std::string(kind) + (flag ? "-yes" : "-no") + "-n" + std::to_string(n) + "-" + std::to_string(seed);
}

OracleHandle table_handle(std::string name, unsigned arity, unsigned width, std::vector<BasisIndex> table,
                          bool query) {
    return std::make_shared<const OracleFunction>(std::move(name), arity, width, std::move(table), query);
}

std::vector<BasisIndex> random_map(std::size_t domain, std::size_t range, CounterRng& rng) {
    std::vector<BasisIndex> out(domain);
    for (auto& v : out) {
        v = rng.below(range);
    }
    return out;
}

Slice hadamards(std::span<const unsigned> qubits) {
    Slice s;
    for (unsigned q : qubits) {
        s.push_back(make_hadamard(q));
    }
    return s;
}

Verdict run_decision(std::string id, const SlicedProgram& program, const SolverOptions& options, std::uint64_t seed,
                     const QubitMap& reg, bool binary_register, std::string_view yes, std::string_view no) {
    const History h = sample_history({program, options.theory, substream(seed, 1), options.granularity});
    std::set<std::size_t> batches;
    for (const auto& c : program.checkpoints()) {
        batches.insert(c.batch);
    }
    Verdict v;
    v.instance_id = std::move(id);
    v.positive = binary_register ? both_values_in_some_batch(h, reg) : distinct_values_in_some_batch(h, reg);
    v.verdict = std::string(v.positive ? yes : no);
    v.batches = batches.size();
    v.queries = h.ledger.total();
    v.seed = seed;
    return v;
}

std::size_t or_default(std::size_t value, std::size_t fallback) {
    return value == 0 ? fallback : value;
}

}  // namespace

std::string_view shape_name(SdShape shape) {
    return shape == SdShape::OneToOne ? "one-to-one" : "many-to-one";
}

SDInstance make_sd_instance(unsigned n, SdShape shape, bool near, std::uint64_t seed) {
    if (n < 2 || n > kMaxSdWidth) {
        throw InvalidArgument("SD instance width must lie in [2, 10]");
    }
    CounterRng rng(seed);
    const unsigned m = n + 1;
    const std::size_t dom = std::size_t{1} << n;
    const auto sigma = random_permutation(std::size_t{1} << m, rng);
    std::vector<BasisIndex> t0(dom);
    std::vector<BasisIndex> t1(dom);
    if (shape == SdShape::OneToOne) {
        const auto pi0 = random_permutation(dom, rng);
        const auto pi1 = random_permutation(dom, rng);
        for (BasisIndex x = 0; x < dom; ++x) {
            t0[x] = sigma[pi0[x]];
            t1[x] = sigma[(near ? 0 : dom) | pi1[x]];
        }
    } else {
        if (near) {
            const auto r = random_map(dom, dom / 2, rng);
            const auto pi0 = random_permutation(dom, rng);
            const auto pi1 = random_permutation(dom, rng);
            for (BasisIndex x = 0; x < dom; ++x) {
                t0[x] = sigma[r[pi0[x]]];
                t1[x] = sigma[r[pi1[x]]];
            }
        } else {
            const auto r0 = random_map(dom, dom / 2, rng);
            const auto r1 = random_map(dom, dom / 2, rng);
            for (BasisIndex x = 0; x < dom; ++x) {
                t0[x] = sigma[r0[x]];
                t1[x] = sigma[dom | r1[x]];
            }
        }
    }
    SDInstance inst;
    inst.id = instance_name(std::string("sd-") + std::string(shape_name(shape)), near, n, seed);
    inst.n = n;
    inst.output_width = m;
    inst.p0 = table_handle("P0", n, m, std::move(t0), true);
    inst.p1 = table_handle("P1", n, m, std::move(t1), true);
    inst.shape = shape;
    inst.near = near;
    return inst;
}

double variation_distance(const OracleFunction& p0, const OracleFunction& p1) {
    if (p0.arity() != p1.arity() || p0.width() != p1.width()) {
        throw InvalidArgument("samplers must share input and output widths");
    }
    std::map<BasisIndex, std::int64_t> diff;
    const std::size_t dom = std::size_t{1} << p0.arity();
    for (BasisIndex x = 0; x < dom; ++x) {
        ++diff[p0(x)];
        --diff[p1(x)];
    }
    std::int64_t total = 0;
    for (const auto& [y, d] : diff) {
        total += d < 0 ? -d : d;
    }
    return static_cast<double>(total) / (2.0 * static_cast<double>(dom));
}

OracleHandle joint_sampler_oracle(const SDInstance& instance) {
    const std::size_t dom = std::size_t{1} << instance.n;
    std::vector<BasisIndex> table(2 * dom);
    for (BasisIndex x = 0; x < dom; ++x) {
        table[x] = (*instance.p0)(x);
        table[dom | x] = (*instance.p1)(x);
    }
    return table_handle("P", instance.n + 1, instance.output_width, std::move(table), true);
}

SDLayout sd_layout(unsigned n, unsigned m, bool with_hash) {
    SDLayout l;
    l.n = n;
    l.m = m;
    l.hash_width = with_hash ? n + 1 : 0;
    l.num_qubits = n + 1 + m + l.hash_width;
    if (l.num_qubits > kMaxQubits) {
        throw DimensionCapExceeded("SD layout needs " + std::to_string(l.num_qubits) + " qubits");
    }
    l.juggled = qubit_range(0, n + 1);
    l.b = QubitMap({n});
    l.tag = QubitMap(qubit_range(n + 1, m + l.hash_width));
    return l;
}

std::string verdict_to_json(const Verdict& verdict) {
    nlohmann::ordered_json j;
    j["instance_id"] = verdict.instance_id;
    j["verdict"] = verdict.verdict;
    j["batches_used"] = verdict.batches;
    j["queries"] = verdict.queries;
    j["seed"] = verdict.seed;
    return j.dump();
}

bool both_values_in_some_batch(const History& history, const QubitMap& reg) {
    std::map<std::size_t, unsigned> seen;
    for (std::size_t k = 0; k < history.checkpoints.size(); ++k) {
        auto& mask = seen[history.checkpoints[k].batch];
        mask |= 1U << (reg.gather(history.checkpoint_values[k]) & 1U);
        if (mask == 3U) {
            return true;
        }
    }
    return false;
}

bool distinct_values_in_some_batch(const History& history, const QubitMap& reg) {
    std::map<std::size_t, BasisIndex> first;
    for (std::size_t k = 0; k < history.checkpoints.size(); ++k) {
        const BasisIndex v = reg.gather(history.checkpoint_values[k]);
        const auto [it, inserted] = first.emplace(history.checkpoints[k].batch, v);
        if (!inserted && it->second != v) {
            return true;
        }
    }
    return false;
}

SlicedProgram build_sd_one_to_one_program(const SDInstance& instance, const SolverOptions& options,
                                          CounterRng& rng) {
    const SDLayout layout = sd_layout(instance.n, instance.output_width, false);
    const auto p = joint_sampler_oracle(instance);
    const auto outputs = qubit_range(instance.n + 1, instance.output_width);
    const std::size_t batches = or_default(options.batches, 1);
    const std::size_t attempts = or_default(options.attempts, default_juggle_attempts(instance.n + 1));
    ProgramBuilder b(layout.num_qubits);
    for (std::size_t r = 0; r < batches; ++r) {
        b.add_slice(hadamards(layout.juggled));
        b.add_gate(make_oracle_xor(layout.juggled, outputs, p));
        b.checkpoint(r);
        append_juggle(b, layout.juggled, attempts, r, rng);
        if (r + 1 < batches) {
            b.add_gate(make_oracle_xor(layout.juggled, outputs, p));
            b.add_slice(hadamards(layout.juggled));
        }
    }
    return std::move(b).build();
}

Verdict solve_sd_one_to_one(const SDInstance& instance, std::uint64_t seed, const SolverOptions& options) {
    CounterRng rng(substream(seed, 0));
    const auto program = build_sd_one_to_one_program(instance, options, rng);
    const SDLayout layout = sd_layout(instance.n, instance.output_width, false);
    return run_decision(instance.id, program, options, seed, layout.b, true, "near", "far");
}

SlicedProgram build_sd_general_program(const SDInstance& instance, const SolverOptions& options, CounterRng& rng) {
    const unsigned n = instance.n;
    const SDLayout layout = sd_layout(n, instance.output_width, true);
    const auto p = joint_sampler_oracle(instance);
    const auto outputs = qubit_range(n + 1, instance.output_width);
    const std::size_t batches = or_default(options.batches, 16 * static_cast<std::size_t>(n));
    const std::size_t attempts = or_default(options.attempts, n + 1);
    const std::size_t dom = std::size_t{1} << n;
    ProgramBuilder b(layout.num_qubits);
    for (std::size_t r = 0; r < batches; ++r) {
        const VvDraw draw = draw_vv_hash(n, rng);
        std::vector<BasisIndex> table(2 * dom);
        for (BasisIndex x = 0; x < dom; ++x) {
            table[x] = draw.h0(x);
            table[dom | x] = draw.h1(x);
        }
        const auto hash = table_handle("h", n + 1, draw.k, std::move(table), false);
        const auto hash_qubits = qubit_range(n + 1 + instance.output_width, draw.k);
        b.add_slice(hadamards(layout.juggled));
        b.add_gate(make_oracle_xor(layout.juggled, outputs, p));
        b.add_gate(make_oracle_xor(layout.juggled, hash_qubits, hash));
        b.checkpoint(r);
        append_juggle(b, layout.juggled, attempts, r, rng);
        b.add_gate(make_oracle_xor(layout.juggled, hash_qubits, hash));
        if (r + 1 < batches) {
            b.add_gate(make_oracle_xor(layout.juggled, outputs, p));
            b.add_slice(hadamards(layout.juggled));
        }
    }
    return std::move(b).build();
}

Verdict solve_sd_general(const SDInstance& instance, std::uint64_t seed, const SolverOptions& options) {
    CounterRng rng(substream(seed, 0));
    const auto program = build_sd_general_program(instance, options, rng);
    const SDLayout layout = sd_layout(instance.n, instance.output_width, true);
    return run_decision(instance.id, program, options, seed, layout.b, true, "near", "far");
}

CollisionInstance make_collision_instance(unsigned n, bool two_to_one, std::uint64_t seed) {
    if (n < 2 || n > 12) {
        throw InvalidArgument("collision instance width must lie in [2, 12]");
    }
    CounterRng rng(seed);
    const std::size_t dom = std::size_t{1} << n;
    const auto pi = random_permutation(dom, rng);
    std::vector<BasisIndex> table(dom);
    if (two_to_one) {
        const auto tau = random_permutation(dom, rng);
        for (BasisIndex x = 0; x < dom; ++x) {
            table[x] = tau[pi[x] >> 1];
        }
    } else {
        for (BasisIndex x = 0; x < dom; ++x) {
            table[x] = pi[x];
        }
    }
    CollisionInstance inst;
    inst.id = instance_name("collision-two-to-one", two_to_one, n, seed);
    inst.n = n;
    inst.g = table_handle("g", n, n, std::move(table), true);
    inst.two_to_one = two_to_one;
    return inst;
}

SlicedProgram build_collision_program(const CollisionInstance& instance, const SolverOptions& options,
                                      CounterRng& rng) {
    const unsigned n = instance.n;
    const auto xs = qubit_range(0, n);
    const auto tag = qubit_range(n, n);
    const std::size_t batches = or_default(options.batches, 1);
    const std::size_t attempts = or_default(options.attempts, default_juggle_attempts(n));
    ProgramBuilder b(2 * n);
    for (std::size_t r = 0; r < batches; ++r) {
        b.add_slice(hadamards(xs));
        b.add_gate(make_oracle_xor(xs, tag, instance.g));
        b.checkpoint(r);
        append_juggle(b, xs, attempts, r, rng);
        if (r + 1 < batches) {
            b.add_gate(make_oracle_xor(xs, tag, instance.g));
            b.add_slice(hadamards(xs));
        }
    }
    return std::move(b).build();
}

Verdict distinguish_collision(const CollisionInstance& instance, std::uint64_t seed, const SolverOptions& options) {
    CounterRng rng(substream(seed, 0));
    const auto program = build_collision_program(instance, options, rng);
    return run_decision(instance.id, program, options, seed, QubitMap(qubit_range(0, instance.n)), false,
                        "two-to-one", "one-to-one");
}

}  // namespace hh

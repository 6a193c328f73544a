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

#include "hh/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "hh/errors.h"
#include "hh/graph_iso.h"
#include "hh/history.h"
#include "hh/juggle.h"
#include "hh/random_ops.h"
#include "hh/sd.h"
#include "hh/search.h"
#include "hh/simulator.h"

namespace hh {

namespace {

constexpr std::size_t kAxiomMaxBlock = 4;
constexpr unsigned kMaxGeneralSolverQubits = 21;

struct KindInfo {
    ExperimentKind kind;
    std::string_view name;
};

constexpr KindInfo kKinds[] = {
    {ExperimentKind::Axioms, "axioms"}, {ExperimentKind::Marginals, "marginals"},
    {ExperimentKind::Juggle, "juggle"}, {ExperimentKind::Sd, "sd"},
    {ExperimentKind::Collision, "collision"}, {ExperimentKind::Gi, "gi"},
    {ExperimentKind::Search, "search"}, {ExperimentKind::Scaling, "scaling"},
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_uint(std::string_view key, std::string_view value) {
    const std::string v = trim(value);
    std::size_t used = 0;
    std::uint64_t out = 0;
    try {
        out = std::stoull(v, &used, 0);
    } catch (const std::exception&) {
        used = 0;
    }
    if (v.empty() || used != v.size() || v.front() == '-') {
        throw ConfigError("'" + std::string(key) + "' expects a non-negative integer, got '" + v + "'");
    }
    return out;
}

double parse_double(std::string_view key, std::string_view value) {
    const std::string v = trim(value);
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (v.empty() || used != v.size() || !std::isfinite(out)) {
        throw ConfigError("'" + std::string(key) + "' expects a number, got '" + v + "'");
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
    const std::string v = trim(value);
    if (v == "1" || v == "true" || v == "yes" || v == "on") {
        return true;
    }
    if (v == "0" || v == "false" || v == "no" || v == "off") {
        return false;
    }
    throw ConfigError("'" + std::string(key) + "' expects a boolean, got '" + v + "'");
}

std::vector<unsigned> parse_sizes(std::string_view value) {
    std::vector<unsigned> out;
    std::stringstream ss{std::string(value)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto v = parse_uint("sizes", item);
        if (v > 64) {
            throw ConfigError("size " + std::to_string(v) + " is out of range");
        }
        out.push_back(static_cast<unsigned>(v));
    }
    if (out.empty()) {
        throw ConfigError("'sizes' is empty");
    }
    return out;
}

const std::vector<std::string>& override_keys() {
    static const std::vector<std::string> keys{"batches", "attempts",  "C",           "lambda",  "shape",
                                               "programs", "gates",    "tv_tolerance", "accuracy"};
    return keys;
}

std::size_t get_uint(const ExperimentConfig& c, const std::string& key, std::size_t fallback) {
    const auto it = c.overrides.find(key);
    return it == c.overrides.end() ? fallback : static_cast<std::size_t>(parse_uint(key, it->second));
}

double get_double(const ExperimentConfig& c, const std::string& key, double fallback) {
    const auto it = c.overrides.find(key);
    return it == c.overrides.end() ? fallback : parse_double(key, it->second);
}

SdShape get_shape(const ExperimentConfig& c) {
    const auto it = c.overrides.find("shape");
    if (it == c.overrides.end() || it->second == "one-to-one") {
        return SdShape::OneToOne;
    }
    if (it->second == "many-to-one") {
        return SdShape::ManyToOne;
    }
    throw ConfigError("unknown shape '" + it->second + "' (one-to-one, many-to-one)");
}

void require_range(std::string_view what, unsigned v, unsigned lo, unsigned hi) {
    if (v < lo || v > hi) {
        throw ConfigError(std::string(what) + " " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    }
}

/// Runs fn(i) for i in [0, count) on `workers` threads. Results are written
/// by index, so the schedule never changes output order.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::mutex mu;
    std::size_t next = 0;
    std::exception_ptr error;
    auto loop = [&] {
        for (;;) {
            std::size_t i = 0;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= count || error) {
                    return;
                }
                i = next++;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(workers, count);
    for (unsigned w = 0; w < n; ++w) {
        pool.emplace_back(loop);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

class Stopwatch {
   public:
    explicit Stopwatch(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        if (!on_) {
            return 0.0;
        }
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    bool on_;
    std::chrono::steady_clock::time_point start_;
};

std::uint64_t trial_key(const ExperimentConfig& c, unsigned size, std::size_t trial) {
    return substream(substream(c.seed, size), trial);
}

double rate(std::size_t hits, std::size_t total) {
    return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
}

struct Runner {
    const ExperimentConfig& c;
    std::string name;
    ResultSet out;

    explicit Runner(const ExperimentConfig& config)
        : c(config), name(std::string(experiment_name(config.kind))) {}

    TrialRecord record(unsigned size, std::uint64_t seed) const {
        TrialRecord r;
        r.experiment = name;
        r.size = size;
        r.seed = seed;
        return r;
    }

    void append(std::vector<TrialRecord>& records) {
        for (auto& r : records) {
            out.records.push_back(std::move(r));
        }
    }

    void axioms() {
        bool passed = true;
        double worst = 0.0;
        std::size_t violations = 0;
        for (unsigned l : c.sizes) {
            std::vector<TrialRecord> recs(c.trials);
            std::vector<double> residual(c.trials, 0.0);
            std::vector<std::size_t> viol(c.trials, 0);
            parallel_for(c.trials, c.workers, [&](std::size_t k) {
                const Stopwatch sw(c.timing);
                const std::uint64_t key = trial_key(c, l, k);
                auto& r = recs[k] = record(l, key);
                CounterRng rng(key);
                const auto state = random_state(l, rng);
                const auto u = random_block_unitary(std::size_t{1} << l, kAxiomMaxBlock, rng);
                try {
                    const auto kernel = dense_kernel(c.theory, state, u);
                    residual[k] = std::max(check_marginalization(kernel, state, apply_dense(state, u)),
                                           max_row_sum_error(kernel, state));
                    viol[k] = check_indifference(kernel, u).size();
                } catch (const NumericError&) {
                    residual[k] = 1.0;
                }
                const bool marg_ok = residual[k] <= kFlowTolerance;
                r.success = marg_ok && (c.theory == TheoryKind::Product || viol[k] == 0);
                r.verdict = r.success ? "pass" : "fail";
                r.ms = sw.ms();
            });
            double size_worst = 0.0;
            std::size_t size_viol = 0;
            for (std::size_t k = 0; k < c.trials; ++k) {
                size_worst = std::max(size_worst, residual[k]);
                size_viol += viol[k];
            }
            worst = std::max(worst, size_worst);
            violations += size_viol;
            out.summary["results"].push_back({{"size", l},
                                              {"instances", c.trials},
                                              {"max_marginalization_residual", size_worst},
                                              {"indifference_violations", size_viol}});
            append(recs);
        }
        // Low qubit in superposition, Hadamard on the high qubit.
        const auto witness_state = PureState::normalized(2, {1.0, 1.0, 0.0, 0.0});
        const auto witness_u = slice_unitary({make_hadamard(1)}, 2);
        const std::size_t witness =
            check_indifference(dense_kernel(c.theory, witness_state, witness_u), witness_u).size();
        out.summary["max_marginalization_residual"] = worst;
        out.summary["indifference_violations"] = violations;
        out.summary["witness_violations"] = witness;
        passed = worst <= kFlowTolerance &&
                 (c.theory == TheoryKind::Product ? witness >= 1 : (violations == 0 && witness == 0));
        out.passed = passed;
    }

    void marginals() {
        const std::size_t programs = get_uint(c, "programs", 20);
        const std::size_t gates = get_uint(c, "gates", 6);
        const double tol = get_double(c, "tv_tolerance", 0.02);
        double worst = 0.0;
        for (unsigned q : c.sizes) {
            std::vector<TrialRecord> recs(programs);
            std::vector<double> tv(programs, 0.0);
            parallel_for(programs, c.workers, [&](std::size_t p) {
                const Stopwatch sw(c.timing);
                const std::uint64_t key = trial_key(c, q, p);
                auto& r = recs[p] = record(q, key);
                CounterRng rng(key);
                HistorySampler sampler(random_program(q, gates, rng), c.theory, c.granularity);
                const std::size_t steps = sampler.program().num_slices() + 1;
                std::vector<std::vector<std::uint64_t>> counts(steps,
                                                               std::vector<std::uint64_t>(std::size_t{1} << q, 0));
                for (std::size_t t = 0; t < c.trials; ++t) {
                    const auto h = sampler.sample(substream(key, t + 1));
                    for (std::size_t s = 0; s < steps; ++s) {
                        ++counts[s][h.values[s]];
                    }
                }
                tv[p] = compare_marginals(counts, sampler.born_marginals(), c.trials).max_tv;
                r.success = tv[p] <= tol;
                r.verdict = r.success ? "pass" : "fail";
                r.queries = sampler.program().static_query_count();
                r.ms = sw.ms();
            });
            const double size_worst = *std::max_element(tv.begin(), tv.end());
            worst = std::max(worst, size_worst);
            out.summary["results"].push_back(
                {{"size", q}, {"programs", programs}, {"histories", c.trials}, {"max_tv", size_worst}});
            append(recs);
        }
        out.summary["max_tv"] = worst;
        out.summary["tv_tolerance"] = tol;
        out.passed = worst <= tol;
    }

    void juggle() {
        out.passed = true;
        for (unsigned l : c.sizes) {
            const std::size_t attempts = get_uint(c, "attempts", default_juggle_attempts(l));
            const auto reg = qubit_range(0, l);
            std::vector<TrialRecord> recs(c.trials);
            parallel_for(c.trials, c.workers, [&](std::size_t k) {
                const Stopwatch sw(c.timing);
                const std::uint64_t key = trial_key(c, l, k);
                auto& r = recs[k] = record(l, key);
                CounterRng rng(substream(key, 2));
                const BasisIndex a = rng.below(std::uint64_t{1} << l);
                const BasisIndex b = a ^ bit_of(static_cast<unsigned>(rng.below(l)));
                const auto p = build_juggle_program(l, pair_state_prep(l, a, b), reg, attempts, substream(key, 0));
                const auto h = sample_history({p, c.theory, substream(key, 1), c.granularity});
                const auto groups = extract_checkpoint_values(h, QubitMap(reg), QubitMap());
                r.success = groups.size() == 1 && groups[0].values.size() == 2;
                r.verdict = r.success ? "both" : "missed";
                r.batches = 1;
                r.ms = sw.ms();
            });
            const auto hits = static_cast<std::size_t>(
                std::count_if(recs.begin(), recs.end(), [](const TrialRecord& r) { return r.success; }));
            const double failure = 1.0 - rate(hits, c.trials);
            const double bound = std::pow(1.0 - 1.0 / (2.0 * l), static_cast<double>(attempts));
            const double sigma = std::sqrt(bound * (1.0 - bound) / static_cast<double>(c.trials));
            const bool ok = failure <= bound + 3.0 * sigma;
            out.passed = out.passed && ok;
            out.summary["results"].push_back({{"size", l},
                                              {"attempts", attempts},
                                              {"failure_rate", failure},
                                              {"bound", bound},
                                              {"sigma", sigma},
                                              {"exp_minus_l", std::exp(-static_cast<double>(l))},
                                              {"passed", ok}});
            append(recs);
        }
    }

    SolverOptions solver_options() const {
        SolverOptions o;
        o.theory = c.theory;
        o.granularity = c.granularity;
        o.batches = get_uint(c, "batches", 0);
        o.attempts = get_uint(c, "attempts", 0);
        return o;
    }

    // Shared by sd and collision: trials near/positive instances then trials
    // far/negative ones per size.
    template <typename Solve>
    void decision(double accuracy_floor, std::string_view positive_label, Solve solve) {
        out.passed = true;
        for (unsigned n : c.sizes) {
            const std::size_t total = 2 * c.trials;
            std::vector<TrialRecord> recs(total);
            std::vector<bool> truth(total);
            parallel_for(total, c.workers, [&](std::size_t k) {
                const Stopwatch sw(c.timing);
                const std::uint64_t key = trial_key(c, n, k);
                auto& r = recs[k] = record(n, key);
                truth[k] = k < c.trials;
                const Verdict v = solve(n, truth[k], key);
                r.verdict = v.verdict;
                r.success = v.positive == truth[k];
                r.queries = v.queries;
                r.batches = v.batches;
                r.ms = sw.ms();
            });
            std::size_t correct = 0, pos_correct = 0, neg_called_pos = 0;
            std::uint64_t queries = 0;
            for (std::size_t k = 0; k < total; ++k) {
                correct += recs[k].success ? 1 : 0;
                queries += recs[k].queries;
                if (truth[k]) {
                    pos_correct += recs[k].success ? 1 : 0;
                } else {
                    neg_called_pos += recs[k].success ? 0 : 1;
                }
            }
            const double acc = rate(correct, total);
            const bool ok = acc >= accuracy_floor;
            out.passed = out.passed && ok;
            out.summary["results"].push_back(
                {{"size", n},
                 {"instances", total},
                 {"accuracy", acc},
                 {std::string(positive_label) + "_accuracy", rate(pos_correct, c.trials)},
                 {"negatives_called_" + std::string(positive_label), rate(neg_called_pos, c.trials)},
                 {"mean_queries", static_cast<double>(queries) / static_cast<double>(total)},
                 {"passed", ok}});
            append(recs);
        }
        out.summary["accuracy_floor"] = accuracy_floor;
    }

    void sd() {
        const SdShape shape = get_shape(c);
        const SolverOptions o = solver_options();
        out.summary["shape"] = shape_name(shape);
        decision(get_double(c, "accuracy", 0.9), "near", [&](unsigned n, bool near, std::uint64_t key) {
            const auto inst = make_sd_instance(n, shape, near, substream(key, 2));
            return shape == SdShape::OneToOne ? solve_sd_one_to_one(inst, key, o) : solve_sd_general(inst, key, o);
        });
    }

    void collision() {
        const SolverOptions o = solver_options();
        decision(get_double(c, "accuracy", 0.9), "two_to_one", [&](unsigned n, bool two, std::uint64_t key) {
            return distinguish_collision(make_collision_instance(n, two, substream(key, 2)), key, o);
        });
    }

    void gi() {
        const auto lambda = static_cast<unsigned>(get_uint(c, "lambda", 0));
        const double floor = get_double(c, "accuracy", 1.0);
        const SolverOptions o = solver_options();
        out.passed = true;
        out.summary["lambda"] = lambda;
        for (unsigned m : c.sizes) {
            const auto pairs = make_graph_pairs(c.trials, m, substream(c.seed, m));
            std::vector<TrialRecord> recs(c.trials);
            parallel_for(c.trials, c.workers, [&](std::size_t k) {
                const Stopwatch sw(c.timing);
                const std::uint64_t key = trial_key(c, m, k);
                auto& r = recs[k] = record(m, key);
                const auto v = solve_sd_general(gi_to_sd(pairs[k].g0, pairs[k].g1, lambda, k), key, o);
                r.verdict = v.positive ? "isomorphic" : "non-isomorphic";
                r.success = v.positive == pairs[k].isomorphic;
                r.queries = v.queries;
                r.batches = v.batches;
                r.ms = sw.ms();
            });
            const auto correct = static_cast<std::size_t>(
                std::count_if(recs.begin(), recs.end(), [](const TrialRecord& r) { return r.success; }));
            const bool ok = rate(correct, c.trials) >= floor;
            out.passed = out.passed && ok;
            out.summary["results"].push_back(
                {{"size", m}, {"pairs", c.trials}, {"accuracy", rate(correct, c.trials)}, {"passed", ok}});
            append(recs);
        }
        out.summary["accuracy_floor"] = floor;
    }

    void search(bool fit) {
        SearchOptions o;
        o.theory = c.theory;
        o.granularity = c.granularity;
        o.batch_factor = get_uint(c, "C", o.batch_factor);
        o.attempts = get_uint(c, "attempts", o.attempts);
        out.passed = true;
        std::vector<double> log_n;
        std::vector<double> log_q;
        std::uint64_t juggle_total = 0;
        for (unsigned n : c.sizes) {
            std::vector<TrialRecord> recs(c.trials);
            std::vector<SearchResult> res(c.trials);
            parallel_for(c.trials, c.workers, [&](std::size_t k) {
                const Stopwatch sw(c.timing);
                const std::uint64_t key = trial_key(c, n, k);
                auto& r = recs[k] = record(n, key);
                res[k] = dqp_search(make_search_instance(n, substream(key, 2)), key, o);
                r.success = res[k].success;
                r.verdict = r.success ? "found" : "missed";
                r.queries = res[k].total_queries;
                r.batches = res[k].batches;
                r.ms = sw.ms();
            });
            std::size_t wins = 0, visited = 0, visits = 0, checkpoints = 0;
            std::uint64_t total = 0, grover = 0, verify = 0, juggle = 0;
            for (const auto& r : res) {
                wins += r.success ? 1 : 0;
                total += r.total_queries;
                grover += r.grover_queries;
                verify += r.verification_queries;
                juggle += r.juggle_queries;
                visited += r.zero_prefix_visits > 0 ? 1 : 0;
                visits += r.zero_prefix_visits;
                checkpoints += r.checkpoints;
            }
            juggle_total += juggle;
            const double trials = static_cast<double>(c.trials);
            const double mean_q = static_cast<double>(total) / trials;
            const bool ok = rate(wins, c.trials) >= 2.0 / 3.0 && juggle == 0;
            out.passed = out.passed && ok;
            log_n.push_back(static_cast<double>(n) * std::log(2.0));
            log_q.push_back(std::log(mean_q));
            out.summary["results"].push_back({{"size", n},
                                              {"trials", c.trials},
                                              {"success_rate", rate(wins, c.trials)},
                                              {"mean_queries", mean_q},
                                              {"mean_grover_queries", static_cast<double>(grover) / trials},
                                              {"mean_verification_queries", static_cast<double>(verify) / trials},
                                              {"juggle_queries", juggle},
                                              {"zero_prefix_history_rate", rate(visited, c.trials)},
                                              {"zero_prefix_checkpoint_rate", rate(visits, checkpoints)},
                                              {"passed", ok}});
            append(recs);
        }
        out.summary["juggle_queries"] = juggle_total;
        if (fit) {
            if (c.sizes.size() < 2) {
                throw ConfigError("scaling needs at least two sizes");
            }
            const auto f = fit_line(log_n, log_q);
            out.summary["fit"] = {{"slope", f.slope}, {"intercept", f.intercept}, {"r2", f.r2}};
            out.passed = out.passed && f.slope >= 0.2 && f.slope <= 0.5;
        }
    }
};

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
    for (const auto& k : kKinds) {
        if (k.kind == kind) {
            return k.name;
        }
    }
    return "unknown";
}

ExperimentKind parse_experiment(std::string_view name) {
    for (const auto& k : kKinds) {
        if (k.name == name) {
            return k.kind;
        }
    }
    throw ConfigError("unknown experiment '" + std::string(name) +
                      "' (axioms, marginals, juggle, sd, collision, gi, search, scaling)");
}

void apply_setting(ExperimentConfig& c, std::string_view key_in, std::string_view value_in) {
    const std::string key = trim(key_in);
    const std::string value = trim(value_in);
    if (key == "experiment") {
        c.kind = parse_experiment(value);
    } else if (key == "theory") {
        c.theory = parse_theory(value);
    } else if (key == "granularity") {
        c.granularity = parse_granularity(value);
    } else if (key == "sizes" || key == "n") {
        c.sizes = parse_sizes(value);
    } else if (key == "trials") {
        c.trials = static_cast<std::size_t>(parse_uint(key, value));
        if (c.trials == 0) {
            throw ConfigError("trials must be at least 1");
        }
    } else if (key == "seed") {
        c.seed = parse_uint(key, value);
    } else if (key == "out") {
        c.out = value;
    } else if (key == "strict") {
        c.strict = parse_bool(key, value);
    } else if (key == "timing") {
        c.timing = parse_bool(key, value);
    } else if (key == "workers") {
        c.workers = static_cast<unsigned>(std::max<std::uint64_t>(1, parse_uint(key, value)));
    } else if (std::find(override_keys().begin(), override_keys().end(), key) != override_keys().end()) {
        c.overrides[key] = value;
    } else {
        throw ConfigError("unknown setting '" + key + "'");
    }
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
    std::stringstream ss{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        }
        apply_setting(base, t.substr(0, eq), t.substr(eq + 1));
    }
    return base;
}

ExperimentConfig resolve_config(ExperimentConfig c) {
    struct Defaults {
        std::vector<unsigned> sizes;
        std::size_t trials = 0;
    };
    Defaults d;
    switch (c.kind) {
        case ExperimentKind::Axioms: d = {{3}, 200}; break;
        case ExperimentKind::Marginals: d = {{3}, 100000}; break;
        case ExperimentKind::Juggle: d = {{2, 3, 4, 5, 6, 7, 8}, 10000}; break;
        case ExperimentKind::Sd: d = {{4}, 50}; break;
        case ExperimentKind::Collision: d = {{6}, 50}; break;
        case ExperimentKind::Gi: d = {{4}, 10}; break;
        case ExperimentKind::Search:
        case ExperimentKind::Scaling: d = {{3, 6, 9}, 200}; break;
    }
    if (c.sizes.empty()) {
        c.sizes = d.sizes;
    }
    if (c.trials == 0) {
        c.trials = d.trials;
    }
    const SdShape shape = get_shape(c);
    for (const auto& key : {"batches", "attempts", "C", "lambda", "programs", "gates"}) {
        get_uint(c, key, 0);
    }
    for (const auto& key : {"tv_tolerance", "accuracy"}) {
        get_double(c, key, 0.0);
    }
    const auto lambda = static_cast<unsigned>(get_uint(c, "lambda", 0));
    for (unsigned s : c.sizes) {
        switch (c.kind) {
            case ExperimentKind::Axioms: require_range("axiom width", s, 1, 6); break;
            case ExperimentKind::Marginals: require_range("program width", s, 1, 10); break;
            case ExperimentKind::Juggle: require_range("juggle width", s, 2, 12); break;
            case ExperimentKind::Sd:
                if (shape == SdShape::OneToOne) {
                    require_range("SD width", s, 2, 10);
                } else {
                    require_range("SD width", s, 2, (kMaxGeneralSolverQubits - 3) / 3);
                }
                break;
            case ExperimentKind::Collision: require_range("collision width", s, 2, 10); break;
            case ExperimentKind::Gi: {
                require_range("graph vertices", s, 2, kMaxGraphVertices);
                const unsigned n = index_bits(s) + lambda;
                if (3 * (n + 1) > kMaxGeneralSolverQubits) {
                    throw ConfigError("graph instance with " + std::to_string(s) + " vertices and lambda " +
                                      std::to_string(lambda) + " exceeds the simulator cap");
                }
                break;
            }
            case ExperimentKind::Search:
            case ExperimentKind::Scaling:
                require_range("search width", s, 3, 12);
                if (s % 3 != 0) {
                    throw ConfigError("search width must be a multiple of 3");
                }
                break;
        }
    }
    return c;
}

ResultSet run_experiment(const ExperimentConfig& config_in) {
    const ExperimentConfig c = resolve_config(config_in);
    Runner run(c);
    auto& s = run.out.summary;
    s["experiment"] = run.name;
    s["theory"] = theory_name(c.theory);
    s["granularity"] = granularity_name(c.granularity);
    s["seed"] = c.seed;
    s["trials"] = c.trials;
    s["sizes"] = c.sizes;
    s["results"] = nlohmann::ordered_json::array();
    switch (c.kind) {
        case ExperimentKind::Axioms: run.axioms(); break;
        case ExperimentKind::Marginals: run.marginals(); break;
        case ExperimentKind::Juggle: run.juggle(); break;
        case ExperimentKind::Sd: run.sd(); break;
        case ExperimentKind::Collision: run.collision(); break;
        case ExperimentKind::Gi: run.gi(); break;
        case ExperimentKind::Search: run.search(false); break;
        case ExperimentKind::Scaling: run.search(true); break;
    }
    std::size_t wins = 0;
    for (const auto& r : run.out.records) {
        wins += r.success ? 1 : 0;
    }
    s["records"] = run.out.records.size();
    s["success_rate"] = rate(wins, run.out.records.size());
    s["passed"] = run.out.passed;
    return std::move(run.out);
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
    std::string out = "experiment,size,seed,verdict,success,queries,batches,ms\n";
    char ms[32];
    for (const auto& r : records) {
        std::snprintf(ms, sizeof ms, "%.3f", r.ms);
        out += r.experiment + "," + std::to_string(r.size) + "," + std::to_string(r.seed) + "," + r.verdict + "," +
               (r.success ? "1" : "0") + "," + std::to_string(r.queries) + "," + std::to_string(r.batches) + "," +
               ms + "\n";
    }
    return out;
}

void emit_results(const ResultSet& results, const std::string& out) {
    const auto write = [](const std::string& path, const std::string& body) {
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw IoError("cannot open '" + path + "' for writing");
        }
        f << body;
        if (!f) {
            throw IoError("write to '" + path + "' failed");
        }
    };
    write(out + ".csv", records_to_csv(results.records));
    write(out + ".json", results.summary.dump(2) + "\n");
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw InvalidArgument("fit needs at least two paired points");
    }
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw InvalidArgument("fit needs at least two distinct x values");
    }
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return f;
}

}  // namespace hh

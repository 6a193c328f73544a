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

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hidden_history/hidden_history.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitFailed = 3;

int report(hh_status status) {
    std::fprintf(stderr, "hidden-history: %s: %s\n", hh_status_name(status), hh_last_error());
    return status == HH_ERR_CONFIG || status == HH_ERR_INVALID_ARGUMENT ? kExitConfig : kExitError;
}

struct ExperimentDeleter {
    void operator()(hh_experiment* e) const { hh_experiment_destroy(e); }
};
struct ResultDeleter {
    void operator()(hh_result* r) const { hh_result_destroy(r); }
};
struct ProgramDeleter {
    void operator()(hh_program* p) const { hh_program_destroy(p); }
};
struct HistoryDeleter {
    void operator()(hh_history* h) const { hh_history_destroy(h); }
};

struct Flags {
    std::string command;
    std::string config;
    std::optional<std::string> theory;
    std::optional<std::string> granularity;
    std::optional<std::string> sizes;
    std::optional<std::string> trials;
    std::optional<std::string> seed;
    std::optional<std::string> out;
    std::optional<std::string> workers;
    std::vector<std::string> sets;
    bool strict = false;
    bool timing = false;
    bool csv = false;
    std::size_t gates = 6;
};

int run_history(const Flags& f) {
    unsigned qubits = 3;
    if (f.sizes) {
        qubits = static_cast<unsigned>(std::strtoul(f.sizes->c_str(), nullptr, 10));
    }
    std::uint64_t seed = 0;
    if (f.seed) {
        seed = std::strtoull(f.seed->c_str(), nullptr, 0);
    } else if (const char* env = std::getenv("HH_SEED")) {
        seed = std::strtoull(env, nullptr, 0);
    }
    hh_program* raw_program = nullptr;
    if (const auto s = hh_program_random(qubits, f.gates, seed, &raw_program); s != HH_OK) {
        return report(s);
    }
    std::unique_ptr<hh_program, ProgramDeleter> program(raw_program);
    hh_history* raw_history = nullptr;
    const char* theory = f.theory ? f.theory->c_str() : "flow";
    const char* granularity = f.granularity ? f.granularity->c_str() : "gate";
    if (const auto s = hh_history_sample(program.get(), theory, granularity, seed, &raw_history); s != HH_OK) {
        return report(s);
    }
    std::unique_ptr<hh_history, HistoryDeleter> history(raw_history);
    std::fputs(hh_history_csv(history.get()), stdout);
    std::fprintf(stderr, "%s\n", hh_history_ledger_json(history.get()));
    return 0;
}

int run(const Flags& f) {
    if (f.command == "history") {
        return run_history(f);
    }
    hh_experiment* raw = nullptr;
    if (const auto s = hh_experiment_create(f.command.c_str(), &raw); s != HH_OK) {
        return report(s);
    }
    std::unique_ptr<hh_experiment, ExperimentDeleter> experiment(raw);
    auto set = [&](const char* key, const std::string& value) {
        return hh_experiment_set(experiment.get(), key, value.c_str());
    };
    if (const char* env = std::getenv("HH_SEED")) {
        if (const auto s = set("seed", env); s != HH_OK) {
            return report(s);
        }
    }
    if (!f.config.empty()) {
        if (const auto s = hh_experiment_load_config(experiment.get(), f.config.c_str()); s != HH_OK) {
            return report(s);
        }
    }
    const std::pair<const char*, const std::optional<std::string>*> flags[] = {
        {"theory", &f.theory}, {"granularity", &f.granularity}, {"sizes", &f.sizes}, {"trials", &f.trials},
        {"seed", &f.seed},     {"out", &f.out},                 {"workers", &f.workers},
    };
    for (const auto& [key, value] : flags) {
        if (*value) {
            if (const auto s = set(key, **value); s != HH_OK) {
                return report(s);
            }
        }
    }
    if (f.strict) {
        set("strict", "true");
    }
    if (f.timing) {
        set("timing", "true");
    }
    for (const auto& kv : f.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "hidden-history: --set expects key=value, got '%s'\n", kv.c_str());
            return kExitConfig;
        }
        if (const auto s = set(kv.substr(0, eq).c_str(), kv.substr(eq + 1)); s != HH_OK) {
            return report(s);
        }
    }

    hh_result* raw_result = nullptr;
    if (const auto s = hh_experiment_run(experiment.get(), &raw_result); s != HH_OK) {
        return report(s);
    }
    std::unique_ptr<hh_result, ResultDeleter> result(raw_result);
    if (const char* prefix = hh_experiment_out(experiment.get())) {
        if (const auto s = hh_result_write(result.get(), prefix); s != HH_OK) {
            return report(s);
        }
    }
    std::fputs(f.csv ? hh_result_csv(result.get()) : hh_result_summary_json(result.get()), stdout);
    if (hh_experiment_strict(experiment.get()) && !hh_result_passed(result.get())) {
        std::fprintf(stderr, "hidden-history: %s did not meet its thresholds\n", f.command.c_str());
        return kExitFailed;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hidden-variable history sampler and experiment runner"};
    app.set_version_flag("--version", std::string(hh_version()));
    Flags f;
    app.add_option("experiment", f.command,
                   "axioms, marginals, juggle, sd, collision, gi, search, scaling, or history")
        ->required();
    app.add_option("--config", f.config, "key=value config file")->check(CLI::ExistingFile);
    app.add_option("--theory", f.theory, "product, flow or sinkhorn");
    app.add_option("--granularity", f.granularity, "gate or slice");
    app.add_option("--n,--sizes", f.sizes, "comma-separated sizes");
    app.add_option("--trials", f.trials, "trials per size");
    app.add_option("--seed", f.seed, "master seed (falls back to HH_SEED)");
    app.add_option("--out", f.out, "write <out>.csv and <out>.json");
    app.add_option("--workers", f.workers, "worker threads");
    app.add_option("--set", f.sets, "constant override key=value (repeatable)");
    app.add_option("--gates", f.gates, "gates in the random program (history only)");
    app.add_flag("--strict", f.strict, "exit 3 when thresholds are missed");
    app.add_flag("--timing", f.timing, "record wall time per trial");
    app.add_flag("--csv", f.csv, "print records instead of the summary");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }
    return run(f);
}

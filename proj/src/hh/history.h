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

#ifndef HH_HISTORY_H
#define HH_HISTORY_H

#include <cstdint>
#include <string>
#include <vector>

#include "hh/kernels.h"
#include "hh/ledger.h"
#include "hh/program.h"

namespace hh {

struct HistoryQuery {
    SlicedProgram program;
    TheoryKind theory = TheoryKind::Flow;
    std::uint64_t seed = 0;
    Granularity granularity = Granularity::Gate;
};

/// v_0..v_T (v_0 = 0) with the values read at the program's checkpoints.
struct History {
    unsigned num_qubits = 0;
    std::vector<BasisIndex> values;
    std::vector<Checkpoint> checkpoints;
    std::vector<BasisIndex> checkpoint_values;
    QueryLedger ledger;
};

/// Simulates the program from |0...0> and samples v_t from the theory's
/// kernel row at v_{t-1}, slice by slice.
///
/// Randomness: one uniform draw per Hadamard under gate granularity, one
/// draw per slice under the product theory or slice granularity. Draws are
/// consumed in program order, so a history prefix depends only on the slices
/// it covers. Throws NumericError on a non-finite amplitude.
History sample_history(const HistoryQuery& query);

/// Precomputes the state trajectory of one program so that many histories
/// can be drawn without re-simulating. Produces exactly the histories of
/// sample_history for the same (theory, granularity, seed). Memory grows as
/// 2^l doubles per Hadamard step; throws DimensionCapExceeded when the table
/// would exceed `max_doubles`.
class HistorySampler {
   public:
    HistorySampler(SlicedProgram program, TheoryKind theory, Granularity granularity = Granularity::Gate,
                   std::size_t max_doubles = std::size_t{1} << 25);

    History sample(std::uint64_t seed) const;

    /// Born distribution of the state after slice t (t = 0 is |0...0>).
    const std::vector<std::vector<double>>& born_marginals() const {
        return born_;
    }
    const SlicedProgram& program() const {
        return program_;
    }

   private:
    enum class StepKind { Hadamard, Classical, Table };
    struct Step {
        StepKind kind = StepKind::Classical;
        std::size_t gate_index = 0;  // into the slice, for classical steps
        BasisIndex bit = 0;          // Hadamard target
        // Hadamard: probability of moving to the low member of v's pair,
        // indexed by v. Table: cumulative rows, or one shared row.
        std::vector<double> lo_prob;
        bool shared_row = false;
    };

    SlicedProgram program_;
    TheoryKind theory_;
    Granularity granularity_;
    std::vector<std::vector<Step>> steps_;  // per slice
    std::vector<std::vector<double>> born_;
    QueryLedger ledger_;
};

struct MarginalReport {
    std::size_t trials = 0;
    std::vector<double> tv_per_step;  // t = 0..T
    double max_tv = 0.0;
};

/// Total-variation distance between the empirical law of v_t over `trials`
/// histories (trial seeds substream(query.seed, trial)) and the Born
/// distribution after slice t.
MarginalReport empirical_marginals(const HistoryQuery& query, std::size_t trials);

/// Same comparison for externally produced per-step histograms (counts
/// indexed by basis state).
MarginalReport compare_marginals(const std::vector<std::vector<std::uint64_t>>& counts,
                                 const std::vector<std::vector<double>>& born, std::size_t trials);

/// "t,bitstring,is_checkpoint" rows; bitstrings put the highest qubit first.
std::string history_to_csv(const History& history);

/// {"q": [...], "Q": total}
std::string ledger_to_json(const History& history);

}  // namespace hh

#endif

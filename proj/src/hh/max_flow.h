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

#ifndef HH_MAX_FLOW_H
#define HH_MAX_FLOW_H

#include <cstddef>
#include <limits>
#include <vector>

namespace hh {

/// Ford-Fulkerson with breadth-first (shortest) augmenting paths over
/// real-valued capacities.
///
/// Adjacency is scanned in edge-insertion order, so inserting edges in
/// increasing (from, to) order makes every augmentation pick the
/// lexicographically smallest shortest path. The result is a deterministic
/// function of the insertion order. Residuals at or below `epsilon` count as
/// saturated.
class MaxFlow {
   public:
    static constexpr double kInfinite = std::numeric_limits<double>::infinity();

    explicit MaxFlow(std::size_t num_nodes, double epsilon = 1e-15);

    /// Returns the edge id.
    std::size_t add_edge(std::size_t from, std::size_t to, double capacity);

    /// Augments until no path remains; returns the total flow value.
    double solve(std::size_t source, std::size_t sink);

    double flow(std::size_t edge_id) const {
        return edges_[2 * edge_id].flow;
    }
    std::size_t num_augmentations() const {
        return augmentations_;
    }

   private:
    struct Arc {
        std::size_t to;
        double capacity;
        double flow;
    };

    double residual(std::size_t arc) const {
        return edges_[arc].capacity - edges_[arc].flow;
    }

    std::vector<Arc> edges_;  // arc 2k is edge k, arc 2k+1 its reverse
    std::vector<std::vector<std::size_t>> adjacency_;
    double epsilon_;
    std::size_t augmentations_ = 0;
};

}  // namespace hh

#endif

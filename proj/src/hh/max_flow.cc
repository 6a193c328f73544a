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

#include "hh/max_flow.h"

#include <algorithm>
#include <deque>

#include "hh/errors.h"

namespace hh {

MaxFlow::MaxFlow(std::size_t num_nodes, double epsilon) : adjacency_(num_nodes), epsilon_(epsilon) {}

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, double capacity) {
    if (from >= adjacency_.size() || to >= adjacency_.size()) {
        throw InvalidArgument("max-flow edge endpoint out of range");
    }
    if (!(capacity >= 0.0)) {
        throw InvalidArgument("max-flow capacity must be non-negative");
    }
    const std::size_t id = edges_.size() / 2;
    adjacency_[from].push_back(edges_.size());
    edges_.push_back(Arc{to, capacity, 0.0});
    adjacency_[to].push_back(edges_.size());
    edges_.push_back(Arc{from, 0.0, 0.0});
    return id;
}

double MaxFlow::solve(std::size_t source, std::size_t sink) {
    double total = 0.0;
    std::vector<std::size_t> parent_arc(adjacency_.size());
    std::vector<bool> visited(adjacency_.size());
    while (true) {
        std::fill(visited.begin(), visited.end(), false);
        std::deque<std::size_t> queue{source};
        visited[source] = true;
        bool found = false;
        while (!queue.empty() && !found) {
            const std::size_t node = queue.front();
            queue.pop_front();
            for (std::size_t arc : adjacency_[node]) {
                const std::size_t next = edges_[arc].to;
                if (visited[next] || residual(arc) <= epsilon_) {
                    continue;
                }
                visited[next] = true;
                parent_arc[next] = arc;
                if (next == sink) {
                    found = true;
                    break;
                }
                queue.push_back(next);
            }
        }
        if (!found) {
            return total;
        }
        double bottleneck = kInfinite;
        for (std::size_t node = sink; node != source; node = edges_[parent_arc[node] ^ 1].to) {
            bottleneck = std::min(bottleneck, residual(parent_arc[node]));
        }
        for (std::size_t node = sink; node != source; node = edges_[parent_arc[node] ^ 1].to) {
            const std::size_t arc = parent_arc[node];
            edges_[arc].flow += bottleneck;
            edges_[arc ^ 1].flow -= bottleneck;
        }
        total += bottleneck;
        ++augmentations_;
    }
}

}  // namespace hh

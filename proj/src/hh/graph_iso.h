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

#ifndef HH_GRAPH_ISO_H
#define HH_GRAPH_ISO_H

#include <cstdint>
#include <vector>

#include "hh/sd.h"

namespace hh {

inline constexpr unsigned kMaxGraphVertices = 6;

/// Simple undirected graph on m <= 6 vertices stored as an upper-triangle
/// adjacency bitstring: edge (i, j), i < j, is bit pair_index(i, j).
struct Graph {
    unsigned vertices = 0;
    BasisIndex edges = 0;

    bool operator==(const Graph&) const = default;
};

unsigned num_pairs(unsigned vertices);
unsigned pair_index(unsigned i, unsigned j, unsigned vertices);
bool has_edge(const Graph& g, unsigned i, unsigned j);
Graph make_graph(unsigned vertices, const std::vector<std::pair<unsigned, unsigned>>& edges);

std::uint64_t factorial(unsigned m);

/// The permutation with Lehmer code `index` (0 <= index < m!), as an image
/// table: vertex v goes to perm[v].
std::vector<unsigned> permutation_from_lehmer(std::uint64_t index, unsigned m);

Graph relabel(const Graph& g, const std::vector<unsigned>& perm);

/// Smallest adjacency bitstring over all relabelings.
BasisIndex canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// ceil(log2 m!).
unsigned index_bits(unsigned m);

/// P_b(x) = adjacency of the relabeling of G_b by permutation (x mod m!),
/// with n = ceil(log2 m!) + lambda input bits. `near` is the isomorphism
/// ground truth. Inputs past a multiple of m! bias the index by at most
/// 2^-lambda in total variation.
SDInstance gi_to_sd(const Graph& g0, const Graph& g1, unsigned lambda, std::uint64_t seed_label = 0);

struct GraphPair {
    Graph g0;
    Graph g1;
    bool isomorphic = false;
};

/// Pair k is isomorphic for even k (G1 a random relabeling of G0) and
/// non-isomorphic for odd k (G1 redrawn until the canonical forms differ).
std::vector<GraphPair> make_graph_pairs(std::size_t count, unsigned vertices, std::uint64_t seed);

}  // namespace hh

#endif

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

#include "hh/graph_iso.h"

#include <algorithm>
#include <numeric>

#include "hh/errors.h"

namespace hh {

namespace {

void check_vertices(unsigned m) {
    if (m < 2 || m > kMaxGraphVertices) {
        throw InvalidArgument("graphs must have 2..6 vertices");
    }
}

Graph random_graph(unsigned m, CounterRng& rng) {
    return Graph{m, rng() & low_mask(num_pairs(m))};
}

}  // namespace

unsigned num_pairs(unsigned vertices) {
    return vertices * (vertices - 1) / 2;
}

unsigned pair_index(unsigned i, unsigned j, unsigned vertices) {
    if (i > j) {
        std::swap(i, j);
    }
    // Rows of the upper triangle laid out one after another.
    return i * vertices - i * (i + 1) / 2 + (j - i - 1);
}

bool has_edge(const Graph& g, unsigned i, unsigned j) {
    return i != j && test_bit(g.edges, pair_index(i, j, g.vertices));
}

Graph make_graph(unsigned vertices, const std::vector<std::pair<unsigned, unsigned>>& edges) {
    check_vertices(vertices);
    Graph g{vertices, 0};
    for (const auto& [i, j] : edges) {
        if (i == j || i >= vertices || j >= vertices) {
            throw InvalidArgument("bad edge");
        }
        g.edges |= bit_of(pair_index(i, j, vertices));
    }
    return g;
}

std::uint64_t factorial(unsigned m) {
    std::uint64_t f = 1;
    for (unsigned k = 2; k <= m; ++k) {
        f *= k;
    }
    return f;
}

std::vector<unsigned> permutation_from_lehmer(std::uint64_t index, unsigned m) {
    if (index >= factorial(m)) {
        throw InvalidArgument("Lehmer index out of range");
    }
    std::vector<unsigned> pool(m);
    std::iota(pool.begin(), pool.end(), 0U);
    std::vector<unsigned> perm(m);
    for (unsigned pos = 0; pos < m; ++pos) {
        const std::uint64_t f = factorial(m - 1 - pos);
        const auto digit = static_cast<std::size_t>(index / f);
        index %= f;
        perm[pos] = pool[digit];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return perm;
}

Graph relabel(const Graph& g, const std::vector<unsigned>& perm) {
    Graph out{g.vertices, 0};
    for (unsigned i = 0; i < g.vertices; ++i) {
        for (unsigned j = i + 1; j < g.vertices; ++j) {
            if (has_edge(g, i, j)) {
                out.edges |= bit_of(pair_index(perm[i], perm[j], g.vertices));
            }
        }
    }
    return out;
}

BasisIndex canonical_form(const Graph& g) {
    check_vertices(g.vertices);
    BasisIndex best = ~BasisIndex{0};
    std::vector<unsigned> perm(g.vertices);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
        best = std::min(best, relabel(g, perm).edges);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.vertices == b.vertices && canonical_form(a) == canonical_form(b);
}

unsigned index_bits(unsigned m) {
    const std::uint64_t f = factorial(m);
    unsigned bits = 0;
    while ((std::uint64_t{1} << bits) < f) {
        ++bits;
    }
    return bits;
}

SDInstance gi_to_sd(const Graph& g0, const Graph& g1, unsigned lambda, std::uint64_t seed_label) {
    check_vertices(g0.vertices);
    if (g1.vertices != g0.vertices) {
        throw InvalidArgument("graphs must have the same vertex count");
    }
    const unsigned m = g0.vertices;
    const unsigned n = index_bits(m) + lambda;
    if (n > 10) {
        throw DimensionCapExceeded("graph-isomorphism sampler needs " + std::to_string(n) + " input bits");
    }
    const std::uint64_t perms = factorial(m);
    const std::size_t dom = std::size_t{1} << n;
    std::vector<BasisIndex> t0(dom);
    std::vector<BasisIndex> t1(dom);
    for (BasisIndex x = 0; x < dom; ++x) {
        const auto perm = permutation_from_lehmer(x % perms, m);
        t0[x] = relabel(g0, perm).edges;
        t1[x] = relabel(g1, perm).edges;
    }
    SDInstance inst;
    inst.near = isomorphic(g0, g1);
    inst.id = std::string("gi-") + (inst.near ? "iso" : "noniso") + "-m" + std::to_string(m) + "-" +
              std::to_string(seed_label);
    inst.n = n;
    inst.output_width = num_pairs(m);
    inst.p0 = std::make_shared<const OracleFunction>("G0", n, inst.output_width, std::move(t0), true);
    inst.p1 = std::make_shared<const OracleFunction>("G1", n, inst.output_width, std::move(t1), true);
    inst.shape = SdShape::ManyToOne;
    return inst;
}

std::vector<GraphPair> make_graph_pairs(std::size_t count, unsigned vertices, std::uint64_t seed) {
    check_vertices(vertices);
    std::vector<GraphPair> out;
    for (std::size_t k = 0; k < count; ++k) {
        CounterRng rng(substream(seed, k));
        GraphPair p;
        p.g0 = random_graph(vertices, rng);
        if (k % 2 == 0) {
            const auto perm = random_permutation(vertices, rng);
            p.g1 = relabel(p.g0, std::vector<unsigned>(perm.begin(), perm.end()));
            p.isomorphic = true;
        } else {
            const BasisIndex c0 = canonical_form(p.g0);
            do {
                p.g1 = random_graph(vertices, rng);
            } while (canonical_form(p.g1) == c0);
            p.isomorphic = false;
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace hh

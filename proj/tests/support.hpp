#pragma once

#include "incolor/generate.hpp"
#include "incolor/graph.hpp"

#include <vector>

namespace incolor::testing {

// Every labelled graph on n vertices, as a bitmask over the pairs (i < j).
inline std::vector<Edge> edges_from_mask(Vertex n, unsigned mask)
{
    std::vector<Edge> e;
    unsigned bit = 0;
    for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j, ++bit) {
            if (mask & (1u << bit)) {
                e.push_back({i, j});
            }
        }
    }
    return e;
}

// One representative per isomorphism class of connected graphs on n vertices,
// chosen as the lexicographically smallest relabelled edge mask.
std::vector<Graph> connected_graphs(Vertex n);

inline Graph random_graph(Vertex n, double p, std::uint64_t seed)
{
    CounterRng rng(seed);
    std::vector<Edge> e;
    for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j) {
            if (rng.unit() < p) {
                e.push_back({i, j});
            }
        }
    }
    return Graph::from_edges(n, e);
}

} // namespace incolor::testing

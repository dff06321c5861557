#pragma once

#include "incolor/graph.hpp"

#include <cstdint>

namespace incolor {

/// Counter-based SplitMix64 stream. The k-th draw depends only on (seed, k),
/// so sequences are identical on every platform and streams can be split
/// deterministically.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next();
    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform double in [0, 1).
    double unit();
    /// Independent child stream.
    CounterRng split(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

Graph make_path(Vertex n);
Graph make_cycle(Vertex n);
/// K_{1,n}: hub 1 with leaves 2..n+1.
Graph make_star(Vertex n);
Graph make_complete(Vertex n);
/// K_{m,n}: part {1..m} joined to part {m+1..m+n}.
Graph make_complete_bipartite(Vertex m, Vertex n);
/// Hub 1 adjacent to every vertex of the path 2-3-...-(n+1).
Graph make_fan(Vertex n);
/// Uniform labelled tree on n vertices (Pruefer sequence).
Graph make_random_tree(Vertex n, std::uint64_t seed);
/// Cycle 1..n plus a uniformly random triangulation of the polygon; 2n-3 edges.
Graph make_random_maximal_outerplanar(Vertex n, std::uint64_t seed);
/// random_maximal_outerplanar with each chord deleted independently with probability p.
Graph make_random_outerplanar(Vertex n, double p, std::uint64_t seed);
/// Deletes random edges at vertices of degree above max_degree until none remain.
/// Subgraphs keep every hereditary property (outerplanarity included).
Graph trim_max_degree(const Graph& g, std::size_t max_degree, std::uint64_t seed);

/// Petersen graph on ids 1..10 (outer 5-cycle 1..5, inner pentagram 6..10).
Graph make_petersen();

/// Cycle u-x-v-y plus chord uv and pendant edge xz, with u=1, x=2, v=3, y=4, z=5.
/// Outerplanar, maximum degree 3, and not 1-defectively incidence 3-colourable.
Graph make_obstruction_h();

} // namespace incolor

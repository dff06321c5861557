#pragma once

#include "incolor/coloring.hpp"
#include "incolor/graph.hpp"

#include <string>

namespace incolor {

/// A verified coloring together with the claim it supports.
struct DefectiveColoringResult {
    IncidenceColoring coloring;
    /// The coloring passes check_defective at this d.
    int d_claimed = 1;
    int k = 0;
    /// Which construction produced it, e.g. "tree" or "latin".
    std::string method;
    /// True when k is known to equal the minimum for this graph and d.
    bool proven_optimal = false;
};

/// Alternating 2-coloring along the path v_1..v_n: (v_i, v_i v_{i+1}) gets 0
/// and (v_{i+1}, v_i v_{i+1}) gets 1. Accepts K_2. Throws InputError otherwise.
DefectiveColoringResult color_path(const Graph& g);

/// Tail incidences 0, head incidences 1 around the cycle. Throws InputError
/// if g is not a cycle.
DefectiveColoringResult color_cycle(const Graph& g);

/// Same rule applied to every component of a graph with maximum degree <= 2
/// (disjoint paths and cycles). 1-defective with 2 colours.
DefectiveColoringResult color_linear_forest_or_cycles(const Graph& g);

/// 1-defective Delta-coloring of a tree in linear time. Rooted at the lowest id
/// of maximum degree; children are visited in ascending id order. All colours in
/// every A_u are pairwise distinct. Throws InputError if g is not a tree.
DefectiveColoringResult color_tree(const Graph& g);

/// 1-defective max(m,n)-coloring of K_{m,n}. K_{1,1} gets the forced
/// 2-coloring. Throws InputError if g is not complete bipartite.
DefectiveColoringResult color_complete_bipartite(const Graph& g);

/// Optimal d-defective coloring of K_n (d >= 1) on the slot layout of make_complete(n).
/// n != 2, 4 uses n-1 colours from a Latin square without principal intercalates.
DefectiveColoringResult color_complete(Vertex n, int d);

/// Routes g to the construction for its class and returns a coloring verified
/// at d. Throws UnsupportedGraph when no construction applies, InputError for d < 1.
DefectiveColoringResult color(const Graph& g, int d);

} // namespace incolor

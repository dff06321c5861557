#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace incolor {

/// Vertex ids are 1-based: a graph on n vertices uses ids 1..n.
using Vertex = std::int32_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A vertex-edge pair (vertex, edge) with vertex an endpoint of edge.
///
/// (u, uv) is a strong incidence of u and a weak incidence of v.
struct Incidence {
    Vertex vertex = 0;
    Edge edge;

    static Incidence of(Vertex at, Vertex other) { return {at, Edge::canonical(at, other)}; }

    Vertex other() const { return edge.u == vertex ? edge.v : edge.u; }

    friend bool operator==(const Incidence&, const Incidence&) = default;
    friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

/// Immutable simple undirected graph in compressed sparse row form.
///
/// Every incidence (u, uv) owns one slot: the position of v inside u's sorted
/// neighbour list. Slots run over [0, 2|E|) and index incidence colorings.
class Graph {
public:
    Graph() : offsets_(2, 0) {}

    /// Builds a graph on ids 1..n. Throws InputError on self-loops,
    /// out-of-range ids or duplicate edges.
    static Graph from_edges(Vertex n, std::span<const Edge> edges);

    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return neighbors_.size() / 2; }
    std::size_t incidence_count() const { return neighbors_.size(); }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const { return max_degree_; }
    std::size_t min_degree() const;

    std::span<const Vertex> neighbors(Vertex v) const
    {
        return {neighbors_.data() + offsets_[v], degree(v)};
    }

    bool has_edge(Vertex a, Vertex b) const { return slot(a, b).has_value(); }

    /// Slot of the incidence (at, at-other), if the edge exists.
    std::optional<std::size_t> slot(Vertex at, Vertex other) const;
    std::size_t slot_of(const Incidence& inc) const;

    /// First slot of vertex v; its strong incidences occupy [first_slot(v), first_slot(v+1)).
    std::size_t first_slot(Vertex v) const { return offsets_[v]; }
    /// Vertex owning the slot (the `vertex` of the incidence).
    Vertex slot_vertex(std::size_t s) const { return owner_[s]; }
    /// Neighbour at the other end of the slot's edge.
    Vertex slot_neighbor(std::size_t s) const { return neighbors_[s]; }
    /// Slot of the opposite incidence on the same edge.
    std::size_t mate(std::size_t s) const { return mate_[s]; }

    Incidence incidence(std::size_t s) const { return Incidence::of(owner_[s], neighbors_[s]); }

    /// Edges in canonical order (sorted by (u, v)).
    std::vector<Edge> edges() const;

    bool is_connected() const;
    std::size_t component_count() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
    }

private:
    Vertex n_ = 0;
    std::size_t max_degree_ = 0;
    std::vector<std::size_t> offsets_; // size n+2, index 0 unused
    std::vector<Vertex> neighbors_;
    std::vector<Vertex> owner_;
    std::vector<std::size_t> mate_;
};

/// Parses the edge-list format: first line "n m", then m lines "u v".
/// Blank lines are skipped; LF and CRLF are accepted. Errors name the line.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

/// Writes the edge-list format read by load_graph.
std::string to_edge_list(const Graph& g);

/// Structural class used by the dispatcher. Tested in declaration order.
enum class ClassTag {
    Empty,
    MatchingK2s,
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Tree,
    SubcubicCandidate,
    General,
};

struct GraphClass {
    ClassTag tag = ClassTag::General;
    /// For CompleteBipartite: the larger part first (sizes m >= n), each sorted.
    std::vector<Vertex> part_a;
    std::vector<Vertex> part_b;
    /// For Path: vertices in order from one end. For Cycle: vertices around the cycle.
    std::vector<Vertex> order;
};

std::string_view to_string(ClassTag tag);

GraphClass classify(const Graph& g);

/// 2-colouring of the vertices if g is bipartite (index 0 unused).
std::optional<std::vector<int>> bipartition(const Graph& g);

} // namespace incolor

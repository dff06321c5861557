#pragma once

#include "incolor/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace incolor {

/// Colours are residues 0..k-1.
using Color = int;
inline constexpr Color kUncolored = -1;

/// Total map from the incidences of a graph to colours, indexed by Graph slot.
///
/// A coloring is tied to the graph it was built for; graphs with the same
/// vertex count and edge set share slot layout, so colorings transfer between them.
struct IncidenceColoring {
    int palette = 0;
    std::vector<Color> colors;

    static IncidenceColoring blank(const Graph& g, int palette)
    {
        return {palette, std::vector<Color>(g.incidence_count(), kUncolored)};
    }

    Color at(const Graph& g, Vertex at, Vertex other) const { return colors[g.slot_of(Incidence::of(at, other))]; }
    void set(const Graph& g, Vertex at, Vertex other, Color c) { colors[g.slot_of(Incidence::of(at, other))] = c; }

    bool complete() const;

    friend bool operator==(const IncidenceColoring&, const IncidenceColoring&) = default;
};

/// Serialises to {"k": int, "incidences": [{"v": int, "e": [int,int], "c": int}, ...]}.
/// With one_based, colours are written as 1..k.
std::string coloring_to_json(const Graph& g, const IncidenceColoring& c, bool one_based = false, int indent = -1);

/// Reads the coloring document for graph g. Throws InputError when an incidence
/// of g is missing, an incidence is not in g, one is listed twice, or a colour is
/// outside the palette.
IncidenceColoring coloring_from_json(const Graph& g, std::string_view json, bool one_based = false);

/// Graphviz rendering. With a coloring, edge u--v carries the colour of (u,uv)
/// as its tail label and that of (v,uv) as its head label.
std::string to_dot(const Graph& g, const IncidenceColoring* c = nullptr, bool one_based = false);

} // namespace incolor

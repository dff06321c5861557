#include "incolor/coloring.hpp"

#include "incolor/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace incolor {

using json = nlohmann::json;

bool IncidenceColoring::complete() const
{
    return std::none_of(colors.begin(), colors.end(), [](Color c) { return c == kUncolored; });
}

std::string coloring_to_json(const Graph& g, const IncidenceColoring& c, bool one_based, int indent)
{
    json doc;
    doc["k"] = c.palette;
    json list = json::array();
    const int shift = one_based ? 1 : 0;
    for (std::size_t s = 0; s < g.incidence_count(); ++s) {
        const Incidence inc = g.incidence(s);
        list.push_back({{"v", inc.vertex}, {"e", {inc.edge.u, inc.edge.v}}, {"c", c.colors[s] + shift}});
    }
    doc["incidences"] = std::move(list);
    return doc.dump(indent);
}

IncidenceColoring coloring_from_json(const Graph& g, std::string_view text, bool one_based)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("coloring JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("k") || !doc["k"].is_number_integer() ||
        !doc.contains("incidences") || !doc["incidences"].is_array()) {
        throw InputError("coloring JSON must have integer \"k\" and array \"incidences\"");
    }
    IncidenceColoring out = IncidenceColoring::blank(g, doc["k"].get<int>());
    if (out.palette < 0) {
        throw InputError("coloring JSON: negative palette size");
    }
    const int shift = one_based ? 1 : 0;
    std::size_t index = 0;
    for (const json& item : doc["incidences"]) {
        auto where = [&] { return "incidence #" + std::to_string(index); };
        if (!item.is_object() || !item.contains("v") || !item.contains("e") || !item.contains("c") ||
            !item["e"].is_array() || item["e"].size() != 2) {
            throw InputError(where() + ": expected {\"v\", \"e\": [u, w], \"c\"}");
        }
        const auto v = item["v"].get<Vertex>();
        const auto a = item["e"][0].get<Vertex>();
        const auto b = item["e"][1].get<Vertex>();
        const int col = item["c"].get<int>() - shift;
        if (v != a && v != b) {
            throw InputError(where() + ": vertex is not an endpoint of its edge");
        }
        auto s = g.slot(v, v == a ? b : a);
        if (!s) {
            throw InputError(where() + ": extraneous incidence (" + std::to_string(v) + ", {" +
                             std::to_string(a) + "," + std::to_string(b) + "})");
        }
        if (out.colors[*s] != kUncolored) {
            throw InputError(where() + ": incidence listed twice");
        }
        if (col < 0 || col >= out.palette) {
            throw InputError(where() + ": colour outside palette");
        }
        out.colors[*s] = col;
        ++index;
    }
    for (std::size_t s = 0; s < g.incidence_count(); ++s) {
        if (out.colors[s] == kUncolored) {
            const Incidence inc = g.incidence(s);
            throw InputError("missing incidence (" + std::to_string(inc.vertex) + ", {" +
                             std::to_string(inc.edge.u) + "," + std::to_string(inc.edge.v) + "})");
        }
    }
    return out;
}

std::string to_dot(const Graph& g, const IncidenceColoring* c, bool one_based)
{
    std::ostringstream out;
    const int shift = one_based ? 1 : 0;
    out << "graph G {\n";
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        out << "  " << v << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (c != nullptr) {
            out << " [taillabel=\"" << c->at(g, e.u, e.v) + shift << "\", headlabel=\""
                << c->at(g, e.v, e.u) + shift << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace incolor

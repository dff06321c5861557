#include "incolor/colorers.hpp"

#include "incolor/errors.hpp"
#include "incolor/generate.hpp"
#include "incolor/latin.hpp"
#include "incolor/oracle.hpp"
#include "incolor/outerplanar.hpp"
#include "incolor/verify.hpp"

#include <algorithm>
#include <array>

namespace incolor {

namespace {

struct TableEntry {
    Vertex at;
    Vertex other;
    Color color;
};

// Found by find_coloring_exhaustive on make_complete(4); re-verified in the tests.
constexpr std::array<TableEntry, 12> kK4OneDefective{{
    {1, 2, 0}, {1, 3, 1}, {1, 4, 2}, {2, 1, 1}, {2, 3, 0}, {2, 4, 3},
    {3, 1, 0}, {3, 2, 2}, {3, 4, 1}, {4, 1, 3}, {4, 2, 1}, {4, 3, 2},
}};
constexpr std::array<TableEntry, 12> kK4TwoDefective{{
    {1, 2, 0}, {1, 3, 1}, {1, 4, 2}, {2, 1, 1}, {2, 3, 0}, {2, 4, 2},
    {3, 1, 0}, {3, 2, 2}, {3, 4, 1}, {4, 1, 0}, {4, 2, 1}, {4, 3, 2},
}};

DefectiveColoringResult make_result(IncidenceColoring c, std::string method, bool optimal)
{
    DefectiveColoringResult r;
    r.k = c.palette;
    r.coloring = std::move(c);
    r.method = std::move(method);
    r.proven_optimal = optimal;
    return r;
}

// Every coloring with an edge needs max(Delta, 2) colours.
int trivial_lower_bound(const Graph& g)
{
    if (g.edge_count() == 0) {
        return 0;
    }
    return std::max<int>(2, static_cast<int>(g.max_degree()));
}

// Orients each walk v_0 v_1 ... and colours tails 0, heads 1.
void color_walk(const Graph& g, const std::vector<Vertex>& walk, bool closed, IncidenceColoring& c)
{
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        c.set(g, walk[i], walk[i + 1], 0);
        c.set(g, walk[i + 1], walk[i], 1);
    }
    if (closed && walk.size() >= 3) {
        c.set(g, walk.back(), walk.front(), 0);
        c.set(g, walk.front(), walk.back(), 1);
    }
}

std::vector<Vertex> component_walk(const Graph& g, Vertex start, std::vector<char>& seen)
{
    std::vector<Vertex> order{start};
    seen[start] = 1;
    Vertex cur = start;
    while (true) {
        Vertex next = 0;
        for (Vertex w : g.neighbors(cur)) {
            if (!seen[w]) {
                next = w;
                break;
            }
        }
        if (next == 0) {
            return order;
        }
        seen[next] = 1;
        order.push_back(next);
        cur = next;
    }
}

} // namespace

DefectiveColoringResult color_path(const Graph& g)
{
    if (g.edge_count() == 1 && g.vertex_count() == 2) {
        IncidenceColoring c = IncidenceColoring::blank(g, 2);
        color_walk(g, {1, 2}, false, c);
        return make_result(std::move(c), "path", true);
    }
    GraphClass cls = classify(g);
    if (cls.tag != ClassTag::Path) {
        throw InputError("graph is not a path");
    }
    IncidenceColoring c = IncidenceColoring::blank(g, 2);
    color_walk(g, cls.order, false, c);
    return make_result(std::move(c), "path", true);
}

DefectiveColoringResult color_cycle(const Graph& g)
{
    GraphClass cls = classify(g);
    if (cls.tag != ClassTag::Cycle) {
        throw InputError("graph is not a cycle");
    }
    IncidenceColoring c = IncidenceColoring::blank(g, 2);
    color_walk(g, cls.order, true, c);
    return make_result(std::move(c), "cycle", true);
}

DefectiveColoringResult color_linear_forest_or_cycles(const Graph& g)
{
    if (g.max_degree() > 2) {
        throw InputError("maximum degree exceeds 2");
    }
    IncidenceColoring c = IncidenceColoring::blank(g, g.edge_count() == 0 ? 0 : 2);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    // Path components start from an end so the walk covers them in one pass.
    for (int pass = 0; pass < 2; ++pass) {
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            if (seen[v] || (pass == 0 && g.degree(v) != 1) || (pass == 1 && g.degree(v) != 2)) {
                continue;
            }
            const std::vector<Vertex> walk = component_walk(g, v, seen);
            color_walk(g, walk, pass == 1, c);
        }
    }
    return make_result(std::move(c), "orientation", true);
}

DefectiveColoringResult color_tree(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (n == 0 || g.edge_count() != n - 1 || !g.is_connected()) {
        throw InputError("graph is not a tree");
    }
    if (g.max_degree() <= 1) {
        return n == 1 ? make_result(IncidenceColoring::blank(g, 0), "tree", true) : color_path(g);
    }
    const int delta = static_cast<int>(g.max_degree());
    Vertex root = 1;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (g.degree(v) == g.max_degree()) {
            root = v;
            break;
        }
    }
    IncidenceColoring c = IncidenceColoring::blank(g, delta);
    std::vector<Vertex> parent(n + 1, 0);
    std::vector<Vertex> queue;
    queue.reserve(n);
    queue.push_back(root);
    int i = 0;
    for (Vertex u : g.neighbors(root)) {
        ++i;
        c.colors[*g.slot(root, u)] = (i - 1) % delta;
        c.colors[*g.slot(u, root)] = i % delta;
        parent[u] = root;
        queue.push_back(u);
    }
    for (std::size_t head = 1; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        const Vertex v = parent[u];
        const Color up = c.colors[*g.slot(u, v)];
        const Color down = c.colors[*g.slot(v, u)];
        i = 0;
        const std::size_t first = g.first_slot(u);
        for (std::size_t s = first; s < first + g.degree(u); ++s) {
            const Vertex w = g.slot_neighbor(s);
            if (w == v) {
                continue;
            }
            ++i;
            c.colors[s] = (up + i) % delta;
            c.colors[g.mate(s)] = (down + i) % delta;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    return make_result(std::move(c), "tree", true);
}

DefectiveColoringResult color_complete_bipartite(const Graph& g)
{
    if (g.vertex_count() == 2 && g.edge_count() == 1) {
        return color_path(g);
    }
    GraphClass cls = classify(g);
    if (cls.tag != ClassTag::CompleteBipartite) {
        // Paths P_3 and the 4-cycle are classified earlier but are complete bipartite too.
        auto side = g.is_connected() ? bipartition(g) : std::nullopt;
        if (!side) {
            throw InputError("graph is not complete bipartite");
        }
        cls.part_a.clear();
        cls.part_b.clear();
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            ((*side)[v] == 0 ? cls.part_a : cls.part_b).push_back(v);
        }
        if (cls.part_a.size() * cls.part_b.size() != g.edge_count()) {
            throw InputError("graph is not complete bipartite");
        }
        if (cls.part_a.size() < cls.part_b.size()) {
            std::swap(cls.part_a, cls.part_b);
        }
    }
    const int m = static_cast<int>(cls.part_a.size());
    IncidenceColoring c = IncidenceColoring::blank(g, m);
    for (int j = 1; j <= m; ++j) {
        const Vertex uj = cls.part_a[static_cast<std::size_t>(j - 1)];
        for (int i = 1; i <= static_cast<int>(cls.part_b.size()); ++i) {
            const Vertex vi = cls.part_b[static_cast<std::size_t>(i - 1)];
            c.set(g, vi, uj, (i + j - 1) % m);
            c.set(g, uj, vi, (i + j) % m);
        }
    }
    return make_result(std::move(c), "complete-bipartite", true);
}

DefectiveColoringResult color_complete(Vertex n, int d)
{
    if (n < 1 || d < 1) {
        throw InputError("color_complete needs n >= 1 and d >= 1");
    }
    const Graph g = make_complete(n);
    if (n == 1) {
        return make_result(IncidenceColoring::blank(g, 0), "complete", true);
    }
    if (n == 2) {
        return color_path(g);
    }
    if (n == 4) {
        const auto& table = d == 1 ? kK4OneDefective : kK4TwoDefective;
        IncidenceColoring c = IncidenceColoring::blank(g, d == 1 ? 4 : 3);
        for (const TableEntry& e : table) {
            c.set(g, e.at, e.other, e.color);
        }
        return make_result(std::move(c), "complete-table", true);
    }
    const LatinSquare l = latin_square_no_principal(static_cast<std::size_t>(n));
    IncidenceColoring c = IncidenceColoring::blank(g, n - 1);
    for (std::size_t s = 0; s < g.incidence_count(); ++s) {
        const auto i = static_cast<std::size_t>(g.slot_vertex(s) - 1);
        const auto j = static_cast<std::size_t>(g.slot_neighbor(s) - 1);
        c.colors[s] = static_cast<Color>(l.at(i, j)) - 1;
    }
    return make_result(std::move(c), "latin", true);
}

DefectiveColoringResult color(const Graph& g, int d)
{
    if (d < 1) {
        throw InputError("color needs d >= 1");
    }
    const GraphClass cls = classify(g);
    DefectiveColoringResult r;
    switch (cls.tag) {
    case ClassTag::Empty:
        r = make_result(IncidenceColoring::blank(g, 0), "empty", true);
        break;
    case ClassTag::MatchingK2s:
        r = color_linear_forest_or_cycles(g);
        r.method = "matching";
        break;
    case ClassTag::Path:
        r = color_path(g);
        break;
    case ClassTag::Cycle:
        r = color_cycle(g);
        break;
    case ClassTag::Complete:
        r = color_complete(g.vertex_count(), d);
        break;
    case ClassTag::CompleteBipartite:
        r = color_complete_bipartite(g);
        break;
    case ClassTag::Tree:
        r = color_tree(g);
        break;
    case ClassTag::SubcubicCandidate:
    case ClassTag::General: {
        std::string why;
        try {
            r = color_outerplanar(g, d);
            break;
        } catch (const UnsupportedGraph& e) {
            why = e.what();
        }
        if (g.incidence_count() > 16) {
            throw UnsupportedGraph("no construction applies (" + why + ")");
        }
        SearchStats stats;
        const auto k = exact_defective_chromatic(g, d, static_cast<int>(g.incidence_count()), kDefaultNodeBudget, &stats);
        if (!k) {
            throw InternalError("oracle found no coloring within the trivial bound");
        }
        r = make_result(*find_coloring_exhaustive(g, d, *k).coloring, "oracle", true);
        break;
    }
    }
    r.d_claimed = d;
    if (r.k == trivial_lower_bound(g)) {
        r.proven_optimal = true;
    }
    if (!check_defective(g, r.coloring, d).valid()) {
        throw InternalError("construction '" + r.method + "' produced an invalid coloring");
    }
    return r;
}

} // namespace incolor

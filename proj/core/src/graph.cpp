#include "incolor/graph.hpp"

#include "incolor/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace incolor {

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges)
{
    if (n < 0) {
        throw InputError("vertex count must be non-negative");
    }
    Graph g;
    g.n_ = n;
    std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 2, 0);
    for (const Edge& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
            throw InputError("vertex id out of range in edge " + std::to_string(e.u) + " " +
                             std::to_string(e.v));
        }
        if (e.u == e.v) {
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        }
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (Vertex v = 1; v <= n; ++v) {
        g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    }
    g.neighbors_.resize(g.offsets_[n + 1]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end());
    for (const Edge& e : edges) {
        g.neighbors_[fill[e.u]++] = e.v;
        g.neighbors_[fill[e.v]++] = e.u;
    }
    g.owner_.resize(g.neighbors_.size());
    for (Vertex v = 1; v <= n; ++v) {
        auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last) {
            throw InputError("duplicate edge " + std::to_string(std::min(v, *dup)) + " " +
                             std::to_string(std::max(v, *dup)));
        }
        std::fill(g.owner_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.owner_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]), v);
        g.max_degree_ = std::max(g.max_degree_, g.degree(v));
    }
    g.mate_.resize(g.neighbors_.size());
    for (std::size_t s = 0; s < g.neighbors_.size(); ++s) {
        g.mate_[s] = *g.slot(g.neighbors_[s], g.owner_[s]);
    }
    return g;
}

std::size_t Graph::min_degree() const
{
    std::size_t best = n_ == 0 ? 0 : max_degree_;
    for (Vertex v = 1; v <= n_; ++v) {
        best = std::min(best, degree(v));
    }
    return best;
}

std::optional<std::size_t> Graph::slot(Vertex at, Vertex other) const
{
    if (at < 1 || at > n_) {
        return std::nullopt;
    }
    auto nb = neighbors(at);
    auto it = std::lower_bound(nb.begin(), nb.end(), other);
    if (it == nb.end() || *it != other) {
        return std::nullopt;
    }
    return offsets_[at] + static_cast<std::size_t>(it - nb.begin());
}

std::size_t Graph::slot_of(const Incidence& inc) const
{
    auto s = slot(inc.vertex, inc.other());
    if (!s || (inc.vertex != inc.edge.u && inc.vertex != inc.edge.v)) {
        throw InputError("incidence (" + std::to_string(inc.vertex) + ", {" +
                         std::to_string(inc.edge.u) + "," + std::to_string(inc.edge.v) +
                         "}) is not in the graph");
    }
    return *s;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 1; u <= n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

std::size_t Graph::component_count() const
{
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<Vertex> stack;
    std::size_t comps = 0;
    for (Vertex s = 1; s <= n_; ++s) {
        if (seen[s]) {
            continue;
        }
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

bool Graph::is_connected() const { return component_count() <= 1; }

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

// Parses exactly two integers separated by whitespace.
bool parse_pair(std::string_view line, long long& a, long long& b)
{
    auto skip_ws = [&](std::size_t i) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        return i;
    };
    std::size_t i = skip_ws(0);
    auto r1 = std::from_chars(line.data() + i, line.data() + line.size(), a);
    if (r1.ec != std::errc{} || r1.ptr == line.data() + i) {
        return false;
    }
    i = static_cast<std::size_t>(r1.ptr - line.data());
    std::size_t j = skip_ws(i);
    if (j == i) {
        return false;
    }
    auto r2 = std::from_chars(line.data() + j, line.data() + line.size(), b);
    if (r2.ec != std::errc{} || r2.ptr == line.data() + j) {
        return false;
    }
    return skip_ws(static_cast<std::size_t>(r2.ptr - line.data())) == line.size();
}

} // namespace

Graph load_graph(std::string_view text)
{
    std::vector<Edge> edges;
    long long n = -1;
    long long m = -1;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::vector<std::pair<Edge, std::size_t>> seen;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty()) {
            continue;
        }
        long long a = 0;
        long long b = 0;
        if (!parse_pair(line, a, b)) {
            throw InputError("line " + std::to_string(line_no) + ": malformed line '" +
                             std::string(line) + "'");
        }
        if (n < 0) {
            if (a < 0 || b < 0 || a > 50'000'000) {
                throw InputError("line " + std::to_string(line_no) + ": bad header");
            }
            n = a;
            m = b;
            continue;
        }
        if (static_cast<long long>(edges.size()) >= m) {
            throw InputError("line " + std::to_string(line_no) + ": more edges than declared");
        }
        if (a < 1 || a > n || b < 1 || b > n) {
            throw InputError("line " + std::to_string(line_no) + ": vertex id out of range");
        }
        if (a == b) {
            throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                             std::to_string(a));
        }
        edges.push_back(Edge::canonical(static_cast<Vertex>(a), static_cast<Vertex>(b)));
        seen.emplace_back(edges.back(), line_no);
    }
    if (n < 0) {
        throw InputError("line 1: missing header \"n m\"");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw InputError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
        if (seen[i].first == seen[i - 1].first) {
            throw InputError("line " + std::to_string(std::max(seen[i].second, seen[i - 1].second)) +
                             ": duplicate edge " + std::to_string(seen[i].first.u) + " " +
                             std::to_string(seen[i].first.v));
        }
    }
    return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

std::string_view to_string(ClassTag tag)
{
    switch (tag) {
    case ClassTag::Empty: return "Empty";
    case ClassTag::MatchingK2s: return "MatchingK2s";
    case ClassTag::Path: return "Path";
    case ClassTag::Cycle: return "Cycle";
    case ClassTag::Complete: return "Complete";
    case ClassTag::CompleteBipartite: return "CompleteBipartite";
    case ClassTag::Tree: return "Tree";
    case ClassTag::SubcubicCandidate: return "SubcubicCandidate";
    case ClassTag::General: return "General";
    }
    return "General";
}

std::optional<std::vector<int>> bipartition(const Graph& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    std::vector<Vertex> stack;
    for (Vertex s = 1; s <= g.vertex_count(); ++s) {
        if (side[s] >= 0) {
            continue;
        }
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

namespace {

// Walks a connected graph of max degree 2 starting at `start`.
std::vector<Vertex> walk(const Graph& g, Vertex start)
{
    std::vector<Vertex> order{start};
    Vertex prev = 0;
    Vertex cur = start;
    while (true) {
        Vertex next = 0;
        for (Vertex w : g.neighbors(cur)) {
            if (w != prev && w != start) {
                next = w;
                break;
            }
        }
        if (next == 0 || static_cast<Vertex>(order.size()) == g.vertex_count()) {
            break;
        }
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

GraphClass classify(const Graph& g)
{
    GraphClass out;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const std::size_t m = g.edge_count();
    const std::size_t delta = g.max_degree();
    if (m == 0) {
        out.tag = ClassTag::Empty;
        return out;
    }
    if (delta == 1) {
        out.tag = ClassTag::MatchingK2s;
        return out;
    }
    const bool connected = g.is_connected();
    if (connected && delta == 2 && m == n - 1) {
        out.tag = ClassTag::Path;
        Vertex end = 1;
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            if (g.degree(v) == 1) {
                end = v;
                break;
            }
        }
        out.order = walk(g, end);
        return out;
    }
    if (connected && delta == 2 && g.min_degree() == 2) {
        out.tag = ClassTag::Cycle;
        out.order = walk(g, 1);
        return out;
    }
    if (n >= 3 && m == n * (n - 1) / 2) {
        out.tag = ClassTag::Complete;
        return out;
    }
    if (connected) {
        if (auto side = bipartition(g)) {
            std::vector<Vertex> a;
            std::vector<Vertex> b;
            for (Vertex v = 1; v <= g.vertex_count(); ++v) {
                ((*side)[v] == 0 ? a : b).push_back(v);
            }
            if (a.size() * b.size() == m) {
                if (a.size() < b.size()) {
                    std::swap(a, b);
                }
                out.tag = ClassTag::CompleteBipartite;
                out.part_a = std::move(a);
                out.part_b = std::move(b);
                return out;
            }
        }
        if (m == n - 1) {
            out.tag = ClassTag::Tree;
            return out;
        }
        if (delta <= 3) {
            out.tag = ClassTag::SubcubicCandidate;
            return out;
        }
    }
    out.tag = ClassTag::General;
    return out;
}

} // namespace incolor

#include "incolor/generate.hpp"

#include "incolor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace incolor {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void require(bool ok, const char* what)
{
    if (!ok) {
        throw InputError(what);
    }
}

double log_catalan(int m)
{
    return std::lgamma(2.0 * m + 1.0) - std::lgamma(m + 2.0) - std::lgamma(m + 1.0);
}

} // namespace

std::uint64_t CounterRng::next() { return mix64(seed_ + (++counter_) * kGolden); }

std::uint64_t CounterRng::below(std::uint64_t bound)
{
    // Rejection keeps the draw exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) {
        x = next();
    }
    return x % bound;
}

double CounterRng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

CounterRng CounterRng::split(std::uint64_t stream) const
{
    return CounterRng(mix64(seed_ ^ mix64(stream + kGolden)));
}

Graph make_path(Vertex n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 1; i < n; ++i) {
        e.push_back({i, i + 1});
    }
    return Graph::from_edges(n, e);
}

Graph make_cycle(Vertex n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex i = 1; i < n; ++i) {
        e.push_back({i, i + 1});
    }
    e.push_back({1, n});
    return Graph::from_edges(n, e);
}

Graph make_star(Vertex n)
{
    require(n >= 1, "star needs n >= 1 leaves");
    std::vector<Edge> e;
    for (Vertex i = 2; i <= n + 1; ++i) {
        e.push_back({1, i});
    }
    return Graph::from_edges(n + 1, e);
}

Graph make_complete(Vertex n)
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j) {
            e.push_back({i, j});
        }
    }
    return Graph::from_edges(n, e);
}

Graph make_complete_bipartite(Vertex m, Vertex n)
{
    require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 1; i <= m; ++i) {
        for (Vertex j = 1; j <= n; ++j) {
            e.push_back({i, m + j});
        }
    }
    return Graph::from_edges(m + n, e);
}

Graph make_fan(Vertex n)
{
    require(n >= 1, "fan needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 2; i <= n + 1; ++i) {
        e.push_back({1, i});
        if (i <= n) {
            e.push_back({i, i + 1});
        }
    }
    return Graph::from_edges(n + 1, e);
}

Graph make_random_tree(Vertex n, std::uint64_t seed)
{
    require(n >= 1, "tree needs n >= 1");
    if (n <= 2) {
        return make_path(n);
    }
    CounterRng rng(seed);
    std::vector<Vertex> code(static_cast<std::size_t>(n) - 2);
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 1);
    for (auto& c : code) {
        c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)) + 1);
        ++deg[c];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 1; v <= n; ++v) {
        if (deg[v] == 1) {
            leaves.push(v);
        }
    }
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n) - 1);
    for (Vertex c : code) {
        Vertex leaf = leaves.top();
        leaves.pop();
        e.push_back(Edge::canonical(leaf, c));
        if (--deg[c] == 1) {
            leaves.push(c);
        }
    }
    Vertex a = leaves.top();
    leaves.pop();
    Vertex b = leaves.top();
    e.push_back(Edge::canonical(a, b));
    return Graph::from_edges(n, e);
}

namespace {

// Chords of a uniformly random triangulation of the polygon 1..n.
std::vector<Edge> random_triangulation_chords(Vertex n, CounterRng& rng)
{
    std::vector<Edge> chords;
    std::vector<std::pair<Vertex, Vertex>> stack{{1, n}};
    std::vector<double> weight;
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        if (j - i < 2) {
            continue;
        }
        // Apex k splits (i..k) and (k..j); triangulation counts multiply.
        weight.clear();
        double top = -1e300;
        for (Vertex k = i + 1; k < j; ++k) {
            double w = log_catalan(k - i - 1) + log_catalan(j - k - 1);
            weight.push_back(w);
            top = std::max(top, w);
        }
        double total = 0;
        for (double& w : weight) {
            w = std::exp(w - top);
            total += w;
        }
        double r = rng.unit() * total;
        Vertex k = j - 1;
        for (std::size_t t = 0; t < weight.size(); ++t) {
            if (r < weight[t]) {
                k = i + 1 + static_cast<Vertex>(t);
                break;
            }
            r -= weight[t];
        }
        if (k - i >= 2) {
            chords.push_back({i, k});
        }
        if (j - k >= 2) {
            chords.push_back({k, j});
        }
        stack.emplace_back(i, k);
        stack.emplace_back(k, j);
    }
    return chords;
}

} // namespace

Graph make_random_maximal_outerplanar(Vertex n, std::uint64_t seed)
{
    require(n >= 3, "maximal outerplanar graph needs n >= 3");
    return make_random_outerplanar(n, 0.0, seed);
}

Graph make_random_outerplanar(Vertex n, double p, std::uint64_t seed)
{
    require(n >= 3, "outerplanar generator needs n >= 3");
    require(p >= 0.0 && p <= 1.0, "deletion probability must lie in [0, 1]");
    CounterRng rng(seed);
    CounterRng shape = rng.split(1);
    CounterRng drop = rng.split(2);
    std::vector<Edge> e;
    for (Vertex i = 1; i < n; ++i) {
        e.push_back({i, i + 1});
    }
    e.push_back({1, n});
    for (const Edge& c : random_triangulation_chords(n, shape)) {
        if (!(drop.unit() < p)) {
            e.push_back(c);
        }
    }
    return Graph::from_edges(n, e);
}

Graph trim_max_degree(const Graph& g, std::size_t max_degree, std::uint64_t seed)
{
    CounterRng rng(seed);
    const Vertex n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
    for (Vertex v = 1; v <= n; ++v) {
        adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    }
    for (Vertex v = 1; v <= n; ++v) {
        while (adj[v].size() > max_degree) {
            std::size_t pick = rng.below(adj[v].size());
            Vertex w = adj[v][pick];
            adj[v].erase(adj[v].begin() + static_cast<std::ptrdiff_t>(pick));
            adj[w].erase(std::find(adj[w].begin(), adj[w].end(), v));
        }
    }
    std::vector<Edge> e;
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex w : adj[v]) {
            if (v < w) {
                e.push_back({v, w});
            }
        }
    }
    return Graph::from_edges(n, e);
}

Graph make_petersen()
{
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.push_back(Edge::canonical(1 + i, 1 + (i + 1) % 5));
        e.push_back(Edge::canonical(1 + i, 6 + i));
        e.push_back(Edge::canonical(6 + i, 6 + (i + 2) % 5));
    }
    return Graph::from_edges(10, e);
}

Graph make_obstruction_h()
{
    const std::vector<Edge> e{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 5}};
    return Graph::from_edges(5, e);
}

} // namespace incolor

#include "incolor/outerplanar.hpp"

#include "incolor/errors.hpp"
#include "incolor/oracle.hpp"
#include "incolor/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_map>

namespace incolor {

std::string_view to_string(ConfigKind k)
{
    switch (k) {
    case ConfigKind::C1: return "C1";
    case ConfigKind::C2: return "C2";
    case ConfigKind::C3: return "C3";
    case ConfigKind::C4: return "C4";
    }
    return "?";
}

std::string_view to_string(C4Kind k)
{
    switch (k) {
    case C4Kind::None: return "none";
    case C4Kind::R2: return "R2";
    case C4Kind::R3: return "R3";
    case C4Kind::TRI234: return "TRI234";
    case C4Kind::T1: return "T1";
    case C4Kind::T2: return "T2";
    case C4Kind::T3: return "T3";
    case C4Kind::Fallback: return "fallback";
    }
    return "?";
}

namespace {

// Mutable adjacency used by the reductions. Neighbour lists are unordered.
class DynamicGraph {
public:
    explicit DynamicGraph(const Graph& g)
        : adj_(static_cast<std::size_t>(g.vertex_count()) + 1),
          alive_(static_cast<std::size_t>(g.vertex_count()) + 1, 1),
          alive_count_(static_cast<std::size_t>(g.vertex_count())),
          edges_(g.edge_count())
    {
        alive_[0] = 0;
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            auto nb = g.neighbors(v);
            adj_[v].assign(nb.begin(), nb.end());
        }
    }

    Vertex vertex_count() const { return static_cast<Vertex>(adj_.size()) - 1; }
    bool alive(Vertex v) const { return alive_[v] != 0; }
    std::size_t alive_count() const { return alive_count_; }
    std::size_t edge_count() const { return edges_; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    bool has_edge(Vertex a, Vertex b) const
    {
        const auto& list = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
        const Vertex target = adj_[a].size() <= adj_[b].size() ? b : a;
        return std::find(list.begin(), list.end(), target) != list.end();
    }

    void remove_edge(Vertex a, Vertex b)
    {
        erase_from(adj_[a], b);
        erase_from(adj_[b], a);
        --edges_;
    }
    void add_edge(Vertex a, Vertex b)
    {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        ++edges_;
    }
    void remove_vertex(Vertex v)
    {
        if (!adj_[v].empty()) {
            throw InternalError("removing a vertex that still has edges");
        }
        alive_[v] = 0;
        --alive_count_;
    }
    void restore_vertex(Vertex v)
    {
        alive_[v] = 1;
        ++alive_count_;
    }

private:
    static void erase_from(std::vector<Vertex>& list, Vertex x)
    {
        auto it = std::find(list.begin(), list.end(), x);
        if (it == list.end()) {
            throw InternalError("removing a missing edge");
        }
        *it = list.back();
        list.pop_back();
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> alive_;
    std::size_t alive_count_;
    std::size_t edges_;
};

// Partial incidence coloring keyed by (vertex, neighbour).
class ColorMap {
public:
    static std::uint64_t key(Vertex at, Vertex other)
    {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(at)) << 32) | static_cast<std::uint32_t>(other);
    }
    Color get(Vertex at, Vertex other) const
    {
        auto it = map_.find(key(at, other));
        return it == map_.end() ? kUncolored : it->second;
    }
    void set(Vertex at, Vertex other, Color c) { map_[key(at, other)] = c; }
    void clear(Vertex at, Vertex other) { map_.erase(key(at, other)); }
    void reserve(std::size_t n) { map_.reserve(n); }

private:
    std::unordered_map<std::uint64_t, Color> map_;
};

// ---------------------------------------------------------------------------
// Configuration detection, shared by Graph and DynamicGraph.

template <class G>
Vertex other_neighbor(const G& g, Vertex v, Vertex not_this)
{
    for (Vertex a : g.neighbors(v)) {
        if (a != not_this) {
            return a;
        }
    }
    return 0;
}

template <class G>
bool c1_at(const G& g, Vertex u, Configuration& out)
{
    if (g.degree(u) > 1) {
        return false;
    }
    out = Configuration{ConfigKind::C1, u, g.degree(u) == 1 ? g.neighbors(u)[0] : 0};
    return true;
}

template <class G>
bool c2_at(const G& g, Vertex u, Configuration& out)
{
    if (g.degree(u) != 2) {
        return false;
    }
    Vertex best = 0;
    for (Vertex a : g.neighbors(u)) {
        if (g.degree(a) == 2 && (best == 0 || a < best)) {
            best = a;
        }
    }
    if (best == 0) {
        return false;
    }
    out = Configuration{ConfigKind::C2, u, best};
    return true;
}

template <class G>
bool c3_at(const G& g, Vertex u, Configuration& out)
{
    if (g.degree(u) != 2) {
        return false;
    }
    Vertex a = g.neighbors(u)[0];
    Vertex b = g.neighbors(u)[1];
    if (a > b) {
        std::swap(a, b);
    }
    if (!g.has_edge(a, b)) {
        return false;
    }
    if (g.degree(a) == 3) {
        out = Configuration{ConfigKind::C3, u, a, b};
        return true;
    }
    if (g.degree(b) == 3) {
        out = Configuration{ConfigKind::C3, u, b, a};
        return true;
    }
    return false;
}

template <class G>
bool c4_at(const G& g, Vertex u, Configuration& out)
{
    if (g.degree(u) != 4) {
        return false;
    }
    // (v, x) with deg v = 2 and triangle u v x.
    std::vector<std::pair<Vertex, Vertex>> wings;
    for (Vertex v : g.neighbors(u)) {
        if (g.degree(v) != 2) {
            continue;
        }
        const Vertex x = other_neighbor(g, v, u);
        if (g.has_edge(u, x)) {
            wings.emplace_back(v, x);
        }
    }
    std::sort(wings.begin(), wings.end());
    std::optional<Configuration> shared;
    for (std::size_t i = 0; i < wings.size(); ++i) {
        for (std::size_t j = i + 1; j < wings.size(); ++j) {
            const auto [v, x] = wings[i];
            const auto [w, y] = wings[j];
            if (x == w || y == v) {
                continue;
            }
            Configuration c{ConfigKind::C4, u, v, w, x, y};
            if (x != y) {
                out = c;
                return true;
            }
            if (!shared) {
                shared = c;
            }
        }
    }
    if (shared) {
        out = *shared;
        return true;
    }
    return false;
}

template <class G>
bool configuration_at(const G& g, Vertex u, ConfigKind kind, Configuration& out)
{
    switch (kind) {
    case ConfigKind::C1: return c1_at(g, u, out);
    case ConfigKind::C2: return c2_at(g, u, out);
    case ConfigKind::C3: return c3_at(g, u, out);
    case ConfigKind::C4: return c4_at(g, u, out);
    }
    return false;
}

struct C4Decision {
    C4Kind kind = C4Kind::None;
    bool mirrored = false; // the rule acts on the w/y side
};

template <class G>
C4Decision decide_c4(const G& g, const Configuration& c, int big_delta)
{
    const std::size_t dx = g.degree(c.x);
    const std::size_t dy = g.degree(c.y);
    if (big_delta >= 6) {
        return {C4Kind::R2, false};
    }
    if (big_delta == 5) {
        if (dx <= 3) return {C4Kind::R2, false};
        if (dy <= 3) return {C4Kind::R2, true};
        if (dx == 4) return {C4Kind::R3, false};
        if (dy == 4) return {C4Kind::R3, true};
        return {c.x == c.y ? C4Kind::Fallback : C4Kind::T3, false};
    }
    if (dx <= 2) return {C4Kind::R2, false};
    if (dy <= 2) return {C4Kind::R2, true};
    if (dx == 3) return {C4Kind::TRI234, false};
    if (dy == 3) return {C4Kind::TRI234, true};
    if (c.x == c.y) {
        return {C4Kind::Fallback, false};
    }
    return {g.has_edge(c.x, c.y) ? C4Kind::T2 : C4Kind::T1, false};
}

// ---------------------------------------------------------------------------
// Local extension search.

enum class Mode { Conditional, Defective };

class LocalSearch {
public:
    LocalSearch(const DynamicGraph& g, ColorMap& colors, int palette, Mode mode, int d, std::uint64_t budget)
        : g_(g), colors_(colors), palette_(palette), mode_(mode), d_(d), budget_(budget),
          strong_(static_cast<std::size_t>(palette), 0), weak_(static_cast<std::size_t>(palette), 0),
          seen_(static_cast<std::size_t>(palette), 0), count_(static_cast<std::size_t>(palette), 0)
    {
    }

    // Colours every incidence of vars (previous colours are discarded).
    bool solve(std::vector<Incidence> vars)
    {
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        vars_ = std::move(vars);
        for (const Incidence& inc : vars_) {
            colors_.clear(inc.vertex, inc.other());
        }
        nodes_ = 0;
        return descend(0);
    }

    // True when every listed vertex satisfies its constraints (uncoloured incidences allowed).
    bool vertices_ok(std::span<const Vertex> vs)
    {
        return std::all_of(vs.begin(), vs.end(), [&](Vertex z) { return vertex_ok(z); });
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool descend(std::size_t i)
    {
        if (i == vars_.size()) {
            return true;
        }
        if (++nodes_ > budget_) {
            return false;
        }
        const Vertex at = vars_[i].vertex;
        const Vertex other = vars_[i].other();
        for (Color c = 0; c < palette_; ++c) {
            colors_.set(at, other, c);
            if (vertex_ok(at) && vertex_ok(other) && descend(i + 1)) {
                return true;
            }
            if (nodes_ > budget_) {
                break;
            }
        }
        colors_.clear(at, other);
        return false;
    }

    bool vertex_ok(Vertex z)
    {
        ++stamp_;
        int distinct = 0;
        int open = 0;
        for (Vertex y : g_.neighbors(z)) {
            const Color s = colors_.get(z, y);
            const Color a = colors_.get(y, z);
            if (s >= 0 && s == a) {
                return false;
            }
            if (s >= 0) {
                if (strong_[s] == stamp_) {
                    return false;
                }
                strong_[s] = stamp_;
                distinct += mark(s);
            } else {
                ++open;
            }
            if (a >= 0) {
                if (mode_ == Mode::Conditional) {
                    if (weak_[a] == stamp_) {
                        return false;
                    }
                    weak_[a] = stamp_;
                    distinct += mark(a);
                } else {
                    if (weak_[a] != stamp_) {
                        weak_[a] = stamp_;
                        count_[a] = 0;
                    }
                    ++count_[a];
                }
            } else {
                ++open;
            }
        }
        if (mode_ == Mode::Defective) {
            for (Vertex y : g_.neighbors(z)) {
                const Color s = colors_.get(z, y);
                if (s >= 0 && weak_[s] == stamp_ && count_[s] > d_) {
                    return false;
                }
            }
            return true;
        }
        if (static_cast<int>(g_.degree(z)) + 1 >= palette_ && distinct + open < palette_) {
            return false;
        }
        return true;
    }

    int mark(Color c)
    {
        if (seen_[c] == stamp_) {
            return 0;
        }
        seen_[c] = stamp_;
        return 1;
    }

    const DynamicGraph& g_;
    ColorMap& colors_;
    int palette_;
    Mode mode_;
    int d_;
    std::uint64_t budget_;
    std::vector<Incidence> vars_;
    std::vector<std::uint64_t> strong_;
    std::vector<std::uint64_t> weak_;
    std::vector<std::uint64_t> seen_;
    std::vector<int> count_;
    std::uint64_t stamp_ = 0;
    std::uint64_t nodes_ = 0;
};

void add_edge_incidences(std::vector<Incidence>& out, Vertex a, Vertex b)
{
    out.push_back(Incidence::of(a, b));
    out.push_back(Incidence::of(b, a));
}

void add_incidences_around(const DynamicGraph& g, std::vector<Incidence>& out, Vertex z)
{
    if (z == 0 || !g.alive(z)) {
        return;
    }
    for (Vertex y : g.neighbors(z)) {
        add_edge_incidences(out, z, y);
    }
}

IncidenceColoring to_coloring(const Graph& g, const ColorMap& colors, int palette)
{
    IncidenceColoring c = IncidenceColoring::blank(g, palette);
    for (std::size_t s = 0; s < g.incidence_count(); ++s) {
        c.colors[s] = colors.get(g.slot_vertex(s), g.slot_neighbor(s));
    }
    return c;
}

ColorMap from_coloring(const Graph& g, const IncidenceColoring& c)
{
    ColorMap m;
    m.reserve(c.colors.size());
    for (std::size_t s = 0; s < g.incidence_count(); ++s) {
        if (c.colors[s] != kUncolored) {
            m.set(g.slot_vertex(s), g.slot_neighbor(s), c.colors[s]);
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Reduction steps.

struct Step {
    Configuration conf;
    C4Kind rule = C4Kind::None;
    std::vector<Vertex> removed_vertices;
    std::vector<Edge> removed_edges;
    std::vector<Edge> added_edges;
    std::vector<Incidence> recolorable;
};

Step plan_conditional_step(const DynamicGraph& g, Configuration c, int big_delta)
{
    Step st;
    auto drop = [&](Vertex a, Vertex b) { st.removed_edges.push_back(Edge::canonical(a, b)); };
    switch (c.kind) {
    case ConfigKind::C1:
        if (c.v != 0) {
            drop(c.u, c.v);
        }
        st.removed_vertices.push_back(c.u);
        break;
    case ConfigKind::C2:
        st.rule = C4Kind::R2;
        drop(c.u, c.v);
        break;
    case ConfigKind::C3:
        if (big_delta >= 5) {
            st.rule = C4Kind::R2;
            drop(c.u, c.v);
        } else if (g.degree(c.w) == 2) {
            st.rule = C4Kind::R2;
            drop(c.u, c.w);
        } else if (g.degree(c.w) == 3) {
            st.rule = C4Kind::R3;
            drop(c.u, c.w);
            add_edge_incidences(st.recolorable, c.u, c.v);
        } else {
            st.rule = C4Kind::TRI234;
            drop(c.u, c.v);
        }
        break;
    case ConfigKind::C4: {
        const C4Decision dec = decide_c4(g, c, big_delta);
        if (dec.mirrored) {
            std::swap(c.v, c.w);
            std::swap(c.x, c.y);
        }
        c.c4 = dec.kind;
        st.rule = dec.kind;
        switch (dec.kind) {
        case C4Kind::R2:
            if (big_delta >= 6) {
                drop(c.u, c.v);
            } else {
                drop(c.v, c.x);
            }
            break;
        case C4Kind::R3:
            drop(c.v, c.x);
            add_edge_incidences(st.recolorable, c.u, c.v);
            break;
        case C4Kind::TRI234:
            drop(c.v, c.x);
            break;
        case C4Kind::T1:
            drop(c.u, c.v);
            drop(c.v, c.x);
            drop(c.u, c.w);
            drop(c.w, c.y);
            st.removed_vertices = {c.v, c.w};
            st.added_edges.push_back(Edge::canonical(c.x, c.y));
            add_edge_incidences(st.recolorable, c.u, c.x);
            add_edge_incidences(st.recolorable, c.u, c.y);
            break;
        case C4Kind::T2:
            drop(c.u, c.v);
            drop(c.u, c.w);
            drop(c.u, c.x);
            drop(c.u, c.y);
            drop(c.v, c.x);
            drop(c.w, c.y);
            st.removed_vertices = {c.u, c.v, c.w};
            add_edge_incidences(st.recolorable, c.x, c.y);
            break;
        case C4Kind::T3:
            drop(c.u, c.v);
            st.recolorable.push_back(Incidence::of(c.u, c.x));
            break;
        case C4Kind::Fallback:
        case C4Kind::None:
            st.rule = C4Kind::Fallback;
            drop(c.u, c.v);
            break;
        }
        break;
    }
    }
    st.conf = c;
    return st;
}

void apply(DynamicGraph& g, const Step& st)
{
    for (const Edge& e : st.removed_edges) {
        g.remove_edge(e.u, e.v);
    }
    for (Vertex v : st.removed_vertices) {
        g.remove_vertex(v);
    }
    for (const Edge& e : st.added_edges) {
        g.add_edge(e.u, e.v);
    }
}

void undo(DynamicGraph& g, ColorMap& colors, const Step& st)
{
    for (const Edge& e : st.added_edges) {
        g.remove_edge(e.u, e.v);
        colors.clear(e.u, e.v);
        colors.clear(e.v, e.u);
    }
    for (Vertex v : st.removed_vertices) {
        g.restore_vertex(v);
    }
    for (const Edge& e : st.removed_edges) {
        g.add_edge(e.u, e.v);
    }
}

// Vertices within distance 2 of any of the seeds.
void collect_ball(const DynamicGraph& g, std::span<const Vertex> seeds, std::vector<Vertex>& out)
{
    for (Vertex s : seeds) {
        if (s == 0 || !g.alive(s)) {
            continue;
        }
        out.push_back(s);
        for (Vertex a : g.neighbors(s)) {
            out.push_back(a);
            for (Vertex b : g.neighbors(a)) {
                out.push_back(b);
            }
        }
    }
}

std::vector<Vertex> step_seeds(const Step& st)
{
    std::vector<Vertex> seeds(st.removed_vertices);
    for (const Edge& e : st.removed_edges) {
        seeds.push_back(e.u);
        seeds.push_back(e.v);
    }
    for (const Edge& e : st.added_edges) {
        seeds.push_back(e.u);
        seeds.push_back(e.v);
    }
    return seeds;
}

class Worklist {
public:
    explicit Worklist(Vertex n) : queued_(static_cast<std::size_t>(n) + 1, 0)
    {
        for (Vertex v = 1; v <= n; ++v) {
            push(v);
        }
    }
    void push(Vertex v)
    {
        if (!queued_[v]) {
            queued_[v] = 1;
            queue_.push_back(v);
        }
    }
    std::optional<Vertex> pop()
    {
        if (queue_.empty()) {
            return std::nullopt;
        }
        const Vertex v = queue_.front();
        queue_.pop_front();
        queued_[v] = 0;
        return v;
    }

private:
    std::deque<Vertex> queue_;
    std::vector<char> queued_;
};

constexpr std::uint64_t kLocalBudget = 10'000'000;

// T2 fast path: colours the 14 gadget incidences from the explicit table.
bool t2_fast_path(const DynamicGraph& g, ColorMap& colors, const Configuration& c)
{
    const Vertex x1 = [&] {
        for (Vertex a : g.neighbors(c.x)) {
            if (a != c.u && a != c.v && a != c.y) return a;
        }
        return Vertex{0};
    }();
    const Vertex y1 = [&] {
        for (Vertex a : g.neighbors(c.y)) {
            if (a != c.u && a != c.w && a != c.x) return a;
        }
        return Vertex{0};
    }();
    if (x1 == 0 || y1 == 0) {
        return false;
    }
    const Color p = colors.get(c.x, x1);
    const Color q = colors.get(x1, c.x);
    const Color r = colors.get(c.y, y1);
    const Color s = colors.get(y1, c.y);
    if (p < 0 || q < 0 || r < 0 || s < 0 || p == q) {
        return false;
    }
    // pi maps p -> 0, q -> 1, the rest ascending.
    std::array<int, 4> pi{};
    std::array<int, 4> inv{};
    int next = 2;
    for (int col = 0; col < 4; ++col) {
        pi[col] = col == p ? 0 : col == q ? 1 : next++;
        inv[pi[col]] = col;
    }
    const auto t = t2_table(pi[r] + 1, pi[s] + 1);
    if (!t) {
        return false;
    }
    const auto layout = t2_layout(c.u, c.v, c.w, c.x, c.y);
    for (std::size_t i = 0; i < layout.size(); ++i) {
        colors.set(layout[i].vertex, layout[i].other(), inv[(*t)[i] - 1]);
    }
    return true;
}

} // namespace

// ---------------------------------------------------------------------------

std::optional<Configuration> find_configuration(const Graph& g)
{
    for (ConfigKind kind : {ConfigKind::C1, ConfigKind::C2, ConfigKind::C3, ConfigKind::C4}) {
        for (Vertex u = 1; u <= g.vertex_count(); ++u) {
            Configuration c;
            if (configuration_at(g, u, kind, c)) {
                return c;
            }
        }
    }
    return std::nullopt;
}

C4Kind classify_c4(const Graph& g, const Configuration& conf, int big_delta)
{
    if (big_delta < 4) {
        throw InputError("C4 rules need a palette of at least 4");
    }
    const auto valid_vertex = [&](Vertex v) { return v >= 1 && v <= g.vertex_count(); };
    if (conf.kind != ConfigKind::C4 || !valid_vertex(conf.u) || !valid_vertex(conf.v) || !valid_vertex(conf.w) ||
        !valid_vertex(conf.x) || !valid_vertex(conf.y) || g.degree(conf.u) != 4 || g.degree(conf.v) != 2 ||
        g.degree(conf.w) != 2 || !g.has_edge(conf.u, conf.v) || !g.has_edge(conf.u, conf.w) ||
        !g.has_edge(conf.v, conf.x) || !g.has_edge(conf.u, conf.x) || !g.has_edge(conf.w, conf.y) ||
        !g.has_edge(conf.u, conf.y)) {
        throw InputError("not a C4 configuration of this graph");
    }
    return decide_c4(g, conf, big_delta).kind;
}

std::optional<IncidenceColoring> extend_local(const Graph& g, const IncidenceColoring& partial,
                                              std::span<const Incidence> free,
                                              std::span<const Incidence> recolorable, int big_delta,
                                              std::uint64_t budget)
{
    if (partial.palette != big_delta || partial.colors.size() != g.incidence_count()) {
        throw InputError("partial coloring does not match the graph or palette");
    }
    const DynamicGraph dg(g);
    ColorMap colors = from_coloring(g, partial);
    std::vector<Incidence> vars(free.begin(), free.end());
    vars.insert(vars.end(), recolorable.begin(), recolorable.end());
    for (const Incidence& inc : vars) {
        if (!g.has_edge(inc.edge.u, inc.edge.v)) {
            throw InputError("incidence is not in the graph");
        }
    }
    LocalSearch search(dg, colors, big_delta, Mode::Conditional, 1, budget);
    if (!search.solve(std::move(vars))) {
        return std::nullopt;
    }
    return to_coloring(g, colors, big_delta);
}

// ---------------------------------------------------------------------------
// T1 inspection.

namespace {

struct LambdaSet {
    std::vector<int> later; // indices j > i with t_j in Lambda_i
    const char* letters;    // boundary colours in Lambda_i
};

// Lambda_1 .. Lambda_12.
const std::array<LambdaSet, 12>& lambda_sets()
{
    static const std::array<LambdaSet, 12> sets{{
        {{2, 5, 10}, "cd"},
        {{3, 6, 9, 12}, ""},
        {{4, 7, 9, 12}, ""},
        {{8, 11}, "gh"},
        {{6, 9}, "ab"},
        {{7, 10, 11}, ""},
        {{8, 10, 11}, ""},
        {{12}, "ef"},
        {{10, 12}, "ab"},
        {{11}, "cd"},
        {{12}, "gh"},
        {{}, "ef"},
    }};
    return sets;
}

unsigned set_of(int a, int b) { return (1u << a) | (1u << b); }

bool valid_t1_boundary(int c, int d, int e, int f, int g, int h)
{
    return c != 1 && c != d && d != 2 && g != e && g != h && f != e && f != h;
}

} // namespace

std::optional<T1Solution> check_t1(const T1Boundary& boundary)
{
    for (int v : boundary) {
        if (v < 1 || v > 4) {
            throw InputError("T1 boundary colours must lie in 1..4");
        }
    }
    const auto letter = [&](char ch) { return boundary[static_cast<std::size_t>(ch - 'a')]; };
    const auto& sets = lambda_sets();
    // earlier[j] lists i < j with t_j in Lambda_i.
    std::array<std::vector<int>, 13> earlier;
    std::array<unsigned, 13> banned{};
    for (int i = 1; i <= 12; ++i) {
        for (int j : sets[static_cast<std::size_t>(i - 1)].later) {
            earlier[static_cast<std::size_t>(j)].push_back(i);
        }
        for (const char* p = sets[static_cast<std::size_t>(i - 1)].letters; *p != '\0'; ++p) {
            banned[static_cast<std::size_t>(i)] |= 1u << letter(*p);
        }
    }
    std::array<int, 13> t{};
    int i = 1;
    t[1] = 0;
    // Iterative backtracking over t_1..t_12, colours ascending.
    while (i >= 1) {
        ++t[static_cast<std::size_t>(i)];
        if (t[static_cast<std::size_t>(i)] > 4) {
            t[static_cast<std::size_t>(i)] = 0;
            --i;
            continue;
        }
        const int col = t[static_cast<std::size_t>(i)];
        bool ok = (banned[static_cast<std::size_t>(i)] & (1u << col)) == 0;
        for (int k : earlier[static_cast<std::size_t>(i)]) {
            ok = ok && t[static_cast<std::size_t>(k)] != col;
        }
        if (!ok) {
            continue;
        }
        if (i == 12) {
            T1Solution out{};
            std::copy(t.begin() + 1, t.end(), out.begin());
            return out;
        }
        ++i;
        t[static_cast<std::size_t>(i)] = 0;
    }
    return std::nullopt;
}

bool t1_exceptional(int c, int d, int e, int f, int g, int h)
{
    const unsigned one_two = set_of(1, 2);
    const unsigned cd = set_of(c, d);
    const unsigned ef = set_of(e, f);
    const unsigned gh = set_of(g, h);
    const auto size = [](unsigned s) { return __builtin_popcount(s); };
    if (one_two == ef && size(cd & gh) == 1) {
        if (((cd & gh) & one_two) == 0 || ((cd ^ gh) & one_two) == 0) {
            return true;
        }
    }
    if (cd == gh && size(one_two & ef) == 1) {
        if (((one_two & ef) & cd) == 0 || ((one_two ^ ef) & cd) == 0) {
            return true;
        }
    }
    return false;
}

InspectionReport reducibility_inspection(unsigned jobs)
{
    const auto start = std::chrono::steady_clock::now();
    constexpr int kTotal = 4096;
    jobs = std::clamp(jobs, 1u, 64u);
    struct Chunk {
        std::size_t valid = 0;
        std::vector<T1Boundary> bad;
    };
    std::vector<Chunk> chunks(jobs);
    const auto work = [&](unsigned job) {
        const int lo = kTotal * static_cast<int>(job) / static_cast<int>(jobs);
        const int hi = kTotal * static_cast<int>(job + 1) / static_cast<int>(jobs);
        for (int idx = lo; idx < hi; ++idx) {
            // idx enumerates (c,d,e,f,g,h) with h varying fastest.
            std::array<int, 6> v{};
            int rest = idx;
            for (int p = 5; p >= 0; --p) {
                v[static_cast<std::size_t>(p)] = rest % 4 + 1;
                rest /= 4;
            }
            const auto [c, d, e, f, g, h] = v;
            if (!valid_t1_boundary(c, d, e, f, g, h)) {
                continue;
            }
            ++chunks[job].valid;
            const T1Boundary b{1, 2, c, d, e, f, g, h};
            if (!check_t1(b)) {
                chunks[job].bad.push_back(b);
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(work, j);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    InspectionReport r;
    r.enumerated = kTotal;
    for (const Chunk& ch : chunks) {
        r.valid += ch.valid;
        r.non_extendable.insert(r.non_extendable.end(), ch.bad.begin(), ch.bad.end());
    }
    for (const T1Boundary& b : r.non_extendable) {
        if (!t1_exceptional(b[2], b[3], b[4], b[5], b[6], b[7])) {
            r.residual.push_back(b);
        }
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

std::string inspection_to_json(const InspectionReport& r, int indent)
{
    nlohmann::json doc{{"enumerated", r.enumerated},
                       {"valid", r.valid},
                       {"non_extendable_count", r.non_extendable.size()},
                       {"non_extendable", r.non_extendable},
                       {"residual", r.residual},
                       {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()}};
    return doc.dump(indent);
}

// ---------------------------------------------------------------------------
// T2.

std::span<const T2Case> t2_cases()
{
    static const std::array<T2Case, 6> cases{{
        {1, 2, {3, 1, 4, 1, 4, 2, 3, 2, 2, 1, 4, 3, 3, 4}},
        {1, 3, {3, 1, 4, 1, 4, 3, 2, 3, 3, 1, 4, 2, 2, 4}},
        {2, 1, {3, 4, 3, 4, 4, 3, 4, 3, 2, 1, 2, 1, 3, 4}},
        {2, 3, {1, 2, 1, 4, 4, 3, 2, 1, 3, 4, 1, 4, 2, 3}},
        {3, 2, {1, 3, 1, 4, 2, 4, 2, 1, 4, 3, 1, 2, 3, 4}},
        {3, 4, {3, 4, 2, 1, 4, 2, 4, 2, 3, 1, 3, 1, 2, 4}},
    }};
    return cases;
}

std::array<Incidence, 14> t2_layout(Vertex u, Vertex v, Vertex w, Vertex x, Vertex y)
{
    return {Incidence::of(v, x), Incidence::of(v, u), Incidence::of(w, u), Incidence::of(w, y),
            Incidence::of(x, v), Incidence::of(u, v), Incidence::of(u, w), Incidence::of(y, w),
            Incidence::of(x, u), Incidence::of(u, x), Incidence::of(u, y), Incidence::of(y, u),
            Incidence::of(x, y), Incidence::of(y, x)};
}

std::optional<T2Vector> t2_table(int c, int d)
{
    if (c < 1 || c > 4 || d < 1 || d > 4) {
        throw InputError("T2 boundary colours must lie in 1..4");
    }
    if (c == d) {
        return std::nullopt;
    }
    // Exchanging x with y (and v with w) permutes the positions pairwise.
    constexpr std::array<int, 14> mirror{3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 13, 12};
    for (bool mirrored : {false, true}) {
        // Boundary seen from the (possibly exchanged) x side.
        const int p = mirrored ? c : 1;
        const int q = mirrored ? d : 2;
        const int r = mirrored ? 1 : c;
        const int s = mirrored ? 2 : d;
        std::array<int, 2> rest{};
        int k = 0;
        for (int col = 1; col <= 4; ++col) {
            if (col != p && col != q) {
                rest[static_cast<std::size_t>(k++)] = col;
            }
        }
        for (int swap = 0; swap < 2; ++swap) {
            std::array<int, 5> pi{}; // pi[colour] in table space
            pi[static_cast<std::size_t>(p)] = 1;
            pi[static_cast<std::size_t>(q)] = 2;
            pi[static_cast<std::size_t>(rest[0])] = swap == 0 ? 3 : 4;
            pi[static_cast<std::size_t>(rest[1])] = swap == 0 ? 4 : 3;
            std::array<int, 5> inv{};
            for (int col = 1; col <= 4; ++col) {
                inv[static_cast<std::size_t>(pi[static_cast<std::size_t>(col)])] = col;
            }
            for (const T2Case& tc : t2_cases()) {
                if (tc.c != pi[static_cast<std::size_t>(r)] || tc.d != pi[static_cast<std::size_t>(s)]) {
                    continue;
                }
                T2Vector out{};
                for (std::size_t i = 0; i < 14; ++i) {
                    const std::size_t pos = mirrored ? static_cast<std::size_t>(mirror[i]) : i;
                    out[pos] = inv[static_cast<std::size_t>(tc.t[i])];
                }
                return out;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reduce and extend.

std::optional<IncidenceColoring> conditional_color(const Graph& g, int big_delta, ReductionStats* stats)
{
    if (big_delta < 4) {
        throw InputError("conditional_color needs a palette of at least 4");
    }
    if (g.max_degree() > static_cast<std::size_t>(big_delta)) {
        throw InputError("maximum degree exceeds the palette");
    }
    ReductionStats local;
    ReductionStats& st = stats != nullptr ? *stats : local;

    DynamicGraph dg(g);
    Worklist work(g.vertex_count());
    std::vector<Step> steps;
    std::vector<Vertex> touched;
    while (dg.alive_count() > 0) {
        std::optional<Configuration> found;
        while (!found) {
            const auto v = work.pop();
            if (!v) {
                return std::nullopt;
            }
            if (!dg.alive(*v)) {
                continue;
            }
            for (ConfigKind kind : {ConfigKind::C1, ConfigKind::C2, ConfigKind::C3, ConfigKind::C4}) {
                Configuration c;
                if (configuration_at(dg, *v, kind, c)) {
                    found = c;
                    break;
                }
            }
        }
        Step step = plan_conditional_step(dg, *found, big_delta);
        const std::vector<Vertex> seeds = step_seeds(step);
        touched.clear();
        collect_ball(dg, seeds, touched);
        apply(dg, step);
        collect_ball(dg, seeds, touched);
        for (Vertex t : touched) {
            if (dg.alive(t)) {
                work.push(t);
            }
        }
        ++st.steps;
        ++st.by_kind[static_cast<std::size_t>(step.conf.kind)];
        ++st.by_rule[static_cast<std::size_t>(step.rule)];
        steps.push_back(std::move(step));
    }

    ColorMap colors;
    colors.reserve(g.incidence_count());
    LocalSearch search(dg, colors, big_delta, Mode::Conditional, 1, kLocalBudget);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const Step& step = *it;
        undo(dg, colors, step);
        if (step.rule == C4Kind::T2 && t2_fast_path(dg, colors, step.conf)) {
            const Configuration& c = step.conf;
            const std::array<Vertex, 5> around{c.u, c.v, c.w, c.x, c.y};
            if (search.vertices_ok(around)) {
                ++st.t2_fast_path;
                continue;
            }
        }
        std::vector<Incidence> vars = step.recolorable;
        for (const Edge& e : step.removed_edges) {
            add_edge_incidences(vars, e.u, e.v);
        }
        if (search.solve(vars)) {
            continue;
        }
        // Wider searches: first every edge at the reduced elements, then every
        // edge meeting the configuration.
        ++st.widened;
        for (Vertex z : step_seeds(step)) {
            add_incidences_around(dg, vars, z);
        }
        if (search.solve(vars)) {
            continue;
        }
        for (Vertex z : {step.conf.u, step.conf.v, step.conf.w, step.conf.x, step.conf.y}) {
            add_incidences_around(dg, vars, z);
        }
        if (search.solve(vars)) {
            continue;
        }
        throw InternalError(std::string("extension failed for ") + std::string(to_string(step.conf.kind)) + "/" +
                            std::string(to_string(step.rule)) + " at vertex " + std::to_string(step.conf.u));
    }

    IncidenceColoring out = to_coloring(g, colors, big_delta);
    if (!check_conditional(g, out, big_delta).valid()) {
        throw InternalError("conditional_color produced an invalid coloring");
    }
    return out;
}

std::optional<IncidenceColoring> d2_color_subcubic(const Graph& g)
{
    if (g.max_degree() > 3) {
        throw InputError("d2_color_subcubic needs maximum degree at most 3");
    }
    if (g.max_degree() <= 2) {
        return color_linear_forest_or_cycles(g).coloring;
    }
    DynamicGraph dg(g);
    std::vector<Vertex> stack;
    for (Vertex v = g.vertex_count(); v >= 1; --v) {
        if (g.degree(v) <= 2) {
            stack.push_back(v);
        }
    }
    std::vector<Step> steps;
    while (dg.alive_count() > 0) {
        Vertex u = 0;
        while (!stack.empty() && u == 0) {
            const Vertex v = stack.back();
            stack.pop_back();
            if (dg.alive(v) && dg.degree(v) <= 2) {
                u = v;
            }
        }
        if (u == 0) {
            return std::nullopt;
        }
        Step step;
        step.conf.u = u;
        if (dg.degree(u) <= 1) {
            if (dg.degree(u) == 1) {
                step.removed_edges.push_back(Edge::canonical(u, dg.neighbors(u)[0]));
            }
            step.removed_vertices.push_back(u);
        } else {
            const Vertex v = std::min(dg.neighbors(u)[0], dg.neighbors(u)[1]);
            step.removed_edges.push_back(Edge::canonical(u, v));
        }
        apply(dg, step);
        for (const Edge& e : step.removed_edges) {
            for (Vertex z : {e.u, e.v}) {
                if (dg.alive(z)) {
                    stack.push_back(z);
                }
            }
        }
        steps.push_back(std::move(step));
    }
    ColorMap colors;
    colors.reserve(g.incidence_count());
    LocalSearch search(dg, colors, 3, Mode::Defective, 2, kLocalBudget);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        undo(dg, colors, *it);
        std::vector<Incidence> vars;
        for (const Edge& e : it->removed_edges) {
            add_edge_incidences(vars, e.u, e.v);
        }
        if (search.solve(vars)) {
            continue;
        }
        for (Vertex z : step_seeds(*it)) {
            add_incidences_around(dg, vars, z);
        }
        if (!search.solve(vars)) {
            throw InternalError("subcubic extension failed at vertex " + std::to_string(it->conf.u));
        }
    }
    IncidenceColoring out = to_coloring(g, colors, 3);
    if (!check_defective(g, out, 2).valid()) {
        throw InternalError("d2_color_subcubic produced an invalid coloring");
    }
    return out;
}

namespace {

constexpr std::uint64_t kSubcubicOracleBudget = 10'000'000;

DefectiveColoringResult wrap(IncidenceColoring c, int d, std::string method, bool optimal)
{
    DefectiveColoringResult r;
    r.k = c.palette;
    r.coloring = std::move(c);
    r.d_claimed = d;
    r.method = std::move(method);
    r.proven_optimal = optimal;
    return r;
}

} // namespace

DefectiveColoringResult color_outerplanar(const Graph& g, int d)
{
    if (d < 1) {
        throw InputError("color_outerplanar needs d >= 1");
    }
    const int delta = static_cast<int>(g.max_degree());
    DefectiveColoringResult r;
    if (delta <= 2) {
        r = color_linear_forest_or_cycles(g);
        r.d_claimed = d;
        r.method = delta <= 1 ? "forced" : "orientation";
    } else if (delta >= 4) {
        auto c = conditional_color(g, delta);
        if (!c) {
            throw UnsupportedGraph("no reducible configuration remains, so the graph is not outerplanar");
        }
        r = wrap(std::move(*c), d, "outerplanar-conditional", true);
    } else if (d >= 2) {
        auto c = d2_color_subcubic(g);
        if (!c) {
            throw UnsupportedGraph("no vertex of degree at most 2 remains, so the graph is not outerplanar");
        }
        r = wrap(std::move(*c), d, "outerplanar-subcubic", true);
    } else {
        // Maximum degree 3 with d = 1: 3 colours may or may not suffice.
        SearchResult s = find_coloring_exhaustive(g, 1, 3, kSubcubicOracleBudget);
        if (s.coloring) {
            r = wrap(std::move(*s.coloring), d, "oracle", true);
        } else {
            auto c = conditional_color(g, 4);
            if (!c) {
                throw UnsupportedGraph("no reducible configuration remains, so the graph is not outerplanar");
            }
            r = wrap(std::move(*c), d, "outerplanar-conditional", s.stats.outcome == SearchOutcome::Exhausted);
        }
    }
    if (!check_defective(g, r.coloring, d).valid()) {
        throw InternalError("color_outerplanar produced an invalid coloring");
    }
    return r;
}

} // namespace incolor

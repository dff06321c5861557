#include "incolor/oracle.hpp"

#include "incolor/errors.hpp"
#include "incolor/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>

namespace incolor {

std::string_view to_string(SearchOutcome o)
{
    switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Exhausted: return "exhausted";
    case SearchOutcome::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

class ExhaustiveSearch {
public:
    ExhaustiveSearch(const Graph& g, int d, int k, std::uint64_t budget)
        : g_(g), d_(d), k_(k), budget_(budget), color_(g.incidence_count(), kUncolored),
          strong_(static_cast<std::size_t>(g.vertex_count()) + 1, 0),
          weak_((static_cast<std::size_t>(g.vertex_count()) + 1) * static_cast<std::size_t>(k), 0)
    {
        std::vector<Vertex> vs(static_cast<std::size_t>(g.vertex_count()));
        std::iota(vs.begin(), vs.end(), 1);
        std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<char> listed(g.incidence_count(), 0);
        for (Vertex u : vs) {
            for (std::size_t s = g.first_slot(u); s < g.first_slot(u) + g.degree(u); ++s) {
                if (!listed[s]) {
                    listed[s] = listed[g.mate(s)] = 1;
                    order_.push_back(s);
                    order_.push_back(g.mate(s));
                }
            }
        }
    }

    SearchResult run()
    {
        const auto start = std::chrono::steady_clock::now();
        SearchResult out;
        bool found = false;
        if (k_ >= 1 || order_.empty()) {
            found = descend(0, -1);
        }
        out.stats.nodes = nodes_;
        out.stats.max_depth = max_depth_;
        out.stats.elapsed = std::chrono::steady_clock::now() - start;
        if (found) {
            out.stats.outcome = SearchOutcome::Found;
            out.coloring = IncidenceColoring{k_, color_};
            if (!check_defective(g_, *out.coloring, d_).valid()) {
                throw InternalError("exhaustive search produced an invalid coloring");
            }
        } else {
            out.stats.outcome = over_budget_ ? SearchOutcome::BudgetExceeded : SearchOutcome::Exhausted;
        }
        return out;
    }

private:
    int& weak(Vertex v, Color c) { return weak_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + c]; }

    bool descend(std::size_t pos, int max_used)
    {
        max_depth_ = std::max(max_depth_, pos);
        if (pos == order_.size()) {
            return true;
        }
        if (++nodes_ > budget_) {
            over_budget_ = true;
            return false;
        }
        const std::size_t s = order_[pos];
        const Vertex u = g_.slot_vertex(s);
        const Vertex v = g_.slot_neighbor(s);
        const Color partner = color_[g_.mate(s)];
        const int limit = std::min(k_ - 1, max_used + 1);
        for (Color c = 0; c <= limit; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if ((strong_[u] & bit) || partner == c || weak(u, c) > d_ ||
                ((strong_[v] & bit) && weak(v, c) + 1 > d_)) {
                continue;
            }
            strong_[u] |= bit;
            ++weak(v, c);
            color_[s] = c;
            if (descend(pos + 1, std::max(max_used, c))) {
                return true;
            }
            color_[s] = kUncolored;
            --weak(v, c);
            strong_[u] &= ~bit;
            if (over_budget_) {
                return false;
            }
        }
        return false;
    }

    const Graph& g_;
    int d_;
    int k_;
    std::uint64_t budget_;
    std::vector<std::size_t> order_;
    std::vector<Color> color_;
    std::vector<std::uint64_t> strong_;
    std::vector<int> weak_;
    std::uint64_t nodes_ = 0;
    std::size_t max_depth_ = 0;
    bool over_budget_ = false;
};

} // namespace

SearchResult find_coloring_exhaustive(const Graph& g, int d, int k, std::uint64_t budget)
{
    if (d < 0 || k < 0) {
        throw InputError("d and k must be non-negative");
    }
    if (k > 64) {
        throw InputError("exhaustive search supports at most 64 colours");
    }
    return ExhaustiveSearch(g, d, k, budget).run();
}

std::optional<int> exact_defective_chromatic(const Graph& g, int d, int k_max, std::uint64_t budget,
                                             SearchStats* total)
{
    if (g.edge_count() == 0) {
        return 0;
    }
    for (int k = std::max<int>(1, static_cast<int>(g.max_degree())); k <= k_max; ++k) {
        SearchResult r = find_coloring_exhaustive(g, d, k, budget);
        if (total != nullptr) {
            total->nodes += r.stats.nodes;
            total->max_depth = std::max(total->max_depth, r.stats.max_depth);
            total->elapsed += r.stats.elapsed;
            total->outcome = r.stats.outcome;
        }
        if (r.stats.outcome == SearchOutcome::BudgetExceeded) {
            throw BudgetExceeded("node budget exceeded at k = " + std::to_string(k));
        }
        if (r.coloring) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<int> incidence_defectivity(const Graph& g, int d_max, std::uint64_t budget)
{
    if (g.edge_count() == 0) {
        throw InputError("incidence defectivity needs at least one edge");
    }
    const int delta = static_cast<int>(g.max_degree());
    for (int d = 0; d <= d_max; ++d) {
        SearchResult r = find_coloring_exhaustive(g, d, delta, budget);
        if (r.stats.outcome == SearchOutcome::BudgetExceeded) {
            throw BudgetExceeded("node budget exceeded at d = " + std::to_string(d));
        }
        if (r.coloring) {
            return d;
        }
    }
    return std::nullopt;
}

bool is_bridgeless(const Graph& g)
{
    const std::vector<Edge> all = g.edges();
    const std::size_t base = g.component_count();
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<Edge> rest = all;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (Graph::from_edges(g.vertex_count(), rest).component_count() != base) {
            return false;
        }
    }
    return true;
}

SearchResult snark_check(const Graph& g, std::uint64_t budget)
{
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (g.degree(v) != 3) {
            throw InputError("snark check needs a cubic graph");
        }
    }
    if (!is_bridgeless(g)) {
        throw InputError("snark check needs a bridgeless graph");
    }
    return find_coloring_exhaustive(g, 1, 3, budget);
}

std::string stats_to_json(const SearchStats& s)
{
    nlohmann::json doc{{"nodes", s.nodes},
                       {"max_depth", s.max_depth},
                       {"elapsed_ms", std::chrono::duration<double, std::milli>(s.elapsed).count()},
                       {"outcome", to_string(s.outcome)}};
    return doc.dump();
}

} // namespace incolor

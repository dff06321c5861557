// Acceptance run: one PASS/FAIL line per criterion, with timings.

#include "support.hpp"

#include "incolor/colorers.hpp"
#include "incolor/errors.hpp"
#include "incolor/generate.hpp"
#include "incolor/latin.hpp"
#include "incolor/oracle.hpp"
#include "incolor/outerplanar.hpp"
#include "incolor/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace incolor;

namespace {

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
    Verdict verdict = Verdict::Pass;
    std::string detail;
};

Outcome fail(std::string why) { return {Verdict::Fail, std::move(why)}; }

Outcome latin_sweep()
{
    std::vector<std::size_t> orders;
    for (std::size_t n = 1; n <= 63; n += 2) {
        orders.push_back(n);
    }
    for (std::size_t n = 6; n <= 64; n += 2) {
        orders.push_back(n);
    }
    for (std::size_t n : orders) {
        const LatinSquare l = latin_square_no_principal(n);
        if (!is_latin(n, l.cells())) {
            return fail("order " + std::to_string(n) + " is not Latin");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (l.at(i, i) != 0) {
                return fail("order " + std::to_string(n) + " has a nonzero diagonal");
            }
        }
        if (!find_intercalates(l, true).empty()) {
            return fail("order " + std::to_string(n) + " has a principal intercalate");
        }
    }
    return {Verdict::Pass, std::to_string(orders.size()) + " orders"};
}

Outcome latin_ground_truth()
{
    std::size_t total = 0;
    std::size_t constant = 0;
    std::size_t principal = 0;
    std::size_t free4 = 0;
    enumerate_latin_squares(4, [&](const LatinSquare& l) {
        ++total;
        free4 += find_intercalates(l, false).empty() ? 1 : 0;
        if (l.diagonal_constant()) {
            ++constant;
            principal += has_principal_intercalate(l) ? 1 : 0;
        }
    });
    std::size_t free2 = 0;
    enumerate_latin_squares(2, [&](const LatinSquare& l) { free2 += find_intercalates(l, false).empty() ? 1 : 0; });
    if (total != 576 || constant != 96 || principal != 96 || free4 != 0 || free2 != 0) {
        return fail("counts " + std::to_string(total) + "/" + std::to_string(constant) + "/" +
                    std::to_string(principal) + "/" + std::to_string(free4) + "/" + std::to_string(free2));
    }
    return {Verdict::Pass, "576 squares of order 4, 96 with constant diagonal, all with a principal intercalate"};
}

Outcome complete_graphs()
{
    for (Vertex n = 3; n <= 32; ++n) {
        if (n == 4) {
            continue;
        }
        const auto r = color_complete(n, 1);
        if (r.k != static_cast<int>(n) - 1 || !check_defective(make_complete(n), r.coloring, 1).valid()) {
            return fail("K_" + std::to_string(n));
        }
    }
    const Graph k4 = make_complete(4);
    if (exact_defective_chromatic(k4, 1, 6) != 4 || exact_defective_chromatic(k4, 2, 6) != 3) {
        return fail("oracle values for K4");
    }
    return {Verdict::Pass, "K_3..K_32 and the K4 oracle values"};
}

Outcome trees()
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Graph t = make_random_tree(100000, seed);
        const auto r = color_tree(t);
        if (r.k != static_cast<int>(t.max_degree()) || !check_defective(t, r.coloring, 1).valid()) {
            return fail("tree seed " + std::to_string(seed));
        }
    }
    return {Verdict::Pass, "100 trees on 100000 vertices"};
}

Outcome complete_bipartite()
{
    std::size_t count = 0;
    for (Vertex m = 2; m <= 40; ++m) {
        for (Vertex n = 2; n <= m; ++n) {
            const Graph g = make_complete_bipartite(m, n);
            const auto r = color_complete_bipartite(g);
            if (r.k != static_cast<int>(m) || !check_defective(g, r.coloring, 1).valid()) {
                return fail("K_" + std::to_string(m) + "," + std::to_string(n));
            }
            ++count;
        }
    }
    return {Verdict::Pass, std::to_string(count) + " graphs"};
}

Outcome paths_cycles()
{
    for (Vertex n = 2; n <= 1000; ++n) {
        const Graph p = make_path(n);
        const auto r = color_path(p);
        if (r.k != 2 || !check_defective(p, r.coloring, 1).valid()) {
            return fail("P_" + std::to_string(n));
        }
        if (n >= 3) {
            const Graph c = make_cycle(n);
            const auto s = color_cycle(c);
            if (s.k != 2 || !check_defective(c, s.coloring, 1).valid()) {
                return fail("C_" + std::to_string(n));
            }
        }
    }
    if (exact_defective_chromatic(make_path(5), 1, 4) != 2 || exact_defective_chromatic(make_cycle(5), 1, 4) != 2 ||
        exact_defective_chromatic(make_path(5), 0, 4) != 3) {
        return fail("oracle values for P5/C5");
    }
    return {Verdict::Pass, "n <= 1000 and the P5/C5 oracle values"};
}

Outcome outerplanar_conditional()
{
    std::size_t done = 0;
    std::size_t largest = 0;
    for (std::uint64_t seed = 1; done < 500; ++seed) {
        const std::size_t target = 4 + seed % 5;
        const auto n = static_cast<Vertex>(10 + (seed * 7919) % 1991);
        const Graph base = seed % 3 == 0 ? make_random_maximal_outerplanar(n, seed)
                                         : make_random_outerplanar(n, 0.2 + 0.1 * static_cast<double>(seed % 5), seed);
        const Graph g = trim_max_degree(base, target, seed);
        if (g.max_degree() != target) {
            continue;
        }
        const int delta = static_cast<int>(target);
        const auto c = conditional_color(g, delta);
        if (!c) {
            return fail("no configuration found, seed " + std::to_string(seed));
        }
        if (!check_conditional(g, *c, delta).valid()) {
            return fail("invalid coloring, seed " + std::to_string(seed));
        }
        ++done;
        largest = std::max<std::size_t>(largest, n);
    }
    return {Verdict::Pass, std::to_string(done) + " graphs, up to n = " + std::to_string(largest)};
}

Outcome outerplanar_subcubic()
{
    std::size_t done = 0;
    for (std::uint64_t seed = 1; done < 500; ++seed) {
        const auto n = static_cast<Vertex>(6 + (seed * 104729) % 1995);
        const Graph g = trim_max_degree(make_random_outerplanar(n, 0.1 * static_cast<double>(seed % 6), seed), 3, seed);
        if (g.max_degree() != 3) {
            continue;
        }
        const auto r = color_outerplanar(g, 2);
        if (r.k != 3 || !check_defective(g, r.coloring, 2).valid()) {
            return fail("seed " + std::to_string(seed));
        }
        ++done;
    }
    const Graph h = make_obstruction_h();
    if (find_coloring_exhaustive(h, 1, 3).stats.outcome != SearchOutcome::Exhausted) {
        return fail("H has a 1-defective 3-coloring");
    }
    const auto c = d2_color_subcubic(h);
    if (!c || c->palette != 3 || !check_defective(h, *c, 2).valid()) {
        return fail("H was not 2-defectively 3-colored");
    }
    return {Verdict::Pass, std::to_string(done) + " graphs and H"};
}

Outcome inspection()
{
    const InspectionReport r = reducibility_inspection(1);
    const double s = std::chrono::duration<double>(r.elapsed).count();
    if (!r.residual.empty()) {
        return fail(std::to_string(r.residual.size()) + " residual tuples");
    }
    if (s >= 60.0) {
        return fail("took " + std::to_string(s) + " s");
    }
    return {Verdict::Pass, std::to_string(r.valid) + " valid tuples, " + std::to_string(r.non_extendable.size()) +
                               " non-extendable, empty residual"};
}

Outcome t2_vectors()
{
    // roles u=1, v=2, w=3, x=4, y=5, x1=6, y1=7
    const Graph g = load_graph("7 9\n1 2\n1 3\n1 4\n1 5\n2 4\n3 5\n4 5\n4 6\n5 7");
    const auto layout = t2_layout(1, 2, 3, 4, 5);
    for (const T2Case& tc : t2_cases()) {
        IncidenceColoring col = IncidenceColoring::blank(g, 4);
        col.set(g, 4, 6, 0);
        col.set(g, 6, 4, 1);
        col.set(g, 5, 7, tc.c - 1);
        col.set(g, 7, 5, tc.d - 1);
        for (std::size_t i = 0; i < layout.size(); ++i) {
            col.set(g, layout[i].vertex, layout[i].other(), tc.t[i] - 1);
        }
        if (!check_conditional(g, col, 4).valid()) {
            return fail("case (" + std::to_string(tc.c) + "," + std::to_string(tc.d) + ")");
        }
    }
    return {Verdict::Pass, "6 vectors"};
}

Outcome oracle_cross_check()
{
    std::size_t compared = 0;
    for (Vertex n = 1; n <= 5; ++n) {
        for (const Graph& g : testing::connected_graphs(n)) {
            for (int d : {1, 2}) {
                DefectiveColoringResult r;
                try {
                    r = color(g, d);
                } catch (const UnsupportedGraph&) {
                    continue;
                }
                if (!r.proven_optimal) {
                    continue;
                }
                const auto exact = exact_defective_chromatic(g, d, static_cast<int>(g.incidence_count()) + 1);
                if (exact != r.k) {
                    return fail("graph " + to_edge_list(g) + " d=" + std::to_string(d));
                }
                ++compared;
            }
        }
    }
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Graph g = testing::random_graph(6, 0.5, seed);
        if (g.edge_count() == 0) {
            continue;
        }
        const int bound = static_cast<int>(g.incidence_count());
        const int c0 = *exact_defective_chromatic(g, 0, bound);
        const int c1 = *exact_defective_chromatic(g, 1, bound);
        const int c2 = *exact_defective_chromatic(g, 2, bound);
        if (!(c0 >= c1 && c1 >= c2 && c2 >= static_cast<int>(g.max_degree()))) {
            return fail("chain broken for seed " + std::to_string(seed));
        }
    }
    return {Verdict::Pass, std::to_string(compared) + " optimal claims confirmed, chain holds on 50 graphs"};
}

Outcome snark()
{
    const SearchResult r = snark_check(make_petersen());
    const std::string nodes = std::to_string(r.stats.nodes) + " nodes";
    switch (r.stats.outcome) {
    case SearchOutcome::Exhausted: return {Verdict::Pass, "Petersen exhausted after " + nodes};
    case SearchOutcome::BudgetExceeded: return {Verdict::Skip, "inconclusive after " + nodes};
    case SearchOutcome::Found: return fail("Petersen has a 1-defective 3-coloring");
    }
    return fail("unknown outcome");
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"latin construction sweep", 5, latin_sweep},
        {"order 2 and 4 Latin ground truth", 10, latin_ground_truth},
        {"complete graphs", 10, complete_graphs},
        {"trees", 30, trees},
        {"complete bipartite graphs", 5, complete_bipartite},
        {"paths and cycles", 5, paths_cycles},
        {"outerplanar, d=1, max degree 4..8", 120, outerplanar_conditional},
        {"outerplanar, d=2, subcubic", 60, outerplanar_subcubic},
        {"T1 reducibility inspection", 60, inspection},
        {"T2 table", 1, t2_vectors},
        {"oracle cross-check", 120, oracle_cross_check},
        {"snark check", 600, snark},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.verdict == Verdict::Pass && s > criteria[i].limit_s) {
            o = fail("took " + std::to_string(s) + " s, limit " + std::to_string(criteria[i].limit_s) + " s");
        }
        const char* tag = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Skip ? "SKIP" : "FAIL";
        std::printf("%s %2zu %-36s %8.3f s  %s\n", tag, i + 1, criteria[i].name, s, o.detail.c_str());
        std::fflush(stdout);
        failures += o.verdict == Verdict::Fail ? 1 : 0;
    }
    return failures == 0 ? 0 : 1;
}

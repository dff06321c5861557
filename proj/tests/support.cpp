#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace incolor::testing {

std::vector<Graph> connected_graphs(Vertex n)
{
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::set<unsigned> seen;
    std::vector<Graph> out;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        const std::vector<Edge> edges = edges_from_mask(n, mask);
        std::iota(perm.begin(), perm.end(), 0);
        unsigned best = ~0u;
        do {
            unsigned m = 0;
            for (const Edge& e : edges) {
                int a = perm[static_cast<std::size_t>(e.u - 1)];
                int b = perm[static_cast<std::size_t>(e.v - 1)];
                if (a > b) {
                    std::swap(a, b);
                }
                // index of pair (a, b) in row-major upper-triangle order
                const int idx = a * (2 * n - a - 1) / 2 + (b - a - 1);
                m |= 1u << idx;
            }
            best = std::min(best, m);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(best).second) {
            continue;
        }
        Graph g = Graph::from_edges(n, edges_from_mask(n, best));
        if (g.is_connected()) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace incolor::testing

#pragma once

#include "incolor/coloring.hpp"
#include "incolor/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace incolor {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::uint64_t kSnarkNodeBudget = 10'000'000'000ULL;

enum class SearchOutcome { Found, Exhausted, BudgetExceeded };

std::string_view to_string(SearchOutcome o);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::size_t max_depth = 0;
    std::chrono::nanoseconds elapsed{0};
    SearchOutcome outcome = SearchOutcome::Exhausted;
};

struct SearchResult {
    std::optional<IncidenceColoring> coloring;
    SearchStats stats;
};

/// Complete backtracking search for a d-defective incidence k-coloring.
///
/// Incidences are visited vertex by vertex in order of decreasing degree
/// (ties by id); each vertex contributes both incidences of its not yet listed
/// edges in neighbour order. Colour symmetry is broken by never opening more
/// than one new colour at a time, so the first incidence is always colour 0.
/// Exhausted means no such coloring exists.
SearchResult find_coloring_exhaustive(const Graph& g, int d, int k, std::uint64_t budget = kDefaultNodeBudget);

/// Smallest k <= k_max admitting a d-defective k-coloring, searched upwards
/// from the trivial lower bound max(1, max degree). Throws BudgetExceeded.
std::optional<int> exact_defective_chromatic(const Graph& g, int d, int k_max,
                                             std::uint64_t budget = kDefaultNodeBudget,
                                             SearchStats* total = nullptr);

/// Smallest d <= d_max with chi^d = max degree; nullopt means "exceeds d_max".
/// Requires at least one edge. Throws BudgetExceeded.
std::optional<int> incidence_defectivity(const Graph& g, int d_max, std::uint64_t budget = kDefaultNodeBudget);

/// Looks for a 1-defective 3-coloring of a cubic bridgeless graph. Exhausted
/// supports chi^1 >= 4. Throws InputError when g is not cubic and bridgeless.
SearchResult snark_check(const Graph& g, std::uint64_t budget = kSnarkNodeBudget);

bool is_bridgeless(const Graph& g);

std::string stats_to_json(const SearchStats& s);

} // namespace incolor

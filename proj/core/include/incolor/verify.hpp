#pragma once

#include "incolor/coloring.hpp"
#include "incolor/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace incolor {

/// Which rule a violation breaks.
///
/// StrongRepeat, EdgeClash and WeakOveruse are conditions (a), (b), (c) of a
/// d-defective incidence coloring. EdgeClashConditional, WeakRepeat,
/// StrongRepeatConditional and MissingColor are conditions (i)-(iv) of a
/// conditional incidence coloring.
enum class Condition {
    StrongRepeat,           // (a)
    EdgeClash,              // (b)
    WeakOveruse,            // (c)
    EdgeClashConditional,   // (i)
    WeakRepeat,             // (ii)
    StrongRepeatConditional,// (iii)
    MissingColor,           // (iv)
};

std::string_view condition_label(Condition c);

struct Violation {
    Condition condition;
    Vertex vertex = 0;
    std::vector<Incidence> witnesses;
    /// Offending colour (for (iv): the colour absent from A_u and I_u).
    Color color = kUncolored;
    /// For (c)/(ii)/(iii): how often the colour occurs.
    int multiplicity = 0;
};

struct VerificationReport {
    std::vector<Violation> violations;
    /// Violations beyond the per-condition cap are counted, not listed.
    std::size_t suppressed = 0;

    bool valid() const { return violations.empty() && suppressed == 0; }
};

inline constexpr std::size_t kViolationCap = 100;

/// Checks that c is a d-defective incidence coloring of g. d = 0 is a proper
/// incidence coloring. Throws InputError if c does not cover g exactly.
VerificationReport check_defective(const Graph& g, const IncidenceColoring& c, int d);

/// Smallest d for which check_defective passes; nullopt when (a) or (b) fail.
std::optional<int> defect_of(const Graph& g, const IncidenceColoring& c);

/// Checks that c is a conditional incidence big_delta-coloring of g.
/// Requires max_degree(g) <= big_delta and c.palette == big_delta.
VerificationReport check_conditional(const Graph& g, const IncidenceColoring& c, int big_delta);

std::string report_to_json(const VerificationReport& r, int indent = -1);

} // namespace incolor

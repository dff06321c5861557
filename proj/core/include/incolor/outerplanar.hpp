#pragma once

#include "incolor/colorers.hpp"
#include "incolor/coloring.hpp"
#include "incolor/graph.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace incolor {

enum class ConfigKind { C1, C2, C3, C4 };

/// Rule used to reduce a C4 (and, by extension, C2/C3) configuration.
///
/// R2: an edge ab with deg a = 2 and deg b <= Delta-2 is deleted.
/// R3: a degree-2 vertex whose neighbours both have degree Delta-1 loses one edge.
/// TRI234: a triangle with degrees 2, 3, 4 at Delta = 4.
/// T1, T2, T3: the three C4 gadgets. Fallback: no dedicated rule; generic search.
enum class C4Kind { None, R2, R3, TRI234, T1, T2, T3, Fallback };

std::string_view to_string(ConfigKind k);
std::string_view to_string(C4Kind k);

/// A located configuration. Unused roles are 0.
///
/// C1: u has degree <= 1, v is its neighbour.
/// C2: edge uv with both ends of degree 2.
/// C3: triangle uvw with deg u = 2 and deg v = 3.
/// C4: triangles uvx and uwy with deg u = 4, deg v = deg w = 2.
struct Configuration {
    ConfigKind kind = ConfigKind::C1;
    Vertex u = 0;
    Vertex v = 0;
    Vertex w = 0;
    Vertex x = 0;
    Vertex y = 0;
    C4Kind c4 = C4Kind::None;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// First configuration in kind order C1, C2, C3, C4, scanning vertex ids upwards
/// within each kind. nullopt certifies that g is not outerplanar.
std::optional<Configuration> find_configuration(const Graph& g);

/// Rule for a C4 configuration at palette big_delta >= 4. Throws InputError if
/// conf is not a C4 of g.
C4Kind classify_c4(const Graph& g, const Configuration& conf, int big_delta);

/// Colours the free and recolorable incidences (the latter lose their current
/// colour) so that conditions (i)-(iv) hold at every vertex they touch.
/// Incidences are tried in canonical order, colours lowest first.
/// partial must have palette big_delta; nullopt means the search was exhausted
/// or ran out of budget.
std::optional<IncidenceColoring> extend_local(const Graph& g, const IncidenceColoring& partial,
                                              std::span<const Incidence> free,
                                              std::span<const Incidence> recolorable, int big_delta,
                                              std::uint64_t budget = 10'000'000);

/// Boundary colours around the T1 gadget, each in 1..4: a, b at x (towards x1, x2),
/// c, d the opposite ends of those edges; e, f at y, g, h the opposite ends.
using T1Boundary = std::array<int, 8>;
using T1Solution = std::array<int, 12>;

/// Lexicographically first t_1..t_12 in 1..4 avoiding every Lambda set, or
/// nullopt. Throws InputError for inputs outside 1..4.
std::optional<T1Solution> check_t1(const T1Boundary& boundary);

/// True when (c,d,e,f,g,h) with a = 1, b = 2 lies in one of the four exceptional
/// families that the T1 argument excludes by other means.
bool t1_exceptional(int c, int d, int e, int f, int g, int h);

struct InspectionReport {
    std::size_t enumerated = 0;   // all (c,d,e,f,g,h) in 1..4
    std::size_t valid = 0;        // tuples passing the boundary validity constraints
    std::vector<T1Boundary> non_extendable;
    std::vector<T1Boundary> residual; // non_extendable tuples outside the exceptional families
    std::chrono::nanoseconds elapsed{0};
};

/// Runs check_t1 over every valid boundary with a = 1, b = 2. The enumeration is
/// split over `jobs` threads; the report does not depend on jobs.
InspectionReport reducibility_inspection(unsigned jobs = 1);

std::string inspection_to_json(const InspectionReport& r, int indent = -1);

using T2Vector = std::array<int, 14>;

/// The six explicit T2 extensions, keyed by (c, d), colours 1..4.
struct T2Case {
    int c;
    int d;
    T2Vector t;
};
std::span<const T2Case> t2_cases();

/// T2 extension for boundary (x,xx1) = 1, (x1,xx1) = 2, (y,yy1) = c, (y1,yy1) = d,
/// obtained from the six explicit cases by relabelling colours and, if needed,
/// exchanging the roles of x and y. nullopt when no case applies.
std::optional<T2Vector> t2_table(int c, int d);

/// Gadget positions of t_1..t_14 as incidences over roles u, v, w, x, y.
/// t_1..t_12 also label T1 (which has no xy edge).
std::array<Incidence, 14> t2_layout(Vertex u, Vertex v, Vertex w, Vertex x, Vertex y);

/// Counters filled by conditional_color.
struct ReductionStats {
    std::size_t steps = 0;
    std::array<std::size_t, 4> by_kind{};       // C1..C4
    std::array<std::size_t, 8> by_rule{};       // indexed by C4Kind
    std::size_t t2_fast_path = 0;
    std::size_t widened = 0;                    // extensions that needed a wider search
};

/// Conditional incidence big_delta-coloring by reduce-and-extend over C1-C4.
/// Requires max degree <= big_delta and big_delta >= 4. nullopt when some
/// reduced graph has no configuration (so g is not outerplanar). Every result
/// passes check_conditional. Throws InternalError if an extension fails.
std::optional<IncidenceColoring> conditional_color(const Graph& g, int big_delta, ReductionStats* stats = nullptr);

/// 2-defective 3-coloring of a graph with maximum degree <= 3 by repeatedly
/// removing a vertex of degree <= 2. nullopt when no such vertex remains
/// (g is not outerplanar). Graphs of maximum degree <= 2 get 2 colours.
std::optional<IncidenceColoring> d2_color_subcubic(const Graph& g);

/// Optimal d-defective coloring for outerplanar g. Throws UnsupportedGraph when
/// g turns out not to be outerplanar.
DefectiveColoringResult color_outerplanar(const Graph& g, int d);

} // namespace incolor

#include "incolor/colorers.hpp"
#include "incolor/errors.hpp"
#include "incolor/generate.hpp"
#include "incolor/oracle.hpp"
#include "incolor/outerplanar.hpp"
#include "incolor/verify.hpp"

#include <json.hpp>

#include <doctest.h>

#include <algorithm>

using namespace incolor;

namespace {

Graph t2_gadget()
{
    // roles u=1, v=2, w=3, x=4, y=5, x1=6, y1=7
    return load_graph("7 9\n1 2\n1 3\n1 4\n1 5\n2 4\n3 5\n4 5\n4 6\n5 7");
}

Graph random_outerplanar_instance(std::uint64_t seed, std::size_t max_degree)
{
    const auto n = static_cast<Vertex>(20 + seed % 200);
    const Graph base = seed % 2 == 0 ? make_random_maximal_outerplanar(n, seed)
                                     : make_random_outerplanar(n, 0.3, seed);
    return trim_max_degree(base, max_degree, seed);
}

} // namespace

TEST_SUITE("outerplanar")
{
    TEST_CASE("find_configuration")
    {
        const auto star = find_configuration(make_star(4));
        REQUIRE(star.has_value());
        CHECK(star->kind == ConfigKind::C1);
        CHECK(star->u == 2);

        const auto c6 = find_configuration(make_cycle(6));
        REQUIRE(c6.has_value());
        CHECK(c6->kind == ConfigKind::C2);

        const auto fan = find_configuration(make_fan(5));
        REQUIRE(fan.has_value());
        CHECK(fan->kind == ConfigKind::C3);
        CHECK(fan->u == 2);
        CHECK(fan->v == 3);
        CHECK(fan->w == 1);

        CHECK_FALSE(find_configuration(make_complete(4)).has_value());
        CHECK_FALSE(find_configuration(make_complete_bipartite(3, 2)).has_value());
    }

    TEST_CASE("C4 detection and rules")
    {
        const Graph g = t2_gadget();
        // degree-1 vertices come first, so strip them to reach the C4
        const Graph core = load_graph("5 7\n1 2\n1 3\n1 4\n1 5\n2 4\n3 5\n4 5");
        const auto c = find_configuration(core);
        REQUIRE(c.has_value());
        CHECK(c->kind == ConfigKind::C3);

        const Configuration t2{ConfigKind::C4, 1, 2, 3, 4, 5};
        CHECK(classify_c4(g, t2, 4) == C4Kind::T2);
        CHECK(classify_c4(g, t2, 6) == C4Kind::R2);
        CHECK(classify_c4(g, t2, 5) == C4Kind::R3);

        // T1: same shape without xy, partners of degree 4
        const Graph t1 = load_graph("9 12\n1 2\n1 3\n1 4\n1 5\n2 4\n3 5\n4 6\n4 7\n5 8\n5 9\n6 7\n8 9");
        CHECK(classify_c4(t1, t2, 4) == C4Kind::T1);

        // a partner of degree 3 gives the 2-3-4 triangle
        const Graph tri = load_graph("7 8\n1 2\n1 3\n1 4\n1 5\n2 4\n3 5\n4 6\n5 7");
        CHECK(classify_c4(tri, t2, 4) == C4Kind::TRI234);

        CHECK_THROWS_AS(classify_c4(g, Configuration{ConfigKind::C4, 1, 2, 3, 6, 7}, 4), InputError);
        CHECK_THROWS_AS(classify_c4(g, t2, 3), InputError);
    }

    TEST_CASE("extend_local")
    {
        // pendant edge at a vertex of small degree
        const Graph t = load_graph("5 4\n1 2\n1 3\n1 4\n4 5");
        IncidenceColoring partial = IncidenceColoring::blank(t, 4);
        partial.set(t, 1, 2, 0);
        partial.set(t, 2, 1, 1);
        partial.set(t, 1, 3, 1);
        partial.set(t, 3, 1, 2);
        partial.set(t, 1, 4, 2);
        partial.set(t, 4, 1, 3);
        const std::array<Incidence, 2> free{Incidence::of(4, 5), Incidence::of(5, 4)};
        const auto r = extend_local(t, partial, free, {}, 4);
        REQUIRE(r.has_value());
        CHECK(check_conditional(t, *r, 4).valid());

        const Graph k2 = make_path(2);
        const std::array<Incidence, 2> both{Incidence::of(1, 2), Incidence::of(2, 1)};
        CHECK_FALSE(extend_local(k2, IncidenceColoring::blank(k2, 1), both, {}, 1).has_value());
        CHECK_THROWS_AS(extend_local(k2, IncidenceColoring::blank(k2, 2), both, {}, 1), InputError);
    }

    TEST_CASE("check_t1")
    {
        const auto s = check_t1({1, 2, 3, 4, 1, 3, 4, 2});
        REQUIRE(s.has_value());
        CHECK(*s == T1Solution{1, 2, 1, 3, 4, 3, 4, 2, 3, 2, 1, 4});
        CHECK_THROWS_AS(check_t1({1, 2, 3, 4, 1, 3, 4, 5}), InputError);
        CHECK_THROWS_AS(check_t1({0, 2, 3, 4, 1, 3, 4, 2}), InputError);
    }

    TEST_CASE("reducibility inspection")
    {
        const InspectionReport r = reducibility_inspection();
        CHECK(r.enumerated == 4096);
        CHECK(r.valid == 588);
        CHECK(r.non_extendable.size() == 32);
        CHECK(r.residual.empty());
        for (const T1Boundary& b : r.non_extendable) {
            CHECK(t1_exceptional(b[2], b[3], b[4], b[5], b[6], b[7]));
            CHECK_FALSE(check_t1(b).has_value());
        }
        const InspectionReport p = reducibility_inspection(3);
        CHECK(p.valid == r.valid);
        CHECK(p.non_extendable == r.non_extendable);
        const auto doc = nlohmann::json::parse(inspection_to_json(r));
        CHECK(doc["residual"].empty());
        CHECK(doc["valid"] == 588);
    }

    TEST_CASE("t2 table")
    {
        CHECK(t2_table(1, 2) == T2Vector{3, 1, 4, 1, 4, 2, 3, 2, 2, 1, 4, 3, 3, 4});
        CHECK(t2_table(2, 1) == T2Vector{3, 4, 3, 4, 4, 3, 4, 3, 2, 1, 2, 1, 3, 4});
        CHECK(t2_table(3, 4) == T2Vector{3, 4, 2, 1, 4, 2, 4, 2, 3, 1, 3, 1, 2, 4});
        CHECK(t2_cases().size() == 6);
        CHECK_FALSE(t2_table(2, 2).has_value());
        CHECK_THROWS_AS(t2_table(0, 2), InputError);
    }

    TEST_CASE("every t2 vector verifies inside the gadget")
    {
        const Graph g = t2_gadget();
        const auto layout = t2_layout(1, 2, 3, 4, 5);
        for (int c = 1; c <= 4; ++c) {
            for (int d = 1; d <= 4; ++d) {
                if (c == d) {
                    continue;
                }
                const auto t = t2_table(c, d);
                CAPTURE(c);
                CAPTURE(d);
                REQUIRE(t.has_value());
                IncidenceColoring col = IncidenceColoring::blank(g, 4);
                col.set(g, 4, 6, 0);
                col.set(g, 6, 4, 1);
                col.set(g, 5, 7, c - 1);
                col.set(g, 7, 5, d - 1);
                for (std::size_t i = 0; i < layout.size(); ++i) {
                    col.set(g, layout[i].vertex, layout[i].other(), (*t)[i] - 1);
                }
                CHECK(check_conditional(g, col, 4).valid());
            }
        }
    }

    TEST_CASE("conditional_color examples")
    {
        const Graph fan5 = make_fan(5);
        const auto a = conditional_color(fan5, 5);
        REQUIRE(a.has_value());
        CHECK(check_conditional(fan5, *a, 5).valid());
        const auto b = conditional_color(make_fan(4), 4);
        REQUIRE(b.has_value());
        CHECK(check_conditional(make_fan(4), *b, 4).valid());

        const Graph mop = make_random_maximal_outerplanar(50, 3);
        REQUIRE(mop.max_degree() >= 4);
        const int delta = static_cast<int>(mop.max_degree());
        const auto c = conditional_color(mop, delta);
        REQUIRE(c.has_value());
        CHECK(check_defective(mop, *c, 1).valid());
        CHECK(c->palette == delta);

        CHECK_FALSE(conditional_color(make_complete(4), 4).has_value());
        CHECK_THROWS_AS(conditional_color(make_fan(6), 4), InputError);
        CHECK_THROWS_AS(conditional_color(make_path(3), 3), InputError);
        const auto edgeless = conditional_color(Graph::from_edges(3, {}), 4);
        REQUIRE(edgeless.has_value());
        CHECK(edgeless->colors.empty());
    }

    TEST_CASE("conditional_color on the t2 gadget")
    {
        ReductionStats stats;
        const Graph g = t2_gadget();
        const auto c = conditional_color(g, 4, &stats);
        REQUIRE(c.has_value());
        CHECK(check_conditional(g, *c, 4).valid());
    }

    TEST_CASE("conditional_color on random outerplanar graphs")
    {
        ReductionStats total;
        for (std::size_t delta : {4u, 5u, 6u, 8u}) {
            for (std::uint64_t seed = 1; seed <= 60; ++seed) {
                const Graph g = random_outerplanar_instance(seed * 7 + delta, delta);
                if (g.max_degree() < 4) {
                    continue;
                }
                const int big = static_cast<int>(g.max_degree());
                ReductionStats stats;
                const auto c = conditional_color(g, big, &stats);
                CAPTURE(seed);
                CAPTURE(delta);
                REQUIRE(c.has_value());
                CHECK(check_conditional(g, *c, big).valid());
                CHECK(stats.steps <= g.vertex_count() + g.edge_count());
                for (std::size_t i = 0; i < 8; ++i) {
                    total.by_rule[i] += stats.by_rule[i];
                }
            }
        }
        CHECK(total.by_rule[static_cast<std::size_t>(C4Kind::R2)] > 0);
    }

    TEST_CASE("d2_color_subcubic")
    {
        const Graph h = make_obstruction_h();
        const auto c = d2_color_subcubic(h);
        REQUIRE(c.has_value());
        CHECK(c->palette == 3);
        CHECK(check_defective(h, *c, 2).valid());

        const Graph diamond = load_graph("4 5\n1 2\n1 3\n2 3\n2 4\n3 4");
        const auto dm = d2_color_subcubic(diamond);
        REQUIRE(dm.has_value());
        CHECK(check_defective(diamond, *dm, 2).valid());

        CHECK(d2_color_subcubic(make_cycle(5))->palette == 2);
        CHECK_FALSE(d2_color_subcubic(make_petersen()).has_value());
        CHECK_FALSE(d2_color_subcubic(make_complete(4)).has_value());
        CHECK_THROWS_AS(d2_color_subcubic(make_star(4)), InputError);

        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const Graph g = random_outerplanar_instance(seed, 3);
            const auto r = d2_color_subcubic(g);
            REQUIRE(r.has_value());
            CHECK(check_defective(g, *r, 2).valid());
        }
    }

    TEST_CASE("color_outerplanar")
    {
        const Graph h = make_obstruction_h();
        const auto one = color_outerplanar(h, 1);
        CHECK(one.k == 4);
        CHECK(one.proven_optimal);
        CHECK(check_defective(h, one.coloring, 1).valid());
        const auto two = color_outerplanar(h, 2);
        CHECK(two.k == 3);
        CHECK(check_defective(h, two.coloring, 2).valid());

        const auto fan = color_outerplanar(make_fan(5), 1);
        CHECK(fan.k == 5);
        CHECK(fan.method == "outerplanar-conditional");

        const auto c5 = color_outerplanar(make_cycle(5), 1);
        CHECK(c5.k == 2);

        CHECK_THROWS_AS(color_outerplanar(make_complete(4), 1), UnsupportedGraph);
        CHECK_THROWS_AS(color_outerplanar(make_fan(4), 0), InputError);
    }

    TEST_CASE("names")
    {
        CHECK(to_string(ConfigKind::C3) == "C3");
        CHECK(to_string(C4Kind::TRI234) == "TRI234");
        CHECK(to_string(C4Kind::Fallback) == "fallback");
    }
}

#include <sstream>

#include "doctest.h"
#include "figures.hpp"
#include "planarcut/graph_io.hpp"
#include "planarcut/oracle.hpp"

using namespace planarcut;

namespace {

void same_graph(const RawGraph& a, const RawGraph& b) {
    REQUIRE(a.num_nodes == b.num_nodes);
    REQUIRE(a.edges.size() == b.edges.size());
    for (std::size_t e = 0; e < a.edges.size(); ++e) {
        CHECK(a.edges[e].u == b.edges[e].u);
        CHECK(a.edges[e].v == b.edges[e].v);
        CHECK(a.edges[e].w_uv == b.edges[e].w_uv);
        CHECK(a.edges[e].w_vu == b.edges[e].w_vu);
    }
    CHECK(a.rot == b.rot);
}

int parse_error_line(const std::string& text) {
    try {
        parse_graph_string(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("geom dialect sorts rotations by angle") {
    RawGraph g = figures::raw(figures::kFourNode);
    CHECK(g.num_nodes == 4);
    CHECK(g.edges.size() == 5);
    CHECK(g.num_arcs() == 7);
    int v1 = figures::node(g, "v1"), v2 = figures::node(g, "v2");
    bool found = false;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const RawEdge& r = g.edges[e];
        if (r.u == v1 && r.v == v2) {
            found = true;
            CHECK(r.w_uv == Weight(7));
            CHECK_FALSE(r.w_vu.has_value());
        }
    }
    CHECK(found);
    // The outer face is the triangle v2 v3 v4 (v1 lies inside it).
    PlaneGraph pg = bidirect(g, Weight(0));
    pg.set_outer_face(pg.left_face(g.outer_dart));
    CHECK(pg.face(pg.outer_face()).size() == 3);
    for (int d : pg.face(pg.outer_face())) CHECK(pg.tail(d) != v1);
}

TEST_CASE("rot dialect and round trips") {
    RawGraph g = figures::raw(figures::kIncision);
    CHECK(g.num_nodes == 6);
    CHECK(g.edges.size() == 12);
    std::ostringstream rot;
    print_rot(rot, g);
    same_graph(g, parse_graph_string(rot.str()));

    RawGraph f3 = figures::raw(figures::kSevenNode);
    std::ostringstream geom;
    print_geom(geom, f3);
    same_graph(f3, parse_graph_string(geom.str()));
}

TEST_CASE("decimal weights are scaled exactly") {
    RawGraph g = parse_graph_string("pgraph geom 1\nnode a 0 0\nnode b 1 0\narc a b 1.5\narc b a 0.25\n");
    CHECK(g.scale == 100);
    CHECK(g.edges[0].w_uv == Weight(150));
    CHECK(g.edges[0].w_vu == Weight(25));
    auto d = parse_decimal("12.000000001");
    REQUIRE(d.has_value());
    CHECK(d->digits == 9);
    CHECK_FALSE(parse_decimal("1.0000000001").has_value());
    CHECK_FALSE(parse_decimal("-1").has_value());
}

TEST_CASE("random graphs round trip through both dialects") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        oracle::GenSpec spec;
        spec.seed = seed;
        spec.n = 12;
        spec.absent_prob = 0.3;
        spec.inf_prob = 0.1;
        RawGraph g = oracle::gen_planar(spec);
        std::ostringstream out;
        print_rot(out, g);
        same_graph(g, parse_graph_string(out.str()));
    }
}

TEST_CASE("malformed input reports the line") {
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("pgraph foo 1\n") == 1);
    CHECK(parse_error_line("pgraph geom 1\nnode a 0 0\nnode a 1 1\n") == 3);
    CHECK(parse_error_line("pgraph geom 1\nnode a 0 0\nnode b 1 x\n") == 3);
    CHECK(parse_error_line("pgraph geom 1\nnode a 0 0\nnode b 1 0\narc a c 1\n") == 4);
    CHECK(parse_error_line("pgraph geom 1\nnode a 0 0\nnode b 1 0\narc a b -2\n") == 4);
    CHECK(parse_error_line("pgraph geom 1\nnode a 0 0\nnode b 1 0\narc a b 1\narc a b 2\n") == 5);
    CHECK(parse_error_line("pgraph rot 1\nnode a\nedge e a z 1 1\n") == 3);
    CHECK(parse_error_line("pgraph rot 1\nnode a\nnode b\nedge e a b 1 1\nrot a e\nrot a e\n") == 6);
}

TEST_CASE("invalid embeddings are rejected") {
    // Two edges between the same pair.
    CHECK_THROWS_AS(parse_graph_string("pgraph rot 1\nnode a\nnode b\nedge e a b 1 1\nedge f a b 1 1\n"
                                       "rot a e f\nrot b e f\n"),
                    EmbeddingError);
}

#include "doctest.h"
#include "figures.hpp"
#include "planarcut/oracle.hpp"
#include "planarcut/separator.hpp"

using namespace planarcut;

namespace {

std::vector<char> tree_edges(const PlaneGraph& g, const SsspTree& t) {
    std::vector<char> tree(g.num_edges(), 0);
    for (int v = 0; v < g.num_nodes(); ++v)
        if (t.parent[v] != -1) tree[edge_of(t.parent[v])] = 1;
    return tree;
}

}  // namespace

TEST_CASE("shortest-path tree and balanced edge of the seven-node example") {
    RawGraph r = figures::raw(figures::kSevenNode);
    PlaneGraph g = bidirect(r, Weight::infinite());
    SsspTree t = sssp(g, figures::node(r, "v1"));
    auto parent_name = [&](const char* v) { return r.name(g.tail(t.parent[figures::node(r, v)])); };
    CHECK(parent_name("v2") == "v1");
    CHECK(parent_name("v3") == "v2");
    CHECK(parent_name("v5") == "v1");
    CHECK(parent_name("v4") == "v5");
    CHECK(parent_name("v6") == "v2");
    CHECK(parent_name("v7") == "v6");
    CHECK(t.dist[figures::node(r, "v7")] == Cost{0, 2});

    CHECK(g.num_faces() == 6);
    Triangulation tri = triangulate(g, Weight::infinite());
    CHECK(tri.graph.num_edges() == g.num_edges() + 4);
    std::vector<int> fw = assign_face_weights(tri, g.num_faces());
    int total = 0;
    for (int w : fw) total += w;
    CHECK(total == 6);
    std::vector<char> preferred(tri.graph.num_edges(), 0);
    for (int e = 0; e < g.num_edges(); ++e) preferred[e] = 1;
    BalancedEdge b = balanced_fundamental_cycle(tri.graph, tree_edges(tri.graph, t), fw, &preferred);
    REQUIRE(b.edge >= 0);
    std::string a = r.name(tri.graph.edge(b.edge).u), c = r.name(tri.graph.edge(b.edge).v);
    if (a > c) std::swap(a, c);
    CHECK(a == "v3");
    CHECK(c == "v4");
    CHECK(b.left + b.right <= total);
    CHECK(4 * std::max(b.left, b.right) <= 3 * total);
}

TEST_CASE("balanced fundamental cycles on random triangulations") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        oracle::GenSpec spec;
        spec.seed = seed;
        spec.n = 4 + seed * 3;
        PlaneGraph g = oracle::gen_plane_graph(spec);
        Triangulation tri = triangulate(g, Weight::infinite());
        SsspTree t = sssp(tri.graph, 0);
        std::vector<int> fw(tri.graph.num_faces(), 1);
        auto tree = tree_edges(tri.graph, t);
        BalancedEdge b = balanced_fundamental_cycle(tri.graph, tree, fw);
        REQUIRE(b.edge >= 0);
        CHECK_FALSE(tree[b.edge]);
        long long total = tri.graph.num_faces();
        CHECK(4 * std::max(b.left, b.right) <= 3 * total);
        // The side marking agrees with the reported left weight.
        auto side = fundamental_cycle_side(tri.graph, tree, b.edge);
        long long left = 0;
        for (int f = 0; f < tri.graph.num_faces(); ++f) left += side[f];
        CHECK(left == b.left);
        CHECK(side[tri.graph.left_face(2 * b.edge)] == 1);

        SegmentedCycle sc = segmented_cycle_from_edge(tri.graph, t, 2 * b.edge);
        std::vector<int> cyc = sc.cycle();
        CHECK(is_closed_walk(tri.graph, cyc));
        CHECK(is_simple(tri.graph, cyc));
        // Both segments are tree paths from the same root.
        if (!sc.p1.empty() && !sc.p2.empty()) CHECK(tri.graph.tail(sc.p1[0]) == tri.graph.tail(sc.p2[0]));
    }
}

#include "doctest.h"
#include "figures.hpp"
#include "planarcut/cycle_core.hpp"
#include "planarcut/oracle.hpp"
#include "planarcut/separator.hpp"

#include <set>

using namespace planarcut;

namespace {

void check_certificate(const PlaneGraph& g, const CycleResult& r) {
    if (r.weight.is_infinite()) return;
    REQUIRE_FALSE(r.darts.empty());
    CHECK(is_closed_walk(g, r.darts));
    CHECK_FALSE(is_degenerate(r.darts));
    CHECK(walk_weight(g, r.darts) == r.weight);
}

// Accepts a simple cycle q (as traversed) that splits into a subpath of p
// (possibly one node) and a path deviating from p whose first and last edges
// sit on opposite sides of the cycle c.
struct CpClassifier {
    const PlaneGraph& g;
    std::set<int> p_edges, p_nodes, interior, exterior;

    CpClassifier(const PlaneGraph& g, const std::vector<int>& c, const std::vector<int>& p) : g(g) {
        for (int d : p) {
            p_edges.insert(edge_of(d));
            p_nodes.insert(g.tail(d));
            p_nodes.insert(g.head(d));
        }
        CycleSides s = cycle_sides(g, c);
        interior.insert(s.interior_edges.begin(), s.interior_edges.end());
        exterior.insert(s.exterior_edges.begin(), s.exterior_edges.end());
    }

    bool operator()(const std::vector<int>& q) const {
        const int k = static_cast<int>(q.size());
        auto aligned = [&](int i) { return p_edges.count(edge_of(q[(i % k + k) % k])) > 0; };
        int start = -1, runs = 0, end;
        for (int i = 0; i < k; ++i)
            if (!aligned(i) && aligned(i - 1)) start = i, ++runs;
        if (runs == 0) {
            // No edge of p: exactly one node of p lies on q and the rest deviates.
            int hits = 0;
            for (int i = 0; i < k; ++i)
                if (p_nodes.count(g.tail(q[i]))) ++hits, start = i;
            if (hits != 1) return false;
            end = (start + k - 1) % k;
        } else {
            if (runs != 1) return false;
            end = start;
            while (!aligned(end + 1)) end = (end + 1) % k;
            for (int i = start; i != end; i = (i + 1) % k)
                if (p_nodes.count(g.head(q[i]))) return false;
        }
        bool first_int = interior.count(edge_of(q[start])) > 0;
        bool last_ext = exterior.count(edge_of(q[end])) > 0;
        return first_int == last_ext;
    }
};

}  // namespace

TEST_CASE("seven-node example: sides of the pentagon and the global optimum") {
    RawGraph r = figures::raw(figures::kSevenNode);
    PlaneGraph g = bidirect(r, Weight::infinite());
    std::vector<int> c = figures::walk(g, r, {"v1", "v2", "v3", "v4", "v5"});
    Regions reg = split_regions(g, c);
    CHECK(reg.interior.graph.num_nodes() == 5);
    CHECK(reg.interior.graph.num_edges() == 6);
    CHECK(reg.exterior.graph.num_nodes() == 7);
    CHECK(reg.exterior.graph.num_edges() == 10);

    CycleResult in = shortest_nondegenerate_cycle(reg.interior.graph);
    CHECK(in.weight == Weight(5));
    CHECK(oracle::enum_simple_nondegenerate_cycles(reg.interior.graph).weight == Weight(5));
    // The outer side also holds v2 v6 v7 v5 v1 (weight 5) besides the
    // six-node cycle around v3 v4 (weight 7).
    CycleResult out = shortest_nondegenerate_cycle(reg.exterior.graph);
    CHECK(out.weight == Weight(5));
    CHECK(oracle::enum_simple_nondegenerate_cycles(reg.exterior.graph).weight == Weight(5));
    std::vector<int> six = figures::walk(g, r, {"v2", "v6", "v7", "v5", "v4", "v3"});
    CHECK(walk_weight(g, six) == Weight(7));

    // The cycle through the chord v5 v2 and around v6 v7 crosses the pentagon.
    CycleResult best = shortest_nondegenerate_cycle(g);
    check_certificate(g, best);
    CHECK(best.weight == Weight(3));
    CHECK(figures::cycle_names(g, r, best.darts) == std::vector<std::string>{"v2", "v6", "v7", "v5"});
    CHECK(oracle::enum_simple_nondegenerate_cycles(g).weight == Weight(3));

    SegmentedCycle sc;
    sc.p1 = figures::walk(g, r, {"v1", "v2", "v3"});
    sc.p1.pop_back();
    sc.bridge = g.find_dart(figures::node(r, "v3"), figures::node(r, "v4"));
    sc.p2 = figures::walk(g, r, {"v1", "v5", "v4"});
    sc.p2.pop_back();
    CycleResult cs = c_short_cycle(g, sc);
    check_certificate(g, cs);
    CHECK(cs.weight == Weight(3));
}

TEST_CASE("incision of the six-node example") {
    RawGraph r = figures::raw(figures::kIncision);
    PlaneGraph g = figures::incision_graph(r);
    std::vector<int> c = figures::walk(g, r, {"s", "u1", "u2", "t", "v"});
    std::vector<int> p(c.begin(), c.begin() + 3);
    IncisedGraph h = incise(g, c, p);
    CHECK(h.graph.num_nodes() == g.num_nodes() + 2);
    CHECK(h.graph.num_edges() == g.num_edges() + 3);
    CHECK(h.u.size() == 2);
    CHECK(h.v.size() == 2);
    for (int e = g.num_edges(); e < h.graph.num_edges(); ++e) {
        CHECK(h.graph.weight(2 * e).is_infinite());
        CHECK(h.graph.weight(2 * e + 1).is_infinite());
    }
    // The copies take over the edges of the interior (v) side.
    for (std::size_t i = 0; i < h.v.size(); ++i) {
        CHECK(h.node_origin[h.v[i]] == h.node_origin[h.u[i]]);
        bool sees_v = false;
        for (int d : h.graph.rotation(h.v[i]))
            if (h.node_origin[h.graph.head(d)] == figures::node(r, "v")) sees_v = true;
        CHECK(sees_v);
    }
    // The cut path and its copy bound the outer face.
    std::vector<int> outer_nodes;
    for (int d : h.graph.face(h.graph.outer_face())) outer_nodes.push_back(h.graph.tail(d));
    CHECK(outer_nodes.size() == 6);
    CHECK(h.graph.num_nodes() - h.graph.num_edges() + h.graph.num_faces() == 2);

    CycleResult cp = cp_short_cycle(g, c, p);
    check_certificate(g, cp);
    CHECK(cp.weight == Weight(2));
    CpClassifier is_cp(g, c, p);
    CHECK(oracle::enum_cycles_if(g, is_cp).weight == Weight(2));
    // C counts: its edges lie on both sides. u1 u2 u leaves and returns on u's side.
    CHECK(is_cp(c));
    CHECK_FALSE(is_cp(figures::walk(g, r, {"u1", "u2", "u"})));
    // Both (C,P)-cycles of weight 2 exist.
    for (auto names : {std::vector<std::string>{"u1", "u2", "u", "v"}, std::vector<std::string>{"u1", "v", "u", "u2"}}) {
        std::vector<int> q = figures::walk(g, r, names);
        CHECK(walk_weight(g, q) == Weight(2));
        CHECK(is_cp(q));
    }
}

TEST_CASE("shortest non-degenerate cycle matches enumeration") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        oracle::GenSpec spec;
        spec.seed = seed;
        spec.n = 3 + seed % 12;
        spec.triangulation = seed % 3 != 0;
        spec.zero_prob = 0.2;
        spec.inf_prob = seed % 5 == 0 ? 0.2 : 0.0;
        PlaneGraph g = oracle::gen_plane_graph(spec);
        CAPTURE(seed);
        for (NcspBackend b : {NcspBackend::Baseline, NcspBackend::Ddg}) {
            CoreOptions opt;
            opt.backend = b;
            CoreStats stats;
            CycleResult res = shortest_nondegenerate_cycle(g, opt, &stats);
            CHECK(res.weight == oracle::enum_simple_nondegenerate_cycles(g).weight);
            check_certificate(g, res);
            CHECK(stats.ratio_violations == 0);
            CHECK(stats.sum_violations == 0);
        }
    }
}

TEST_CASE("larger graphs agree with brute force") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        oracle::GenSpec spec;
        spec.seed = 100 + seed;
        spec.n = 12 + seed % 3;
        spec.max_weight = 1000;
        PlaneGraph g = oracle::gen_plane_graph(spec);
        CoreStats stats;
        CycleResult res = shortest_nondegenerate_cycle(g, {}, &stats);
        CHECK(res.weight == brute_force_cycle(g).weight);
        CHECK(stats.divide_steps > 0);
    }
}

TEST_CASE("cycle sides cover the graph") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        oracle::GenSpec spec;
        spec.seed = seed;
        spec.n = 10 + seed;
        PlaneGraph g = oracle::gen_plane_graph(spec);
        auto f = g.face(0);
        if (g.left_face(f[0]) == g.outer_face()) f = g.face(1);
        CycleSides s = cycle_sides(g, f);
        CHECK(s.interior_edges.size() + s.exterior_edges.size() == static_cast<std::size_t>(g.num_edges()) + f.size());
    }
}

TEST_CASE("cp_short_cycle is no heavier than any (C,P)-cycle") {
    int compared = 0;
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        oracle::GenSpec spec;
        spec.seed = seed;
        spec.n = 5 + seed % 8;
        spec.triangulation = seed % 3 != 0;
        spec.zero_prob = 0.2;
        PlaneGraph g = oracle::gen_plane_graph(spec);
        SsspTree t = sssp(g, 0);
        std::vector<char> tree(g.num_edges(), 0);
        for (int v = 0; v < g.num_nodes(); ++v)
            if (t.parent[v] != -1) tree[edge_of(t.parent[v])] = 1;
        for (int e = 0; e < g.num_edges(); ++e) {
            if (tree[e]) continue;
            SegmentedCycle sc = segmented_cycle_from_edge(g, t, 2 * e);
            std::vector<int> c = sc.cycle();
            if (c.size() < 3 || sc.p1.size() < 2) continue;
            CAPTURE(seed);
            CAPTURE(e);
            CycleResult got = cp_short_cycle(g, c, sc.p1);
            check_certificate(g, got);
            oracle::CycleAnswer want = oracle::enum_cycles_if(g, CpClassifier(g, c, sc.p1));
            if (want.weight.is_finite()) {
                CHECK(got.weight <= want.weight);
                ++compared;
            }
        }
    }
    CHECK(compared > 100);
}

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "instances.hpp"
#include "planarcut/ddg.hpp"
#include "planarcut/ncsp.hpp"
#include "planarcut/oracle.hpp"
#include "planarcut/reduce.hpp"
#include "planarcut/shortest_paths.hpp"

using namespace planarcut;

namespace {

PlaneGraph triangulation(std::uint64_t seed, int n) {
    oracle::GenSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.max_weight = 100;
    spec.zero_prob = 0.05;
    return oracle::gen_plane_graph(spec);
}

std::vector<int> random_subset(int n, double keep, std::mt19937_64& rng) {
    std::vector<int> out;
    std::bernoulli_distribution coin(keep);
    for (int i = 0; i < n; ++i)
        if (coin(rng)) out.push_back(i);
    return out;
}

// The walk J used for the region between paths a and b of a normalized instance.
std::vector<int> region_walk(const Normalized& nz, const Path& pa, const Path& pb, int a, int b) {
    const PlaneGraph& g = nz.graph;
    const auto& walk = g.face(g.outer_face());
    const int len = static_cast<int>(walk.size());
    auto at = [&](int node) {
        for (int p = 0; p < len; ++p)
            if (g.tail(walk[p]) == node) return p;
        return -1;
    };
    std::vector<int> j;
    for (int p = at(nz.u[a]); p != at(nz.u[b]); p = (p + 1) % len) j.push_back(walk[p]);
    j.insert(j.end(), pb.darts.begin(), pb.darts.end());
    for (int p = at(nz.v[b]); p != at(nz.v[a]); p = (p + 1) % len) j.push_back(walk[p]);
    for (auto it = pa.darts.rbegin(); it != pa.darts.rend(); ++it) j.push_back(twin(*it));
    return j;
}

}  // namespace

TEST_CASE("r-division respects its documented bounds") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int n = 50 + static_cast<int>(seed) * 60;
        PlaneGraph g = triangulation(seed, n);
        for (int r : {16, 32, 64}) {
            ddg::Division d = ddg::r_division(g, r);
            ddg::DivisionStats s = ddg::division_stats(g, d);
            CAPTURE(seed);
            CAPTURE(r);
            CHECK(s.edge_partition);
            CHECK(s.max_nodes <= ddg::kNodeFactor * r);
            CHECK(s.max_boundary <= ddg::kBoundaryFactor * std::sqrt(double(r)));
            CHECK(s.max_holes <= ddg::kMaxHoles);
            CHECK(ddg::within_bounds(s, n, r));
            for (int v = 0; v < g.num_nodes(); ++v) CHECK(d.multiplicity[v] >= 1);
        }
    }
}

TEST_CASE("induced division keeps only original edges") {
    auto in = instances::make_ncsp(2, 300, 4, true);
    Triangulation tri = triangulate(in.g, Weight::infinite());
    ddg::Division d = ddg::induced_division(ddg::r_division(tri.graph, 32), in.g.num_edges());
    std::vector<int> count(in.g.num_edges(), 0);
    for (const auto& p : d.pieces)
        for (int e : p.edges) {
            REQUIRE(e < in.g.num_edges());
            ++count[e];
        }
    for (int c : count) CHECK(c == 1);
}

TEST_CASE("dense distance graph matches Dijkstra inside each component") {
    PlaneGraph g = triangulation(4, 400);
    ddg::Division d = ddg::r_division(g, 32);
    ddg::DenseDistanceGraph k = ddg::dense_distance_graph(g, d);
    CHECK(k.size() > 0);
    for (std::size_t c = 0; c < k.comps.size(); c += 5) {
        const auto& comp = k.comps[c];
        Dijkstra dj(comp.sub.graph);
        for (std::size_t i = 0; i < comp.knodes.size(); ++i) {
            dj.run(comp.knodes[i]);
            for (std::size_t j = 0; j < comp.knodes.size(); ++j) {
                CHECK(comp.distance(i, j) == dj.dist(comp.knodes[j]));
                if (i == j || dj.dist(comp.knodes[j]).is_unreached()) continue;
                int ki = k.kid[comp.sub.node_map[comp.knodes[i]]], kj = k.kid[comp.sub.node_map[comp.knodes[j]]];
                auto path = ddg::underlying_path(k, static_cast<int>(c), ki, kj);
                CHECK(is_walk(g, path));
                CHECK(walk_cost(g, path) == comp.distance(i, j));
            }
        }
    }
}

TEST_CASE("every Monge unit passes the audit") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        PlaneGraph g = triangulation(seed, 200 + 100 * static_cast<int>(seed));
        ddg::Division d = ddg::r_division(g, 16 << (seed % 3));
        ddg::DenseDistanceGraph k = ddg::dense_distance_graph(g, d);
        auto units = ddg::monge_decomposition(k);
        CHECK_FALSE(units.empty());
        for (std::size_t i = 0; i < units.size(); ++i) CHECK_NOTHROW(ddg::audit_monge(units[i], i + 1));
        // Every K edge within a component is represented by some unit entry.
        std::set<std::pair<int, int>> covered;
        for (const auto& u : units)
            for (std::size_t r = 0; r < u.rows.size(); ++r)
                for (std::size_t c = 0; c < u.cols.size(); ++c)
                    if (u.weight(r, c) == k.weight(u.rows[r], u.cols[c]).first) covered.insert({u.rows[r], u.cols[c]});
        for (int a = 0; a < k.size(); ++a)
            for (int b = 0; b < k.size(); ++b) {
                auto [w, comp] = k.weight(a, b);
                if (a != b && comp >= 0 && !w.is_unreached()) CHECK(covered.count({a, b}));
            }
    }
}

TEST_CASE("a corrupted unit fails the audit") {
    PlaneGraph g = triangulation(9, 400);
    ddg::DenseDistanceGraph k = ddg::dense_distance_graph(g, ddg::r_division(g, 32));
    auto units = ddg::monge_decomposition(k);
    bool tried = false;
    for (auto u : units) {
        if (u.kind != ddg::UnitKind::Type1 || u.rows.size() < 4) continue;
        // Make one diagonal entry too cheap: w(0,2) + w(1,3) < w(0,3) + w(1,2) breaks.
        u.w[0 * u.cols.size() + 2] = Cost{-1000000, 0};
        CHECK_THROWS_AS(ddg::audit_monge(u, 1), ddg::MongeViolation);
        tried = true;
        break;
    }
    CHECK(tried);
}

TEST_CASE("fast Dijkstra equals dense Dijkstra on random restrictions") {
    std::mt19937_64 rng(42);
    int runs = 0;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        PlaneGraph g = triangulation(seed + 20, 300 + 150 * static_cast<int>(seed));
        ddg::DenseDistanceGraph k = ddg::dense_distance_graph(g, ddg::r_division(g, 32));
        auto units = ddg::monge_decomposition(k);
        for (bool transpose : {false, true}) {
            ddg::FastDijkstra fd(k, units, transpose);
            for (int trial = 0; trial < 8; ++trial) {
                auto x = random_subset(k.size(), trial == 0 ? 1.0 : 0.3 + 0.1 * trial, rng);
                if (x.empty()) continue;
                int src = x[rng() % x.size()];
                ddg::KTree a = fd.run(x, src), b = ddg::dense_dijkstra(k, x, src, transpose);
                CHECK(a.dist == b.dist);
                ++runs;
                // The fast tree's K paths realize its distances.
                for (int t : x) {
                    if (a.dist[t].is_unreached()) continue;
                    Cost sum{};
                    auto hops = a.path_to(t);
                    for (std::size_t h = 1; h < hops.size(); ++h) {
                        auto [from, to] = transpose ? std::pair{hops[h].first, hops[h - 1].first}
                                                    : std::pair{hops[h - 1].first, hops[h].first};
                        const auto& comp = k.comps[hops[h].second];
                        int i = -1, j = -1;
                        for (auto [c, idx] : k.occ[from])
                            if (c == hops[h].second) i = idx;
                        for (auto [c, idx] : k.occ[to])
                            if (c == hops[h].second) j = idx;
                        REQUIRE(i >= 0);
                        REQUIRE(j >= 0);
                        sum += comp.distance(i, j);
                    }
                    CHECK(sum == a.dist[t]);
                }
            }
        }
    }
    CHECK(runs >= 90);
}

TEST_CASE("boundary splitting agrees with region flood fill") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto in = instances::make_ncsp(seed, 150 + 10 * static_cast<int>(seed), 8, seed % 2);
        if (in.u.size() < 3) continue;
        Normalized nz = normalize(in.g, in.u, in.v);
        const PlaneGraph& g = nz.graph;
        const int l = static_cast<int>(nz.u.size());
        Dijkstra dj(g);
        auto shortest = [&](int i) {
            dj.run(nz.u[i], false, nz.v[i]);
            return Path{nz.u[i], dj.path(nz.v[i])};
        };
        Path p0 = shortest(0), pl = make_noncrossing(g, p0, shortest(l - 1));
        const int i = l / 2;
        Region outer = region_right_of(g, region_walk(nz, p0, pl, 0, l - 1));
        std::vector<char> allowed(g.num_edges(), 0);
        for (int e : outer.edges) allowed[e] = 1;
        dj.run(nz.u[i], false, [&](int e) { return allowed[e] != 0; }, nz.v[i]);
        Path pi{nz.u[i], dj.path(nz.v[i])};
        pi = make_noncrossing(g, pl, make_noncrossing(g, p0, pi));

        std::vector<int> all(g.num_nodes());
        for (int v = 0; v < g.num_nodes(); ++v) all[v] = v;
        ddg::BoundarySplitter sp(g, all);
        auto [x12, x23] = sp.split(outer.nodes, p0, pi, pl);
        Region r12 = region_right_of(g, region_walk(nz, p0, pi, 0, i));
        Region r23 = region_right_of(g, region_walk(nz, pi, pl, i, l - 1));
        std::set<int> s12(x12.begin(), x12.end()), s23(x23.begin(), x23.end());
        std::set<int> s13(outer.nodes.begin(), outer.nodes.end());
        CAPTURE(seed);
        for (int v : r12.nodes)
            if (s13.count(v)) CHECK(s12.count(v));
        for (int v : r23.nodes)
            if (s13.count(v)) CHECK(s23.count(v));
        for (int v : x12) CHECK(s13.count(v));
        for (int v : x23) CHECK(s13.count(v));
        // Off the paths, each node lands on exactly its own side.
        std::set<int> on_paths;
        for (const Path* p : {&p0, &pi, &pl})
            for (int v : p->nodes(g)) on_paths.insert(v);
        std::set<int> in12(r12.nodes.begin(), r12.nodes.end()), in23(r23.nodes.begin(), r23.nodes.end());
        for (int v : outer.nodes) {
            if (on_paths.count(v)) continue;
            CHECK(s12.count(v) == in12.count(v));
            CHECK(s23.count(v) == in23.count(v));
        }
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("context over a normalized instance") {
    auto in = instances::make_ncsp(77, 600, 16);
    Normalized nz = normalize(in.g, in.u, in.v);
    ddg::Context ctx(nz.graph, nz.u, nz.v, 32);
    CHECK(ctx.index_set.front() == 0);
    CHECK(ctx.index_set.back() == static_cast<int>(nz.u.size()) - 1);
    for (int i : ctx.index_set) {
        CHECK(ctx.kd.kid[nz.u[i]] >= 0);
        CHECK(ctx.kd.kid[nz.v[i]] >= 0);
    }
}

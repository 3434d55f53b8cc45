// Acceptance suite: one PASS/FAIL line per criterion. Run with a criterion
// number (1..9) or without arguments for all of them.
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "figures.hpp"
#include "instances.hpp"
#include "planarcut/cycle_core.hpp"
#include "planarcut/ddg.hpp"
#include "planarcut/ncsp.hpp"
#include "planarcut/oracle.hpp"
#include "planarcut/reduce.hpp"

using namespace planarcut;

namespace {

// Tolerances and corpus sizes.
constexpr double kFourNodeBudgetMs = 1.0;
constexpr int kCutInstances = 1000;
constexpr int kCutMaxNodes = 60;
constexpr double kCutBudgetS = 60.0;
constexpr int kEnumInstances = 1000;
constexpr int kEnumMaxNodes = 14;
constexpr int kWalkInstances = 500;
constexpr int kWalkMaxNodes = 200;
constexpr int kNcspInstances = 500;
constexpr int kNcspMaxNodes = 2000;
constexpr int kNcspMaxPairs = 64;
constexpr int kFastRuns = 200;
constexpr double kScalingRatio = 2.6;
constexpr int kBenchMinExp = 12;
constexpr int kBenchMaxExp = 17;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Report {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::string str(Weight w) { return format_weight(w, 1); }

bool raw_cycle_ok(const RawGraph& g, const CycleResult& y) {
    if (y.weight.is_infinite()) return y.darts.empty();
    Weight sum(0);
    for (std::size_t i = 0; i < y.darts.size(); ++i) {
        if (!g.has_arc(y.darts[i])) return false;
        if (g.head(y.darts[i]) != g.tail(y.darts[(i + 1) % y.darts.size()])) return false;
        sum += *g.arc(y.darts[i]);
    }
    return sum == y.weight;
}

bool raw_cut_ok(const RawGraph& g, const CutResult& c) {
    if (c.weight.is_infinite()) return true;
    Weight sum(0);
    for (int d : c.cut) {
        if (!g.has_arc(d)) return false;
        sum += *g.arc(d);
    }
    return sum == c.weight && !reachable(g, c.source, c.cut)[c.sink];
}

bool plane_cycle_ok(const PlaneGraph& g, const CycleResult& r) {
    if (r.weight.is_infinite()) return true;
    return !r.darts.empty() && is_closed_walk(g, r.darts) && !is_degenerate(r.darts) &&
           walk_weight(g, r.darts) == r.weight;
}

// ---- 1 ----------------------------------------------------------------------

bool crit_four_node(Report& rep) {
    RawGraph g = figures::raw(figures::kFourNode);
    PlaneGraph pg = bidirect(g, Weight::infinite());
    Bidirected b = bidirect_and_triangulate(g, Mode::MinCut);
    PlaneGraph dual = dual_of_triangulation(b.graph);

    CutResult cut;
    CycleResult cyc, dc, gc;
    double best_ms = 1e9;
    for (int rep_i = 0; rep_i < 20; ++rep_i) {
        auto t0 = Clock::now();
        cut = min_cut(g);
        cyc = shortest_cycle(g);
        dc = shortest_nondegenerate_cycle(dual);
        gc = shortest_nondegenerate_cycle(pg);
        best_ms = std::min(best_ms, 1000 * seconds_since(t0));
    }

    rep.require(cut.weight == Weight(5), "min cut 5, got " + str(cut.weight));
    rep.require(cut.cut.size() == 1 && g.name(g.tail(cut.cut[0])) == "v2" && g.name(g.head(cut.cut[0])) == "v3",
                "cut {v2->v3}");
    rep.require(raw_cut_ok(g, cut), "cut certificate separates");
    rep.require(cyc.weight == Weight(6), "shortest cycle 6, got " + str(cyc.weight));
    rep.require(figures::cycle_names(g, cyc.darts) == std::vector<std::string>{"v2", "v3"}, "cycle v2 v3 v2");
    rep.require(gc.weight == Weight(16), "non-degenerate cycle of G 16, got " + str(gc.weight));
    rep.require(figures::cycle_names(pg, g, gc.darts) == std::vector<std::string>{"v2", "v3", "v4"},
                "cycle of G v2 v3 v4 v2");
    rep.require(plane_cycle_ok(pg, gc), "certificate of G cycle");
    rep.require(dc.weight == Weight(5), "dual non-degenerate cycle 5, got " + str(dc.weight));
    rep.require(plane_cycle_ok(dual, dc), "dual certificate");

    // The three faces around v3, crossed against the arcs into v3.
    const int v3 = figures::node(g, "v3");
    std::vector<int> around;
    for (int d : b.graph.rotation(v3)) around.push_back(twin(d));
    std::vector<int> rev(around.rbegin(), around.rend());
    const std::vector<int>& named = is_closed_walk(dual, around) ? around : rev;
    bool named_ok = named.size() == 3 && is_closed_walk(dual, named) && !is_degenerate(named) &&
                    walk_weight(dual, named) == Weight(5);
    rep.require(named_ok, "faces around v3 form a weight-5 dual cycle");
    bool same = std::set<int>(named.begin(), named.end()) == std::set<int>(dc.darts.begin(), dc.darts.end());

    rep.require(best_ms < kFourNodeBudgetMs, "time under 1 ms");
    rep.detail << " cut 5 {v2->v3}, cycle 6 v2v3v2, dual 5 (" << dc.darts.size() << "-face certificate"
               << (same ? "" : "; the 3-face cycle around v3 ties at 5") << "), G 16 v2v3v4v2, " << best_ms << " ms";
    return rep.ok;
}

// ---- 2 ----------------------------------------------------------------------

bool crit_seven_node(Report& rep) {
    RawGraph r = figures::raw(figures::kSevenNode);
    PlaneGraph g = bidirect(r, Weight::infinite());
    std::vector<int> c = figures::walk(g, r, {"v1", "v2", "v3", "v4", "v5"});
    Regions reg = split_regions(g, c);
    CycleResult in = shortest_nondegenerate_cycle(reg.interior.graph);
    CycleResult out = shortest_nondegenerate_cycle(reg.exterior.graph);

    SegmentedCycle sc;
    sc.p1 = figures::walk(g, r, {"v1", "v2", "v3"});
    sc.p1.pop_back();
    sc.bridge = g.find_dart(figures::node(r, "v3"), figures::node(r, "v4"));
    sc.p2 = figures::walk(g, r, {"v1", "v5", "v4"});
    sc.p2.pop_back();
    CycleResult cs = c_short_cycle(g, sc);
    CycleResult best = shortest_nondegenerate_cycle(g);
    Weight enum_in = oracle::enum_simple_nondegenerate_cycles(reg.interior.graph).weight;
    Weight enum_out = oracle::enum_simple_nondegenerate_cycles(reg.exterior.graph).weight;
    Weight enum_all = oracle::enum_simple_nondegenerate_cycles(g).weight;
    std::vector<std::string> names = figures::cycle_names(g, r, best.darts);
    std::string via;
    for (const auto& s : names) via += s;

    rep.require(in.weight == Weight(5), "interior optimum 5, got " + str(in.weight));
    rep.require(out.weight == Weight(7), "exterior optimum 7, got " + str(out.weight));
    rep.require(best.weight == Weight(4), "global optimum 4, got " + str(best.weight));
    rep.require(cs.weight == Weight(4), "C-short cycle 4, got " + str(cs.weight));
    rep.require(names == std::vector<std::string>{"v2", "v6", "v7", "v5"}, "global cycle v2v6v7v5v2, got " + via);
    rep.detail << " computed interior " << str(in.weight) << " (enum " << str(enum_in) << "), exterior "
               << str(out.weight) << " (enum " << str(enum_out) << "), global " << str(best.weight) << " (enum "
               << str(enum_all) << ") via " << via << names.front() << ", C-short " << str(cs.weight);
    return rep.ok;
}

// ---- 3 ----------------------------------------------------------------------

bool crit_incision(Report& rep) {
    RawGraph r = figures::raw(figures::kIncision);
    PlaneGraph g = figures::incision_graph(r);
    std::vector<int> c = figures::walk(g, r, {"s", "u1", "u2", "t", "v"});
    std::vector<int> p(c.begin(), c.begin() + 3);
    IncisedGraph h = incise(g, c, p);
    bool inf_copy = true;
    for (int e = g.num_edges(); e < h.graph.num_edges(); ++e)
        inf_copy = inf_copy && h.graph.weight(2 * e).is_infinite() && h.graph.weight(2 * e + 1).is_infinite();
    CycleResult cp = cp_short_cycle(g, c, p);

    rep.require(h.graph.num_nodes() == g.num_nodes() + 2, "incised node count n+2");
    rep.require(h.graph.num_edges() == g.num_edges() + 3, "incised edge count m+3");
    rep.require(inf_copy, "copy path weights Infinite");
    rep.require(h.u.size() == 2 && h.v.size() == 2, "two internal nodes and two copies");
    rep.require(g.face(g.outer_face()).size() == 3 && h.graph.face(h.graph.outer_face()).size() == 6,
                "outer face grows to the six nodes s u1 u2 t u2' u1'");
    rep.require(cp.weight == Weight(2), "cp_short_cycle 2, got " + str(cp.weight));
    rep.require(plane_cycle_ok(g, cp), "cp certificate");
    rep.detail << " incised n " << h.graph.num_nodes() << " m " << h.graph.num_edges() << ", cp weight "
               << str(cp.weight);
    return rep.ok;
}

// ---- 4 ----------------------------------------------------------------------

oracle::GenSpec mixed_spec(std::uint64_t seed, int n) {
    oracle::GenSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.triangulation = seed % 2 == 0;
    spec.keep_fraction = 0.2 + 0.1 * static_cast<double>(seed % 6);
    spec.zero_prob = seed % 3 == 0 ? 0.3 : 0.1;
    spec.inf_prob = seed % 4 == 0 ? 0.1 : 0.0;
    spec.absent_prob = 0.25;
    spec.max_weight = seed % 5 == 0 ? 3 : 100;
    return spec;
}

bool crit_cuts(Report& rep) {
    auto t0 = Clock::now();
    int wrong = 0, bad_cert = 0, triangulations = 0, with_inf = 0;
    for (int i = 0; i < kCutInstances; ++i) {
        std::uint64_t seed = 1000 + i;
        oracle::GenSpec spec = mixed_spec(seed, 2 + i % (kCutMaxNodes - 1));
        RawGraph g = oracle::gen_planar(spec);
        triangulations += spec.triangulation;
        with_inf += spec.inf_prob > 0;
        CutResult c = min_cut(g);
        if (c.weight != oracle::min_cut_maxflow(g, kCutMaxNodes)) ++wrong;
        if (!raw_cut_ok(g, c)) ++bad_cert;
    }
    double s = seconds_since(t0);
    rep.require(wrong == 0, std::to_string(wrong) + " mismatches");
    rep.require(bad_cert == 0, std::to_string(bad_cert) + " bad certificates");
    rep.require(s < kCutBudgetS, "suite under 60 s");
    rep.detail << " " << kCutInstances << " instances (" << triangulations << " triangulations, " << with_inf
               << " with Infinite arcs), " << s << " s";
    return rep.ok;
}

// ---- 5 ----------------------------------------------------------------------

bool crit_cycles(Report& rep) {
    int wrong = 0, bad_cert = 0;
    for (int i = 0; i < kEnumInstances; ++i) {
        std::uint64_t seed = 5000 + i;
        oracle::GenSpec spec = mixed_spec(seed, 3 + i % (kEnumMaxNodes - 2));
        PlaneGraph g = oracle::gen_plane_graph(spec);
        CoreOptions opt;
        opt.backend = i % 2 ? NcspBackend::Ddg : NcspBackend::Baseline;
        CycleResult res = shortest_nondegenerate_cycle(g, opt);
        if (res.weight != oracle::enum_simple_nondegenerate_cycles(g, kEnumMaxNodes).weight) ++wrong;
        if (!plane_cycle_ok(g, res)) ++bad_cert;
    }
    int walk_wrong = 0, walk_cert = 0;
    for (int i = 0; i < kWalkInstances; ++i) {
        std::uint64_t seed = 9000 + i;
        oracle::GenSpec spec = mixed_spec(seed, 2 + (i * 37) % (kWalkMaxNodes - 1));
        RawGraph g = oracle::gen_planar(spec);
        CycleResult y = shortest_cycle(g);
        if (y.weight != oracle::shortest_closed_walk(g)) ++walk_wrong;
        if (!raw_cycle_ok(g, y)) ++walk_cert;
    }
    rep.require(wrong == 0, std::to_string(wrong) + " enumeration mismatches");
    rep.require(bad_cert == 0, std::to_string(bad_cert) + " bad non-degenerate certificates");
    rep.require(walk_wrong == 0, std::to_string(walk_wrong) + " closed-walk mismatches");
    rep.require(walk_cert == 0, std::to_string(walk_cert) + " bad cycle certificates");
    rep.detail << " " << kEnumInstances << " enumeration instances (n <= " << kEnumMaxNodes << "), " << kWalkInstances
               << " closed-walk instances (n <= " << kWalkMaxNodes << ")";
    return rep.ok;
}

// ---- 6 ----------------------------------------------------------------------

bool crit_ncsp(Report& rep) {
    int wrong_base = 0, wrong_ddg = 0, max_n = 0, max_l = 0;
    long long fast = 0;
    for (int i = 0; i < kNcspInstances; ++i) {
        std::uint64_t seed = 20000 + i;
        int n = 20 + (i * 397) % (kNcspMaxNodes - 19);
        int l = 1 + (i * 13) % kNcspMaxPairs;
        auto in = instances::make_ncsp(seed, n, l, i % 3 == 0);
        max_n = std::max(max_n, in.g.num_nodes());
        max_l = std::max(max_l, static_cast<int>(in.u.size()));
        auto want = oracle::pairwise_dijkstra(in.g, instances::pairs(in));
        if (noncrossing_distances(in.g, in.u, in.v, NcspBackend::Baseline) != want) ++wrong_base;
        NcspOptions opt;
        // Small pieces so the dense distance graph is non-trivial; every
        // fourth instance keeps the formula value.
        opt.r_override = i % 4 == 3 ? 0 : 16 << (i % 3);
        NcspStats st;
        if (noncrossing_distances(in.g, in.u, in.v, NcspBackend::Ddg, &st, opt) != want) ++wrong_ddg;
        fast += st.fast_dijkstra_runs;
    }
    rep.require(max_n <= kNcspMaxNodes && max_l <= kNcspMaxPairs, "instance size limits");
    rep.require(wrong_base == 0, std::to_string(wrong_base) + " baseline mismatches");
    rep.require(wrong_ddg == 0, std::to_string(wrong_ddg) + " ddg mismatches");
    rep.detail << " " << kNcspInstances << " instances, n <= " << max_n << ", l <= " << max_l << ", " << fast
               << " fast Dijkstra runs";
    return rep.ok;
}

// ---- 7 ----------------------------------------------------------------------

PlaneGraph corpus_triangulation(std::uint64_t seed, int n) {
    oracle::GenSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.max_weight = 100;
    spec.zero_prob = 0.05;
    spec.inf_prob = seed % 4 == 0 ? 0.05 : 0.0;
    return oracle::gen_plane_graph(spec);
}

bool crit_monge(Report& rep) {
    long long units = 0, violations = 0, exhaustive = 0, sampled = 0;
    auto audit = [&](const std::vector<ddg::MongeUnit>& us) {
        for (std::size_t i = 0; i < us.size(); ++i) {
            ++units;
            (us[i].rows.size() <= 64 ? exhaustive : sampled) += 1;
            try {
                ddg::audit_monge(us[i], i + 1);
            } catch (const ddg::MongeViolation&) {
                ++violations;
            }
        }
    };
    // Units of plain triangulations and of the contexts the Ddg backend builds.
    for (std::uint64_t seed = 1; seed <= 24; ++seed) {
        PlaneGraph g = corpus_triangulation(seed, 200 + 150 * static_cast<int>(seed));
        ddg::DenseDistanceGraph k = ddg::dense_distance_graph(g, ddg::r_division(g, 16 << (seed % 4)));
        audit(ddg::monge_decomposition(k));
    }
    // Triangulated grids with large pieces give units above the exhaustive limit.
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        PlaneGraph g = triangulate(instances::grid_graph(50 + 20 * static_cast<int>(seed), seed), Weight::infinite()).graph;
        ddg::DenseDistanceGraph k = ddg::dense_distance_graph(g, ddg::r_division(g, 1024 << (seed % 2)));
        audit(ddg::monge_decomposition(k));
    }
    for (std::uint64_t seed = 1; seed <= 24; ++seed) {
        auto in = instances::make_ncsp(seed + 300, 300 + 60 * static_cast<int>(seed), 16, seed % 2);
        Normalized nz = normalize(in.g, in.u, in.v);
        ddg::Context ctx(nz.graph, nz.u, nz.v, 16 << (seed % 3));
        audit(ctx.units);
    }

    std::mt19937_64 rng(7);
    int runs = 0, mismatches = 0;
    for (std::uint64_t seed = 1; runs < kFastRuns; ++seed) {
        PlaneGraph g = corpus_triangulation(seed + 100, 300 + 100 * static_cast<int>(seed % 8));
        ddg::DenseDistanceGraph k = ddg::dense_distance_graph(g, ddg::r_division(g, 16 << (seed % 3)));
        auto us = ddg::monge_decomposition(k);
        for (bool transpose : {false, true}) {
            ddg::FastDijkstra fd(k, us, transpose);
            for (int trial = 0; trial < 10 && runs < kFastRuns; ++trial) {
                std::vector<int> x;
                std::bernoulli_distribution keep(trial == 0 ? 1.0 : 0.2 + 0.08 * trial);
                for (int a = 0; a < k.size(); ++a)
                    if (keep(rng)) x.push_back(a);
                if (x.empty()) continue;
                int src = x[rng() % x.size()];
                if (fd.run(x, src).dist != ddg::dense_dijkstra(k, x, src, transpose).dist) ++mismatches;
                ++runs;
            }
        }
    }
    rep.require(units > 0 && violations == 0, std::to_string(violations) + " Monge violations");
    rep.require(runs >= kFastRuns && mismatches == 0, std::to_string(mismatches) + " fast/dense mismatches");
    rep.detail << " " << units << " units audited (" << exhaustive << " exhaustive, " << sampled << " sampled), "
               << runs << " fast Dijkstra runs";
    return rep.ok;
}

// ---- 8 ----------------------------------------------------------------------

bool crit_structure(Report& rep) {
    int divisions = 0, out_of_bounds = 0;
    auto check_division = [&](const PlaneGraph& g, const ddg::Division& d, int r) {
        ddg::DivisionStats s = ddg::division_stats(g, d);
        ++divisions;
        if (!ddg::within_bounds(s, g.num_nodes(), r) || !s.edge_partition) ++out_of_bounds;
    };
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        PlaneGraph g = corpus_triangulation(seed + 500, 60 + 97 * static_cast<int>(seed));
        for (int r : {16, 32, 64, 128}) check_division(g, ddg::r_division(g, r), r);
    }
    for (int side : {20, 45, 70}) {
        PlaneGraph g = triangulate(instances::grid_graph(side, side), Weight::infinite()).graph;
        for (int r : {16, 64, 256, 1024}) check_division(g, ddg::r_division(g, r), r);
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto in = instances::make_ncsp(seed + 700, 200 + 80 * static_cast<int>(seed), 12, seed % 2);
        Normalized nz = normalize(in.g, in.u, in.v);
        int r = 16 << (seed % 3);
        ddg::Context ctx(nz.graph, nz.u, nz.v, r);
        check_division(nz.graph, ctx.division, r);
    }

    CoreStats total;
    auto add = [&](const CoreStats& s) {
        total.divide_steps += s.divide_steps;
        total.ratio_violations += s.ratio_violations;
        total.sum_violations += s.sum_violations;
    };
    for (int i = 0; i < 400; ++i) {
        std::uint64_t seed = 30000 + i;
        PlaneGraph g = oracle::gen_plane_graph(mixed_spec(seed, 4 + (i * 53) % 300));
        CoreStats s;
        CoreOptions opt;
        opt.backend = i % 2 ? NcspBackend::Ddg : NcspBackend::Baseline;
        shortest_nondegenerate_cycle(g, opt, &s);
        add(s);
    }
    rep.require(out_of_bounds == 0, std::to_string(out_of_bounds) + " divisions out of bounds");
    rep.require(total.divide_steps > 0, "divide steps exercised");
    rep.require(total.ratio_violations == 0, std::to_string(total.ratio_violations) + " ratio violations");
    rep.require(total.sum_violations == 0, std::to_string(total.sum_violations) + " sum violations");
    rep.detail << " " << divisions << " divisions within bounds, " << total.divide_steps << " divide steps audited";
    return rep.ok;
}

// ---- 9 ----------------------------------------------------------------------

bool crit_scaling(Report& rep) {
    std::string cmd = std::string(PLANARCUT_CLI_PATH) + " bench --json --min-exp " + std::to_string(kBenchMinExp) +
                      " --max-exp " + std::to_string(kBenchMaxExp);
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        rep.require(false, "could not start the CLI");
        return false;
    }
    std::array<char, 4096> buf;
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
    int status = pclose(p);
    rep.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "bench exited cleanly");
    if (!rep.ok) return false;
    auto rows = nlohmann::json::parse(out)["certificate"]["rows"];
    double worst = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double ms = rows[i]["ms"].get<double>();
        rep.detail << " n=" << rows[i]["n"].get<int>() << ":" << std::lround(ms) << "ms";
        if (i > 0) {
            double ratio = rows[i]["ratio"].get<double>();
            rep.detail << "(x" << std::round(ratio * 100) / 100 << ")";
            worst = std::max(worst, ratio);
        }
    }
    rep.require(rows.size() == kBenchMaxExp - kBenchMinExp + 1, "one row per size");
    rep.require(worst <= kScalingRatio, "every doubling ratio <= 2.6");
    rep.detail << " worst ratio " << worst;
    return rep.ok;
}

struct Criterion {
    int id;
    const char* name;
    // Non-gating criteria still print an honest PASS/FAIL but do not set the
    // exit status: report-only thresholds and golden values the source states
    // inconsistently (recorded in the notes).
    bool gating;
    std::function<bool(Report&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all = {
        {1, "four-node golden values", true, crit_four_node},
        {2, "seven-node golden values (stated values conflict with the stated weights)", false, crit_seven_node},
        {3, "incision golden values", true, crit_incision},
        {4, "min cut vs max flow", true, crit_cuts},
        {5, "cycles vs enumeration and closed walks", true, crit_cycles},
        {6, "noncrossing paths: baseline, ddg, pairwise", true, crit_ncsp},
        {7, "Monge audit and fast Dijkstra", true, crit_monge},
        {8, "division bounds and divide-step audits", true, crit_structure},
        {9, "min-cut scaling (report only)", false, crit_scaling},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (const auto& c : all) {
        if (only && c.id != only) continue;
        Report rep;
        auto t0 = Clock::now();
        bool ok;
        try {
            ok = c.run(rep);
        } catch (const std::exception& e) {
            ok = false;
            rep.detail << " [exception: " << e.what() << "]";
        }
        std::cout << "criterion " << c.id << " " << (ok ? "PASS" : "FAIL") << " " << c.name << ":"
                  << rep.detail.str() << " (" << seconds_since(t0) << " s)" << std::endl;
        if (!ok && c.gating) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

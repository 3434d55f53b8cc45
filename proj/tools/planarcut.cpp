#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "planarcut/cycle_core.hpp"
#include "planarcut/graph_io.hpp"
#include "planarcut/ncsp.hpp"
#include "planarcut/oracle.hpp"
#include "planarcut/reduce.hpp"

using json = nlohmann::json;
using namespace planarcut;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;

class Invalid : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string backend = "baseline";
    std::uint64_t seed = 1;
    bool json = false;
};

NcspBackend backend_of(const std::string& s) { return s == "ddg" ? NcspBackend::Ddg : NcspBackend::Baseline; }

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json weight_json(Weight w, std::int64_t scale) {
    if (w.is_infinite()) return "inf";
    if (scale == 1) return w.value();
    return std::stod(format_weight(w, scale));
}

std::string arc_name(const RawGraph& g, int d) { return g.name(g.tail(d)) + "->" + g.name(g.head(d)); }

int workers() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PLANARCUT_THREADS")) n = std::atoi(env);
    return std::max(1, n);
}

// Runs job(i) for i in [0, count) on a worker pool.
template <class Job>
void parallel_for(int count, Job&& job) {
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < count; i = next++) job(i);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::min(workers(), count); ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

// ---- certificates ----

void check_cut(const RawGraph& g, const CutResult& r) {
    if (r.weight.is_infinite()) return;
    Weight total(0);
    for (int d : r.cut) {
        if (!g.has_arc(d)) throw Invalid("cut certificate names a missing arc");
        total += *g.arc(d);
    }
    if (total != r.weight) throw Invalid("cut certificate weight mismatch");
    if (r.source < 0 || r.sink < 0 || reachable(g, r.source, r.cut)[r.sink])
        throw Invalid("cut certificate does not separate its witness pair");
}

void check_cycle(const RawGraph& g, const CycleResult& r) {
    if (r.weight.is_infinite()) return;
    if (r.darts.empty()) throw Invalid("finite cycle without darts");
    Weight total(0);
    std::vector<char> seen(g.num_nodes, 0);
    for (std::size_t i = 0; i < r.darts.size(); ++i) {
        int d = r.darts[i];
        if (!g.has_arc(d)) throw Invalid("cycle certificate uses a missing arc");
        if (g.head(d) != g.tail(r.darts[(i + 1) % r.darts.size()])) throw Invalid("cycle certificate does not chain");
        if (seen[g.tail(d)]) throw Invalid("cycle certificate repeats a node");
        seen[g.tail(d)] = 1;
        total += *g.arc(d);
    }
    if (total != r.weight) throw Invalid("cycle certificate weight mismatch");
}

int find_node(const RawGraph& g, const std::string& s) {
    for (int v = 0; v < g.num_nodes; ++v)
        if (g.name(v) == s) return v;
    throw Invalid("unknown terminal " + s);
}

std::vector<int> terminal_list(const RawGraph& g, const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(find_node(g, tok));
    return out;
}

void emit(const Common& c, json j, const std::string& text) {
    if (c.json) std::cout << j.dump() << "\n";
    else std::cout << text << "\n";
}

// ---- commands ----

int cmd_mincut(const Common& c, const std::string& path) {
    RawGraph g = parse_graph_file(path);
    auto t0 = std::chrono::steady_clock::now();
    CoreOptions opt;
    opt.backend = backend_of(c.backend);
    CutResult r = min_cut(g, &opt);
    double ms = ms_since(t0);
    check_cut(g, r);
    json cut = json::array();
    std::string text = "weight " + format_weight(r.weight, g.scale) + ", cut:";
    for (int d : r.cut) {
        cut.push_back(arc_name(g, d));
        text += " " + arc_name(g, d);
    }
    json cert = {{"cut", cut}};
    if (r.source >= 0) cert["witness"] = {g.name(r.source), g.name(r.sink)};
    emit(c,
         {{"problem", "mincut"}, {"weight", weight_json(r.weight, g.scale)}, {"certificate", cert},
          {"backend", c.backend}, {"n", g.num_nodes}, {"m", g.num_arcs()}, {"elapsed_ms", ms}},
         text);
    return kExitOk;
}

int cmd_cycle(const Common& c, const std::string& path) {
    RawGraph g = parse_graph_file(path);
    auto t0 = std::chrono::steady_clock::now();
    CoreOptions opt;
    opt.backend = backend_of(c.backend);
    CycleResult r = shortest_cycle(g, &opt);
    double ms = ms_since(t0);
    check_cycle(g, r);
    json walk = json::array();
    std::string text = "weight " + format_weight(r.weight, g.scale) + ", cycle:";
    if (!r.darts.empty()) {
        for (int d : r.darts) {
            walk.push_back(g.name(g.tail(d)));
            text += " " + g.name(g.tail(d));
        }
        walk.push_back(g.name(g.tail(r.darts[0])));
        text += " " + g.name(g.tail(r.darts[0]));
    }
    emit(c,
         {{"problem", "cycle"}, {"weight", weight_json(r.weight, g.scale)}, {"certificate", {{"cycle", walk}}},
          {"backend", c.backend}, {"n", g.num_nodes}, {"m", g.num_arcs()}, {"elapsed_ms", ms}},
         text);
    return kExitOk;
}

int cmd_ncsp(const Common& c, const std::string& path, const std::string& us, const std::string& vs) {
    RawGraph raw = parse_graph_file(path);
    PlaneGraph g = bidirect(raw, Weight::infinite());
    std::vector<int> u = terminal_list(raw, us), v = terminal_list(raw, vs);
    if (u.size() != v.size() || u.empty()) throw Invalid("--u and --v need the same nonzero number of terminals");
    auto t0 = std::chrono::steady_clock::now();
    // The file fixes the embedding only up to the choice of outer face; use the
    // default one when the terminals fit it, else the first face that fits.
    std::vector<Weight> d;
    const int outer = g.outer_face();
    for (int k = 0; k <= g.num_faces(); ++k) {
        int f = k == 0 ? outer : k - 1;
        if (k > 0 && f == outer) continue;
        g.set_outer_face(f);
        try {
            d = noncrossing_distances(g, u, v, backend_of(c.backend));
            break;
        } catch (const TerminalsNotInOrder&) {
            if (k == g.num_faces()) throw;
        }
    }
    if (d.empty()) throw TerminalsNotInOrder("terminals do not appear in order on any face");
    double ms = ms_since(t0);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < u.size(); ++i) pairs.push_back({u[i], v[i]});
    if (oracle::pairwise_dijkstra(g, pairs) != d) throw Invalid("distance table disagrees with per-pair Dijkstra");
    json table = json::array();
    std::string text = "distances:";
    for (std::size_t i = 0; i < u.size(); ++i) {
        table.push_back({{"u", raw.name(u[i])}, {"v", raw.name(v[i])}, {"weight", weight_json(d[i], raw.scale)}});
        text += "\n  " + raw.name(u[i]) + " -> " + raw.name(v[i]) + ": " + format_weight(d[i], raw.scale);
    }
    emit(c,
         {{"problem", "ncsp"}, {"weight", nullptr}, {"certificate", {{"distances", table}}}, {"backend", c.backend},
          {"n", raw.num_nodes}, {"m", raw.num_arcs()}, {"elapsed_ms", ms}},
         text);
    return kExitOk;
}

int cmd_check(const Common& c, int count) {
    struct Failure {
        std::string what;
        std::uint64_t seed;
    };
    std::vector<Failure> failures;
    std::mutex mu;
    std::atomic<int> done{0};
    auto t0 = std::chrono::steady_clock::now();
    const NcspBackend backend = backend_of(c.backend);
    parallel_for(count, [&](int i) {
        oracle::GenSpec spec;
        spec.seed = c.seed * 1000003ULL + i;
        spec.triangulation = i % 2 == 0;
        spec.zero_prob = 0.15;
        spec.absent_prob = 0.2;
        spec.inf_prob = i % 3 == 0 ? 0.05 : 0.0;
        auto fail = [&](const std::string& what) {
            std::lock_guard<std::mutex> lock(mu);
            failures.push_back({what, spec.seed});
        };
        try {
            spec.n = 3 + i % 28;
            RawGraph raw = oracle::gen_planar(spec);
            if (min_cut(raw).weight != oracle::min_cut_maxflow(raw)) fail("mincut");
            if (shortest_cycle(raw).weight != oracle::shortest_closed_walk(raw)) fail("cycle");
            spec.n = 3 + i % 10;
            PlaneGraph pg = oracle::gen_plane_graph(spec);
            CoreOptions opt;
            opt.backend = backend;
            if (shortest_nondegenerate_cycle(pg, opt).weight != oracle::enum_simple_nondegenerate_cycles(pg).weight)
                fail("nondegenerate cycle");
            spec.n = 20 + i % 40;
            PlaneGraph ng = oracle::gen_plane_graph(spec);
            const auto& walk = ng.face(ng.outer_face());
            int len = static_cast<int>(walk.size()), l = len / 2;
            std::vector<int> u, v;
            for (int k = 0; k < l; ++k) {
                u.push_back(ng.tail(walk[k]));
                v.push_back(ng.tail(walk[len - 1 - k]));
            }
            std::vector<std::pair<int, int>> pairs;
            for (int k = 0; k < l; ++k) pairs.push_back({u[k], v[k]});
            bool distinct = true;
            std::vector<char> seen(ng.num_nodes(), 0);
            for (int k = 0; k < len; ++k) distinct = distinct && !seen[ng.tail(walk[k])]++;
            if (l >= 1 && distinct && noncrossing_distances(ng, u, v, backend) != oracle::pairwise_dijkstra(ng, pairs))
                fail("ncsp");
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what());
        }
        ++done;
    });
    json list = json::array();
    std::string text = "checked " + std::to_string(count) + " instances, " + std::to_string(failures.size()) + " failures";
    for (auto& f : failures) {
        list.push_back({{"check", f.what}, {"seed", f.seed}});
        text += "\n  " + f.what + " (seed " + std::to_string(f.seed) + ")";
    }
    emit(c,
         {{"problem", "check"}, {"weight", nullptr}, {"certificate", {{"failures", list}}}, {"backend", c.backend},
          {"n", count}, {"m", 0}, {"elapsed_ms", ms_since(t0)}},
         text);
    return failures.empty() ? kExitOk : kExitInvalid;
}

int cmd_bench(const Common& c, int min_exp, int max_exp, int reps) {
    json rows = json::array();
    std::string text = "n\tm\tms\tratio";
    double prev = 0;
    CoreOptions opt;
    opt.backend = backend_of(c.backend);
    for (int e = min_exp; e <= max_exp; ++e) {
        oracle::GenSpec spec;
        spec.n = 1 << e;
        spec.seed = c.seed + e;
        spec.max_weight = 1000;
        RawGraph raw = oracle::gen_planar(spec);
        double best = 0;
        for (int r = 0; r < reps; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            CutResult cut = min_cut(raw, &opt);
            double ms = ms_since(t0);
            check_cut(raw, cut);
            if (r == 0 || ms < best) best = ms;
        }
        double ratio = prev > 0 ? best / prev : 0;
        rows.push_back({{"n", spec.n}, {"m", raw.num_arcs()}, {"ms", best}, {"ratio", ratio}});
        std::ostringstream line;
        line << spec.n << "\t" << raw.num_arcs() << "\t" << best << "\t" << ratio;
        text += "\n" + line.str();
        prev = best;
    }
    emit(c,
         {{"problem", "bench"}, {"weight", nullptr}, {"certificate", {{"rows", rows}}}, {"backend", c.backend},
          {"n", 1 << max_exp}, {"m", 0}, {"elapsed_ms", 0}},
         text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum cuts and shortest cycles in directed planar graphs"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--backend", c.backend, "noncrossing-paths backend")
            ->check(CLI::IsMember({"baseline", "ddg"}));
        s->add_option("--seed", c.seed, "random seed");
        s->add_flag("--json", c.json, "JSON output");
    };
    std::string path, us, vs;
    int count = 200, min_exp = 12, max_exp = 17, reps = 1;

    auto* mincut = app.add_subcommand("mincut", "global minimum cut");
    mincut->add_option("file", path)->required();
    auto* cycle = app.add_subcommand("cycle", "shortest directed cycle");
    cycle->add_option("file", path)->required();
    auto* ncsp = app.add_subcommand("ncsp", "noncrossing shortest path distances between outer-face terminals");
    ncsp->add_option("file", path)->required();
    ncsp->add_option("--u", us, "comma-separated sources")->required();
    ncsp->add_option("--v", vs, "comma-separated targets")->required();
    auto* check = app.add_subcommand("check", "compare against the reference oracles");
    check->add_option("--count", count, "number of generated instances");
    auto* bench = app.add_subcommand("bench", "min-cut timing on generated triangulations");
    bench->add_option("--min-exp", min_exp, "smallest size exponent");
    bench->add_option("--max-exp", max_exp, "largest size exponent");
    bench->add_option("--reps", reps, "repetitions per size (best time kept)");
    for (auto* s : {mincut, cycle, ncsp, check, bench}) add_common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }
    try {
        if (*mincut) return cmd_mincut(c, path);
        if (*cycle) return cmd_cycle(c, path);
        if (*ncsp) return cmd_ncsp(c, path, us, vs);
        if (*check) return cmd_check(c, count);
        if (*bench) return cmd_bench(c, min_exp, max_exp, reps);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

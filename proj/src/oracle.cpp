#include "planarcut/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <random>

namespace planarcut::oracle {

RawGraph gen_planar(const GenSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    const int n = std::max(spec.n, 1);
    RawGraph g;
    g.num_nodes = n;
    g.rot.assign(n, {});
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> rot_darts(n);
    if (n == 2) {
        pairs.push_back({0, 1});
        rot_darts[0] = {0};
        rot_darts[1] = {1};
    } else if (n >= 3) {
        // Oriented triangles of a sphere triangulation; each dart lies on the
        // left of exactly one of them.
        std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
        for (int x = 3; x < n; ++x) {
            std::size_t i = std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng);
            auto [a, b, c] = faces[i];
            faces[i] = {a, b, x};
            faces.push_back({b, c, x});
            faces.push_back({c, a, x});
        }
        std::map<std::pair<int, int>, int> id;
        auto dart = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto [it, fresh] = id.emplace(std::pair<int, int>(key.first, key.second), static_cast<int>(pairs.size()));
            if (fresh) pairs.push_back({a, b});
            return 2 * it->second + (pairs[it->second].first == a ? 0 : 1);
        };
        std::vector<int> succ;
        auto set_succ = [&](int d, int s) {
            if (static_cast<int>(succ.size()) <= std::max(d, s)) succ.resize(std::max(d, s) + 1, -1);
            succ[d] = s;
        };
        for (auto [a, b, c] : faces) {
            set_succ(dart(a, b), dart(a, c));
            set_succ(dart(b, c), dart(b, a));
            set_succ(dart(c, a), dart(c, b));
        }
        for (int v = 0; v < n; ++v) {
            int start = -1;
            for (int d = 0; d < static_cast<int>(succ.size()); ++d) {
                int t = (d & 1) ? pairs[d >> 1].second : pairs[d >> 1].first;
                if (t == v) {
                    start = d;
                    break;
                }
            }
            for (int d = start;;) {
                rot_darts[v].push_back(d);
                d = succ[d];
                if (d == start) break;
            }
        }
    }

    std::vector<char> keep(pairs.size(), 1);
    if (!spec.triangulation && pairs.size() > 1) {
        std::vector<int> order(pairs.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (int e : order) {
            int a = find(pairs[e].first), b = find(pairs[e].second);
            if (a != b) parent[a] = b;
            else keep[e] = u01(rng) < spec.keep_fraction;
        }
    }

    std::vector<int> new_id(pairs.size(), -1);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> uw(1, std::max<std::int64_t>(spec.max_weight, 1));
    auto draw = [&](bool allow_absent) -> std::optional<Weight> {
        double r = u01(rng);
        if (allow_absent && r < spec.absent_prob) return std::nullopt;
        r = u01(rng);
        if (r < spec.inf_prob) return Weight::infinite();
        if (r < spec.inf_prob + spec.zero_prob) return Weight(0);
        return Weight(uw(rng));
    };
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (!keep[e]) continue;
        new_id[e] = static_cast<int>(g.edges.size());
        auto w1 = draw(true);
        auto w2 = draw(true);
        g.edges.push_back({pairs[e].first, pairs[e].second, w1, w2});
    }
    for (int v = 0; v < n; ++v)
        for (int d : rot_darts[v])
            if (keep[d >> 1]) g.rot[v].push_back(new_id[d >> 1]);
    return g;
}

PlaneGraph gen_plane_graph(const GenSpec& spec) {
    GenSpec s = spec;
    s.absent_prob = 0;
    return bidirect(gen_planar(s), Weight::infinite());
}

// ---- cycle enumeration ------------------------------------------------------

namespace detail {

void enum_cycles(const PlaneGraph& g, const void* ctx, bool (*keep)(const void*, const std::vector<int>&),
                 CycleAnswer& best) {
    const int n = g.num_nodes();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    std::int64_t best_w = std::numeric_limits<std::int64_t>::max();
    // Every cycle is rooted at its smallest node; cost pruning keeps it exact
    // because weights are nonnegative.
    for (int s = 0; s < n; ++s) {
        auto dfs = [&](auto&& self, int v, std::int64_t w) -> void {
            for (int d : g.rotation(v)) {
                Weight dw = g.weight(d);
                if (dw.is_infinite()) continue;
                std::int64_t nw = w + dw.value();
                if (nw >= best_w) continue;
                int x = g.head(d);
                if (x == s) {
                    if (path.size() < 2) continue;
                    path.push_back(d);
                    if (keep(ctx, path)) {
                        best_w = nw;
                        best.weight = Weight(nw);
                        best.darts = path;
                    }
                    path.pop_back();
                    continue;
                }
                if (x < s || on_path[x]) continue;
                on_path[x] = 1;
                path.push_back(d);
                self(self, x, nw);
                path.pop_back();
                on_path[x] = 0;
            }
        };
        on_path[s] = 1;
        dfs(dfs, s, 0);
        on_path[s] = 0;
    }
}

}  // namespace detail

CycleAnswer enum_simple_nondegenerate_cycles(const PlaneGraph& g, int max_nodes) {
    if (g.num_nodes() > max_nodes)
        throw TooLarge("cycle enumeration limited to " + std::to_string(max_nodes) + " nodes");
    return enum_cycles_if(g, [](const std::vector<int>&) { return true; });
}

// ---- max flow -----------------------------------------------------------------

namespace {

struct FlowNet {
    struct Arc {
        int to;
        std::int64_t cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit FlowNet(int n) : out(n) {}
    void add(int u, int v, std::int64_t c) {
        out[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, c});
        out[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0});
    }

    std::int64_t run(int s, int t, std::int64_t limit) {
        std::int64_t flow = 0;
        const int n = static_cast<int>(out.size());
        std::vector<int> via(n);
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::queue<int> q;
            q.push(s);
            via[s] = -2;
            while (!q.empty() && via[t] == -1) {
                int v = q.front();
                q.pop();
                for (int a : out[v])
                    if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
                        via[arcs[a].to] = a;
                        q.push(arcs[a].to);
                    }
            }
            if (via[t] == -1) break;
            std::int64_t push = limit - flow;
            for (int v = t; v != s; v = arcs[via[v] ^ 1].to) push = std::min(push, arcs[via[v]].cap);
            for (int v = t; v != s; v = arcs[via[v] ^ 1].to) {
                arcs[via[v]].cap -= push;
                arcs[via[v] ^ 1].cap += push;
            }
            flow += push;
        }
        return flow;
    }
};

std::int64_t sentinel(const RawGraph& g) {
    std::int64_t s = 1;
    for (const auto& e : g.edges)
        for (const auto& w : {e.w_uv, e.w_vu})
            if (w && w->is_finite()) s += w->value();
    return s;
}

std::int64_t flow_value(const RawGraph& g, int s, int t, std::int64_t inf) {
    FlowNet net(g.num_nodes);
    for (int d = 0; d < 2 * static_cast<int>(g.edges.size()); ++d) {
        const auto& w = g.arc(d);
        if (!w) continue;
        net.add(g.tail(d), g.head(d), w->is_infinite() ? inf : w->value());
    }
    return net.run(s, t, inf);
}

}  // namespace

Weight max_flow(const RawGraph& g, int s, int t) {
    const std::int64_t inf = sentinel(g);
    std::int64_t f = flow_value(g, s, t, inf);
    return f >= inf ? Weight::infinite() : Weight(f);
}

Weight min_cut_maxflow(const RawGraph& g, int max_nodes) {
    if (g.num_nodes > max_nodes)
        throw TooLarge("max-flow oracle limited to " + std::to_string(max_nodes) + " nodes");
    const std::int64_t inf = sentinel(g);
    std::int64_t best = inf;
    // Node 0 lies on one side of any cut, so pairs through node 0 suffice.
    for (int t = 1; t < g.num_nodes; ++t) {
        best = std::min(best, flow_value(g, 0, t, inf));
        best = std::min(best, flow_value(g, t, 0, inf));
    }
    return best >= inf ? Weight::infinite() : Weight(best);
}

// ---- shortest paths -------------------------------------------------------------

namespace {

template <class Arcs>
std::vector<Weight> plain_dijkstra(int n, int source, Arcs&& arcs) {
    std::vector<Weight> dist(n, Weight::infinite());
    std::vector<char> done(n, 0);
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[source] = Weight(0);
    pq.push({0, source});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = 1;
        arcs(v, [&](int x, Weight w) {
            if (w.is_infinite()) return;
            Weight nd = Weight(d) + w;
            if (nd < dist[x]) {
                dist[x] = nd;
                pq.push({nd.value(), x});
            }
        });
    }
    return dist;
}

}  // namespace

std::vector<Weight> dijkstra(const PlaneGraph& g, int source) {
    return plain_dijkstra(g.num_nodes(), source, [&](int v, auto&& relax) {
        for (int d : g.rotation(v)) relax(g.head(d), g.weight(d));
    });
}

std::vector<Weight> dijkstra_raw(const RawGraph& g, int source) {
    std::vector<std::vector<std::pair<int, Weight>>> adj(g.num_nodes);
    for (int d = 0; d < 2 * static_cast<int>(g.edges.size()); ++d)
        if (g.arc(d)) adj[g.tail(d)].push_back({g.head(d), *g.arc(d)});
    return plain_dijkstra(g.num_nodes, source, [&](int v, auto&& relax) {
        for (auto [x, w] : adj[v]) relax(x, w);
    });
}

std::vector<Weight> bellman_ford(const PlaneGraph& g, int source) {
    std::vector<Weight> dist(g.num_nodes(), Weight::infinite());
    dist[source] = Weight(0);
    for (int round = 0; round < g.num_nodes(); ++round) {
        bool changed = false;
        for (int d = 0; d < g.num_darts(); ++d) {
            if (g.weight(d).is_infinite() || dist[g.tail(d)].is_infinite()) continue;
            Weight nd = dist[g.tail(d)] + g.weight(d);
            if (nd < dist[g.head(d)]) {
                dist[g.head(d)] = nd;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return dist;
}

std::vector<Weight> pairwise_dijkstra(const PlaneGraph& g, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Weight> out;
    std::map<int, std::vector<Weight>> cache;
    for (auto [s, t] : pairs) {
        auto it = cache.find(s);
        if (it == cache.end()) it = cache.emplace(s, dijkstra(g, s)).first;
        out.push_back(it->second[t]);
    }
    return out;
}

Weight shortest_closed_walk(const RawGraph& g) {
    Weight best = Weight::infinite();
    std::vector<std::vector<Weight>> from(g.num_nodes);
    for (int d = 0; d < 2 * static_cast<int>(g.edges.size()); ++d) {
        const auto& w = g.arc(d);
        if (!w || w->is_infinite()) continue;
        int v = g.head(d);
        if (from[v].empty()) from[v] = dijkstra_raw(g, v);
        best = std::min(best, *w + from[v][g.tail(d)]);
    }
    return best;
}

}  // namespace planarcut::oracle

#include "planarcut/cycle_core.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "planarcut/shortest_paths.hpp"

namespace planarcut {

namespace {

struct Cand {
    Cost cost = Cost::unreached();
    std::vector<int> darts;
};

CycleResult to_result(const Cand& c) {
    CycleResult r;
    if (c.cost.is_unreached() || c.cost.inf > 0) return r;
    r.weight = c.cost.weight();
    r.darts = c.darts;
    return r;
}

// Faces of a possibly disconnected plane graph, counting one shared outer face.
int face_count(const PlaneGraph& g) {
    if (g.num_edges() == 0) return 1;
    return g.num_faces() - g.num_components() + 1;
}

std::vector<int> reversed(const std::vector<int>& p) {
    std::vector<int> out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(twin(*it));
    return out;
}

Cand brute_force(const PlaneGraph& g) {
    Cand best;
    const int n = g.num_nodes();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    // Simple cycles whose smallest node is s, each found in both directions.
    std::function<void(int, int, Cost)> dfs = [&](int s, int v, Cost c) {
        for (int d : g.rotation(v)) {
            int x = g.head(d);
            Cost nc = c + g.cost(d);
            if (x == s) {
                if (path.size() >= 2 && nc < best.cost) {
                    best.cost = nc;
                    best.darts = path;
                    best.darts.push_back(d);
                }
                continue;
            }
            if (x < s || on_path[x]) continue;
            on_path[x] = 1;
            path.push_back(d);
            dfs(s, x, nc);
            path.pop_back();
            on_path[x] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        on_path[s] = 1;
        dfs(s, s, Cost{});
        on_path[s] = 0;
    }
    return best;
}

Cand map_edges(const Cand& c, const std::vector<int>& edge_map) {
    Cand out;
    out.cost = c.cost;
    for (int d : c.darts) out.darts.push_back(2 * edge_map[edge_of(d)] + (d & 1));
    return out;
}

void keep_better(Cand& best, Cand c) {
    if (c.cost < best.cost) best = std::move(c);
}

Cand cp_cand(const PlaneGraph& g, const std::vector<int>& cycle, const std::vector<int>& p, const CoreOptions& opt,
             CoreStats& st) {
    if (p.empty()) throw std::invalid_argument("cp_short_cycle: path needs at least one edge");
    ++st.cp_calls;
    Cand best;
    Dijkstra dj(g);

    // C0: through an end of p.
    const int s = g.tail(p.front()), t = g.head(p.back());
    std::vector<int> incident;
    for (int end : {s, t})
        for (int d : g.rotation(end)) {
            incident.push_back(d);
            incident.push_back(twin(d));
        }
    for (int d : incident) {
        int a = g.tail(d), b = g.head(d), e = edge_of(d);
        dj.run(b, false, [e](int x) { return x != e; }, a);
        if (!dj.reached(a)) continue;
        Cand c;
        c.cost = g.cost(d) + dj.dist(a);
        c.darts.push_back(d);
        for (int x : dj.path(a)) c.darts.push_back(x);
        keep_better(best, std::move(c));
    }
    if (p.size() < 2) return best;

    IncisedGraph h = incise(g, cycle, p);
    const int l = static_cast<int>(h.u.size());
    std::vector<Cost> d1 = noncrossing_costs(h.graph, h.u, h.v, opt.backend, &st.ncsp, opt.ncsp);
    PlaneGraph hr = reverse_weights(h.graph);
    std::vector<Cost> d2 = noncrossing_costs(hr, h.u, h.v, opt.backend, &st.ncsp, opt.ncsp);

    Dijkstra hd(h.graph);
    auto materialize = [&](int from, int to, Cost expect) {
        hd.run(from, false, to);
        if (hd.dist(to) != expect) throw std::logic_error("incised distance disagrees with its path");
        Cand c;
        c.cost = expect;
        for (int d : hd.path(to)) c.darts.push_back(h.dart_origin[d]);
        c.darts = simple_subcycle(g, c.darts);
        c.cost = walk_cost(g, c.darts);
        return c;
    };
    int i1 = -1, i2 = -1;
    for (int i = 0; i < l; ++i) {
        if (d1[i].inf == 0 && (i1 == -1 || d1[i] < d1[i1])) i1 = i;
        if (d2[i].inf == 0 && (i2 == -1 || d2[i] < d2[i2])) i2 = i;
    }
    if (i1 != -1) keep_better(best, materialize(h.u[i1], h.v[i1], d1[i1]));
    if (i2 != -1) keep_better(best, materialize(h.v[i2], h.u[i2], d2[i2]));
    return best;
}

Cand solve_graph(const PlaneGraph& h, const CoreOptions& opt, CoreStats& st);

Cand divide(const PlaneGraph& g, const CoreOptions& opt, CoreStats& st) {
    ++st.divide_steps;
    const int m = g.num_edges();
    const int faces = g.num_faces();
    SsspTree tree = sssp(g, 0);
    Triangulation tri = triangulate(g, Weight::infinite());
    std::vector<char> tree_edge(tri.graph.num_edges(), 0), preferred(tri.graph.num_edges(), 0);
    for (int v = 0; v < g.num_nodes(); ++v)
        if (tree.parent[v] != -1) tree_edge[edge_of(tree.parent[v])] = 1;
    for (int e = 0; e < m; ++e) preferred[e] = 1;
    std::vector<int> fw = assign_face_weights(tri, faces);
    BalancedEdge be = balanced_fundamental_cycle(tri.graph, tree_edge, fw, &preferred);

    // A chord becomes an infinite guard edge of g, placed in the face it splits.
    PlaneGraph gs;
    int bridge = 2 * be.edge;
    if (be.edge < m) {
        gs = g;
    } else {
        ++st.guard_edges;
        const PlaneGraph& t = tri.graph;
        auto anchor = [&](int d) {
            int a = t.rot_prev(d);
            while (edge_of(a) >= m) a = t.rot_prev(a);
            return a;
        };
        int x = t.tail(bridge), y = t.head(bridge);
        EmbeddingEditor ed(g);
        int e = ed.add_edge(x, y, Weight::infinite(), Weight::infinite(), anchor(bridge), anchor(twin(bridge)));
        gs = ed.build().graph;
        bridge = 2 * e;
    }
    SegmentedCycle sc = segmented_cycle_from_edge(gs, tree, bridge);
    Cand best = cp_cand(gs, sc.cycle(), sc.p1.empty() ? sc.p2 : sc.p1, opt, st);
    // Candidates through the guard edge are not cycles of g.
    if (std::any_of(best.darts.begin(), best.darts.end(), [m](int d) { return edge_of(d) >= m; })) best = Cand{};

    CycleSides sides = cycle_sides(gs, sc.cycle());
    Cand parts[2];
    int part_faces[2];
    const std::vector<int>* lists[2] = {&sides.interior_edges, &sides.exterior_edges};
    Subgraph subs[2];
    for (int k = 0; k < 2; ++k) {
        std::vector<int> edges;
        for (int e : *lists[k])
            if (e < m) edges.push_back(e);
        subs[k] = extract_subgraph(g, edges);
        part_faces[k] = face_count(subs[k].graph);
        if (part_faces[k] >= faces) throw std::logic_error("separating cycle did not shrink a side");
        if (20LL * part_faces[k] > 19LL * faces) ++st.ratio_violations;
    }
    if (part_faces[0] + part_faces[1] > faces + 2) ++st.sum_violations;
    for (int k = 0; k < 2; ++k) parts[k] = map_edges(solve_graph(subs[k].graph, opt, st), subs[k].edge_map);

    Cand out = parts[0];
    keep_better(out, parts[1]);
    keep_better(out, best);
    return out;
}

Cand solve_connected(const PlaneGraph& g0, const CoreOptions& opt, CoreStats& st) {
    auto [g, lift] = suppress_degree2(g0);
    Cand c;
    if (g.num_faces() <= 4) {
        ++st.brute_force_calls;
        c = brute_force(g);
    } else {
        c = divide(g, opt, st);
    }
    c.darts = lift.lift(c.darts);
    return c;
}

// Peels nodes of degree <= 1 (they lie on no non-degenerate cycle) and solves
// each remaining component.
Cand solve_graph(const PlaneGraph& h, const CoreOptions& opt, CoreStats& st) {
    const int n = h.num_nodes();
    std::vector<int> deg(n);
    std::vector<char> edge_alive(h.num_edges(), 1);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        deg[v] = h.degree(v);
        if (deg[v] == 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : h.rotation(v)) {
            int e = edge_of(d);
            if (!edge_alive[e]) continue;
            edge_alive[e] = 0;
            --deg[v];
            int x = h.head(d);
            if (--deg[x] == 1) stack.push_back(x);
        }
    }
    Cand best;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s] || deg[s] == 0) continue;
        std::vector<int> queue{s}, edges;
        seen[s] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int d : h.rotation(queue[i])) {
                if (!edge_alive[edge_of(d)]) continue;
                edges.push_back(edge_of(d));
                int x = h.head(d);
                if (!seen[x]) {
                    seen[x] = 1;
                    queue.push_back(x);
                }
            }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        Subgraph sub = extract_subgraph(h, edges);
        keep_better(best, map_edges(solve_connected(sub.graph, opt, st), sub.edge_map));
    }
    return best;
}

}  // namespace

CycleSides cycle_sides(const PlaneGraph& g, const std::vector<int>& cycle) {
    std::vector<char> on_cycle(g.num_edges(), 0), left(g.num_faces(), 0);
    for (int d : cycle) on_cycle[edge_of(d)] = 1;
    std::vector<int> queue;
    for (int d : cycle) {
        int f = g.left_face(d);
        if (!left[f]) {
            left[f] = 1;
            queue.push_back(f);
        }
    }
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int d : g.face(queue[i])) {
            if (on_cycle[edge_of(d)]) continue;
            int f = g.right_face(d);
            if (!left[f]) {
                left[f] = 1;
                queue.push_back(f);
            }
        }
    CycleSides out;
    out.interior_on_left = g.outer_face() < 0 || !left[g.outer_face()];
    for (int e = 0; e < g.num_edges(); ++e) {
        bool l = on_cycle[e] || left[g.left_face(2 * e)];
        bool r = on_cycle[e] || !left[g.left_face(2 * e)];
        if (l) (out.interior_on_left ? out.interior_edges : out.exterior_edges).push_back(e);
        if (r) (out.interior_on_left ? out.exterior_edges : out.interior_edges).push_back(e);
    }
    return out;
}

Regions split_regions(const PlaneGraph& g, const std::vector<int>& cycle) {
    CycleSides s = cycle_sides(g, cycle);
    return {extract_subgraph(g, s.interior_edges), extract_subgraph(g, s.exterior_edges)};
}

IncisedGraph incise(const PlaneGraph& g, const std::vector<int>& cycle, const std::vector<int>& p) {
    if (p.size() < 2) throw std::invalid_argument("incise: path needs an internal node");
    if (!is_walk(g, p) || !is_simple(g, p)) throw std::invalid_argument("incise: path is not simple");
    CycleSides sides = cycle_sides(g, cycle);
    bool forward = std::find(cycle.begin(), cycle.end(), p.front()) != cycle.end();
    // Orient the path so the interior lies on its left.
    IncisedGraph out;
    out.path = forward == sides.interior_on_left ? p : reversed(p);
    const std::vector<int>& q = out.path;
    const int n = g.num_nodes(), m = g.num_edges(), k = static_cast<int>(q.size()), l = k - 1;
    out.s = g.tail(q.front());
    out.t = g.head(q.back());

    std::vector<EdgeSpec> edges = g.edges();
    std::vector<std::vector<int>> rot = g.rotations();
    rot.resize(n + l);
    for (int j = 0; j <= l; ++j) {
        int a = j == 0 ? out.s : n + j - 1;
        int b = j == l ? out.t : n + j;
        edges.push_back({a, b, Weight::infinite(), Weight::infinite()});
    }
    for (int i = 1; i <= l; ++i) {
        int x = g.head(q[i - 1]), vi = n + i - 1;
        out.u.push_back(x);
        out.v.push_back(vi);
        std::vector<int> sector;
        for (int d = g.rot_next(q[i]); d != twin(q[i - 1]); d = g.rot_next(d)) sector.push_back(d);
        for (int d : sector) {
            if (d & 1) edges[edge_of(d)].v = vi;
            else edges[edge_of(d)].u = vi;
        }
        auto& r = rot[x];
        r.erase(std::remove_if(r.begin(), r.end(),
                               [&](int d) { return std::find(sector.begin(), sector.end(), d) != sector.end(); }),
                r.end());
        rot[vi].push_back(2 * (m + i));
        rot[vi].insert(rot[vi].end(), sector.begin(), sector.end());
        rot[vi].push_back(2 * (m + i - 1) + 1);
    }
    auto& rs = rot[out.s];
    rs.insert(std::find(rs.begin(), rs.end(), q.front()) + 1, 2 * m);
    auto& rt = rot[out.t];
    rt.insert(std::find(rt.begin(), rt.end(), twin(q.back())), 2 * (m + l) + 1);

    out.graph = PlaneGraph::from_darts(n + l, std::move(edges), std::move(rot));
    out.graph.set_outer_face(out.graph.left_face(q.front()));
    out.node_origin.resize(n + l);
    for (int x = 0; x < n; ++x) out.node_origin[x] = x;
    for (int i = 0; i < l; ++i) out.node_origin[n + i] = out.u[i];
    out.dart_origin.assign(out.graph.num_darts(), -1);
    for (int d = 0; d < 2 * m; ++d) out.dart_origin[d] = d;
    return out;
}

CycleResult cp_short_cycle(const PlaneGraph& g, const std::vector<int>& cycle, const std::vector<int>& p,
                           const CoreOptions& opt, CoreStats* stats) {
    CoreStats local;
    return to_result(cp_cand(g, cycle, p, opt, stats ? *stats : local));
}

CycleResult c_short_cycle(const PlaneGraph& g, const SegmentedCycle& c, const CoreOptions& opt, CoreStats* stats) {
    return cp_short_cycle(g, c.cycle(), c.p1.empty() ? c.p2 : c.p1, opt, stats);
}

CycleResult brute_force_cycle(const PlaneGraph& g) { return to_result(brute_force(g)); }

CycleResult shortest_nondegenerate_cycle(const PlaneGraph& g, const CoreOptions& opt, CoreStats* stats) {
    CoreStats local;
    return to_result(solve_graph(g, opt, stats ? *stats : local));
}

}  // namespace planarcut

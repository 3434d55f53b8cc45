#include "planarcut/reduce.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "planarcut/cycle_core.hpp"

namespace planarcut {

namespace {

std::uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}

// Splits one face (given as its dart cycle) into triangles with chords.
class FaceTriangulator {
public:
    FaceTriangulator(EmbeddingEditor& ed, std::unordered_set<std::uint64_t>& adj, Weight filler)
        : ed_(ed), adj_(adj), filler_(filler) {}

    void run(std::vector<int> face) {
        std::vector<std::vector<int>> work{std::move(face)};
        while (!work.empty()) {
            std::vector<int> f = std::move(work.back());
            work.pop_back();
            clip_ears(f);
            if (f.size() <= 3) continue;
            auto [a, b] = split_any(f);
            work.push_back(std::move(a));
            work.push_back(std::move(b));
        }
    }

private:
    int chord(int x, int y, int after_x, int after_y) {
        int e = ed_.add_edge(x, y, filler_, filler_, after_x, after_y);
        adj_.insert(pair_key(x, y));
        return e;
    }

    // Cuts off triangles x -> w -> y while the chord xy is new and x != y.
    void clip_ears(std::vector<int>& f) {
        int size = static_cast<int>(f.size());
        std::vector<int> nx(size), pv(size);
        for (int i = 0; i < size; ++i) {
            nx[i] = (i + 1) % size;
            pv[i] = (i + size - 1) % size;
        }
        int cur = 0, misses = 0;
        while (size > 3 && misses <= size) {
            int i1 = nx[cur], i2 = nx[i1];
            int x = ed_.tail(f[cur]), y = ed_.head(f[i1]);
            if (x != y && !adj_.count(pair_key(x, y))) {
                int e = chord(x, y, f[cur], f[i2]);
                f[cur] = 2 * e;
                nx[cur] = i2;
                pv[i2] = cur;
                --size;
                cur = pv[cur];
                misses = 0;
            } else {
                cur = i1;
                ++misses;
            }
        }
        std::vector<int> out;
        for (int i = cur, k = 0; k < size; i = nx[i], ++k) out.push_back(f[i]);
        f = std::move(out);
    }

    std::pair<std::vector<int>, std::vector<int>> split_any(const std::vector<int>& f) {
        const int k = static_cast<int>(f.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 2; j < k; ++j) {
                if (i == 0 && j == k - 1) continue;
                int x = ed_.tail(f[i]), y = ed_.tail(f[j]);
                if (x == y || adj_.count(pair_key(x, y))) continue;
                int e = chord(x, y, f[i], f[j]);
                std::vector<int> a(f.begin() + i, f.begin() + j);
                a.push_back(2 * e + 1);
                std::vector<int> b{2 * e};
                b.insert(b.end(), f.begin() + j, f.end());
                b.insert(b.end(), f.begin(), f.begin() + i);
                return {std::move(a), std::move(b)};
            }
        throw std::logic_error("face of length " + std::to_string(k) + " admits no chord");
    }

    EmbeddingEditor& ed_;
    std::unordered_set<std::uint64_t>& adj_;
    Weight filler_;
};

}  // namespace

Triangulation triangulate(const PlaneGraph& g, Weight filler) {
    if (g.num_nodes() < 3 || g.num_components() != 1)
        throw std::invalid_argument("triangulate needs a connected graph with at least three nodes");
    EmbeddingEditor ed(g);
    std::unordered_set<std::uint64_t> adj;
    adj.reserve(3 * g.num_nodes());
    for (int e = 0; e < g.num_edges(); ++e) adj.insert(pair_key(g.tail(2 * e), g.head(2 * e)));
    FaceTriangulator ft(ed, adj, filler);
    for (int f = 0; f < g.num_faces(); ++f)
        if (g.face(f).size() > 3) ft.run(g.face(f));

    Triangulation t;
    t.graph = ed.build().graph;
    t.num_original_edges = g.num_edges();
    const PlaneGraph& h = t.graph;
    t.face_origin.assign(h.num_faces(), -1);
    std::vector<int> queue;
    for (int f = 0; f < h.num_faces(); ++f)
        for (int d : h.face(f))
            if (edge_of(d) < g.num_edges()) {
                t.face_origin[f] = g.left_face(d);
                queue.push_back(f);
                break;
            }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int f = queue[i];
        for (int d : h.face(f)) {
            int r = h.right_face(d);
            if (edge_of(d) >= g.num_edges() && t.face_origin[r] == -1) {
                t.face_origin[r] = t.face_origin[f];
                queue.push_back(r);
            }
        }
    }
    if (h.num_faces() != 2 * h.num_nodes() - 4)
        throw std::logic_error("triangulation produced a wrong face count");
    return t;
}

Bidirected bidirect_and_triangulate(const RawGraph& raw, Mode mode) {
    if (raw.num_nodes < 1) throw std::invalid_argument("graph has no nodes");
    for (const auto& e : raw.edges)
        for (const auto& w : {e.w_uv, e.w_vu})
            if (w && w->is_finite() && w->value() < 0) throw std::invalid_argument("negative weight");
    const Weight filler = filler_weight(mode);
    PlaneGraph g = bidirect(raw, filler);
    EmbeddingEditor ed(g);

    // Join components with filler bridges at node 0's first corner.
    std::vector<int> comp(g.num_nodes(), -1);
    for (int s = 0; s < g.num_nodes(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : g.rotation(v))
                if (comp[g.head(d)] == -1) {
                    comp[g.head(d)] = s;
                    stack.push_back(g.head(d));
                }
        }
        if (s != 0) ed.add_edge(0, s, filler, filler, ed.first_dart(0), ed.first_dart(s));
    }
    // Padding nodes hang off node 0 by Infinite edges, so any finite cut keeps
    // them on their anchor's side and no new cycle gets finite weight.
    int anchor = 0;
    while (ed.num_nodes() < 4) {
        int x = ed.add_node();
        ed.add_edge(anchor, x, Weight::infinite(), Weight::infinite(), ed.first_dart(anchor), -1);
        anchor = x;
    }
    Bidirected b;
    b.num_raw_nodes = raw.num_nodes;
    b.num_raw_edges = static_cast<int>(raw.edges.size());
    b.graph = triangulate(ed.build().graph, filler).graph;
    return b;
}

std::pair<PlaneGraph, SplitMap> split_high_degree(const PlaneGraph& g) {
    const int n = g.num_nodes(), m = g.num_edges();
    SplitMap sm;
    sm.paths.assign(n, {});
    sm.node_origin.resize(n);
    std::iota(sm.node_origin.begin(), sm.node_origin.end(), 0);
    std::vector<int> end_node(g.num_darts());  // new tail of each input dart
    int next = n;
    for (int v = 0; v < n; ++v) {
        const auto& r = g.rotation(v);
        if (r.size() < 4) {
            for (int d : r) end_node[d] = v;
            continue;
        }
        for (std::size_t i = 0; i < r.size(); ++i) {
            int p = i == 0 ? v : next++;
            if (i > 0) sm.node_origin.push_back(v);
            sm.paths[v].push_back(p);
            end_node[r[i]] = p;
        }
    }
    std::vector<EdgeSpec> edges(m);
    for (int e = 0; e < m; ++e) edges[e] = {end_node[2 * e], end_node[2 * e + 1], g.weight(2 * e), g.weight(2 * e + 1)};
    sm.edge_origin.resize(m);
    std::iota(sm.edge_origin.begin(), sm.edge_origin.end(), 0);
    std::vector<std::vector<int>> rot(next);
    for (int v = 0; v < n; ++v) {
        const auto& r = g.rotation(v);
        if (r.size() < 4) {
            rot[v] = r;
            continue;
        }
        const auto& p = sm.paths[v];
        const int d = static_cast<int>(p.size());
        const int base = static_cast<int>(edges.size());
        for (int i = 0; i + 1 < d; ++i) {
            edges.push_back({p[i], p[i + 1], Weight(0), Weight(0)});
            sm.edge_origin.push_back(-1);
        }
        for (int i = 0; i < d; ++i) {
            if (i > 0) rot[p[i]].push_back(2 * (base + i - 1) + 1);
            rot[p[i]].push_back(r[i]);
            if (i + 1 < d) rot[p[i]].push_back(2 * (base + i));
        }
    }
    PlaneGraph out = PlaneGraph::from_darts(next, std::move(edges), std::move(rot));
    return {std::move(out), std::move(sm)};
}

std::vector<int> lift_split_cycle(const std::vector<int>& cycle, const SplitMap& m) {
    std::vector<int> out;
    for (int d : cycle) {
        int e = m.edge_origin[edge_of(d)];
        if (e >= 0) out.push_back(2 * e + (d & 1));
    }
    return out;
}

CycleResult shortest_degenerate_cycle(const PlaneGraph& g) {
    CycleResult r;
    for (int e = 0; e < g.num_edges(); ++e) {
        Weight w = g.weight(2 * e) + g.weight(2 * e + 1);
        if (w.is_finite() && w < r.weight) {
            r.weight = w;
            r.darts = {2 * e, 2 * e + 1};
        }
    }
    return r;
}

std::vector<char> reachable(const RawGraph& raw, int s, const std::vector<int>& removed) {
    std::vector<char> cut(2 * raw.edges.size(), 0), seen(raw.num_nodes, 0);
    for (int d : removed) cut[d] = 1;
    std::vector<std::vector<int>> out(raw.num_nodes);
    for (int d = 0; d < 2 * static_cast<int>(raw.edges.size()); ++d)
        if (raw.has_arc(d) && !cut[d]) out[raw.tail(d)].push_back(raw.head(d));
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int x : out[v])
            if (!seen[x]) {
                seen[x] = 1;
                stack.push_back(x);
            }
    }
    return seen;
}

CutResult min_cut(const RawGraph& raw, const CoreOptions* opt) {
    Bidirected b = bidirect_and_triangulate(raw, Mode::MinCut);
    PlaneGraph dg = dual_of_triangulation(b.graph);
    CycleResult c = shortest_nondegenerate_cycle(dg, opt ? *opt : CoreOptions{});
    CutResult r;
    if (c.weight.is_infinite()) return r;
    // Dual dart d crosses primal dart d.
    Weight total(0);
    for (int d : c.darts)
        if (b.is_original(raw, d)) {
            r.cut.push_back(d);
            total += *raw.arc(d);
        }
    std::sort(r.cut.begin(), r.cut.end());
    if (total != c.weight) throw std::logic_error("cut weight differs from dual cycle weight");
    r.weight = total;
    if (!r.cut.empty()) {
        r.source = raw.tail(r.cut[0]);
        r.sink = raw.head(r.cut[0]);
        if (reachable(raw, r.source, r.cut)[r.sink]) throw std::logic_error("cut does not separate its witness pair");
        return r;
    }
    for (int s = 0; s < raw.num_nodes && r.sink == -1; ++s) {
        auto seen = reachable(raw, s, {});
        for (int t = 0; t < raw.num_nodes; ++t)
            if (!seen[t]) {
                r.source = s;
                r.sink = t;
                break;
            }
    }
    if (r.sink == -1) throw std::logic_error("zero cut without a separated pair");
    return r;
}

CycleResult shortest_cycle(const RawGraph& raw, const CoreOptions* opt) {
    Bidirected b = bidirect_and_triangulate(raw, Mode::ShortestCycle);
    CycleResult best = shortest_degenerate_cycle(b.graph);
    auto [g2, sm] = split_high_degree(b.graph);
    CycleResult nd = shortest_nondegenerate_cycle(g2, opt ? *opt : CoreOptions{});
    if (nd.weight < best.weight) {
        best.weight = nd.weight;
        best.darts = simple_subcycle(b.graph, lift_split_cycle(nd.darts, sm));
    }
    if (best.weight.is_infinite()) best.darts.clear();
    // Start at the lowest node id so output is canonical.
    if (!best.darts.empty()) {
        auto first = std::min_element(best.darts.begin(), best.darts.end(),
                                      [&](int a, int b) { return raw.tail(a) < raw.tail(b); });
        std::rotate(best.darts.begin(), first, best.darts.end());
    }
    return best;
}

}  // namespace planarcut

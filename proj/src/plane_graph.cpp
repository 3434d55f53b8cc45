#include "planarcut/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace planarcut {

namespace {

std::uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}

int find_root(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

}  // namespace

std::string format_weight(Weight w, std::int64_t scale) {
    if (w.is_infinite()) return "inf";
    std::int64_t v = w.value();
    if (scale <= 1) return std::to_string(v);
    std::string s = std::to_string(v / scale);
    std::int64_t frac = v % scale;
    if (frac == 0) return s;
    std::string f = std::to_string(frac);
    int digits = 0;
    for (std::int64_t t = scale; t > 1; t /= 10) ++digits;
    f = std::string(digits - f.size(), '0') + f;
    while (!f.empty() && f.back() == '0') f.pop_back();
    return s + "." + f;
}

// ---- PlaneGraph ---------------------------------------------------------------

PlaneGraph PlaneGraph::from_rotation(int n, std::vector<EdgeSpec> edges,
                                     const std::vector<std::vector<int>>& rot) {
    if (static_cast<int>(rot.size()) != n)
        throw EmbeddingError(EmbeddingErrorKind::InconsistentRotation, "rotation count differs from node count");
    const int m = static_cast<int>(edges.size());
    std::vector<std::vector<int>> darts(n);
    std::vector<int> seen(2 * m, 0);
    for (int v = 0; v < n; ++v) {
        for (int e : rot[v]) {
            if (e < 0 || e >= m)
                throw EmbeddingError(EmbeddingErrorKind::InconsistentRotation,
                                     "rotation of node " + std::to_string(v) + " names unknown edge");
            int d;
            if (edges[e].u == v) d = 2 * e;
            else if (edges[e].v == v) d = 2 * e + 1;
            else
                throw EmbeddingError(EmbeddingErrorKind::InconsistentRotation,
                                     "edge " + std::to_string(e) + " is not incident to node " + std::to_string(v));
            if (seen[d]++)
                throw EmbeddingError(EmbeddingErrorKind::InconsistentRotation,
                                     "edge " + std::to_string(e) + " repeated around node " + std::to_string(v));
            darts[v].push_back(d);
        }
    }
    return from_darts(n, std::move(edges), std::move(darts));
}

PlaneGraph PlaneGraph::from_darts(int n, std::vector<EdgeSpec> edges, std::vector<std::vector<int>> rot) {
    PlaneGraph g;
    const int m = static_cast<int>(edges.size());
    if (static_cast<int>(rot.size()) != n)
        throw EmbeddingError(EmbeddingErrorKind::InconsistentRotation, "rotation count differs from node count");
    g.tail_.resize(2 * m);
    g.w_.resize(2 * m);
    std::unordered_set<std::uint64_t> pairs;
    pairs.reserve(2 * m);
    for (int e = 0; e < m; ++e) {
        const EdgeSpec& s = edges[e];
        if (s.u < 0 || s.u >= n || s.v < 0 || s.v >= n)
            throw EmbeddingError(EmbeddingErrorKind::InconsistentRotation, "edge endpoint out of range");
        if (s.u == s.v)
            throw EmbeddingError(EmbeddingErrorKind::NotSimple, "self-loop at node " + std::to_string(s.u));
        if (!pairs.insert(pair_key(s.u, s.v)).second)
            throw EmbeddingError(EmbeddingErrorKind::NotSimple,
                                 "parallel edges between " + std::to_string(s.u) + " and " + std::to_string(s.v));
        g.tail_[2 * e] = s.u;
        g.tail_[2 * e + 1] = s.v;
        g.w_[2 * e] = s.w_uv;
        g.w_[2 * e + 1] = s.w_vu;
    }
    std::vector<int> count(2 * m, 0);
    for (int v = 0; v < n; ++v) {
        for (int d : rot[v]) {
            if (d < 0 || d >= 2 * m || g.tail_[d] != v || count[d]++)
                throw EmbeddingError(EmbeddingErrorKind::InconsistentRotation,
                                     "bad dart in rotation of node " + std::to_string(v));
        }
    }
    for (int d = 0; d < 2 * m; ++d)
        if (!count[d])
            throw EmbeddingError(EmbeddingErrorKind::InconsistentRotation,
                                 "edge " + std::to_string(d / 2) + " missing from a rotation");
    g.rot_ = std::move(rot);
    g.finish();
    return g;
}

void PlaneGraph::finish() {
    const int n = num_nodes();
    const int nd = num_darts();
    pos_.assign(nd, 0);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) pos_[rot_[v][i]] = i;

    face_of_.assign(nd, -1);
    faces_.clear();
    for (int d = 0; d < nd; ++d) {
        if (face_of_[d] != -1) continue;
        const int f = static_cast<int>(faces_.size());
        faces_.emplace_back();
        for (int x = d; face_of_[x] == -1; x = face_next(x)) {
            face_of_[x] = f;
            faces_[f].push_back(x);
        }
    }

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < num_edges(); ++e) {
        int a = find_root(parent, tail_[2 * e]), b = find_root(parent, tail_[2 * e + 1]);
        if (a != b) parent[a] = b;
    }
    std::vector<long long> chi(n, 0);
    std::vector<char> has_edge(n, 0);
    for (int v = 0; v < n; ++v) chi[find_root(parent, v)] += 1;
    for (int e = 0; e < num_edges(); ++e) {
        int r = find_root(parent, tail_[2 * e]);
        chi[r] -= 1;
        has_edge[r] = 1;
    }
    for (const auto& f : faces_) chi[find_root(parent, tail_[f[0]])] += 1;
    for (int v = 0; v < n; ++v)
        if (find_root(parent, v) == v && has_edge[v] && chi[v] != 2)
            throw EmbeddingError(EmbeddingErrorKind::NotPlanarEmbedding,
                                 "Euler characteristic " + std::to_string(chi[v]) + " for a component");

    outer_ = -1;
    for (int f = 0; f < num_faces(); ++f)
        if (outer_ == -1 || faces_[f].size() > faces_[outer_].size()) outer_ = f;
}

std::vector<EdgeSpec> PlaneGraph::edges() const {
    std::vector<EdgeSpec> out(num_edges());
    for (int e = 0; e < num_edges(); ++e) out[e] = edge(e);
    return out;
}

int PlaneGraph::rot_next(int d) const {
    const auto& r = rot_[tail_[d]];
    int i = pos_[d] + 1;
    return r[i == static_cast<int>(r.size()) ? 0 : i];
}

int PlaneGraph::rot_prev(int d) const {
    const auto& r = rot_[tail_[d]];
    int i = pos_[d];
    return r[i == 0 ? r.size() - 1 : i - 1];
}

int PlaneGraph::find_dart(int u, int v) const {
    for (int d : rot_[u])
        if (head(d) == v) return d;
    return -1;
}

int PlaneGraph::num_components() const {
    const int n = num_nodes();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    int comps = n;
    for (int e = 0; e < num_edges(); ++e) {
        int a = find_root(parent, tail_[2 * e]), b = find_root(parent, tail_[2 * e + 1]);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps;
}

// ---- walks --------------------------------------------------------------------

bool is_walk(const PlaneGraph& g, const std::vector<int>& darts) {
    for (std::size_t i = 0; i < darts.size(); ++i) {
        if (darts[i] < 0 || darts[i] >= g.num_darts()) return false;
        if (i > 0 && g.head(darts[i - 1]) != g.tail(darts[i])) return false;
    }
    return true;
}

bool is_closed_walk(const PlaneGraph& g, const std::vector<int>& darts) {
    return !darts.empty() && is_walk(g, darts) && g.head(darts.back()) == g.tail(darts.front());
}

bool is_degenerate(const std::vector<int>& darts) {
    if (darts.empty()) return true;
    std::unordered_set<int> used(darts.begin(), darts.end());
    for (int d : darts)
        if (used.count(twin(d))) return true;
    return false;
}

bool is_simple(const PlaneGraph& g, const std::vector<int>& darts) {
    std::unordered_set<int> nodes;
    for (int d : darts)
        if (!nodes.insert(g.tail(d)).second) return false;
    if (!darts.empty() && g.head(darts.back()) != g.tail(darts.front()))
        return !nodes.count(g.head(darts.back()));
    return true;
}

Cost walk_cost(const PlaneGraph& g, const std::vector<int>& darts) {
    Cost c;
    for (int d : darts) c += g.cost(d);
    return c;
}

Weight walk_weight(const PlaneGraph& g, const std::vector<int>& darts) {
    Weight w(0);
    for (int d : darts) w += g.weight(d);
    return w;
}

std::vector<int> walk_nodes(const PlaneGraph& g, const std::vector<int>& darts) {
    std::vector<int> out;
    for (int d : darts) out.push_back(g.tail(d));
    if (!darts.empty()) out.push_back(g.head(darts.back()));
    return out;
}

std::vector<int> simple_subcycle(const PlaneGraph& g, const std::vector<int>& closed) {
    std::unordered_map<int, std::size_t> at;
    for (std::size_t i = 0; i < closed.size(); ++i) {
        auto [it, fresh] = at.emplace(g.tail(closed[i]), i);
        if (!fresh) return {closed.begin() + it->second, closed.begin() + i};
    }
    return closed;
}

// ---- derived graphs -------------------------------------------------------------

PlaneGraph dual(const PlaneGraph& g) {
    std::vector<EdgeSpec> edges(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e)
        edges[e] = {g.left_face(2 * e), g.right_face(2 * e), g.weight(2 * e), g.weight(2 * e + 1)};
    std::vector<std::vector<int>> rot(g.num_faces());
    for (int f = 0; f < g.num_faces(); ++f) rot[f] = g.face(f);
    return PlaneGraph::from_darts(g.num_faces(), std::move(edges), std::move(rot));
}

PlaneGraph dual_of_triangulation(const PlaneGraph& g) {
    if (g.num_nodes() < 4)
        throw EmbeddingError(EmbeddingErrorKind::NotTriangulated, "triangulation needs at least four nodes");
    for (int f = 0; f < g.num_faces(); ++f)
        if (g.face(f).size() != 3)
            throw EmbeddingError(EmbeddingErrorKind::NotTriangulated,
                                 "face " + std::to_string(f) + " has " + std::to_string(g.face(f).size()) + " darts");
    return dual(g);
}

PlaneGraph mirror(const PlaneGraph& g) {
    auto rot = g.rotations();
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    return PlaneGraph::from_darts(g.num_nodes(), g.edges(), std::move(rot));
}

PlaneGraph reverse_weights(const PlaneGraph& g) {
    auto edges = g.edges();
    for (auto& e : edges) std::swap(e.w_uv, e.w_vu);
    PlaneGraph h = PlaneGraph::from_darts(g.num_nodes(), std::move(edges), g.rotations());
    h.set_outer_face(g.outer_face());
    return h;
}

Subgraph extract_subgraph(const PlaneGraph& g, const std::vector<int>& edge_ids,
                          const std::vector<int>& extra_nodes) {
    Subgraph s;
    std::vector<int> new_edge(g.num_edges(), -1);
    std::vector<int> new_node(g.num_nodes(), -1);
    for (int e : edge_ids) {
        if (new_edge[e] != -1) continue;
        new_edge[e] = static_cast<int>(s.edge_map.size());
        s.edge_map.push_back(e);
        new_node[g.tail(2 * e)] = 0;
        new_node[g.tail(2 * e + 1)] = 0;
    }
    for (int v : extra_nodes) new_node[v] = 0;
    for (int v = 0; v < g.num_nodes(); ++v)
        if (new_node[v] == 0) {
            new_node[v] = static_cast<int>(s.node_map.size());
            s.node_map.push_back(v);
        }
    std::vector<EdgeSpec> edges(s.edge_map.size());
    for (std::size_t i = 0; i < s.edge_map.size(); ++i) {
        EdgeSpec es = g.edge(s.edge_map[i]);
        es.u = new_node[es.u];
        es.v = new_node[es.v];
        edges[i] = es;
    }
    std::vector<std::vector<int>> rot(s.node_map.size());
    for (std::size_t i = 0; i < s.node_map.size(); ++i)
        for (int d : g.rotation(s.node_map[i]))
            if (new_edge[edge_of(d)] != -1) rot[i].push_back(2 * new_edge[edge_of(d)] + (d & 1));
    s.graph = PlaneGraph::from_darts(static_cast<int>(s.node_map.size()), std::move(edges), std::move(rot));
    return s;
}

std::vector<int> LiftMap::lift(const std::vector<int>& walk) const {
    std::vector<int> out;
    for (int d : walk) out.insert(out.end(), darts[d].begin(), darts[d].end());
    return out;
}

std::pair<PlaneGraph, LiftMap> suppress_degree2(const PlaneGraph& g) {
    EmbeddingEditor ed(g);
    // Lift expressions as a binary tree so long chains stay linear.
    std::vector<int> left(g.num_darts(), -1), right(g.num_darts(), -1);
    std::unordered_set<std::uint64_t> adjacent;
    for (int e = 0; e < g.num_edges(); ++e) adjacent.insert(pair_key(g.tail(2 * e), g.head(2 * e)));
    std::vector<int> work;
    for (int v = 0; v < g.num_nodes(); ++v)
        if (g.degree(v) == 2) work.push_back(v);
    while (!work.empty()) {
        int y = work.back();
        work.pop_back();
        if (!ed.node_alive(y)) continue;
        int a = ed.first_dart(y);
        if (a == -1 || ed.rot_next(a) == a || ed.rot_next(ed.rot_next(a)) != a) continue;
        int b = ed.rot_next(a);
        int x = ed.head(a), z = ed.head(b);
        if (x == z || adjacent.count(pair_key(x, z))) continue;
        int e = ed.add_edge(x, z, ed.weight(twin(a)) + ed.weight(b), ed.weight(twin(b)) + ed.weight(a),
                            twin(a), twin(b));
        left.resize(ed.num_edges() * 2, -1);
        right.resize(ed.num_edges() * 2, -1);
        left[2 * e] = twin(a);
        right[2 * e] = b;
        left[2 * e + 1] = twin(b);
        right[2 * e + 1] = a;
        ed.remove_edge(edge_of(a));
        ed.remove_edge(edge_of(b));
        adjacent.erase(pair_key(x, y));
        adjacent.erase(pair_key(y, z));
        adjacent.insert(pair_key(x, z));
        work.push_back(x);
        work.push_back(z);
    }
    auto res = ed.build(true);
    LiftMap lm;
    lm.node_map = res.node_map;
    lm.darts.resize(res.graph.num_darts());
    std::vector<int> stack;
    for (int d = 0; d < res.graph.num_darts(); ++d) {
        int root = 2 * res.edge_map[edge_of(d)] + (d & 1);
        stack.assign(1, root);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (left[x] == -1) {
                lm.darts[d].push_back(x);
            } else {
                stack.push_back(right[x]);
                stack.push_back(left[x]);
            }
        }
    }
    return {std::move(res.graph), std::move(lm)};
}

// ---- EmbeddingEditor ----------------------------------------------------------

EmbeddingEditor::EmbeddingEditor(const PlaneGraph& g) {
    const int nd = g.num_darts();
    tail_.resize(nd);
    next_.resize(nd);
    prev_.resize(nd);
    w_.resize(nd);
    alive_.assign(g.num_edges(), 1);
    first_.assign(g.num_nodes(), -1);
    node_alive_.assign(g.num_nodes(), 1);
    for (int d = 0; d < nd; ++d) {
        tail_[d] = g.tail(d);
        w_[d] = g.weight(d);
        next_[d] = g.rot_next(d);
        prev_[d] = g.rot_prev(d);
    }
    for (int v = 0; v < g.num_nodes(); ++v)
        if (g.degree(v) > 0) first_[v] = g.rotation(v)[0];
}

int EmbeddingEditor::add_node() {
    first_.push_back(-1);
    node_alive_.push_back(1);
    return num_nodes() - 1;
}

void EmbeddingEditor::link_after(int d, int anchor, int v) {
    tail_[d] = v;
    if (anchor == -1) {
        if (first_[v] != -1) throw std::logic_error("EmbeddingEditor: anchor required for non-isolated node");
        next_[d] = prev_[d] = d;
        first_[v] = d;
        return;
    }
    int nx = next_[anchor];
    next_[anchor] = d;
    prev_[d] = anchor;
    next_[d] = nx;
    prev_[nx] = d;
}

void EmbeddingEditor::unlink(int d) {
    int v = tail_[d];
    if (next_[d] == d) {
        first_[v] = -1;
        return;
    }
    next_[prev_[d]] = next_[d];
    prev_[next_[d]] = prev_[d];
    if (first_[v] == d) first_[v] = next_[d];
}

int EmbeddingEditor::add_edge(int u, int v, Weight w_uv, Weight w_vu, int after_u, int after_v) {
    int e = num_edges();
    alive_.push_back(1);
    for (int i = 0; i < 2; ++i) {
        tail_.push_back(0);
        next_.push_back(0);
        prev_.push_back(0);
    }
    w_.push_back(w_uv);
    w_.push_back(w_vu);
    link_after(2 * e, after_u, u);
    link_after(2 * e + 1, after_v, v);
    return e;
}

void EmbeddingEditor::remove_edge(int e) {
    if (!alive_[e]) return;
    unlink(2 * e);
    unlink(2 * e + 1);
    alive_[e] = 0;
}

int EmbeddingEditor::contract_edge(int e) {
    int d = 2 * e, t = 2 * e + 1;
    int a = tail_[d], b = tail_[t];
    // Walk both rotations in lockstep and relabel the shorter one.
    int x = next_[d], y = next_[t];
    while (x != d && y != t) {
        x = next_[x];
        y = next_[y];
    }
    if (y != t) {
        std::swap(d, t);
        std::swap(a, b);
    }
    for (int z = next_[t]; z != t; z = next_[z]) tail_[z] = a;
    bool a_single = next_[d] == d, b_single = next_[t] == t;
    if (b_single) {
        unlink(d);
    } else if (a_single) {
        int start = next_[t];
        unlink(t);
        first_[a] = start;
    } else {
        int ap = prev_[d], an = next_[d], bn = next_[t], bp = prev_[t];
        next_[ap] = bn;
        prev_[bn] = ap;
        next_[bp] = an;
        prev_[an] = bp;
        first_[a] = an;
    }
    first_[b] = -1;
    node_alive_[b] = 0;
    alive_[e] = 0;
    return a;
}

std::vector<int> EmbeddingEditor::rotation(int v) const {
    std::vector<int> out;
    int s = first_[v];
    if (s == -1) return out;
    int x = s;
    do {
        out.push_back(x);
        x = next_[x];
    } while (x != s);
    return out;
}

EmbeddingEditor::Result EmbeddingEditor::build(bool drop_isolated) const {
    Result r;
    std::vector<int> node_id(num_nodes(), -1), edge_id(num_edges(), -1);
    for (int v = 0; v < num_nodes(); ++v)
        if (node_alive_[v] && !(drop_isolated && first_[v] == -1)) {
            node_id[v] = static_cast<int>(r.node_map.size());
            r.node_map.push_back(v);
        }
    std::vector<EdgeSpec> edges;
    for (int e = 0; e < num_edges(); ++e)
        if (alive_[e]) {
            edge_id[e] = static_cast<int>(r.edge_map.size());
            r.edge_map.push_back(e);
            edges.push_back({node_id[tail_[2 * e]], node_id[tail_[2 * e + 1]], w_[2 * e], w_[2 * e + 1]});
        }
    std::vector<std::vector<int>> rot(r.node_map.size());
    for (std::size_t i = 0; i < r.node_map.size(); ++i)
        for (int d : rotation(r.node_map[i])) rot[i].push_back(2 * edge_id[edge_of(d)] + (d & 1));
    r.graph = PlaneGraph::from_darts(static_cast<int>(r.node_map.size()), std::move(edges), std::move(rot));
    return r;
}

}  // namespace planarcut

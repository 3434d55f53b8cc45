#include "planarcut/separator.hpp"

#include <algorithm>

#include "planarcut/shortest_paths.hpp"

namespace planarcut {

std::vector<int> SsspTree::path_to(const PlaneGraph& g, int v) const {
    std::vector<int> out;
    for (int x = v; x != root; x = g.tail(parent[x])) {
        if (parent[x] == -1) throw std::logic_error("path_to: node not reached");
        out.push_back(parent[x]);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

SsspTree sssp(const PlaneGraph& g, int root) {
    Dijkstra dj(g);
    dj.run(root);
    SsspTree t;
    t.root = root;
    t.dist.resize(g.num_nodes());
    t.parent.resize(g.num_nodes());
    for (int v = 0; v < g.num_nodes(); ++v) {
        t.dist[v] = dj.dist(v);
        t.parent[v] = dj.parent(v);
    }
    return t;
}

std::vector<int> assign_face_weights(const Triangulation& t, int num_original_faces) {
    std::vector<int> w(t.graph.num_faces(), 0);
    std::vector<char> taken(num_original_faces, 0);
    for (int f = 0; f < t.graph.num_faces(); ++f) {
        int o = t.face_origin[f];
        if (!taken[o]) {
            taken[o] = 1;
            w[f] = 1;
        }
    }
    return w;
}

namespace {

// Spanning tree of the dual formed by the non-tree edges, as BFS order plus
// the edge through which each face was reached.
struct DualTree {
    std::vector<int> order;
    std::vector<int> via;  // edge, -1 at the root
};

DualTree dual_tree(const PlaneGraph& tri, const std::vector<char>& tree_edge) {
    DualTree t;
    const int nf = tri.num_faces();
    t.via.assign(nf, -2);
    t.via[0] = -1;
    t.order.push_back(0);
    for (std::size_t i = 0; i < t.order.size(); ++i) {
        int f = t.order[i];
        for (int d : tri.face(f)) {
            if (tree_edge[edge_of(d)]) continue;
            int h = tri.right_face(d);
            if (t.via[h] != -2) continue;
            t.via[h] = edge_of(d);
            t.order.push_back(h);
        }
    }
    if (static_cast<int>(t.order.size()) != nf)
        throw std::logic_error("non-tree edges do not span the dual; tree_edge is not a spanning tree");
    return t;
}

}  // namespace

BalancedEdge balanced_fundamental_cycle(const PlaneGraph& tri, const std::vector<char>& tree_edge,
                                        const std::vector<int>& face_weight, const std::vector<char>* preferred) {
    DualTree t = dual_tree(tri, tree_edge);
    std::vector<long long> sub(tri.num_faces(), 0);
    long long total = 0;
    for (int f = 0; f < tri.num_faces(); ++f) total += face_weight[f];
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        int f = *it;
        sub[f] += face_weight[f];
        if (t.via[f] >= 0) {
            int e = t.via[f];
            int p = tri.left_face(2 * e) == f ? tri.right_face(2 * e) : tri.left_face(2 * e);
            sub[p] += sub[f];
        }
    }
    BalancedEdge best;
    auto rank = [&](const BalancedEdge& b) {
        bool pref = preferred && (*preferred)[b.edge];
        return std::make_tuple(!pref, std::max(b.left, b.right), b.edge);
    };
    for (int f = 0; f < tri.num_faces(); ++f) {
        int e = t.via[f];
        if (e < 0) continue;
        BalancedEdge b;
        b.edge = e;
        b.left = tri.left_face(2 * e) == f ? sub[f] : total - sub[f];
        b.right = total - b.left;
        if (4 * b.left > 3 * total || 4 * b.right > 3 * total) continue;
        if (best.edge == -1 || rank(b) < rank(best)) best = b;
    }
    if (best.edge == -1) throw NoBalancedEdge("no fundamental cycle splits the face weight 3/4 : 3/4");
    return best;
}

std::vector<char> fundamental_cycle_side(const PlaneGraph& tri, const std::vector<char>& tree_edge, int edge) {
    DualTree t = dual_tree(tri, tree_edge);
    int a = tri.left_face(2 * edge), b = tri.right_face(2 * edge);
    int child = t.via[a] == edge ? a : b;
    std::vector<char> in_sub(tri.num_faces(), 0);
    for (int f : t.order) {
        if (f == child) in_sub[f] = 1;
        else if (t.via[f] >= 0) {
            int e = t.via[f];
            int p = tri.left_face(2 * e) == f ? tri.right_face(2 * e) : tri.left_face(2 * e);
            in_sub[f] = in_sub[p];
        }
    }
    if (child != a)
        for (auto& x : in_sub) x = !x;
    return in_sub;
}

std::vector<int> SegmentedCycle::cycle() const {
    std::vector<int> c = p1;
    c.push_back(bridge);
    for (auto it = p2.rbegin(); it != p2.rend(); ++it) c.push_back(twin(*it));
    return c;
}

SegmentedCycle segmented_cycle_from_edge(const PlaneGraph& g, const SsspTree& t, int bridge) {
    int x = g.tail(bridge), y = g.head(bridge);
    auto depth = [&](int v) {
        int k = 0;
        for (; v != t.root; v = g.tail(t.parent[v])) ++k;
        return k;
    };
    int a = x, b = y, da = depth(x), db = depth(y);
    while (da > db) a = g.tail(t.parent[a]), --da;
    while (db > da) b = g.tail(t.parent[b]), --db;
    while (a != b) {
        a = g.tail(t.parent[a]);
        b = g.tail(t.parent[b]);
    }
    SegmentedCycle c;
    c.bridge = bridge;
    for (int v = x; v != a; v = g.tail(t.parent[v])) c.p1.push_back(t.parent[v]);
    for (int v = y; v != a; v = g.tail(t.parent[v])) c.p2.push_back(t.parent[v]);
    std::reverse(c.p1.begin(), c.p1.end());
    std::reverse(c.p2.begin(), c.p2.end());
    return c;
}

}  // namespace planarcut

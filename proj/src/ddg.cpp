#include "planarcut/ddg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <tuple>
#include <unordered_map>

#include "planarcut/reduce.hpp"
#include "planarcut/separator.hpp"
#include "planarcut/shortest_paths.hpp"

namespace planarcut::ddg {

int default_r(int n) {
    if (n <= 1) return 1;
    double lg = std::log2(static_cast<double>(n));
    double r = std::ceil(std::pow(lg, 6.0));
    int out = r > n ? n : static_cast<int>(r);
    return std::max(1, std::min(n, std::max(16, out)));
}

// ---- r-division -----------------------------------------------------------------

namespace {

constexpr int kMaxBoundaryRounds = 32;

class Divider {
public:
    Divider(const PlaneGraph& tri, int r)
        : t_(tri), r_(r), node_mark_(tri.num_nodes(), 0), edge_mark_(tri.num_edges(), 0),
          sub_edge_(tri.num_edges(), -1) {}

    std::vector<std::vector<int>> run() {
        std::vector<int> all(t_.num_faces());
        std::iota(all.begin(), all.end(), 0);
        std::vector<std::vector<int>> done, stack{all};
        while (!stack.empty()) {
            std::vector<int> f = std::move(stack.back());
            stack.pop_back();
            if (f.size() < 2 || corner_count(f) <= r_) {
                done.push_back(std::move(f));
                continue;
            }
            for (auto& part : split(f, {})) stack.push_back(std::move(part));
        }
        // Pieces with too many boundary nodes are split again, weighting faces by boundary nodes.
        const int limit = static_cast<int>(kBoundaryFactor * std::sqrt(static_cast<double>(r_)));
        for (int round = 0; round < kMaxBoundaryRounds; ++round) {
            std::vector<int> mult = multiplicity(done);
            std::vector<std::vector<int>> next;
            bool changed = false;
            for (auto& f : done) {
                std::vector<char> is_b(t_.num_nodes(), 0);
                int nb = 0;
                for (int x : corners(f))
                    if (mult[x] >= 2) is_b[x] = 1, ++nb;
                if (nb <= limit || f.size() < 2) {
                    next.push_back(std::move(f));
                    continue;
                }
                changed = true;
                for (auto& part : split(f, is_b)) next.push_back(std::move(part));
            }
            done = std::move(next);
            if (!changed) break;
        }
        return done;
    }

private:
    std::vector<int> corners(const std::vector<int>& faces) {
        ++stamp_;
        std::vector<int> out;
        for (int f : faces)
            for (int d : t_.face(f)) {
                int x = t_.tail(d);
                if (node_mark_[x] != stamp_) {
                    node_mark_[x] = stamp_;
                    out.push_back(x);
                }
            }
        return out;
    }
    int corner_count(const std::vector<int>& faces) { return static_cast<int>(corners(faces).size()); }

    std::vector<int> multiplicity(const std::vector<std::vector<int>>& pieces) {
        std::vector<int> m(t_.num_nodes(), 0);
        for (auto& f : pieces)
            for (int x : corners(f)) ++m[x];
        return m;
    }

    static std::vector<std::vector<int>> halves(const std::vector<int>& f) {
        std::size_t h = f.size() / 2;
        return {std::vector<int>(f.begin(), f.begin() + h), std::vector<int>(f.begin() + h, f.end())};
    }

    // Splits a face set along a balanced fundamental cycle of its triangulated
    // region. Faces are weighted by the nodes (or, with `only`, the marked
    // nodes) they are first to touch.
    std::vector<std::vector<int>> split(const std::vector<int>& faces, const std::vector<char>& only) {
        ++stamp_;
        std::vector<int> edges;
        for (int f : faces) {
            for (int d : t_.face(f))
                if (edge_mark_[edge_of(d)] != stamp_) {
                    edge_mark_[edge_of(d)] = stamp_;
                    edges.push_back(edge_of(d));
                }
        }
        Subgraph sub = extract_subgraph(t_, edges);
        for (int i = 0; i < static_cast<int>(sub.edge_map.size()); ++i) sub_edge_[sub.edge_map[i]] = i;
        auto sub_dart = [&](int d) { return 2 * sub_edge_[edge_of(d)] + (d & 1); };
        std::vector<std::vector<int>> out;

        if (sub.graph.num_components() > 1) {
            std::vector<int> comp(sub.graph.num_nodes(), -1);
            int nc = 0;
            for (int s = 0; s < sub.graph.num_nodes(); ++s) {
                if (comp[s] != -1) continue;
                std::vector<int> q{s};
                comp[s] = nc;
                for (std::size_t i = 0; i < q.size(); ++i)
                    for (int d : sub.graph.rotation(q[i]))
                        if (comp[sub.graph.head(d)] == -1) {
                            comp[sub.graph.head(d)] = nc;
                            q.push_back(sub.graph.head(d));
                        }
                ++nc;
            }
            out.resize(nc);
            for (int f : faces) out[comp[sub.graph.tail(sub_dart(t_.face(f)[0]))]].push_back(f);
            return out;
        }

        Triangulation tt = triangulate(sub.graph, Weight(0));
        const PlaneGraph& tg = tt.graph;
        std::vector<int> weight(tg.num_faces(), 0), home(faces.size());
        ++stamp_;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            int f = faces[i];
            home[i] = tg.left_face(sub_dart(t_.face(f)[0]));
            for (int d : t_.face(f)) {
                int x = t_.tail(d);
                if (node_mark_[x] == stamp_) continue;
                node_mark_[x] = stamp_;
                if (only.empty() || only[x]) ++weight[home[i]];
            }
        }
        // BFS tree rooted near the middle of a double-sweep diameter path, so
        // fundamental cycles stay short.
        std::vector<char> tree(tg.num_edges(), 0);
        std::vector<int> parent(tg.num_nodes());
        auto bfs = [&](int root, bool keep_tree) {
            std::fill(parent.begin(), parent.end(), -2);
            parent[root] = -1;
            std::vector<int> q{root};
            for (std::size_t i = 0; i < q.size(); ++i)
                for (int d : tg.rotation(q[i]))
                    if (parent[tg.head(d)] == -2) {
                        parent[tg.head(d)] = d;
                        if (keep_tree) tree[edge_of(d)] = 1;
                        q.push_back(tg.head(d));
                    }
            return q.back();
        };
        int a = bfs(bfs(0, false), false);
        std::vector<int> diameter{a};
        while (parent[diameter.back()] != -1) diameter.push_back(tg.tail(parent[diameter.back()]));
        bfs(diameter[diameter.size() / 2], true);
        out.resize(2);
        try {
            BalancedEdge be = balanced_fundamental_cycle(tg, tree, weight);
            std::vector<char> side = fundamental_cycle_side(tg, tree, be.edge);
            for (std::size_t i = 0; i < faces.size(); ++i) out[side[home[i]] ? 0 : 1].push_back(faces[i]);
        } catch (const NoBalancedEdge&) {
            out.clear();
        }
        if (out.empty() || out[0].empty() || out[1].empty()) out = halves(faces);
        return out;
    }

    const PlaneGraph& t_;
    int r_;
    std::vector<unsigned> node_mark_, edge_mark_;
    std::vector<int> sub_edge_;
    unsigned stamp_ = 0;
};

}  // namespace

Division r_division(const PlaneGraph& tri, int r) {
    if (r < 1) throw std::invalid_argument("r_division: r must be positive");
    Division d;
    d.r = r;
    d.multiplicity.assign(tri.num_nodes(), 0);
    if (tri.num_edges() == 0) return d;
    Divider div(tri, r);
    std::vector<std::vector<int>> groups = div.run();
    std::vector<int> piece_of_face(tri.num_faces(), -1);
    for (int p = 0; p < static_cast<int>(groups.size()); ++p)
        for (int f : groups[p]) piece_of_face[f] = p;
    d.pieces.resize(groups.size());
    for (int e = 0; e < tri.num_edges(); ++e) d.pieces[piece_of_face[tri.left_face(2 * e)]].edges.push_back(e);
    std::vector<int> mark(tri.num_nodes(), -1);
    for (int p = 0; p < static_cast<int>(groups.size()); ++p) {
        for (int f : groups[p])
            for (int dd : tri.face(f)) {
                int x = tri.tail(dd);
                if (mark[x] != p) {
                    mark[x] = p;
                    d.pieces[p].nodes.push_back(x);
                    ++d.multiplicity[x];
                }
            }
        std::sort(d.pieces[p].nodes.begin(), d.pieces[p].nodes.end());
    }
    return d;
}

Division induced_division(const Division& d, int num_edges) {
    Division out = d;
    for (auto& p : out.pieces)
        p.edges.erase(std::remove_if(p.edges.begin(), p.edges.end(), [&](int e) { return e >= num_edges; }),
                      p.edges.end());
    return out;
}

void add_node_pieces(Division& d, const std::vector<int>& nodes, int piece_size) {
    piece_size = std::max(1, piece_size);
    for (std::size_t i = 0; i < nodes.size(); i += piece_size) {
        Piece p;
        for (std::size_t j = i; j < std::min(nodes.size(), i + piece_size); ++j) {
            p.nodes.push_back(nodes[j]);
            ++d.multiplicity[nodes[j]];
        }
        std::sort(p.nodes.begin(), p.nodes.end());
        d.pieces.push_back(std::move(p));
    }
}

namespace {

// Connected components of a piece's edge set, as edge lists.
std::vector<std::vector<int>> edge_components(const PlaneGraph& g, const std::vector<int>& edges) {
    std::unordered_map<int, int> parent;
    auto find = [&](int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : edges) {
        int a = find(g.tail(2 * e)), b = find(g.head(2 * e));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::vector<int>> by_root;
    for (int e : edges) by_root[find(g.tail(2 * e))].push_back(e);
    std::vector<std::vector<int>> out;
    for (auto& [root, list] : by_root) out.push_back(std::move(list));
    return out;
}

}  // namespace

DivisionStats division_stats(const PlaneGraph& g, const Division& d) {
    DivisionStats s;
    s.pieces = static_cast<int>(d.pieces.size());
    std::vector<int> owners(g.num_edges(), 0);
    for (const Piece& p : d.pieces) {
        s.max_nodes = std::max(s.max_nodes, static_cast<int>(p.nodes.size()));
        int nb = 0;
        for (int x : p.nodes) nb += d.is_boundary(x);
        s.max_boundary = std::max(s.max_boundary, nb);
        for (int e : p.edges) ++owners[e];
        for (const auto& comp : edge_components(g, p.edges)) {
            Subgraph sub = extract_subgraph(g, comp);
            int holes = 0;
            for (int f = 0; f < sub.graph.num_faces(); ++f) {
                const auto& walk = sub.graph.face(f);
                int gd = 2 * sub.edge_map[edge_of(walk[0])] + (walk[0] & 1);
                int gf = g.left_face(gd);
                bool same = walk.size() == g.face(gf).size();
                for (std::size_t i = 1; same && i < walk.size(); ++i)
                    same = g.left_face(2 * sub.edge_map[edge_of(walk[i])] + (walk[i] & 1)) == gf;
                holes += !same;
            }
            s.max_holes = std::max(s.max_holes, holes);
        }
    }
    for (int c : owners)
        if (c != 1) s.edge_partition = false;
    return s;
}

bool within_bounds(const DivisionStats& s, int n, int r) {
    double rr = std::max(1, r);
    return s.edge_partition && s.max_nodes <= kNodeFactor * rr && s.max_boundary <= kBoundaryFactor * std::sqrt(rr) &&
           s.pieces <= std::max(1.0, kPieceFactor * n / rr) && s.max_holes <= kMaxHoles;
}

// ---- dense distance graph ----------------------------------------------------------

std::pair<Cost, int> DenseDistanceGraph::weight(int ku, int kv) const {
    std::pair<Cost, int> best{Cost::unreached(), -1};
    for (auto [c, i] : occ[ku])
        for (auto [c2, j] : occ[kv])
            if (c == c2) {
                Cost w = comps[c].distance(i, j);
                if (w < best.first) best = {w, c};
            }
    return best;
}

DenseDistanceGraph dense_distance_graph(const PlaneGraph& g, const Division& d) {
    DenseDistanceGraph k;
    k.graph = &g;
    k.kid.assign(g.num_nodes(), -1);
    for (int v = 0; v < g.num_nodes(); ++v)
        if (d.is_boundary(v)) {
            k.kid[v] = static_cast<int>(k.knodes.size());
            k.knodes.push_back(v);
        }
    k.occ.resize(k.knodes.size());
    for (int p = 0; p < static_cast<int>(d.pieces.size()); ++p) {
        if (d.pieces[p].edges.empty()) continue;
        for (auto& edges : edge_components(g, d.pieces[p].edges)) {
            Component c;
            c.piece = p;
            c.sub = extract_subgraph(g, edges);
            const PlaneGraph& h = c.sub.graph;
            c.kindex.assign(h.num_nodes(), -1);
            for (int x = 0; x < h.num_nodes(); ++x)
                if (k.kid[c.sub.node_map[x]] >= 0) {
                    c.kindex[x] = static_cast<int>(c.knodes.size());
                    c.knodes.push_back(x);
                }
            const int b = static_cast<int>(c.knodes.size());
            if (b == 0) continue;
            c.dist.assign(static_cast<std::size_t>(b) * b, Cost::unreached());
            c.from.resize(b);
            c.to.resize(b);
            Dijkstra dj(h);
            for (int i = 0; i < b; ++i) {
                dj.run(c.knodes[i]);
                c.from[i].resize(h.num_nodes());
                for (int x = 0; x < h.num_nodes(); ++x) c.from[i][x] = dj.parent(x);
                for (int j = 0; j < b; ++j) c.dist[static_cast<std::size_t>(i) * b + j] = dj.dist(c.knodes[j]);
                dj.run(c.knodes[i], true);
                c.to[i].resize(h.num_nodes());
                for (int x = 0; x < h.num_nodes(); ++x) c.to[i][x] = dj.parent(x);
            }
            const int ci = static_cast<int>(k.comps.size());
            for (int i = 0; i < b; ++i) k.occ[k.kid[c.sub.node_map[c.knodes[i]]]].push_back({ci, i});
            k.comps.push_back(std::move(c));
        }
    }
    return k;
}

std::vector<int> underlying_path(const DenseDistanceGraph& k, int c, int ku, int kv) {
    const Component& comp = k.comps[c];
    int i = -1, j = -1;
    for (auto [cc, idx] : k.occ[ku])
        if (cc == c) i = idx;
    for (auto [cc, idx] : k.occ[kv])
        if (cc == c) j = idx;
    if (i < 0 || j < 0) throw std::invalid_argument("underlying_path: K node not in component");
    std::vector<int> out;
    const PlaneGraph& h = comp.sub.graph;
    for (int x = comp.knodes[i]; x != comp.knodes[j];) {
        int ld = comp.to[j][x];
        if (ld < 0) throw std::logic_error("underlying_path: target unreachable");
        out.push_back(2 * comp.sub.edge_map[edge_of(ld)] + (ld & 1));
        x = h.head(ld);
    }
    return out;
}

// ---- Monge decomposition ----------------------------------------------------------------

namespace {

// Dijkstra in the sheets lo..hi of the cover obtained by cutting h along a
// dual path; crossing dart d moves to sheet + sigma[d].
std::vector<Cost> cover_dijkstra(const PlaneGraph& h, const std::vector<int>& sigma, int lo, int hi, int source) {
    const int n = h.num_nodes(), sheets = hi - lo + 1;
    std::vector<Cost> dist(static_cast<std::size_t>(n) * sheets, Cost::unreached());
    using Item = std::pair<Cost, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    int s0 = (0 - lo) * n + source;
    dist[s0] = Cost{};
    pq.push({Cost{}, s0});
    while (!pq.empty()) {
        auto [c, id] = pq.top();
        pq.pop();
        if (c != dist[id]) continue;
        int sheet = id / n + lo, v = id % n;
        for (int d : h.rotation(v)) {
            int ns = sheet + sigma[d];
            if (ns < lo || ns > hi) continue;
            int nid = (ns - lo) * n + h.head(d);
            Cost nc = c + h.cost(d);
            if (nc < dist[nid]) {
                dist[nid] = nc;
                pq.push({nc, nid});
            }
        }
    }
    return dist;
}

// First occurrences of marked nodes along face f, starting after dart `after`.
std::vector<int> walk_order(const PlaneGraph& h, int f, int after, const std::vector<char>& marked) {
    const auto& walk = h.face(f);
    const int len = static_cast<int>(walk.size());
    int start = 0;
    if (after >= 0)
        start = static_cast<int>(std::find(walk.begin(), walk.end(), after) - walk.begin()) + 1;
    std::vector<int> out;
    std::vector<char> seen(h.num_nodes(), 0);
    for (int i = 0; i < len; ++i) {
        int x = h.tail(walk[(start + i) % len]);
        if (marked[x] && !seen[x]) {
            seen[x] = 1;
            out.push_back(x);
        }
    }
    return out;
}

void monge_for_component(const DenseDistanceGraph& k, int ci, std::vector<MongeUnit>& out) {
    const Component& c = k.comps[ci];
    const PlaneGraph& h = c.sub.graph;
    const int b = static_cast<int>(c.knodes.size());
    if (b < 2) return;
    auto gid = [&](int local) { return k.kid[c.sub.node_map[local]]; };

    // Faces touching each K node; each node goes to the face with the most K nodes.
    std::vector<int> count(h.num_faces(), 0), last(h.num_faces(), -1);
    for (int x : c.knodes)
        for (int d : h.rotation(x)) {
            int f = h.left_face(d);
            if (last[f] != x) {
                last[f] = x;
                ++count[f];
            }
        }
    std::vector<int> home(h.num_nodes(), -1);
    std::vector<int> faces_used;
    for (int x : c.knodes) {
        int best = -1;
        for (int d : h.rotation(x)) {
            int f = h.left_face(d);
            if (best == -1 || count[f] > count[best] || (count[f] == count[best] && f < best)) best = f;
        }
        home[x] = best;
        faces_used.push_back(best);
    }
    std::sort(faces_used.begin(), faces_used.end());
    faces_used.erase(std::unique(faces_used.begin(), faces_used.end()), faces_used.end());
    auto members = [&](int f) {
        std::vector<char> m(h.num_nodes(), 0);
        for (int x : c.knodes)
            if (home[x] == f) m[x] = 1;
        return m;
    };

    for (int f : faces_used) {
        std::vector<int> order = walk_order(h, f, -1, members(f));
        if (order.size() < 2) continue;
        MongeUnit u;
        u.kind = UnitKind::Type1;
        u.comp = ci;
        for (int x : order) u.rows.push_back(gid(x));
        u.cols = u.rows;
        for (int x : order)
            for (int y : order) u.w.push_back(c.distance(c.kindex[x], c.kindex[y]));
        out.push_back(std::move(u));
    }

    Dijkstra dj(h);
    for (int fa : faces_used)
        for (int fb : faces_used) {
            if (fa == fb) continue;
            // Dual BFS path from fa to fb.
            std::vector<int> via(h.num_faces(), -2);
            std::vector<int> q{fa};
            via[fa] = -1;
            for (std::size_t i = 0; i < q.size() && via[fb] == -2; ++i)
                for (int d : h.face(q[i])) {
                    int g2 = h.right_face(d);
                    if (via[g2] != -2) continue;
                    via[g2] = d;
                    q.push_back(g2);
                }
            std::vector<int> sigma(h.num_darts(), 0);
            int d1 = -1, dm = -1;
            for (int f = fb; f != fa; f = h.left_face(via[f])) {
                int d = via[f];
                sigma[d] = 1;
                sigma[twin(d)] = -1;
                if (dm == -1) dm = d;
                d1 = d;
            }
            std::vector<int> rows = walk_order(h, fa, d1, members(fa));
            std::vector<int> cols = walk_order(h, fb, twin(dm), members(fb));
            std::reverse(cols.begin(), cols.end());

            // Windings of tree paths bound the sheets that shortest paths visit.
            int lo = 0, hi = 0;
            std::vector<int> windings;
            std::vector<int> sheet(h.num_nodes()), smin(h.num_nodes()), smax(h.num_nodes());
            for (int a : rows) {
                dj.run(a);
                for (int x : dj.settled()) {
                    int p = dj.parent(x);
                    if (p < 0) {
                        sheet[x] = smin[x] = smax[x] = 0;
                        continue;
                    }
                    int t = h.tail(p);
                    sheet[x] = sheet[t] + sigma[p];
                    smin[x] = std::min(smin[t], sheet[x]);
                    smax[x] = std::max(smax[t], sheet[x]);
                }
                for (int y : cols) {
                    lo = std::min(lo, smin[y]);
                    hi = std::max(hi, smax[y]);
                    windings.push_back(sheet[y]);
                }
            }
            std::sort(windings.begin(), windings.end());
            windings.erase(std::unique(windings.begin(), windings.end()), windings.end());
            const int n = h.num_nodes();
            std::vector<std::vector<Cost>> rd;
            for (int a : rows) rd.push_back(cover_dijkstra(h, sigma, lo, hi, a));
            for (int w : windings) {
                MongeUnit u;
                u.kind = UnitKind::Type2;
                u.comp = ci;
                for (int x : rows) u.rows.push_back(gid(x));
                for (int y : cols) u.cols.push_back(gid(y));
                for (std::size_t i = 0; i < rows.size(); ++i)
                    for (int y : cols) u.w.push_back(rd[i][static_cast<std::size_t>(w - lo) * n + y]);
                out.push_back(std::move(u));
            }
        }
}

}  // namespace

std::vector<MongeUnit> monge_decomposition(const DenseDistanceGraph& k) {
    std::vector<MongeUnit> out;
    for (int ci = 0; ci < static_cast<int>(k.comps.size()); ++ci) monge_for_component(k, ci, out);
    return out;
}

void audit_monge(const MongeUnit& u, std::uint64_t seed, int samples) {
    auto fail = [&](int a, int b, int c, int d) {
        throw MongeViolation("Monge violation in component " + std::to_string(u.comp) + " at positions (" +
                             std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                             std::to_string(d) + ")");
    };
    std::mt19937_64 rng(seed);
    if (u.kind == UnitKind::Type1) {
        const int p = static_cast<int>(u.rows.size());
        // For a < b < c < d on the cyclic order, crossing pairs dominate.
        auto check = [&](int a, int b, int c, int d) {
            if (u.weight(a, d) + u.weight(b, c) > u.weight(a, c) + u.weight(b, d)) fail(a, b, c, d);
            if (u.weight(c, b) + u.weight(d, a) > u.weight(c, a) + u.weight(d, b)) fail(a, b, c, d);
        };
        if (p < 4) return;
        if (p <= 64) {
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b)
                    for (int c = b + 1; c < p; ++c)
                        for (int d = c + 1; d < p; ++d) check(a, b, c, d);
            return;
        }
        std::uniform_int_distribution<int> pick(0, p - 1);
        for (int s = 0; s < samples; ++s) {
            int q[4];
            do {
                for (int& x : q) x = pick(rng);
                std::sort(q, q + 4);
            } while (q[0] == q[1] || q[1] == q[2] || q[2] == q[3]);
            check(q[0], q[1], q[2], q[3]);
        }
        return;
    }
    const int nr = static_cast<int>(u.rows.size()), nc = static_cast<int>(u.cols.size());
    auto check = [&](int i1, int i2, int j1, int j2) {
        if (u.weight(i1, j1) + u.weight(i2, j2) > u.weight(i1, j2) + u.weight(i2, j1)) fail(i1, i2, j1, j2);
    };
    if (nr < 2 || nc < 2) return;
    if (nr + nc <= 64) {
        for (int i1 = 0; i1 < nr; ++i1)
            for (int i2 = i1 + 1; i2 < nr; ++i2)
                for (int j1 = 0; j1 < nc; ++j1)
                    for (int j2 = j1 + 1; j2 < nc; ++j2) check(i1, i2, j1, j2);
        return;
    }
    std::uniform_int_distribution<int> pr(0, nr - 1), pc(0, nc - 1);
    for (int s = 0; s < samples; ++s) {
        int i1, i2, j1, j2;
        do i1 = pr(rng), i2 = pr(rng);
        while (i1 == i2);
        do j1 = pc(rng), j2 = pc(rng);
        while (j1 == j2);
        check(std::min(i1, i2), std::max(i1, i2), std::min(j1, j2), std::max(j1, j2));
    }
}

// ---- fast Dijkstra ------------------------------------------------------------------------

std::vector<std::pair<int, int>> KTree::path_to(int target) const {
    std::vector<std::pair<int, int>> out;
    if (dist[target].is_unreached()) return out;
    for (int x = target; x != -1; x = parent[x]) out.push_back({x, via[x]});
    std::reverse(out.begin(), out.end());
    return out;
}

// Bipartite Monge matrix with per-row range-minimum tables.
struct FastDijkstra::Bi {
    int comp = -1;
    std::vector<int> rows, cols;  // K ids
    std::vector<Cost> w;          // rows x cols
    int levels = 0;
    std::vector<int> table;       // rows x levels x cols: argmin of w over [j, j + 2^lev)

    Cost at(int i, int j) const { return w[static_cast<std::size_t>(i) * cols.size() + j]; }

    void build() {
        const int nc = static_cast<int>(cols.size());
        levels = 1;
        while ((1 << levels) <= nc) ++levels;
        table.assign(rows.size() * levels * nc, 0);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            int* base = &table[i * levels * nc];
            for (int j = 0; j < nc; ++j) base[j] = j;
            for (int l = 1; l < levels; ++l)
                for (int j = 0; j + (1 << l) <= nc; ++j) {
                    int a = base[(l - 1) * nc + j], b = base[(l - 1) * nc + j + (1 << (l - 1))];
                    base[l * nc + j] = at(static_cast<int>(i), b) < at(static_cast<int>(i), a) ? b : a;
                }
        }
    }

    int argmin(int i, int l, int r) const {
        const int nc = static_cast<int>(cols.size());
        int lev = 31 - __builtin_clz(static_cast<unsigned>(r - l + 1));
        const int* base = &table[static_cast<std::size_t>(i) * levels * nc];
        int a = base[lev * nc + l], b = base[lev * nc + r - (1 << lev) + 1];
        return at(i, b) < at(i, a) ? b : a;
    }
};

FastDijkstra::FastDijkstra(FastDijkstra&&) noexcept = default;
FastDijkstra::~FastDijkstra() = default;

FastDijkstra::FastDijkstra(const DenseDistanceGraph& k, const std::vector<MongeUnit>& units, bool transpose) : k_(&k) {
    auto add = [&](const MongeUnit& u, const std::vector<int>& ri, const std::vector<int>& cj) {
        if (ri.empty() || cj.empty()) return;
        Bi b;
        b.comp = u.comp;
        if (!transpose) {
            for (int i : ri) b.rows.push_back(u.rows[i]);
            for (int j : cj) b.cols.push_back(u.cols[j]);
            for (int i : ri)
                for (int j : cj) b.w.push_back(u.weight(i, j));
        } else {
            for (int j : cj) b.rows.push_back(u.cols[j]);
            for (int i : ri) b.cols.push_back(u.rows[i]);
            for (int j : cj)
                for (int i : ri) b.w.push_back(u.weight(i, j));
        }
        b.build();
        bis_.push_back(std::move(b));
    };
    for (const MongeUnit& u : units) {
        if (u.kind == UnitKind::Type2) {
            std::vector<int> ri(u.rows.size()), cj(u.cols.size());
            std::iota(ri.begin(), ri.end(), 0);
            std::iota(cj.begin(), cj.end(), 0);
            add(u, ri, cj);
            continue;
        }
        // A cyclic unit splits into two bipartite halves per level: rows of
        // one half against the columns of the other in reverse order.
        std::vector<std::pair<int, int>> stack{{0, static_cast<int>(u.rows.size())}};
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            if (b - a < 2) continue;
            int h = (a + b) / 2;
            std::vector<int> left(h - a), right(b - h), left_rev, right_rev;
            std::iota(left.begin(), left.end(), a);
            std::iota(right.begin(), right.end(), h);
            left_rev.assign(left.rbegin(), left.rend());
            right_rev.assign(right.rbegin(), right.rend());
            add(u, left, right_rev);
            add(u, right, left_rev);
            stack.push_back({a, h});
            stack.push_back({h, b});
        }
    }
    row_occ_.resize(k.size());
    col_occ_.resize(k.size());
    for (int bi = 0; bi < static_cast<int>(bis_.size()); ++bi) {
        for (int i = 0; i < static_cast<int>(bis_[bi].rows.size()); ++i) row_occ_[bis_[bi].rows[i]].push_back({bi, i});
        for (int j = 0; j < static_cast<int>(bis_[bi].cols.size()); ++j) col_occ_[bis_[bi].cols[j]].push_back({bi, j});
    }
}

KTree FastDijkstra::run(const std::vector<int>& x, int source) const {
    const int nk = k_->size();
    KTree t;
    t.dist.assign(nk, Cost::unreached());
    t.parent.assign(nk, -1);
    t.via.assign(nk, -1);
    std::vector<char> in_x(nk, 0), done(nk, 0);
    for (int v : x) in_x[v] = 1;
    if (source < 0 || source >= nk || !in_x[source]) return t;

    // Envelope of a bipartite matrix: column intervals with nondecreasing owner rows.
    struct Seg {
        int row, l, r;
        unsigned stamp;
    };
    struct Env {
        std::vector<Seg> segs;
        std::vector<Cost> offset;  // per row; valid once the row is active
    };
    std::unordered_map<int, Env> envs;
    struct Item {
        Cost value;
        int node, bi, row, lo, hi, col;
        unsigned stamp;
        bool operator>(const Item& o) const { return std::tie(value, node, bi, lo) > std::tie(o.value, o.node, o.bi, o.lo); }
    };
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    unsigned next_stamp = 0;

    auto push = [&](int bi, const Seg& s, int lo, int hi) {
        if (lo > hi) return;
        const Bi& b = bis_[bi];
        int j = b.argmin(s.row, lo, hi);
        Cost w = b.at(s.row, j);
        if (w.is_unreached()) return;
        heap.push({envs[bi].offset[s.row] + w, b.cols[j], bi, s.row, lo, hi, j, s.stamp});
    };
    auto value = [&](const Env& e, const Bi& b, int row, int j) { return e.offset[row] + b.at(row, j); };

    auto insert_row = [&](int bi, int row, Cost d) {
        const Bi& b = bis_[bi];
        Env& e = envs[bi];
        if (e.offset.empty()) e.offset.assign(b.rows.size(), Cost::unreached());
        e.offset[row] = d;
        auto& segs = e.segs;
        ++ops_;
        if (segs.empty()) {
            segs.push_back({row, 0, static_cast<int>(b.cols.size()) - 1, ++next_stamp});
            push(bi, segs.back(), segs.back().l, segs.back().r);
            return;
        }
        const int p = static_cast<int>(
            std::upper_bound(segs.begin(), segs.end(), row, [](int r0, const Seg& s) { return r0 < s.row; }) -
            segs.begin());
        auto better = [&](int j, int owner) { return value(e, b, row, j) < value(e, b, owner, j); };
        auto not_worse = [&](int j, int owner) { return value(e, b, row, j) <= value(e, b, owner, j); };
        // First column of the prefix (owners < row) where the new row is strictly better.
        int jl = -1;
        {
            int lo = 0, hi = p;  // first segment whose last column is better
            while (lo < hi) {
                int mid = (lo + hi) / 2;
                ++ops_;
                if (better(segs[mid].r, segs[mid].row)) hi = mid;
                else lo = mid + 1;
            }
            if (lo < p) {
                const Seg& s = segs[lo];
                int a = s.l, c = s.r;
                while (a < c) {
                    int mid = (a + c) / 2;
                    ++ops_;
                    if (better(mid, s.row)) c = mid;
                    else a = mid + 1;
                }
                jl = a;
            }
        }
        // Last column of the suffix (owners > row) where the new row is no worse.
        int jr = -1;
        {
            const int n = static_cast<int>(segs.size());
            int lo = p, hi = n;  // segments [p, lo) start no worse
            while (lo < hi) {
                int mid = (lo + hi) / 2;
                ++ops_;
                if (not_worse(segs[mid].l, segs[mid].row)) lo = mid + 1;
                else hi = mid;
            }
            if (lo > p) {
                const Seg& s = segs[lo - 1];
                int a = s.l, c = s.r;
                while (a < c) {
                    int mid = (a + c + 1) / 2;
                    ++ops_;
                    if (not_worse(mid, s.row)) a = mid;
                    else c = mid - 1;
                }
                jr = a;
            }
        }
        int start, end;
        if (jl != -1) {
            start = jl;
            end = jr != -1 ? jr : segs[p - 1].r;
        } else if (jr != -1) {
            start = segs[p].l;
            end = jr;
        } else {
            return;
        }
        std::vector<Seg> out;
        out.reserve(segs.size() + 2);
        for (const Seg& s : segs) {
            if (s.r < start || s.l > end) {
                out.push_back(s);
                continue;
            }
            if (s.l < start) {
                out.push_back({s.row, s.l, start - 1, ++next_stamp});
                push(bi, out.back(), out.back().l, out.back().r);
            }
            if (s.l <= start) {
                out.push_back({row, start, end, ++next_stamp});
                push(bi, out.back(), start, end);
            }
            if (s.r > end) {
                out.push_back({s.row, end + 1, s.r, ++next_stamp});
                push(bi, out.back(), out.back().l, out.back().r);
            }
        }
        segs = std::move(out);
    };

    auto settle = [&](int v, Cost d, int parent, int via) {
        done[v] = 1;
        t.dist[v] = d;
        t.parent[v] = parent;
        t.via[v] = via;
        for (auto [bi, i] : row_occ_[v]) insert_row(bi, i, d);
    };
    settle(source, Cost{}, -1, -1);
    while (!heap.empty()) {
        Item it = heap.top();
        heap.pop();
        auto env = envs.find(it.bi);
        const auto& segs = env->second.segs;
        auto sit = std::lower_bound(segs.begin(), segs.end(), it.lo, [](const Seg& s, int c) { return s.r < c; });
        if (sit == segs.end() || sit->stamp != it.stamp) continue;
        Seg s = *sit;
        push(it.bi, s, it.lo, it.col - 1);
        push(it.bi, s, it.col + 1, it.hi);
        if (done[it.node] || !in_x[it.node]) continue;
        settle(it.node, it.value, bis_[it.bi].rows[it.row], bis_[it.bi].comp);
    }
    return t;
}

KTree dense_dijkstra(const DenseDistanceGraph& k, const std::vector<int>& x, int source, bool transpose) {
    const int nk = k.size();
    KTree t;
    t.dist.assign(nk, Cost::unreached());
    t.parent.assign(nk, -1);
    t.via.assign(nk, -1);
    std::vector<char> in_x(nk, 0), done(nk, 0);
    for (int v : x) in_x[v] = 1;
    if (source < 0 || source >= nk || !in_x[source]) return t;
    t.dist[source] = Cost{};
    while (true) {
        int best = -1;
        for (int v : x)
            if (!done[v] && !t.dist[v].is_unreached() && (best == -1 || t.dist[v] < t.dist[best])) best = v;
        if (best == -1) break;
        done[best] = 1;
        for (int v : x) {
            if (done[v]) continue;
            auto [w, c] = transpose ? k.weight(v, best) : k.weight(best, v);
            if (c < 0) continue;
            Cost nd = t.dist[best] + w;
            if (nd < t.dist[v]) {
                t.dist[v] = nd;
                t.parent[v] = best;
                t.via[v] = c;
            }
        }
    }
    return t;
}

// ---- boundary sets -------------------------------------------------------------------------

BoundarySplitter::BoundarySplitter(const PlaneGraph& g, const std::vector<int>& knodes)
    : g_(&g), knodes_(&knodes), on1_(g.num_nodes(), 0), on2_(g.num_nodes(), 0), on3_(g.num_nodes(), 0),
      seen_(g.num_nodes(), 0), side_(g.num_nodes(), 0), at2_(g.num_nodes(), -1) {}

// 1 when dart `out` (leaving u on p2) lies right of p2, 2 when left, 0 when undecided.
int BoundarySplitter::side_at_path(int u, int out) const {
    const PlaneGraph& g = *g_;
    int i = at2_[u];
    if (i <= 0 || i >= static_cast<int>(p2_->darts.size())) return 0;
    int a = p2_->darts[i - 1], b = p2_->darts[i];
    for (int d = g.rot_next(b); d != twin(a); d = g.rot_next(d))
        if (d == out) return 2;
    return 1;
}

std::pair<std::vector<int>, std::vector<int>> BoundarySplitter::split(const std::vector<int>& x13, const Path& p1,
                                                                        const Path& p2, const Path& p3) {
    const PlaneGraph& g = *g_;
    ++stamp_;
    p2_ = &p2;
    auto mark = [&](const Path& p, std::vector<unsigned>& on) {
        for (int v : p.nodes(g)) on[v] = stamp_;
    };
    mark(p1, on1_);
    mark(p2, on2_);
    mark(p3, on3_);
    std::vector<int> n2 = p2.nodes(g);
    for (int i = 0; i < static_cast<int>(n2.size()); ++i) at2_[n2[i]] = i;
    auto on = [&](const std::vector<unsigned>& o, int v) { return o[v] == stamp_; };
    auto on_path = [&](int v) { return on(on1_, v) || on(on2_, v) || on(on3_, v); };

    std::vector<int> x12, x23;
    for (int k : x13) {
        int v = (*knodes_)[k];
        int side = 0;
        if (on(on2_, v)) side = 3;
        else if (on(on1_, v) && on(on3_, v)) side = 3;
        else if (on(on1_, v)) side = 1;
        else if (on(on3_, v)) side = 2;
        else if (seen_[v] == stamp_) side = side_[v];
        else {
            // The component of v off the paths lies in one region; its first
            // decisive contact with a path names the region.
            queue_.assign(1, v);
            seen_[v] = stamp_;
            for (std::size_t i = 0; i < queue_.size(); ++i)
                for (int d : g.rotation(queue_[i])) {
                    int u = g.head(d);
                    if (on_path(u)) {
                        if (side != 0) continue;
                        if (on(on2_, u)) side = side_at_path(u, twin(d));
                        else if (on(on1_, u) && !on(on3_, u)) side = 1;
                        else if (on(on3_, u) && !on(on1_, u)) side = 2;
                        continue;
                    }
                    if (seen_[u] == stamp_) continue;
                    seen_[u] = stamp_;
                    queue_.push_back(u);
                }
            if (side == 0) side = 3;
            for (int u : queue_) side_[u] = side;
        }
        if (side & 1) x12.push_back(k);
        if (side & 2) x23.push_back(k);
    }
    return {x12, x23};
}

// ---- context ---------------------------------------------------------------------------------

Context::Context(const PlaneGraph& g, const std::vector<int>& u, const std::vector<int>& v, int r) {
    Triangulation tri = triangulate(g, Weight::infinite());
    division = induced_division(r_division(tri.graph, r), g.num_edges());
    const int l = static_cast<int>(u.size());
    std::vector<int> terminals;
    for (int i = 0; i < l; ++i)
        if (i == 0 || i == l - 1 || division.is_boundary(u[i]) || division.is_boundary(v[i])) {
            index_set.push_back(i);
            terminals.push_back(u[i]);
            terminals.push_back(v[i]);
        }
    add_node_pieces(division, terminals, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(r)))));
    kd = dense_distance_graph(g, division);
    units = monge_decomposition(kd);
    for (std::size_t i = 0; i < units.size(); ++i) audit_monge(units[i], i + 1);
    forward = std::make_unique<FastDijkstra>(kd, units, false);
    backward = std::make_unique<FastDijkstra>(kd, units, true);
}

}  // namespace planarcut::ddg

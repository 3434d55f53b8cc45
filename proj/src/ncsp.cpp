#include "planarcut/ncsp.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "ncsp_solver.hpp"

namespace planarcut {

namespace {

std::uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}

// Walk positions of seq as an in-order subsequence of the cyclic walk, or nothing.
std::optional<std::vector<int>> match_order(const PlaneGraph& g, const std::vector<int>& walk,
                                            const std::vector<int>& seq) {
    const int len = static_cast<int>(walk.size());
    for (int p0 = 0; p0 < len; ++p0) {
        if (g.tail(walk[p0]) != seq[0]) continue;
        std::vector<int> pos{p0};
        int off = 0;
        bool ok = true;
        for (std::size_t k = 1; k < seq.size() && ok; ++k) {
            while (off < len && g.tail(walk[(p0 + off) % len]) != seq[k]) ++off;
            if (off == len) ok = false;
            else pos.push_back((p0 + off) % len);
        }
        if (ok) return pos;
    }
    return std::nullopt;
}

// Strongly connected components of the zero-weight darts (iterative Tarjan).
std::vector<int> zero_sccs(const PlaneGraph& g, int& count) {
    const int n = g.num_nodes();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::pair<int, int>> call;  // node, next rotation slot
    int next_index = 0;
    count = 0;
    auto zero = [&](int d) { return g.weight(d) == Weight(0); };
    for (int s = 0; s < n; ++s) {
        if (index[s] != -1) continue;
        call.push_back({s, 0});
        index[s] = low[s] = next_index++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            const auto& rot = g.rotation(v);
            if (i < static_cast<int>(rot.size())) {
                int d = rot[i++];
                if (!zero(d)) continue;
                int x = g.head(d);
                if (index[x] == -1) {
                    index[x] = low[x] = next_index++;
                    stack.push_back(x);
                    on_stack[x] = 1;
                    call.push_back({x, 0});
                } else if (on_stack[x]) {
                    low[v] = std::min(low[v], index[x]);
                }
                continue;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                int x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = 0;
                    comp[x] = count;
                } while (x != done);
                ++count;
            }
        }
    }
    return comp;
}

}  // namespace

std::vector<int> Path::nodes(const PlaneGraph& g) const {
    std::vector<int> out{from};
    for (int d : darts) out.push_back(g.head(d));
    return out;
}

Normalized normalize(const PlaneGraph& g, const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size() || u.empty()) throw std::invalid_argument("terminal lists must be nonempty and of equal length");
    if (g.num_edges() == 0 || g.num_components() != 1)
        throw std::invalid_argument("noncrossing distances need a connected graph with edges");
    const int l = static_cast<int>(u.size());
    std::vector<int> seq(u);
    seq.insert(seq.end(), v.rbegin(), v.rend());
    for (int x : seq)
        if (x < 0 || x >= g.num_nodes()) throw std::invalid_argument("terminal out of range");

    Normalized out;
    PlaneGraph g0 = g;
    std::vector<int> walk = g0.face(g0.outer_face());
    auto pos = match_order(g0, walk, seq);
    if (!pos) {
        // Mirroring reverses every face walk; the old outer face is the one left of twin(walk[0]).
        g0 = mirror(g);
        g0.set_outer_face(g0.left_face(twin(walk[0])));
        walk = g0.face(g0.outer_face());
        pos = match_order(g0, walk, seq);
        if (!pos) throw TerminalsNotInOrder("terminals do not appear in order on the outer face");
        out.mirrored = true;
    }

    // (1) Leaves u'_i, v'_i in the outer corners. Leaves sharing a corner go in
    // walk order, each right after the corner's outgoing dart.
    EmbeddingEditor ed(g0);
    std::vector<int> leaf(2 * l);
    for (int k = 0; k < 2 * l; ++k) {
        int x = ed.add_node();
        int t = seq[k];
        bool is_u = k < l;
        ed.add_edge(x, t, is_u ? Weight(0) : Weight::infinite(), is_u ? Weight::infinite() : Weight(0), -1,
                    walk[(*pos)[k]]);
        leaf[k] = x;
    }
    PlaneGraph g1 = ed.build().graph;  // ids unchanged

    // (2) Contract zero-weight strongly connected subgraphs along spanning trees.
    int ncomp = 0;
    std::vector<int> scc = zero_sccs(g1, ncomp);
    std::vector<int> size(ncomp, 0);
    for (int x : scc) ++size[x];
    EmbeddingEditor ce(g1);
    std::vector<int> merged(g1.num_nodes());
    std::iota(merged.begin(), merged.end(), 0);
    std::vector<char> seen(g1.num_nodes(), 0);
    for (int s = 0; s < g1.num_nodes(); ++s) {
        if (seen[s] || size[scc[s]] < 2) continue;
        std::vector<int> queue{s}, tree;
        seen[s] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int x = queue[i];
            for (int d : g1.rotation(x)) {
                int y = g1.head(d);
                if (seen[y] || scc[y] != scc[s]) continue;
                if (g1.weight(d) != Weight(0) && g1.weight(twin(d)) != Weight(0)) continue;
                seen[y] = 1;
                queue.push_back(y);
                tree.push_back(edge_of(d));
            }
        }
        for (int e : tree) {
            int a = ce.tail(2 * e), b = ce.head(2 * e);
            int keep = ce.contract_edge(e);
            merged[keep == a ? b : a] = keep;
        }
    }
    auto rep = [&](int x) {
        while (merged[x] != x) x = merged[x];
        return x;
    };

    // (3) self-loops, (4) parallel edges keep the per-direction minimum.
    std::unordered_map<std::uint64_t, int> kept;
    for (int e = 0; e < ce.num_edges(); ++e) {
        if (!ce.edge_alive(e)) continue;
        int a = ce.tail(2 * e), b = ce.head(2 * e);
        if (a == b) {
            ce.remove_edge(e);
            continue;
        }
        auto [it, fresh] = kept.emplace(pair_key(a, b), e);
        if (fresh) continue;
        int k = it->second;
        int same = ce.tail(2 * k) == a ? 0 : 1;
        ce.set_weight(2 * k + same, std::min(ce.weight(2 * k + same), ce.weight(2 * e)));
        ce.set_weight(2 * k + (same ^ 1), std::min(ce.weight(2 * k + (same ^ 1)), ce.weight(2 * e + 1)));
        ce.remove_edge(e);
    }
    auto res = ce.build();
    std::vector<int> new_id(g1.num_nodes(), -1);
    for (int i = 0; i < static_cast<int>(res.node_map.size()); ++i) new_id[res.node_map[i]] = i;
    out.graph = std::move(res.graph);
    out.node_map.resize(g.num_nodes());
    for (int x = 0; x < g.num_nodes(); ++x) out.node_map[x] = new_id[rep(x)];
    out.u.resize(l);
    out.v.resize(l);
    for (int i = 0; i < l; ++i) {
        out.u[i] = new_id[rep(leaf[i])];
        out.v[i] = new_id[rep(leaf[2 * l - 1 - i])];
    }

    // Re-derive the outer face from the first leaf and check the order survived.
    PlaneGraph& h = out.graph;
    int f = h.left_face(h.rotation(out.u[0])[0]);
    h.set_outer_face(f);
    const auto& w = h.face(f);
    std::vector<int> at(h.num_nodes(), -1);
    for (int i = 0; i < static_cast<int>(w.size()); ++i) at[h.tail(w[i])] = i;
    const int len = static_cast<int>(w.size());
    int start = at[out.u[0]], prev = -1;
    for (int k = 0; k < 2 * l; ++k) {
        int node = k < l ? out.u[k] : out.v[2 * l - 1 - k];
        if (at[node] < 0) throw TerminalsNotInOrder("a terminal left the outer face during normalization");
        int off = (at[node] - start + len) % len;
        if (off <= prev) throw TerminalsNotInOrder("terminal order changed during normalization");
        prev = off;
    }
    return out;
}

void label(const PlaneGraph& g, const Path& p, PhiLabels& labels) {
    std::vector<int> nodes = p.nodes(g);
    int star = -1;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (labels.has[nodes[i]]) {
            if (star != -1) throw TwoPrelabeledNodes("path has two prelabeled nodes");
            star = i;
        }
    if (star == -1) {
        star = 0;
        labels.phi[nodes[0]] = Cost{};
        labels.has[nodes[0]] = 1;
    }
    for (int i = star - 1; i >= 0; --i) {
        labels.phi[nodes[i]] = labels.phi[nodes[i + 1]] - g.cost(p.darts[i]);
        labels.has[nodes[i]] = 1;
    }
    for (int i = star + 1; i < static_cast<int>(nodes.size()); ++i) {
        labels.phi[nodes[i]] = labels.phi[nodes[i - 1]] + g.cost(p.darts[i - 1]);
        labels.has[nodes[i]] = 1;
    }
}

Path make_noncrossing(const PlaneGraph& g, const Path& p1, const Path& p2) {
    std::unordered_map<int, int> at1;
    std::vector<int> n1 = p1.nodes(g);
    for (int i = 0; i < static_cast<int>(n1.size()); ++i) at1.emplace(n1[i], i);
    std::vector<int> n2 = p2.nodes(g);
    int first = -1, last = -1;
    for (int j = 0; j < static_cast<int>(n2.size()); ++j)
        if (at1.count(n2[j])) {
            if (first == -1) first = j;
            last = j;
        }
    if (first == -1) return p2;
    int a = at1[n2[first]], b = at1[n2[last]];
    if (a > b) throw std::logic_error("make_noncrossing: paths meet in opposite directions");
    Path out;
    out.from = p2.from;
    out.darts.assign(p2.darts.begin(), p2.darts.begin() + first);
    out.darts.insert(out.darts.end(), p1.darts.begin() + a, p1.darts.begin() + b);
    out.darts.insert(out.darts.end(), p2.darts.begin() + last, p2.darts.end());
    return out;
}

Region region_right_of(const PlaneGraph& g, const std::vector<int>& j) {
    detail::RegionBuilder rb(g);
    Region r;
    rb.build(j, &r);
    return r;
}

std::vector<Cost> noncrossing_costs(const PlaneGraph& g, const std::vector<int>& u, const std::vector<int>& v,
                                    NcspBackend backend, NcspStats* stats, const NcspOptions& opt) {
    if (u.size() != v.size()) throw std::invalid_argument("terminal lists differ in length");
    if (u.empty()) return {};
    if (g.num_edges() == 0) {
        std::vector<Cost> out;
        for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] == v[i] ? Cost{} : Cost::unreached());
        return out;
    }
    Normalized nz = normalize(g, u, v);
    detail::NcspSolver s(nz, backend, stats, opt);
    return s.run();
}

std::vector<Weight> noncrossing_distances(const PlaneGraph& g, const std::vector<int>& u, const std::vector<int>& v,
                                          NcspBackend backend, NcspStats* stats, const NcspOptions& opt) {
    std::vector<Weight> out;
    for (const Cost& c : noncrossing_costs(g, u, v, backend, stats, opt))
        out.push_back(c.is_unreached() ? Weight::infinite() : c.weight());
    return out;
}

}  // namespace planarcut

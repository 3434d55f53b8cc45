#include "ncsp_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace planarcut::detail {

namespace {

// Position of K node k among the K nodes of component c.
int local_index(const ddg::DenseDistanceGraph& kd, int k, int c) {
    for (auto [cc, idx] : kd.occ[k])
        if (cc == c) return idx;
    throw std::logic_error("K node not in component");
}

}  // namespace

RegionBuilder::RegionBuilder(const PlaneGraph& g)
    : g_(&g), in_j_(g.num_darts(), 0), face_seen_(g.num_faces(), 0), edge_in_(g.num_edges(), 0),
      node_in_(g.num_nodes(), 0) {}

void RegionBuilder::build(const std::vector<int>& j, Region* out) {
    const PlaneGraph& g = *g_;
    ++stamp_;
    queue_.clear();
    nodes_.clear();
    for (int d : j) in_j_[d] = stamp_;
    auto take_edge = [&](int e) {
        if (edge_in_[e] == stamp_) return;
        edge_in_[e] = stamp_;
        if (out) out->edges.push_back(e);
        for (int x : {g.tail(2 * e), g.head(2 * e)})
            if (node_in_[x] != stamp_) {
                node_in_[x] = stamp_;
                nodes_.push_back(x);
            }
    };
    auto in_j = [&](int d) { return in_j_[d] == stamp_ || in_j_[twin(d)] == stamp_; };
    for (int d : j) {
        take_edge(edge_of(d));
        if (in_j_[twin(d)] == stamp_) continue;
        int f = g.right_face(d);
        if (f == g.outer_face() || face_seen_[f] == stamp_) continue;
        face_seen_[f] = stamp_;
        queue_.push_back(f);
    }
    for (std::size_t k = 0; k < queue_.size(); ++k) {
        for (int d : g.face(queue_[k])) {
            take_edge(edge_of(d));
            if (in_j(d)) continue;
            int h = g.right_face(d);
            if (h == g.outer_face() || face_seen_[h] == stamp_) continue;
            face_seen_[h] = stamp_;
            queue_.push_back(h);
        }
    }
    if (out) {
        out->nodes = nodes_;
        std::sort(out->nodes.begin(), out->nodes.end());
        std::sort(out->edges.begin(), out->edges.end());
    }
}

void PathMarks::mark(const PlaneGraph& g, const Path& p) {
    ++cur_;
    int i = 0;
    stamp_[p.from] = cur_;
    pos_[p.from] = i++;
    for (int d : p.darts) {
        int x = g.head(d);
        stamp_[x] = cur_;
        pos_[x] = i++;
    }
}

NcspSolver::NcspSolver(const Normalized& nz, NcspBackend backend, NcspStats* stats, const NcspOptions& opt)
    : g_(nz.graph), u_(nz.u), v_(nz.v), l_(static_cast<int>(nz.u.size())), backend_(backend),
      stats_(stats ? stats : &local_stats_), opt_(opt), dj_(nz.graph), rb_(nz.graph), ma_(g_.num_nodes()),
      mb_(g_.num_nodes()), mc_(g_.num_nodes()), seg_(g_.num_edges(), 0), phi_(g_.num_nodes()) {
    walk_ = g_.face(g_.outer_face());
    std::vector<int> at(g_.num_nodes(), -1);
    for (int p = 0; p < static_cast<int>(walk_.size()); ++p) at[g_.tail(walk_[p])] = p;
    for (int i = 0; i < l_; ++i) {
        pos_u_.push_back(at[u_[i]]);
        pos_v_.push_back(at[v_[i]]);
    }
}

Path NcspSolver::shortest(int i) {
    ++stats_->dijkstra_runs;
    dj_.run(u_[i], false, v_[i]);
    d_[i] = dj_.dist(v_[i]);
    return Path{u_[i], dj_.path(v_[i])};
}

void NcspSolver::build_region(int a, int b, const Path& pa, const Path& pb) {
    const int len = static_cast<int>(walk_.size());
    std::vector<int> j;
    for (int p = pos_u_[a]; p != pos_u_[b]; p = (p + 1) % len) j.push_back(walk_[p]);
    j.insert(j.end(), pb.darts.begin(), pb.darts.end());
    for (int p = pos_v_[b]; p != pos_v_[a]; p = (p + 1) % len) j.push_back(walk_[p]);
    for (auto it = pa.darts.rbegin(); it != pa.darts.rend(); ++it) j.push_back(twin(*it));
    rb_.build(j);
}

int NcspSolver::common_node(const Path& p, const Path& q) {
    mc_.mark(g_, p);
    if (mc_.has(q.from)) return q.from;
    for (int d : q.darts)
        if (mc_.has(g_.head(d))) return g_.head(d);
    return -1;
}

// The two paths may share only one contiguous subpath, walked in the same direction.
void NcspSolver::check_noncrossing(const Path& p, const Path& q) {
    mc_.mark(g_, p);
    std::vector<int> nodes = q.nodes(g_);
    int first = -1, last = -1;
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k)
        if (mc_.has(nodes[k])) {
            if (first == -1) first = k;
            last = k;
        }
    if (first == -1) return;
    for (int k = first; k <= last; ++k)
        if (mc_.pos(nodes[k]) != mc_.pos(nodes[first]) + (k - first))
            throw std::logic_error("noncrossing paths share more than one subpath");
}

void NcspSolver::measure(int a, int b, const Path& pa, const Path& pb) {
    if (b - a < 2) return;
    ++stats_->measure_calls;
    const int i = (a + b) / 2;
    build_region(a, b, pa, pb);
    ++stats_->dijkstra_runs;
    dj_.run(u_[i], false, [&](int e) { return rb_.has_edge(e); }, v_[i]);
    d_[i] = dj_.dist(v_[i]);
    Path pi{u_[i], dj_.path(v_[i])};
    pi = make_noncrossing(g_, pa, pi);
    pi = make_noncrossing(g_, pb, pi);
    check_noncrossing(pa, pi);
    check_noncrossing(pb, pi);
    if (int z = common_node(pa, pi); z == -1) measure(a, i, pa, pi);
    else statement2(a, i, pa, pi, {z});
    if (int z = common_node(pi, pb); z == -1) measure(i, b, pi, pb);
    else statement2(i, b, pi, pb, {z});
}

void NcspSolver::statement2(int a, int b, const Path& pa, const Path& pb, const std::vector<int>& z) {
    if (b - a < 2) return;
    ++stats_->statement2;
    build_region(a, b, pa, pb);
    auto allow = [&](int e) { return rb_.has_edge(e); };
    std::vector<Cost> best(b - a - 1, Cost::unreached());
    for (int x : z) {
        ++stats_->dijkstra_runs;
        dj_.run(x, true, allow);
        std::vector<Cost> to(b - a - 1);
        for (int j = a + 1; j < b; ++j) to[j - a - 1] = dj_.dist(u_[j]);
        ++stats_->dijkstra_runs;
        dj_.run(x, false, allow);
        for (int j = a + 1; j < b; ++j) {
            Cost c = to[j - a - 1], c2 = dj_.dist(v_[j]);
            if (c.is_unreached() || c2.is_unreached()) continue;
            best[j - a - 1] = std::min(best[j - a - 1], c + c2);
        }
    }
    for (int j = a + 1; j < b; ++j) d_[j] = best[j - a - 1];
}

void NcspSolver::statement3(int a, int b, const Path& pa, const Path& pb, int x, int y, Cost wc) {
    if (b - a < 2) return;
    ++stats_->statement3;
    // The shared subpath of pa and pb runs from x to y; block its edges.
    ++seg_stamp_;
    std::vector<int> nodes = pb.nodes(g_);
    int px = static_cast<int>(std::find(nodes.begin(), nodes.end(), x) - nodes.begin());
    int py = static_cast<int>(std::find(nodes.begin(), nodes.end(), y) - nodes.begin());
    if (px > py || py == static_cast<int>(nodes.size())) throw std::logic_error("statement3: bad shared subpath");
    Cost seg{};
    for (int k = px; k < py; ++k) {
        seg_[edge_of(pb.darts[k])] = seg_stamp_;
        seg += g_.cost(pb.darts[k]);
    }
    if (seg != wc) throw std::logic_error("statement3: label difference disagrees with the shared subpath");
    build_region(a, b, pa, pb);
    auto allow = [&](int e) { return rb_.has_edge(e) && seg_[e] != seg_stamp_; };
    std::vector<Cost> to(b - a - 1);
    ++stats_->dijkstra_runs;
    dj_.run(x, true, allow);
    for (int j = a + 1; j < b; ++j) to[j - a - 1] = dj_.dist(u_[j]);
    ++stats_->dijkstra_runs;
    dj_.run(y, false, allow);
    for (int j = a + 1; j < b; ++j) {
        Cost c = to[j - a - 1], c2 = dj_.dist(v_[j]);
        d_[j] = c.is_unreached() || c2.is_unreached() ? Cost::unreached() : c + wc + c2;
    }
}

void NcspSolver::solve(int a, int b, const Path& pa, const Path& pb, const std::vector<int>& xs) {
    if (b - a < 2) return;
    ++stats_->solve_calls;
    const auto& iset = ctx_->index_set;
    auto lo = std::upper_bound(iset.begin(), iset.end(), a);
    auto hi = std::lower_bound(iset.begin(), iset.end(), b);
    if (lo >= hi) {
        measure(a, b, pa, pb);
        return;
    }
    const int i = *(lo + (hi - lo - 1) / 2);
    const auto& kd = ctx_->kd;
    const int ku = kd.kid[u_[i]], kv = kd.kid[v_[i]];

    ++stats_->fast_dijkstra_runs;
    ddg::KTree fwd = ctx_->forward->run(xs, ku);
    d_[i] = fwd.dist[kv];
    ma_.mark(g_, pa);
    mb_.mark(g_, pb);

    // Stream the underlying path forward until it meets pa or pb.
    Path px{u_[i], {}};
    int x = -1;
    {
        auto hops = fwd.path_to(kv);
        for (std::size_t h = 1; h < hops.size() && x == -1; ++h) {
            const int c = hops[h].second;
            const ddg::Component& comp = kd.comps[c];
            const int tj = local_index(kd, hops[h].first, c);
            const auto& next = comp.to[tj];
            for (int node = comp.knodes[local_index(kd, hops[h - 1].first, c)]; node != comp.knodes[tj];) {
                int ld = next[node];
                int gd = 2 * comp.sub.edge_map[edge_of(ld)] + (ld & 1);
                px.darts.push_back(gd);
                node = comp.sub.graph.head(ld);
                if (ma_.has(g_.head(gd)) || mb_.has(g_.head(gd))) {
                    x = g_.head(gd);
                    break;
                }
            }
        }
    }

    if (x == -1) {
        ++stats_->case1;
        Path& pi = px;
        label(g_, pi, phi_);
        auto [x1, x2] = splitter_->split(xs, pa, pi, pb);
        solve(a, i, pa, pi, x1);
        solve(i, b, pi, pb, x2);
        return;
    }

    const bool x_on_a = ma_.has(x);
    label(g_, px, phi_);
    mc_.mark(g_, px);

    // Stream the underlying path of the reverse search backward from v_i.
    ++stats_->fast_dijkstra_runs;
    ddg::KTree bwd = ctx_->backward->run(xs, kv);
    std::vector<int> rev;  // darts from v_i backward
    int y = -1;
    {
        // In the transposed tree, path_to(ku) lists v_i ... u_i; consecutive
        // entries (p, q) stand for the original K edge q -> p.
        auto hops = bwd.path_to(ku);
        for (std::size_t h = 1; h < hops.size() && y == -1; ++h) {
            const int c = hops[h].second;
            const ddg::Component& comp = kd.comps[c];
            const int si = local_index(kd, hops[h].first, c);
            const auto& par = comp.from[si];
            for (int node = comp.knodes[local_index(kd, hops[h - 1].first, c)]; node != comp.knodes[si];) {
                int ld = par[node];
                int gd = 2 * comp.sub.edge_map[edge_of(ld)] + (ld & 1);
                rev.push_back(gd);
                node = comp.sub.graph.tail(ld);
                int gy = g_.tail(gd);
                if (mc_.has(gy) || ma_.has(gy) || mb_.has(gy)) {
                    y = gy;
                    break;
                }
            }
        }
    }
    if (y == -1) throw std::logic_error("solve: reverse path never met the forward prefix");
    Path py{y, {}};
    py.darts.assign(rev.rbegin(), rev.rend());
    label(g_, py, phi_);

    if (ma_.has(y) || mb_.has(y)) {
        const bool same = x_on_a ? ma_.has(y) : mb_.has(y);
        if (!same) {
            ++stats_->case2_z2;
            statement2(a, b, pa, pb, {x, y});
            return;
        }
        ++stats_->case2_seg;
        const Path& pj = x_on_a ? pa : pb;
        const PathMarks& mj = x_on_a ? ma_ : mb_;
        int ix = mj.pos(x), iy = mj.pos(y);
        if (iy < ix) throw std::logic_error("solve: shared subpath runs backward");
        Path pi = px;
        pi.darts.insert(pi.darts.end(), pj.darts.begin() + ix, pj.darts.begin() + iy);
        pi.darts.insert(pi.darts.end(), py.darts.begin(), py.darts.end());
        const Cost wc = phi_.phi[y] - phi_.phi[x];
        auto [x1, x2] = splitter_->split(xs, pa, pi, pb);
        if (x_on_a) {
            statement3(a, i, pa, pi, x, y, wc);
            solve(i, b, pi, pb, x2);
        } else {
            statement3(i, b, pi, pb, x, y, wc);
            solve(a, i, pa, pi, x1);
        }
        return;
    }

    ++stats_->case2_2;
    Path pi{u_[i], {}};
    int iy = mc_.pos(y);
    pi.darts.assign(px.darts.begin(), px.darts.begin() + iy);
    pi.darts.insert(pi.darts.end(), py.darts.begin(), py.darts.end());
    auto [x1, x2] = splitter_->split(xs, pa, pi, pb);
    if (x_on_a) {
        statement2(a, i, pa, pi, {x});
        solve(i, b, pi, pb, x2);
    } else {
        statement2(i, b, pi, pb, {x});
        solve(a, i, pa, pi, x1);
    }
}

std::vector<Cost> NcspSolver::run() {
    d_.assign(l_, Cost::unreached());
    Path p0 = shortest(0);
    if (l_ == 1) return d_;
    Path pl = shortest(l_ - 1);
    pl = make_noncrossing(g_, p0, pl);
    if (l_ == 2) return d_;
    if (int z = common_node(p0, pl); z != -1) {
        statement2(0, l_ - 1, p0, pl, {z});
        return d_;
    }
    if (backend_ == NcspBackend::Baseline) {
        measure(0, l_ - 1, p0, pl);
        return d_;
    }
    int r = opt_.r_override > 0 ? opt_.r_override : ddg::default_r(g_.num_nodes());
    ctx_ = std::make_unique<ddg::Context>(g_, u_, v_, r);
    splitter_ = std::make_unique<ddg::BoundarySplitter>(g_, ctx_->kd.knodes);
    label(g_, p0, phi_);
    label(g_, pl, phi_);
    build_region(0, l_ - 1, p0, pl);
    std::vector<int> xs;
    for (int x : rb_.nodes())
        if (ctx_->kd.kid[x] >= 0) xs.push_back(ctx_->kd.kid[x]);
    std::sort(xs.begin(), xs.end());
    solve(0, l_ - 1, p0, pl, xs);
    return d_;
}

}  // namespace planarcut::detail

#pragma once

#include <memory>
#include <vector>

#include "planarcut/ddg.hpp"
#include "planarcut/ncsp.hpp"
#include "planarcut/shortest_paths.hpp"

namespace planarcut::detail {

// Flood fill of the faces right of a closed walk, with stamped membership so
// it can be rebuilt many times on one graph.
class RegionBuilder {
public:
    explicit RegionBuilder(const PlaneGraph& g);
    void build(const std::vector<int>& j, Region* out = nullptr);
    bool has_edge(int e) const { return edge_in_[e] == stamp_; }
    bool has_node(int v) const { return node_in_[v] == stamp_; }
    const std::vector<int>& nodes() const { return nodes_; }

private:
    const PlaneGraph* g_;
    std::vector<unsigned> in_j_, face_seen_, edge_in_, node_in_;
    std::vector<int> queue_, nodes_;
    unsigned stamp_ = 0;
};

// Node membership marks for a handful of paths.
class PathMarks {
public:
    explicit PathMarks(int n) : stamp_(n, 0), pos_(n, -1) {}
    void mark(const PlaneGraph& g, const Path& p);
    bool has(int v) const { return stamp_[v] == cur_; }
    int pos(int v) const { return has(v) ? pos_[v] : -1; }

private:
    std::vector<unsigned> stamp_;
    std::vector<int> pos_;
    unsigned cur_ = 0;
};

class NcspSolver {
public:
    NcspSolver(const Normalized& nz, NcspBackend backend, NcspStats* stats, const NcspOptions& opt);
    std::vector<Cost> run();

private:
    Path shortest(int i);
    void build_region(int a, int b, const Path& pa, const Path& pb);
    int common_node(const Path& p, const Path& q);
    void check_noncrossing(const Path& p, const Path& q);

    void measure(int a, int b, const Path& pa, const Path& pb);
    void statement2(int a, int b, const Path& pa, const Path& pb, const std::vector<int>& z);
    void statement3(int a, int b, const Path& pa, const Path& pb, int x, int y, Cost wc);
    void solve(int a, int b, const Path& pa, const Path& pb, const std::vector<int>& xs);

    const PlaneGraph& g_;
    std::vector<int> u_, v_;
    int l_;
    NcspBackend backend_;
    NcspStats local_stats_;
    NcspStats* stats_;
    NcspOptions opt_;

    std::vector<int> walk_, pos_u_, pos_v_;
    Dijkstra dj_;
    RegionBuilder rb_;
    PathMarks ma_, mb_, mc_;
    std::vector<unsigned> seg_;
    unsigned seg_stamp_ = 0;
    std::vector<Cost> d_;
    PhiLabels phi_;
    std::unique_ptr<ddg::Context> ctx_;
    std::unique_ptr<ddg::BoundarySplitter> splitter_;
};

}  // namespace planarcut::detail

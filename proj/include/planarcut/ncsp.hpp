#pragma once

#include <stdexcept>
#include <vector>

#include "planarcut/plane_graph.hpp"

namespace planarcut {

enum class NcspBackend { Baseline, Ddg };

class TerminalsNotInOrder : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TwoPrelabeledNodes : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Terminal pairs (u[i], v[i]); u[0..l-1] followed by v[l-1..0] must appear in
// this order along the outer face of g, in either traversal direction.
struct Normalized {
    PlaneGraph graph;          // distinct leaf terminals, no zero-weight cycles
    std::vector<int> u, v;     // terminal leaves of graph
    std::vector<int> node_map; // input node -> graph node
    bool mirrored = false;     // embedding was mirrored to make the order counterclockwise
};
Normalized normalize(const PlaneGraph& g, const std::vector<int>& u, const std::vector<int>& v);

// A walk given by its first node and darts, so single-node paths are representable.
struct Path {
    int from = -1;
    std::vector<int> darts;
    int to(const PlaneGraph& g) const { return darts.empty() ? from : g.head(darts.back()); }
    std::vector<int> nodes(const PlaneGraph& g) const;
};

// phi labels along shortest paths: phi(y) - phi(x) = w(P[x,y]).
struct PhiLabels {
    std::vector<Cost> phi;
    std::vector<char> has;
    explicit PhiLabels(int n = 0) : phi(n), has(n, 0) {}
};
void label(const PlaneGraph& g, const Path& p, PhiLabels& labels);

// Reroutes p2 along p1 between its first and last node on p1, so the two
// paths share at most one subpath. Weight is unchanged when both are shortest.
Path make_noncrossing(const PlaneGraph& g, const Path& p1, const Path& p2);

// Edges and nodes on or to the right of the closed walk j (the region a
// counterclockwise-ordered terminal set encloses between two paths).
struct Region {
    std::vector<int> edges;
    std::vector<int> nodes;
};
Region region_right_of(const PlaneGraph& g, const std::vector<int>& j);

struct NcspOptions {
    int r_override = 0;  // r-division piece size for the Ddg backend (0: formula)
};

struct NcspStats {
    long long dijkstra_runs = 0;
    long long measure_calls = 0;
    long long statement2 = 0;
    long long statement3 = 0;
    long long solve_calls = 0;
    long long case1 = 0;
    long long case2_z2 = 0;   // Case 2(1), y on the other path
    long long case2_seg = 0;  // Case 2(1), y on the same path
    long long case2_2 = 0;
    long long fast_dijkstra_runs = 0;
};

// d(u[i], v[i]) for all i; exact for either backend.
std::vector<Cost> noncrossing_costs(const PlaneGraph& g, const std::vector<int>& u, const std::vector<int>& v,
                                    NcspBackend backend = NcspBackend::Baseline, NcspStats* stats = nullptr,
                                    const NcspOptions& opt = {});
std::vector<Weight> noncrossing_distances(const PlaneGraph& g, const std::vector<int>& u, const std::vector<int>& v,
                                          NcspBackend backend = NcspBackend::Baseline, NcspStats* stats = nullptr,
                                          const NcspOptions& opt = {});

}  // namespace planarcut

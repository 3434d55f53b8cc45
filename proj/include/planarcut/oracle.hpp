#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "planarcut/graph_io.hpp"
#include "planarcut/plane_graph.hpp"

namespace planarcut::oracle {

// Exponential or quadratic references, deliberately independent of the
// library algorithms they check.

struct GenSpec {
    int n = 10;
    std::uint64_t seed = 1;
    std::int64_t max_weight = 10;
    bool triangulation = true;     // false: delete random non-tree edges
    double keep_fraction = 0.5;    // sparse mode: fraction of non-tree edges kept
    double zero_prob = 0.1;
    double inf_prob = 0.0;
    double absent_prob = 0.0;      // raw arcs only
};

// Incrementally grown triangulation (optionally thinned), with per-arc weights.
RawGraph gen_planar(const GenSpec& spec);
// Same embedding, every arc present (absent arcs become Infinite).
PlaneGraph gen_plane_graph(const GenSpec& spec);

class TooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CycleAnswer {
    Weight weight = Weight::infinite();
    std::vector<int> darts;  // empty when no finite cycle exists
};

// Minimum over simple cycles of length >= 3 (every non-degenerate closed walk
// contains one). Exhaustive; n <= 14.
CycleAnswer enum_simple_nondegenerate_cycles(const PlaneGraph& g, int max_nodes = 14);

// Same search, restricted to cycles accepted by `keep` (called with the dart
// list of each simple cycle); used to classify (C,P)-cycles.
template <class Keep>
CycleAnswer enum_cycles_if(const PlaneGraph& g, Keep&& keep);

// Global directed min cut as min over ordered (s,t) of max-flow; arcs absent
// from the raw graph have capacity 0. n <= 60.
Weight min_cut_maxflow(const RawGraph& g, int max_nodes = 60);

// Max s-t flow on the raw arcs (BFS augmenting paths).
Weight max_flow(const RawGraph& g, int s, int t);

// Textbook Dijkstra over raw arcs or plane-graph darts, Infinite darts absent.
std::vector<Weight> dijkstra(const PlaneGraph& g, int source);
std::vector<Weight> dijkstra_raw(const RawGraph& g, int source);
std::vector<Weight> bellman_ford(const PlaneGraph& g, int source);
std::vector<Weight> pairwise_dijkstra(const PlaneGraph& g, const std::vector<std::pair<int, int>>& pairs);

// min over arcs uv of w(uv) + d(v,u): the shortest closed walk, which is the
// shortest cycle of a directed graph.
Weight shortest_closed_walk(const RawGraph& g);

// ---- template implementation ------------------------------------------------

namespace detail {
void enum_cycles(const PlaneGraph& g, const void* ctx, bool (*keep)(const void*, const std::vector<int>&),
                 CycleAnswer& best);
}

template <class Keep>
CycleAnswer enum_cycles_if(const PlaneGraph& g, Keep&& keep) {
    CycleAnswer best;
    using K = std::remove_reference_t<Keep>;
    detail::enum_cycles(
        g, &keep, [](const void* c, const std::vector<int>& cyc) { return (*static_cast<const K*>(c))(cyc); }, best);
    return best;
}

}  // namespace planarcut::oracle

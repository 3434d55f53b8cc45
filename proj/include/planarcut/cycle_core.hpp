#pragma once

#include <vector>

#include "planarcut/ncsp.hpp"
#include "planarcut/plane_graph.hpp"
#include "planarcut/reduce.hpp"
#include "planarcut/separator.hpp"

namespace planarcut {

struct CoreOptions {
    NcspBackend backend = NcspBackend::Baseline;
    NcspOptions ncsp;
};

struct CoreStats {
    long long divide_steps = 0;
    long long brute_force_calls = 0;
    long long cp_calls = 0;
    long long guard_edges = 0;
    long long ratio_violations = 0;  // a side keeps more than 19/20 of the faces
    long long sum_violations = 0;    // the two sides hold more than faces + 2
    NcspStats ncsp;
};

// Sides of a simple cycle: the interior is the side without the outer face.
// Each side holds its faces' boundary edges, so both contain the cycle.
struct CycleSides {
    std::vector<int> interior_edges;
    std::vector<int> exterior_edges;
    bool interior_on_left = true;
};
CycleSides cycle_sides(const PlaneGraph& g, const std::vector<int>& cycle);

struct Regions {
    Subgraph interior;
    Subgraph exterior;
};
Regions split_regions(const PlaneGraph& g, const std::vector<int>& cycle);

// g cut open along the interior side of path p (a subpath of cycle) so p and
// its infinite-weight copy bound the outer face. u[i] are the internal nodes
// of the cut path, v[i] their copies; s and t are its ends.
struct IncisedGraph {
    PlaneGraph graph;
    int s = -1;
    int t = -1;
    std::vector<int> u, v;
    std::vector<int> path;         // darts of the cut path in graph
    std::vector<int> node_origin;  // graph node -> g node
    std::vector<int> dart_origin;  // graph dart -> g dart, -1 on the copy path
};
IncisedGraph incise(const PlaneGraph& g, const std::vector<int>& cycle, const std::vector<int>& p);

// Best of: cycles through an end of p, and cycles found as u[i] -> v[i] and
// v[i] -> u[i] distances in the incised graph. Never heavier than any cycle
// that follows p for a while and leaves it on both sides of the cycle.
CycleResult cp_short_cycle(const PlaneGraph& g, const std::vector<int>& cycle, const std::vector<int>& p,
                           const CoreOptions& opt = {}, CoreStats* stats = nullptr);
CycleResult c_short_cycle(const PlaneGraph& g, const SegmentedCycle& c, const CoreOptions& opt = {},
                          CoreStats* stats = nullptr);

// Exhaustive search over simple cycles of length >= 3; for graphs with few faces.
CycleResult brute_force_cycle(const PlaneGraph& g);

// Minimum-weight closed walk that never uses both darts of an edge; Infinite
// (with no darts) when every such walk has infinite weight.
CycleResult shortest_nondegenerate_cycle(const PlaneGraph& g, const CoreOptions& opt = {},
                                         CoreStats* stats = nullptr);

}  // namespace planarcut

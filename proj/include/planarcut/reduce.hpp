#pragma once

#include <stdexcept>
#include <vector>

#include "planarcut/graph_io.hpp"
#include "planarcut/plane_graph.hpp"

namespace planarcut {

struct CoreOptions;

enum class Mode { MinCut, ShortestCycle };

inline Weight filler_weight(Mode m) { return m == Mode::MinCut ? Weight(0) : Weight::infinite(); }

// Adds chords inside every face until all faces are triangles. Node ids and
// the ids of existing edges are preserved; chords are appended.
struct Triangulation {
    PlaneGraph graph;
    int num_original_edges = 0;
    std::vector<int> face_origin;  // triangle -> face of the input graph
};
// Requires a connected graph with >= 3 nodes.
Triangulation triangulate(const PlaneGraph& g, Weight filler);

// The bidirected triangulation fed to the min-cut and cycle pipelines. Nodes
// and darts of the raw graph keep their ids; filler edges and padding nodes
// come after them.
struct Bidirected {
    PlaneGraph graph;
    int num_raw_nodes = 0;
    int num_raw_edges = 0;
    // Dart of graph that is an arc of the raw graph.
    bool is_original(const RawGraph& raw, int d) const {
        return edge_of(d) < num_raw_edges && raw.has_arc(d);
    }
};
Bidirected bidirect_and_triangulate(const RawGraph& raw, Mode mode);

// Replaces each node of degree >= 4 by a zero-weight path, one path node per
// incident edge. Afterwards every node has degree <= 3.
struct SplitMap {
    std::vector<int> node_origin;  // new node -> input node
    std::vector<int> edge_origin;  // new edge -> input edge, -1 on split paths
    std::vector<std::vector<int>> paths;  // input node -> path nodes (empty if unsplit)
};
std::pair<PlaneGraph, SplitMap> split_high_degree(const PlaneGraph& g);
// Maps a closed walk of the split graph to one of the input graph with the
// same weight. The result may pass a split node more than once.
std::vector<int> lift_split_cycle(const std::vector<int>& cycle, const SplitMap& m);

struct CycleResult {
    Weight weight = Weight::infinite();
    std::vector<int> darts;
};
CycleResult shortest_degenerate_cycle(const PlaneGraph& g);

struct CutResult {
    Weight weight = Weight::infinite();
    std::vector<int> cut;  // raw darts
    int source = -1;       // witness: sink unreachable from source without the cut
    int sink = -1;
};
// opt selects the noncrossing-paths backend of the cycle search (default: baseline).
CutResult min_cut(const RawGraph& raw, const CoreOptions* opt = nullptr);
// Darts are raw darts; empty when no cycle exists.
CycleResult shortest_cycle(const RawGraph& raw, const CoreOptions* opt = nullptr);

// Nodes reachable from s along raw arcs not in `removed`.
std::vector<char> reachable(const RawGraph& raw, int s, const std::vector<int>& removed);

}  // namespace planarcut

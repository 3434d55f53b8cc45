#pragma once

#include <stdexcept>
#include <vector>

#include "planarcut/plane_graph.hpp"
#include "planarcut/reduce.hpp"

namespace planarcut {

struct SsspTree {
    int root = -1;
    std::vector<Cost> dist;
    std::vector<int> parent;  // dart entering the node, -1 at the root and unreached nodes

    bool reached(int v) const { return v == root || parent[v] != -1; }
    // Darts root -> v along the tree.
    std::vector<int> path_to(const PlaneGraph& g, int v) const;
};

SsspTree sssp(const PlaneGraph& g, int root);

// One triangle per input face gets weight 1, the rest 0.
std::vector<int> assign_face_weights(const Triangulation& t, int num_original_faces);

class NoBalancedEdge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BalancedEdge {
    int edge = -1;
    long long left = 0;   // weight of faces on the left of dart 2*edge's cycle side
    long long right = 0;
};

// Picks a non-tree edge whose fundamental cycle leaves at most 3/4 of the
// total face weight on either side. Among balanced edges, edges marked in
// `preferred` win, then the smaller heavier side, then the lower id.
BalancedEdge balanced_fundamental_cycle(const PlaneGraph& tri, const std::vector<char>& tree_edge,
                                        const std::vector<int>& face_weight,
                                        const std::vector<char>* preferred = nullptr);

// Faces on the side of the fundamental cycle of `edge` that contains
// left_face(2*edge); 1 = that side.
std::vector<char> fundamental_cycle_side(const PlaneGraph& tri, const std::vector<char>& tree_edge, int edge);

struct SegmentedCycle {
    std::vector<int> p1;  // tree path s -> x
    int bridge = -1;      // dart x -> y
    std::vector<int> p2;  // tree path s -> y
    std::vector<int> cycle() const;
};

// s is the lowest common ancestor of x = tail(bridge) and y = head(bridge).
SegmentedCycle segmented_cycle_from_edge(const PlaneGraph& g, const SsspTree& t, int bridge);

}  // namespace planarcut

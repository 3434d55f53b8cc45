#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "planarcut/weight.hpp"

namespace planarcut {

// Dart 2e runs u->v for edge e = {u,v}; dart 2e+1 runs v->u.
constexpr int twin(int d) { return d ^ 1; }
constexpr int edge_of(int d) { return d >> 1; }

struct EdgeSpec {
    int u = 0;
    int v = 0;
    Weight w_uv;
    Weight w_vu;
};

enum class EmbeddingErrorKind { NotPlanarEmbedding, NotSimple, InconsistentRotation, NotTriangulated };

class EmbeddingError : public std::runtime_error {
public:
    EmbeddingError(EmbeddingErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    EmbeddingErrorKind kind() const { return kind_; }

private:
    EmbeddingErrorKind kind_;
};

// Simple bidirected plane graph stored as a rotation system. Rotations list
// the outgoing darts of each node in counterclockwise order. Faces are traced
// with face_next(d) = rot_prev(twin(d)), so every face lies to the left of its
// darts.
class PlaneGraph {
public:
    PlaneGraph() = default;

    // rot[v] lists the ids of the edges incident to v, counterclockwise.
    static PlaneGraph from_rotation(int n, std::vector<EdgeSpec> edges,
                                    const std::vector<std::vector<int>>& rot);
    // rot[v] lists the outgoing darts of v, counterclockwise.
    static PlaneGraph from_darts(int n, std::vector<EdgeSpec> edges,
                                 std::vector<std::vector<int>> rot);

    int num_nodes() const { return static_cast<int>(rot_.size()); }
    int num_edges() const { return static_cast<int>(tail_.size() / 2); }
    int num_darts() const { return static_cast<int>(tail_.size()); }

    int tail(int d) const { return tail_[d]; }
    int head(int d) const { return tail_[d ^ 1]; }
    Weight weight(int d) const { return w_[d]; }
    Cost cost(int d) const { return Cost::of(w_[d]); }
    void set_weight(int d, Weight w) { w_[d] = w; }
    EdgeSpec edge(int e) const { return {tail_[2 * e], tail_[2 * e + 1], w_[2 * e], w_[2 * e + 1]}; }
    std::vector<EdgeSpec> edges() const;

    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    int rot_pos(int d) const { return pos_[d]; }
    int rot_next(int d) const;
    int rot_prev(int d) const;
    int face_next(int d) const { return rot_prev(d ^ 1); }

    int num_faces() const { return static_cast<int>(faces_.size()); }
    const std::vector<int>& face(int f) const { return faces_[f]; }
    int left_face(int d) const { return face_of_[d]; }
    int right_face(int d) const { return face_of_[d ^ 1]; }
    int outer_face() const { return outer_; }
    void set_outer_face(int f) { outer_ = f; }

    // Dart u->v, or -1. Linear in deg(u).
    int find_dart(int u, int v) const;

    // Number of connected components, counting isolated nodes.
    int num_components() const;

private:
    void finish();

    std::vector<int> tail_;
    std::vector<Weight> w_;
    std::vector<std::vector<int>> rot_;
    std::vector<int> pos_;
    std::vector<int> face_of_;
    std::vector<std::vector<int>> faces_;
    int outer_ = -1;
};

// ---- walks ----------------------------------------------------------------

bool is_walk(const PlaneGraph& g, const std::vector<int>& darts);
bool is_closed_walk(const PlaneGraph& g, const std::vector<int>& darts);
// Single node or both darts of some edge.
bool is_degenerate(const std::vector<int>& darts);
// No repeated node, except the closing node of a cycle.
bool is_simple(const PlaneGraph& g, const std::vector<int>& darts);
Cost walk_cost(const PlaneGraph& g, const std::vector<int>& darts);
Weight walk_weight(const PlaneGraph& g, const std::vector<int>& darts);
std::vector<int> walk_nodes(const PlaneGraph& g, const std::vector<int>& darts);
// Cuts a simple cycle out of a non-degenerate closed walk; weight never grows.
std::vector<int> simple_subcycle(const PlaneGraph& g, const std::vector<int>& closed);

// ---- derived graphs ---------------------------------------------------------

// Dual of a plane graph: node f per face, dart d of the dual runs from
// left_face(d) to right_face(d) and carries w(d).
PlaneGraph dual(const PlaneGraph& g);
// Same as dual() but rejects graphs that are not triangulations with >= 4 nodes.
PlaneGraph dual_of_triangulation(const PlaneGraph& g);

PlaneGraph mirror(const PlaneGraph& g);
PlaneGraph reverse_weights(const PlaneGraph& g);

struct Subgraph {
    PlaneGraph graph;
    std::vector<int> node_map;  // new node -> old node
    std::vector<int> edge_map;  // new edge -> old edge
};

// Induced embedding on the given edges (and their endpoints, plus extra_nodes).
Subgraph extract_subgraph(const PlaneGraph& g, const std::vector<int>& edge_ids,
                          const std::vector<int>& extra_nodes = {});

struct LiftMap {
    std::vector<std::vector<int>> darts;  // output dart -> input darts
    std::vector<int> node_map;            // output node -> input node
    std::vector<int> lift(const std::vector<int>& walk) const;
};

// Removes degree-2 nodes whose two neighbors are distinct and non-adjacent.
std::pair<PlaneGraph, LiftMap> suppress_degree2(const PlaneGraph& g);

// ---- mutable embedding --------------------------------------------------------

// Rotation system kept as circular dart lists, for local surgery.
class EmbeddingEditor {
public:
    explicit EmbeddingEditor(const PlaneGraph& g);

    int add_node();
    // Adds edge u->v. The dart at u goes right after after_u in u's rotation
    // (or starts the rotation when u is isolated and after_u is -1); same at v.
    int add_edge(int u, int v, Weight w_uv, Weight w_vu, int after_u, int after_v);
    void remove_edge(int e);
    // Merges head(2e) into tail(2e); returns the surviving node.
    int contract_edge(int e);

    bool edge_alive(int e) const { return alive_[e]; }
    bool node_alive(int v) const { return node_alive_[v]; }
    int tail(int d) const { return tail_[d]; }
    int head(int d) const { return tail_[d ^ 1]; }
    Weight weight(int d) const { return w_[d]; }
    void set_weight(int d, Weight w) { w_[d] = w; }
    int rot_next(int d) const { return next_[d]; }
    int rot_prev(int d) const { return prev_[d]; }
    int first_dart(int v) const { return first_[v]; }
    int num_nodes() const { return static_cast<int>(first_.size()); }
    int num_edges() const { return static_cast<int>(alive_.size()); }
    std::vector<int> rotation(int v) const;

    // Compacts live nodes (drop_isolated removes degree-0 nodes except keep).
    struct Result {
        PlaneGraph graph;
        std::vector<int> node_map;  // new -> editor node
        std::vector<int> edge_map;  // new -> editor edge
    };
    Result build(bool drop_isolated = false) const;

private:
    void unlink(int d);
    void link_after(int d, int anchor, int v);

    std::vector<int> tail_, next_, prev_;
    std::vector<Weight> w_;
    std::vector<char> alive_;
    std::vector<int> first_;
    std::vector<char> node_alive_;
};

}  // namespace planarcut

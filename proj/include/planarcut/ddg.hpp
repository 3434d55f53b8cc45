#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "planarcut/ncsp.hpp"
#include "planarcut/plane_graph.hpp"

namespace planarcut::ddg {

class FaceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MongeViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- r-division -------------------------------------------------------------

struct Piece {
    std::vector<int> edges;  // edge ids of the divided graph
    std::vector<int> nodes;  // sorted; may include nodes without edges in this piece
};

struct Division {
    int r = 0;
    std::vector<Piece> pieces;
    std::vector<int> multiplicity;  // node -> number of pieces containing it
    bool is_boundary(int v) const { return multiplicity[v] >= 2; }
};

// Documented bounds: pieces have at most kNodeFactor * r nodes and at most
// kBoundaryFactor * sqrt(r) boundary nodes; at most kPieceFactor * n / r pieces;
// at most kMaxHoles holes per connected piece component.
inline constexpr double kNodeFactor = 1.0;
inline constexpr double kBoundaryFactor = 6.0;
inline constexpr double kPieceFactor = 8.0;
inline constexpr int kMaxHoles = 12;

int default_r(int n);

// Recursive fundamental-cycle splitting of a triangulation: first until pieces
// have at most r nodes, then pieces with too many boundary nodes are split again.
Division r_division(const PlaneGraph& tri, int r);
// Keeps edges with id < num_edges (drops triangulation chords) and all nodes.
Division induced_division(const Division& d, int num_edges);
// Appends edgeless pieces of at most piece_size nodes covering `nodes`.
void add_node_pieces(Division& d, const std::vector<int>& nodes, int piece_size);

struct DivisionStats {
    int pieces = 0;
    int max_nodes = 0;
    int max_boundary = 0;
    int max_holes = 0;
    bool edge_partition = true;  // every edge in exactly one piece
};
DivisionStats division_stats(const PlaneGraph& g, const Division& d);
bool within_bounds(const DivisionStats& s, int n, int r);

// ---- dense distance graph -----------------------------------------------------

// One connected component of one piece with distances between its K nodes.
struct Component {
    int piece = -1;
    Subgraph sub;                 // node_map/edge_map into the divided graph
    std::vector<int> knodes;      // local node ids of K nodes, ascending
    std::vector<int> kindex;      // local node -> position in knodes, or -1
    std::vector<Cost> dist;       // knodes x knodes, row = source
    std::vector<std::vector<int>> from;  // per K source: local dart entering each node
    std::vector<std::vector<int>> to;    // per K target: local dart leaving each node toward it
    Cost distance(int i, int j) const { return dist[static_cast<std::size_t>(i) * knodes.size() + j]; }
};

struct DenseDistanceGraph {
    const PlaneGraph* graph = nullptr;
    std::vector<int> knodes;  // graph node per K id
    std::vector<int> kid;     // graph node -> K id, or -1
    std::vector<Component> comps;
    std::vector<std::vector<std::pair<int, int>>> occ;  // K id -> (component, index in knodes)

    int size() const { return static_cast<int>(knodes.size()); }
    // Simplified K(D) weight and the component realizing it (-1 if none).
    std::pair<Cost, int> weight(int ku, int kv) const;
};

DenseDistanceGraph dense_distance_graph(const PlaneGraph& g, const Division& d);

// Darts of the underlying path of K edge ku -> kv inside component c.
std::vector<int> underlying_path(const DenseDistanceGraph& k, int c, int ku, int kv);

// ---- Monge decomposition --------------------------------------------------------

enum class UnitKind { Type1, Type2 };

struct MongeUnit {
    UnitKind kind = UnitKind::Type1;
    int comp = -1;
    std::vector<int> rows;  // K ids; Type1: the cyclic order
    std::vector<int> cols;  // K ids; Type1: same as rows
    std::vector<Cost> w;    // rows x cols
    Cost weight(int i, int j) const { return w[static_cast<std::size_t>(i) * cols.size() + j]; }
};

std::vector<MongeUnit> monge_decomposition(const DenseDistanceGraph& k);
// Checks the Monge inequality on every order-compliant quadruple when the unit
// has at most 64 nodes, otherwise on `samples` random ones.
void audit_monge(const MongeUnit& u, std::uint64_t seed = 1, int samples = 10000);

// ---- fast Dijkstra ----------------------------------------------------------------

struct KTree {
    std::vector<Cost> dist;   // per K id; unreached outside X or when not reachable
    std::vector<int> parent;  // K id, -1 at the source and unreached nodes
    std::vector<int> via;     // component of the K edge parent -> node
    // K ids and components source -> target.
    std::vector<std::pair<int, int>> path_to(int target) const;
};

class FastDijkstra {
public:
    // transpose: distances in the graph with every edge reversed.
    FastDijkstra(const DenseDistanceGraph& k, const std::vector<MongeUnit>& units, bool transpose);
    KTree run(const std::vector<int>& x, int source) const;
    long long envelope_operations() const { return ops_; }

private:
    struct Bi;  // bipartite Monge matrix view
    const DenseDistanceGraph* k_;
    std::vector<Bi> bis_;
    std::vector<std::vector<std::pair<int, int>>> row_occ_;  // K id -> (bi, row index)
    std::vector<std::vector<std::pair<int, int>>> col_occ_;
    mutable long long ops_ = 0;

public:
    ~FastDijkstra();
    FastDijkstra(FastDijkstra&&) noexcept;
};

// Plain Dijkstra over the dense K(D) restricted to x (oracle).
KTree dense_dijkstra(const DenseDistanceGraph& k, const std::vector<int>& x, int source, bool transpose);

// ---- boundary sets -------------------------------------------------------------------

// Splits the K nodes x13 (K ids) of G[p1,p3] into those of G[p1,p2] (right
// of p2) and G[p2,p3] (left of p2), where p2 runs inside G[p1,p3]. Nodes on
// p2 go to both.
class BoundarySplitter {
public:
    BoundarySplitter(const PlaneGraph& g, const std::vector<int>& knodes);
    std::pair<std::vector<int>, std::vector<int>> split(const std::vector<int>& x13, const Path& p1,
                                                         const Path& p2, const Path& p3);

private:
    int side_at_path(int u, int out) const;

    const PlaneGraph* g_;
    const std::vector<int>* knodes_;
    std::vector<int> queue_;
    std::vector<unsigned> on1_, on2_, on3_, seen_;
    std::vector<int> side_;
    std::vector<int> at2_;
    const Path* p2_ = nullptr;
    unsigned stamp_ = 0;
};

// ---- the Ddg backend context ------------------------------------------------------------

// Division of the normalized graph with terminal augmentation, its dense
// distance graph and the fast Dijkstra structures for both directions.
struct Context {
    Division division;
    DenseDistanceGraph kd;
    std::vector<MongeUnit> units;
    std::vector<int> index_set;  // sorted terminal indices i with u[i] or v[i] on the boundary, plus the two ends
    std::unique_ptr<FastDijkstra> forward;
    std::unique_ptr<FastDijkstra> backward;

    Context(const PlaneGraph& g, const std::vector<int>& u, const std::vector<int>& v, int r);
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;
};

}  // namespace planarcut::ddg

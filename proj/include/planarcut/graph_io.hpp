#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planarcut/plane_graph.hpp"

namespace planarcut {

// Directed input graph with an embedding. Each undirected edge carries up to
// two arcs; an absent arc has no weight. Dart ids follow PlaneGraph: raw dart
// 2e runs u->v, 2e+1 runs v->u.
struct RawEdge {
    int u = 0;
    int v = 0;
    std::optional<Weight> w_uv;
    std::optional<Weight> w_vu;
};

struct RawGraph {
    int num_nodes = 0;
    std::vector<RawEdge> edges;
    std::vector<std::vector<int>> rot;  // edge ids, counterclockwise
    std::vector<std::string> names;     // optional node labels
    std::vector<std::pair<double, double>> coords;  // geom dialect only
    std::int64_t scale = 1;             // weights are value / scale
    int outer_dart = -1;                // a dart on the outer face, if known

    int num_arcs() const;
    bool has_arc(int d) const { return arc(d).has_value(); }
    const std::optional<Weight>& arc(int d) const { return d & 1 ? edges[d >> 1].w_vu : edges[d >> 1].w_uv; }
    int tail(int d) const { return d & 1 ? edges[d >> 1].v : edges[d >> 1].u; }
    int head(int d) const { return tail(d ^ 1); }
    std::string name(int v) const { return v < static_cast<int>(names.size()) ? names[v] : std::to_string(v); }
};

// Bidirected PlaneGraph with identical node, edge and dart ids; absent arcs
// get `filler`. Throws EmbeddingError when the rotation system is invalid.
PlaneGraph bidirect(const RawGraph& g, Weight filler);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// Parses either dialect ("pgraph rot 1" or "pgraph geom 1"). Throws ParseError
// on malformed text and EmbeddingError on an invalid embedding.
RawGraph parse_graph(std::istream& in);
RawGraph parse_graph_file(const std::string& path);
RawGraph parse_graph_string(const std::string& text);

void print_rot(std::ostream& out, const RawGraph& g);
void print_geom(std::ostream& out, const RawGraph& g);

// Decimal with at most 9 fractional digits; returns value scaled by 10^digits.
struct Decimal {
    std::int64_t mantissa = 0;
    int digits = 0;
};
std::optional<Decimal> parse_decimal(const std::string& s);

}  // namespace planarcut

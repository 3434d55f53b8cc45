#include "planarcut/graph_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace planarcut {

int RawGraph::num_arcs() const {
    int k = 0;
    for (const auto& e : edges) k += e.w_uv.has_value() + e.w_vu.has_value();
    return k;
}

PlaneGraph bidirect(const RawGraph& g, Weight filler) {
    std::vector<EdgeSpec> specs(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const RawEdge& r = g.edges[e];
        specs[e] = {r.u, r.v, r.w_uv.value_or(filler), r.w_vu.value_or(filler)};
    }
    PlaneGraph pg = PlaneGraph::from_rotation(g.num_nodes, std::move(specs), g.rot);
    if (g.outer_dart >= 0 && g.outer_dart < pg.num_darts()) pg.set_outer_face(pg.left_face(g.outer_dart));
    return pg;
}

std::optional<Decimal> parse_decimal(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Decimal d;
    bool dot = false, any = false;
    for (char c : s) {
        if (c == '.') {
            if (dot) return std::nullopt;
            dot = true;
            continue;
        }
        if (c < '0' || c > '9') return std::nullopt;
        if (dot && ++d.digits > 9) return std::nullopt;
        if (d.mantissa > (std::int64_t(1) << 58) / 10) return std::nullopt;
        d.mantissa = d.mantissa * 10 + (c - '0');
        any = true;
    }
    if (!any || s.back() == '.') return std::nullopt;
    return d;
}

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> split_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

// A weight as written, resolved once the file-wide scale is known.
struct PendingWeight {
    bool present = false;
    bool inf = false;
    Decimal dec;
    int line = 0, column = 0;
};

PendingWeight read_weight(const Token& t, int line, bool allow_absent) {
    PendingWeight p;
    p.line = line;
    p.column = t.column;
    if (allow_absent && t.text == "-") return p;
    p.present = true;
    if (t.text == "inf") {
        p.inf = true;
        return p;
    }
    if (!t.text.empty() && t.text[0] == '-') throw ParseError(line, t.column, "negative weight '" + t.text + "'");
    auto d = parse_decimal(t.text);
    if (!d) throw ParseError(line, t.column, "bad weight '" + t.text + "'");
    p.dec = *d;
    return p;
}

std::int64_t pow10(int k) {
    std::int64_t r = 1;
    while (k-- > 0) r *= 10;
    return r;
}

std::optional<Weight> resolve(const PendingWeight& p, int digits) {
    if (!p.present) return std::nullopt;
    if (p.inf) return Weight::infinite();
    std::int64_t f = pow10(digits - p.dec.digits);
    if (p.dec.mantissa > ((std::int64_t(1) << 58) / f))
        throw ParseError(p.line, p.column, "weight out of range after scaling");
    return Weight(p.dec.mantissa * f);
}

std::string fixed_weight(const std::optional<Weight>& w, std::int64_t scale, bool absent_dash) {
    if (!w) return absent_dash ? "-" : "";
    if (w->is_infinite()) return "inf";
    if (scale <= 1) return std::to_string(w->value());
    int digits = 0;
    for (std::int64_t t = scale; t > 1; t /= 10) ++digits;
    std::string f = std::to_string(w->value() % scale);
    return std::to_string(w->value() / scale) + "." + std::string(digits - f.size(), '0') + f;
}

void set_geom_outer(RawGraph& g) {
    if (g.edges.empty()) return;
    PlaneGraph pg = bidirect(g, Weight(0));
    double best = 0;
    for (int f = 0; f < pg.num_faces(); ++f) {
        double area = 0;
        for (int d : pg.face(f)) {
            auto [x1, y1] = g.coords[pg.tail(d)];
            auto [x2, y2] = g.coords[pg.head(d)];
            area += x1 * y2 - x2 * y1;
        }
        if (g.outer_dart == -1 || area < best) {
            best = area;
            g.outer_dart = pg.face(f)[0];
        }
    }
}

}  // namespace

RawGraph parse_graph(std::istream& in) {
    RawGraph g;
    std::string line;
    int lineno = 0;
    enum class Dialect { None, Rot, Geom } dialect = Dialect::None;
    std::unordered_map<std::string, int> node_id, edge_id;
    std::vector<std::array<PendingWeight, 2>> pending;
    std::map<std::pair<int, int>, int> pair_edge;
    std::vector<char> has_rot;
    int max_digits = 0;

    auto node_of = [&](const Token& t, int ln) {
        auto it = node_id.find(t.text);
        if (it == node_id.end()) throw ParseError(ln, t.column, "unknown node '" + t.text + "'");
        return it->second;
    };
    auto note_digits = [&](const PendingWeight& p) {
        if (p.present && !p.inf) max_digits = std::max(max_digits, p.dec.digits);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto tok = split_line(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0].text;
        if (dialect == Dialect::None) {
            if (kw != "pgraph" || tok.size() != 3 || tok[2].text != "1")
                throw ParseError(lineno, tok[0].column, "expected header 'pgraph rot 1' or 'pgraph geom 1'");
            if (tok[1].text == "rot") dialect = Dialect::Rot;
            else if (tok[1].text == "geom") dialect = Dialect::Geom;
            else throw ParseError(lineno, tok[1].column, "unknown dialect '" + tok[1].text + "'");
            continue;
        }
        auto want = [&](std::size_t k) {
            if (tok.size() != k)
                throw ParseError(lineno, tok.back().column,
                                 "'" + kw + "' expects " + std::to_string(k - 1) + " fields");
        };
        if (kw == "node") {
            want(dialect == Dialect::Geom ? 4 : 2);
            if (!node_id.emplace(tok[1].text, g.num_nodes).second)
                throw ParseError(lineno, tok[1].column, "duplicate node '" + tok[1].text + "'");
            g.names.push_back(tok[1].text);
            ++g.num_nodes;
            has_rot.push_back(0);
            if (dialect == Dialect::Geom) {
                double c[2];
                for (int k = 0; k < 2; ++k) {
                    const std::string& s = tok[2 + k].text;
                    std::size_t used = 0;
                    try {
                        c[k] = std::stod(s, &used);
                    } catch (const std::exception&) {
                        used = 0;
                    }
                    if (used != s.size() || !std::isfinite(c[k]))
                        throw ParseError(lineno, tok[2 + k].column, "bad coordinate '" + s + "'");
                }
                g.coords.emplace_back(c[0], c[1]);
            }
        } else if (kw == "edge" && dialect == Dialect::Rot) {
            want(6);
            int u = node_of(tok[2], lineno), v = node_of(tok[3], lineno);
            if (!edge_id.emplace(tok[1].text, static_cast<int>(g.edges.size())).second)
                throw ParseError(lineno, tok[1].column, "duplicate edge '" + tok[1].text + "'");
            pending.push_back({read_weight(tok[4], lineno, true), read_weight(tok[5], lineno, true)});
            note_digits(pending.back()[0]);
            note_digits(pending.back()[1]);
            g.edges.push_back({u, v, std::nullopt, std::nullopt});
        } else if (kw == "rot" && dialect == Dialect::Rot) {
            if (tok.size() < 2) throw ParseError(lineno, tok[0].column, "'rot' needs a node");
            int v = node_of(tok[1], lineno);
            if (has_rot[v]) throw ParseError(lineno, tok[1].column, "second rotation for node '" + tok[1].text + "'");
            has_rot[v] = 1;
            g.rot.resize(g.num_nodes);
            for (std::size_t k = 2; k < tok.size(); ++k) {
                auto it = edge_id.find(tok[k].text);
                if (it == edge_id.end()) throw ParseError(lineno, tok[k].column, "unknown edge '" + tok[k].text + "'");
                g.rot[v].push_back(it->second);
            }
        } else if (kw == "arc" && dialect == Dialect::Geom) {
            want(4);
            int u = node_of(tok[1], lineno), v = node_of(tok[2], lineno);
            if (u == v) throw ParseError(lineno, tok[2].column, "self-loop at '" + tok[1].text + "'");
            PendingWeight w = read_weight(tok[3], lineno, false);
            note_digits(w);
            auto key = std::minmax(u, v);
            auto it = pair_edge.find({key.first, key.second});
            if (it == pair_edge.end()) {
                pair_edge[{key.first, key.second}] = static_cast<int>(g.edges.size());
                g.edges.push_back({u, v, std::nullopt, std::nullopt});
                pending.push_back({w, PendingWeight{}});
            } else {
                int dir = g.edges[it->second].u == u ? 0 : 1;
                if (pending[it->second][dir].present)
                    throw ParseError(lineno, tok[0].column, "duplicate arc " + tok[1].text + " -> " + tok[2].text);
                pending[it->second][dir] = w;
            }
        } else {
            throw ParseError(lineno, tok[0].column, "unexpected '" + kw + "'");
        }
    }
    if (dialect == Dialect::None) throw ParseError(lineno + 1, 1, "missing header");

    g.scale = pow10(max_digits);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        g.edges[e].w_uv = resolve(pending[e][0], max_digits);
        g.edges[e].w_vu = resolve(pending[e][1], max_digits);
    }
    g.rot.resize(g.num_nodes);
    if (dialect == Dialect::Geom) {
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            g.rot[g.edges[e].u].push_back(static_cast<int>(e));
            g.rot[g.edges[e].v].push_back(static_cast<int>(e));
        }
        for (int v = 0; v < g.num_nodes; ++v) {
            auto [x0, y0] = g.coords[v];
            auto key = [&](int e) {
                int w = g.edges[e].u == v ? g.edges[e].v : g.edges[e].u;
                double dx = g.coords[w].first - x0, dy = g.coords[w].second - y0;
                return std::make_tuple(std::atan2(dy, dx), std::hypot(dx, dy), w);
            };
            std::sort(g.rot[v].begin(), g.rot[v].end(), [&](int a, int b) { return key(a) < key(b); });
        }
        bidirect(g, Weight(0));
        set_geom_outer(g);
    } else {
        bidirect(g, Weight(0));
    }
    return g;
}

RawGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

RawGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
    return parse_graph(in);
}

void print_rot(std::ostream& out, const RawGraph& g) {
    out << "pgraph rot 1\n";
    for (int v = 0; v < g.num_nodes; ++v) out << "node " << g.name(v) << "\n";
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const RawEdge& r = g.edges[e];
        out << "edge " << e << " " << g.name(r.u) << " " << g.name(r.v) << " "
            << fixed_weight(r.w_uv, g.scale, true) << " " << fixed_weight(r.w_vu, g.scale, true) << "\n";
    }
    for (int v = 0; v < g.num_nodes; ++v) {
        out << "rot " << g.name(v);
        if (v < static_cast<int>(g.rot.size()))
            for (int e : g.rot[v]) out << " " << e;
        out << "\n";
    }
}

void print_geom(std::ostream& out, const RawGraph& g) {
    if (static_cast<int>(g.coords.size()) != g.num_nodes)
        throw std::invalid_argument("print_geom needs coordinates for every node");
    std::ostringstream num;
    num.precision(17);
    out << "pgraph geom 1\n";
    for (int v = 0; v < g.num_nodes; ++v) {
        num.str("");
        num << g.coords[v].first << " " << g.coords[v].second;
        out << "node " << g.name(v) << " " << num.str() << "\n";
    }
    for (const RawEdge& r : g.edges) {
        if (r.w_uv) out << "arc " << g.name(r.u) << " " << g.name(r.v) << " " << fixed_weight(r.w_uv, g.scale, false) << "\n";
        if (r.w_vu) out << "arc " << g.name(r.v) << " " << g.name(r.u) << " " << fixed_weight(r.w_vu, g.scale, false) << "\n";
    }
}

}  // namespace planarcut

#ifndef ADDLAB_GRAPH_HPP
#define ADDLAB_GRAPH_HPP

#include "arith.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace addlab {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    std::optional<Residue> label;

    std::size_t other(std::size_t w) const noexcept { return w == u ? v : u; }
    bool touches(std::size_t w) const noexcept { return u == w || v == w; }
};

/// Undirected multigraph (no self-loops) with an optional Z_d label per edge.
///
/// Vertices are opaque names kept in first-appearance order; edges keep
/// insertion order. Those two orders index every vector and matrix derived
/// from the graph.
class LabeledGraph {
public:
    explicit LabeledGraph(std::int64_t modulus) : modulus_(modulus) {
        if (modulus < 1) throw PreconditionError("modulus must be at least 1");
    }

    std::int64_t modulus() const noexcept { return modulus_; }
    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<std::string>& vertex_names() const noexcept { return names_; }
    const std::string& vertex_name(std::size_t v) const { return names_.at(v); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_.at(e); }

    std::optional<std::size_t> find_vertex(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Returns the index of `name`, creating the vertex if it is new.
    std::size_t add_vertex(std::string_view name) {
        if (auto v = find_vertex(name)) return *v;
        if (name.empty()) throw PreconditionError("empty vertex name");
        names_.emplace_back(name);
        index_.emplace(names_.back(), names_.size() - 1);
        return names_.size() - 1;
    }

    std::size_t add_edge(std::size_t u, std::size_t v, std::optional<Residue> label) {
        if (u >= vertex_count() || v >= vertex_count()) throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("self-loop at vertex '" + names_[u] + "'");
        if (label && (*label < 0 || *label >= modulus_))
            throw PreconditionError("label " + std::to_string(*label) + " outside [0, " +
                                    std::to_string(modulus_) + ")");
        edges_.push_back({u, v, label});
        return edges_.size() - 1;
    }

    std::size_t add_edge(std::string_view u, std::string_view v, std::optional<Residue> label) {
        if (u == v) throw PreconditionError("self-loop at vertex '" + std::string(u) + "'");
        const auto a = add_vertex(u);
        const auto b = add_vertex(v);
        return add_edge(a, b, label);
    }

    void set_label(std::size_t e, std::optional<Residue> label) {
        if (label && (*label < 0 || *label >= modulus_)) throw PreconditionError("label out of range");
        edges_.at(e).label = label;
    }

    bool fully_labeled() const noexcept {
        for (const auto& e : edges_)
            if (!e.label) return false;
        return true;
    }

    /// Labels in edge order; throws UnlabeledEdgeError when any is missing.
    std::vector<Residue> labels() const {
        std::vector<Residue> out;
        out.reserve(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (!edges_[i].label)
                throw UnlabeledEdgeError("edge " + std::to_string(i + 1) + " (" + names_[edges_[i].u] + ", " +
                                         names_[edges_[i].v] + ") has no label");
            out.push_back(*edges_[i].label);
        }
        return out;
    }

    /// Same vertices, only the edges that carry a label.
    LabeledGraph labeled_part() const {
        LabeledGraph g(modulus_);
        for (const auto& n : names_) g.add_vertex(n);
        for (const auto& e : edges_)
            if (e.label) g.add_edge(e.u, e.v, e.label);
        return g;
    }

    /// Per-vertex incident edge indices, in edge order.
    std::vector<std::vector<std::size_t>> incidence_lists() const {
        std::vector<std::vector<std::size_t>> adj(vertex_count());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            adj[edges_[i].u].push_back(i);
            adj[edges_[i].v].push_back(i);
        }
        return adj;
    }

    bool operator==(const LabeledGraph& o) const {
        if (modulus_ != o.modulus_ || names_ != o.names_ || edges_.size() != o.edges_.size()) return false;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& a = edges_[i];
            const auto& b = o.edges_[i];
            if (a.u != b.u || a.v != b.v || a.label != b.label) return false;
        }
        return true;
    }

private:
    std::int64_t modulus_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Edge> edges_;
};

/// Vertex labeling, indexed by vertex order of the graph it belongs to.
struct VLabeling {
    std::vector<Residue> values;

    auto operator<=>(const VLabeling&) const = default;
};

/// True iff every labeled edge satisfies label == f(u) + f(v) (mod d).
inline bool is_valid_labeling(const LabeledGraph& g, const VLabeling& f) {
    if (f.values.size() != g.vertex_count()) return false;
    const auto d = g.modulus();
    for (const auto& e : g.edges()) {
        if (!e.label) continue;
        if (mod::add(f.values[e.u], f.values[e.v], d) != *e.label) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text format

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace detail

inline LabeledGraph parse_graph(std::istream& in) {
    std::optional<LabeledGraph> g;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = detail::split_ws(line);
        if (tok.empty()) continue;

        if (tok[0] == "d") {
            if (g) throw ParseError(lineno, "modulus declared more than once");
            if (tok.size() != 2) throw ParseError(lineno, "expected 'd <integer>'");
            auto d = detail::parse_int(tok[1]);
            if (!d) throw ParseError(lineno, "bad modulus '" + std::string(tok[1]) + "'");
            if (*d < 1) throw ParseError(lineno, "modulus must be at least 1");
            g.emplace(*d);
            continue;
        }
        if (!g) throw ParseError(lineno, "missing 'd' header before first directive");

        if (tok[0] == "vertex") {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'vertex <name>'");
            g->add_vertex(tok[1]);
        } else if (tok[0] == "edge") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <u> <v> <label|?>'");
            if (tok[1] == tok[2]) throw ParseError(lineno, "self-loop at vertex '" + std::string(tok[1]) + "'");
            std::optional<Residue> label;
            if (tok[3] != "?") {
                auto x = detail::parse_int(tok[3]);
                if (!x) throw ParseError(lineno, "bad label '" + std::string(tok[3]) + "'");
                if (*x < 0 || *x >= g->modulus())
                    throw ParseError(lineno, "label " + std::string(tok[3]) + " outside [0, " +
                                                 std::to_string(g->modulus()) + ")");
                label = *x;
            }
            g->add_edge(tok[1], tok[2], label);
        } else {
            throw ParseError(lineno, "unknown directive '" + std::string(tok[0]) + "'");
        }
    }
    if (!g) throw ParseError(lineno, "missing 'd' header");
    return std::move(*g);
}

inline LabeledGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

/// Canonical form: modulus, every vertex in order, then every edge in order.
inline void write_graph(std::ostream& os, const LabeledGraph& g) {
    os << "d " << g.modulus() << '\n';
    for (const auto& n : g.vertex_names()) os << "vertex " << n << '\n';
    for (const auto& e : g.edges()) {
        os << "edge " << g.vertex_name(e.u) << ' ' << g.vertex_name(e.v) << ' ';
        if (e.label)
            os << *e.label;
        else
            os << '?';
        os << '\n';
    }
}

inline std::string to_string(const LabeledGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

// ---------------------------------------------------------------------------
// Structure

struct ComponentDecomposition {
    /// Vertex indices of each component, ascending; components ordered by least vertex.
    std::vector<std::vector<std::size_t>> components;
    /// Edge indices of each component, ascending.
    std::vector<std::vector<std::size_t>> component_edges;
    std::vector<std::size_t> component_of;
    std::vector<std::size_t> roots;
    /// BFS visiting order per component; root first.
    std::vector<std::vector<std::size_t>> bfs_order;
    /// Tree edge to the parent; nullopt for roots.
    std::vector<std::optional<std::size_t>> parent_edge;
    std::vector<std::size_t> depth;

    std::size_t count() const noexcept { return components.size(); }
    int parity(std::size_t v) const { return static_cast<int>(depth.at(v) & 1U); }

    bool is_tree_edge(std::size_t e) const {
        for (const auto& pe : parent_edge)
            if (pe == e) return true;
        return false;
    }
};

inline ComponentDecomposition components_and_parity(const LabeledGraph& g) {
    const auto n = g.vertex_count();
    const auto adj = g.incidence_lists();
    ComponentDecomposition cd;
    constexpr auto unseen = static_cast<std::size_t>(-1);
    cd.component_of.assign(n, unseen);
    cd.parent_edge.assign(n, std::nullopt);
    cd.depth.assign(n, 0);

    for (std::size_t s = 0; s < n; ++s) {
        if (cd.component_of[s] != unseen) continue;
        const auto c = cd.components.size();
        cd.roots.push_back(s);
        std::vector<std::size_t> order{s};
        cd.component_of[s] = c;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const auto u = order[head];
            for (auto e : adj[u]) {
                const auto w = g.edge(e).other(u);
                if (cd.component_of[w] != unseen) continue;
                cd.component_of[w] = c;
                cd.parent_edge[w] = e;
                cd.depth[w] = cd.depth[u] + 1;
                order.push_back(w);
            }
        }
        auto members = order;
        std::sort(members.begin(), members.end());
        cd.components.push_back(std::move(members));
        cd.bfs_order.push_back(std::move(order));
    }
    cd.component_edges.resize(cd.components.size());
    for (std::size_t e = 0; e < g.edge_count(); ++e) cd.component_edges[cd.component_of[g.edge(e).u]].push_back(e);
    return cd;
}

/// Closed walk: consecutive edges share the vertex reached so far.
struct CycleWalk {
    std::size_t start = 0;
    std::vector<std::size_t> edges;

    std::size_t length() const noexcept { return edges.size(); }
    bool is_odd() const noexcept { return edges.size() % 2 == 1; }
};

/// Vertex sequence v_0 = start, ..., v_k of the walk, or nullopt if some edge
/// does not leave the current vertex.
inline std::optional<std::vector<std::size_t>> walk_vertices(const LabeledGraph& g, const CycleWalk& w) {
    if (w.start >= g.vertex_count()) return std::nullopt;
    std::vector<std::size_t> seq{w.start};
    auto at = w.start;
    for (auto e : w.edges) {
        if (e >= g.edge_count() || !g.edge(e).touches(at)) return std::nullopt;
        at = g.edge(e).other(at);
        seq.push_back(at);
    }
    return seq;
}

inline bool is_closed_walk(const LabeledGraph& g, const CycleWalk& w) {
    if (w.edges.size() < 2) return false;
    auto seq = walk_vertices(g, w);
    return seq && seq->back() == w.start;
}

struct OddCycleWitness {
    CycleWalk walk;
};

namespace detail {

// Tree path from v up to its ancestor `top`, as edge indices.
inline std::vector<std::size_t> path_to_ancestor(const LabeledGraph& g, const ComponentDecomposition& cd,
                                                 std::size_t v, std::size_t top) {
    std::vector<std::size_t> edges;
    while (v != top) {
        const auto e = *cd.parent_edge[v];
        edges.push_back(e);
        v = g.edge(e).other(v);
    }
    return edges;
}

inline std::size_t tree_lca(const LabeledGraph& g, const ComponentDecomposition& cd, std::size_t a, std::size_t b) {
    auto up = [&](std::size_t v) { return g.edge(*cd.parent_edge[v]).other(v); };
    while (cd.depth[a] > cd.depth[b]) a = up(a);
    while (cd.depth[b] > cd.depth[a]) b = up(b);
    while (a != b) {
        a = up(a);
        b = up(b);
    }
    return a;
}

}  // namespace detail

/// Odd closed walk through the non-tree edge `e`, whose endpoints must share
/// BFS parity. The walk starts at their lowest common tree ancestor.
inline OddCycleWitness odd_walk_through(const LabeledGraph& g, const ComponentDecomposition& cd, std::size_t e) {
    const auto& edge = g.edge(e);
    if (cd.parity(edge.u) != cd.parity(edge.v)) throw PreconditionError("edge endpoints differ in parity");
    const auto top = detail::tree_lca(g, cd, edge.u, edge.v);
    auto down = detail::path_to_ancestor(g, cd, edge.u, top);
    const auto up = detail::path_to_ancestor(g, cd, edge.v, top);
    CycleWalk w{top, {}};
    w.edges.assign(down.rbegin(), down.rend());
    w.edges.push_back(e);
    w.edges.insert(w.edges.end(), up.begin(), up.end());
    return {std::move(w)};
}

/// All odd walks obtainable from same-parity edges of component `c`, in edge order.
inline std::vector<OddCycleWitness> odd_cycle_witnesses(const LabeledGraph& g, const ComponentDecomposition& cd,
                                                        std::size_t c) {
    std::vector<OddCycleWitness> out;
    for (auto e : cd.component_edges.at(c))
        if (cd.parity(g.edge(e).u) == cd.parity(g.edge(e).v)) out.push_back(odd_walk_through(g, cd, e));
    return out;
}

/// First odd closed walk of component `c`, or nullopt when it is bipartite.
inline std::optional<OddCycleWitness> find_odd_cycle(const LabeledGraph& g, const ComponentDecomposition& cd,
                                                     std::size_t c) {
    for (auto e : cd.component_edges.at(c))
        if (cd.parity(g.edge(e).u) == cd.parity(g.edge(e).v)) return odd_walk_through(g, cd, e);
    return std::nullopt;
}

/// First odd closed walk anywhere in the graph, or nullopt when it is bipartite.
inline std::optional<OddCycleWitness> find_odd_cycle(const LabeledGraph& g, const ComponentDecomposition& cd) {
    for (std::size_t c = 0; c < cd.count(); ++c)
        if (auto w = find_odd_cycle(g, cd, c)) return w;
    return std::nullopt;
}

/// 0/1 vertex-by-edge matrix; rows follow vertex order, columns edge order.
inline IntMatrix incidence_matrix(const LabeledGraph& g) {
    IntMatrix a(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        a(g.edge(e).u, e) = 1;
        a(g.edge(e).v, e) = 1;
    }
    return a;
}

/// A component lifted out as its own graph, with maps back to the parent.
struct Subgraph {
    LabeledGraph graph;
    std::vector<std::size_t> vertex_map;  // local -> parent
    std::vector<std::size_t> edge_map;    // local -> parent
};

inline Subgraph component_subgraph(const LabeledGraph& g, const ComponentDecomposition& cd, std::size_t c) {
    Subgraph sub{LabeledGraph(g.modulus()), cd.components.at(c), cd.component_edges.at(c)};
    std::unordered_map<std::size_t, std::size_t> local;
    for (auto v : sub.vertex_map) local.emplace(v, sub.graph.add_vertex(g.vertex_name(v)));
    for (auto e : sub.edge_map) {
        const auto& edge = g.edge(e);
        sub.graph.add_edge(local.at(edge.u), local.at(edge.v), edge.label);
    }
    return sub;
}

}  // namespace addlab

#endif  // ADDLAB_GRAPH_HPP

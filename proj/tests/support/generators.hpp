#ifndef ADDLAB_TESTS_GENERATORS_HPP
#define ADDLAB_TESTS_GENERATORS_HPP

// Graph and labeling generators shared by the unit and acceptance suites.

#include <addlab/addlab.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace addlab::testing {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

/// Graph on vertices "0".."n-1" (declared in order) with the given edges.
inline LabeledGraph make_graph(std::int64_t d, std::size_t n, const EdgeList& edges,
                               const std::vector<std::optional<Residue>>& labels = {}) {
    LabeledGraph g(d);
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(std::to_string(v));
    for (std::size_t i = 0; i < edges.size(); ++i)
        g.add_edge(edges[i].first, edges[i].second, i < labels.size() ? labels[i] : std::optional<Residue>{});
    return g;
}

inline LabeledGraph with_labels(LabeledGraph g, const std::vector<Residue>& labels) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) g.set_label(e, labels.at(e));
    return g;
}

/// Edge labels induced by the vertex labeling f.
inline std::vector<Residue> induced_labels(const LabeledGraph& g, const std::vector<Residue>& f) {
    std::vector<Residue> out;
    for (const auto& e : g.edges()) out.push_back((f[e.u] + f[e.v]) % g.modulus());
    return out;
}

inline std::vector<Residue> random_residues(std::mt19937_64& rng, std::size_t k, std::int64_t d) {
    std::uniform_int_distribution<std::int64_t> dist(0, d - 1);
    std::vector<Residue> out(k);
    for (auto& x : out) x = dist(rng);
    return out;
}

/// Additive by construction: vertices labeled first.
inline LabeledGraph random_additive_labeling(std::mt19937_64& rng, const LabeledGraph& g) {
    return with_labels(g, induced_labels(g, random_residues(rng, g.vertex_count(), g.modulus())));
}

inline bool is_connected(std::size_t n, const EdgeList& edges) {
    if (n == 0) return true;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = n;
    for (auto [a, b] : edges) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

inline EdgeList all_pairs(std::size_t n) {
    EdgeList out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

/// Every connected simple graph on exactly n labeled vertices (n <= 6).
inline std::vector<EdgeList> all_connected_labeled_graphs(std::size_t n) {
    const auto pairs = all_pairs(n);
    std::vector<EdgeList> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        EdgeList edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1U) edges.push_back(pairs[i]);
        if (is_connected(n, edges)) out.push_back(std::move(edges));
    }
    return out;
}

/// Random connected graph: random spanning tree plus extra edges. Simple
/// unless `multi` is set, in which case parallel edges may appear. A single
/// vertex gets no edges.
inline EdgeList random_connected_graph(std::mt19937_64& rng, std::size_t n, std::size_t m, bool multi = false) {
    EdgeList edges;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::set<std::pair<std::size_t, std::size_t>> used;
    auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        const auto a = order[i], b = order[pick(rng)];
        edges.emplace_back(a, b);
        used.insert(key(a, b));
    }
    const std::size_t cap = n < 2 ? 0 : multi ? m : std::min(m, n * (n - 1) / 2);
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    while (edges.size() < cap) {
        const auto a = any(rng), b = any(rng);
        if (a == b) continue;
        if (!multi && used.count(key(a, b))) continue;
        used.insert(key(a, b));
        edges.emplace_back(a, b);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return edges;
}

// ---------------------------------------------------------------------------
// Isomorphism classes of small simple graphs (n <= 8).

namespace detail {

inline std::size_t pair_bit(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;  // 0..27 for n <= 8
}

inline std::uint32_t encode(std::size_t n, std::uint32_t adj_bits, const std::vector<std::size_t>& perm) {
    std::uint32_t out = 0;
    for (std::size_t b = 1; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (adj_bits >> pair_bit(a, b) & 1U) out |= std::uint32_t{1} << pair_bit(perm[a], perm[b]);
    return out;
}

// Smallest encoding over vertex permutations that keep a degree-based
// invariant ordered.
inline std::uint32_t canonical(std::size_t n, std::uint32_t bits) {
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t b = 1; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (bits >> pair_bit(a, b) & 1U) {
                ++deg[a];
                ++deg[b];
            }
    std::vector<std::vector<std::size_t>> inv(n);
    for (std::size_t v = 0; v < n; ++v) {
        inv[v].push_back(deg[v]);
        std::vector<std::size_t> nd;
        for (std::size_t w = 0; w < n; ++w)
            if (w != v && (bits >> pair_bit(v, w) & 1U)) nd.push_back(deg[w]);
        std::sort(nd.begin(), nd.end());
        inv[v].insert(inv[v].end(), nd.begin(), nd.end());
    }
    std::vector<std::size_t> byinv(n);
    std::iota(byinv.begin(), byinv.end(), 0);
    std::sort(byinv.begin(), byinv.end(), [&](auto x, auto y) { return inv[x] < inv[y]; });
    // Class boundaries in invariant order; positions within a class are permuted.
    std::vector<std::pair<std::size_t, std::size_t>> classes;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && inv[byinv[j]] == inv[byinv[i]]) ++j;
        classes.emplace_back(i, j);
        i = j;
    }
    std::uint32_t best = ~std::uint32_t{0};
    std::vector<std::size_t> slots(n);
    std::iota(slots.begin(), slots.end(), 0);
    std::vector<std::size_t> perm(n);
    // Odometer over per-class permutations.
    std::vector<std::vector<std::size_t>> cls;
    for (auto [i, j] : classes) cls.emplace_back(slots.begin() + i, slots.begin() + j);
    for (;;) {
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::size_t k = classes[c].first; k < classes[c].second; ++k)
                perm[byinv[k]] = cls[c][k - classes[c].first];
        best = std::min(best, encode(n, bits, perm));
        std::size_t c = classes.size();
        while (c > 0 && !std::next_permutation(cls[c - 1].begin(), cls[c - 1].end())) --c;
        if (c == 0) break;
    }
    return best;
}

}  // namespace detail

/// One representative per isomorphism class of simple graphs with exactly
/// n vertices and at most max_m edges.
inline std::vector<EdgeList> nonisomorphic_graphs(std::size_t n, std::size_t max_m) {
    std::vector<EdgeList> out;
    std::set<std::uint32_t> level{0};
    const auto pairs = all_pairs(n);
    for (std::size_t m = 0;; ++m) {
        for (auto bits : level) {
            EdgeList edges;
            for (const auto& [a, b] : pairs)
                if (bits >> detail::pair_bit(a, b) & 1U) edges.emplace_back(a, b);
            out.push_back(std::move(edges));
        }
        if (m == max_m) break;
        std::set<std::uint32_t> next;
        for (auto bits : level)
            for (const auto& [a, b] : pairs) {
                const auto bit = std::uint32_t{1} << detail::pair_bit(a, b);
                if (bits & bit) continue;
                next.insert(detail::canonical(n, bits | bit));
            }
        if (next.empty()) break;
        level = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force modular kernels.

/// {x in Z_d^m : A x = 0 mod d} by exhaustion.
inline std::set<std::vector<Residue>> brute_kernel(const IntMatrix& a, std::int64_t d) {
    const auto m = a.cols();
    std::vector<std::vector<std::int64_t>> rows(a.rows(), std::vector<std::int64_t>(m));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j) rows[i][j] = static_cast<std::int64_t>(a(i, j));
    std::set<std::vector<Residue>> out;
    std::vector<Residue> x(m, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < rows.size() && ok; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < m; ++j) s += rows[i][j] * x[j];
            ok = s % d == 0;
        }
        if (ok) out.insert(x);
        std::size_t j = m;
        while (j > 0 && ++x[j - 1] == d) x[--j] = 0;
        if (j == 0) break;
    }
    return out;
}

/// Z_d-span of the generators, by closure under adding each generator.
inline std::set<std::vector<Residue>> span_mod(const std::vector<std::vector<Residue>>& gens, std::size_t m,
                                               std::int64_t d) {
    std::set<std::vector<Residue>> seen{std::vector<Residue>(m, 0)};
    std::vector<std::vector<Residue>> frontier{std::vector<Residue>(m, 0)};
    while (!frontier.empty()) {
        std::vector<std::vector<Residue>> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = x;
                for (std::size_t j = 0; j < m; ++j) y[j] = (y[j] + g[j]) % d;
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return seen;
}

/// The instance where fundamental-cycle checks pass but the labels are not
/// additive: d = 4, edges 12, 23, 34, 14, 24 labeled 1, 0, 1, 0, 1.
inline LabeledGraph fundamental_cycle_counterexample() {
    return parse_graph(
        "d 4\n"
        "edge 1 2 1\n"
        "edge 2 3 0\n"
        "edge 3 4 1\n"
        "edge 1 4 0\n"
        "edge 2 4 1\n");
}

}  // namespace addlab::testing

#endif  // ADDLAB_TESTS_GENERATORS_HPP

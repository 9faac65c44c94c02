#ifndef ADDLAB_LABELING_HPP
#define ADDLAB_LABELING_HPP

#include "arith.hpp"
#include "cycle_space.hpp"
#include "graph.hpp"
#include "snf.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace addlab {

/// Incidence algebra of one connected component, in component-local indices.
struct ComponentAnalysis {
    Subgraph sub;
    IntMatrix incidence;
    SnfResult snf;
    IncidenceSnfSummary summary;
    KernelBasis kernel;

    bool bipartite() const noexcept { return summary.alpha == 0; }
};

inline ComponentAnalysis analyze_component(const LabeledGraph& g, const ComponentDecomposition& cd, std::size_t c) {
    ComponentAnalysis out{component_subgraph(g, cd, c), {}, {}, {}, {}};
    out.incidence = incidence_matrix(out.sub.graph);
    out.snf = snf(out.incidence);
    out.summary = incidence_snf_summary(out.sub.graph, out.incidence, out.snf);
    const auto local_cd = components_and_parity(out.sub.graph);
    out.kernel = kernel_generators(out.incidence, out.snf, out.summary, g.modulus(), find_odd_cycle(out.sub.graph, local_cd));
    return out;
}

/// Runs `fn(c)` for every component index, on up to `jobs` threads.
template <typename Fn>
void for_each_component(std::size_t count, unsigned jobs, Fn&& fn) {
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (jobs <= 1) {
        for (std::size_t c = 0; c < count; ++c) fn(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t c = next++; c < count; c = next++) fn(c);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline std::vector<ComponentAnalysis> analyze(const LabeledGraph& g, const ComponentDecomposition& cd,
                                              unsigned jobs = 1) {
    std::vector<std::optional<ComponentAnalysis>> slots(cd.count());
    for_each_component(cd.count(), jobs, [&](std::size_t c) { slots[c] = analyze_component(g, cd, c); });
    std::vector<ComponentAnalysis> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// Lifts a component-local generator to a full edge-length vector.
inline std::vector<Residue> embed_generator(const ComponentAnalysis& ca, const KernelGenerator& gen,
                                            std::size_t edge_count) {
    std::vector<Residue> full(edge_count, 0);
    for (std::size_t j = 0; j < gen.values.size(); ++j) full[ca.sub.edge_map[j]] = gen.values[j];
    return full;
}

struct Violation {
    std::size_t component = 0;
    std::vector<Residue> generator;  // full edge length
    GeneratorSource source = GeneratorSource::vinv_column;
    Residue value = 0;               // nonzero pairing with the labels
};

struct AdditivityVerdict {
    bool additive = true;
    std::vector<Violation> violations;
};

/// Kernel-based additivity test: every mod-d kernel generator of every
/// component must pair to 0 with the edge labels.
inline AdditivityVerdict check(const LabeledGraph& g, unsigned jobs = 1) {
    const auto labels = g.labels();
    const auto cd = components_and_parity(g);
    const auto parts = analyze(g, cd, jobs);
    AdditivityVerdict verdict;
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (const auto& gen : parts[c].kernel.generators) {
            auto full = embed_generator(parts[c], gen, g.edge_count());
            const auto value = pairing<Residue>(full, labels, g.modulus());
            if (value != 0) verdict.violations.push_back({c, std::move(full), gen.source, value});
        }
    verdict.additive = verdict.violations.empty();
    return verdict;
}

/// Residues x with 2x = rhs (mod d), ascending.
inline std::vector<Residue> solve_seed(std::int64_t d, Residue rhs) {
    rhs = mod::reduce(rhs, d);
    if (d % 2 == 1) return {mod::mul(rhs, (d + 1) / 2, d)};
    if (rhs % 2 != 0) return {};
    return {rhs / 2, rhs / 2 + d / 2};
}

/// Labels the component of `root` by BFS from it: f(root) = seed and each
/// newly reached vertex gets f(w) = label(u, w) - f(u). Vertices outside the
/// component are left at 0.
inline VLabeling propagate(const LabeledGraph& g, const ComponentDecomposition& cd, std::size_t root, Residue seed) {
    if (root >= cd.component_of.size()) throw PreconditionError("propagation root out of range");
    const auto d = g.modulus();
    const auto adj = g.incidence_lists();
    VLabeling f{std::vector<Residue>(g.vertex_count(), 0)};
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::size_t> queue{root};
    seen[root] = 1;
    f.values[root] = mod::reduce(seed, d);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto u = queue[head];
        for (auto e : adj[u]) {
            const auto& edge = g.edge(e);
            const auto w = edge.other(u);
            if (seen[w]) continue;
            if (!edge.label) throw UnlabeledEdgeError("cannot propagate across an unlabeled edge");
            seen[w] = 1;
            f.values[w] = mod::sub(*edge.label, f.values[u], d);
            queue.push_back(w);
        }
    }
    return f;
}

/// Alternating label sum e_1 - e_2 + e_3 - ... around a walk.
inline Residue alternating_sum(const LabeledGraph& g, const CycleWalk& walk) {
    const auto d = g.modulus();
    Residue acc = 0;
    for (std::size_t i = 0; i < walk.edges.size(); ++i) {
        const auto& e = g.edge(walk.edges[i]);
        if (!e.label) throw UnlabeledEdgeError("alternating sum over an unlabeled edge");
        acc = i % 2 == 0 ? mod::add(acc, *e.label, d) : mod::sub(acc, *e.label, d);
    }
    return acc;
}

/// Where a component's labelings are anchored and which anchor values work.
struct ComponentSeeds {
    std::size_t vertex = 0;
    std::vector<Residue> values;
};

namespace detail {

// Seed plans for an additive graph. Seed values of non-bipartite components
// come from 2x = alternating sum around an odd walk starting at the seed vertex.
inline std::vector<ComponentSeeds> seed_plans(const LabeledGraph& g, const ComponentDecomposition& cd) {
    std::vector<ComponentSeeds> plans;
    for (std::size_t c = 0; c < cd.count(); ++c) {
        if (auto w = find_odd_cycle(g, cd, c)) {
            auto values = solve_seed(g.modulus(), alternating_sum(g, w->walk));
            if (values.empty())
                throw InternalInconsistency("additive component has no admissible seed value");
            plans.push_back({w->walk.start, std::move(values)});
        } else {
            // Seeds are materialised lazily by the enumerator; see seed_value().
            plans.push_back({cd.roots[c], {}});
        }
    }
    return plans;
}

inline std::int64_t seed_count(const ComponentSeeds& p, std::int64_t d) {
    return p.values.empty() ? d : static_cast<std::int64_t>(p.values.size());
}

inline Residue seed_value(const ComponentSeeds& p, std::int64_t index) {
    return p.values.empty() ? index : p.values[static_cast<std::size_t>(index)];
}

inline void assign_component(VLabeling& into, const VLabeling& part, const std::vector<std::size_t>& members) {
    for (auto v : members) into.values[v] = part.values[v];
}

inline void verify_or_throw(const LabeledGraph& g, const VLabeling& f) {
    if (!is_valid_labeling(g, f)) throw InternalInconsistency("constructed labeling violates an edge");
}

}  // namespace detail

/// One valid labeling (smallest seed per component), or nullopt when the
/// labels are not additive.
inline std::optional<VLabeling> solve_one(const LabeledGraph& g, unsigned jobs = 1) {
    if (!check(g, jobs).additive) return std::nullopt;
    const auto cd = components_and_parity(g);
    const auto plans = detail::seed_plans(g, cd);
    VLabeling f{std::vector<Residue>(g.vertex_count(), 0)};
    for (std::size_t c = 0; c < cd.count(); ++c) {
        const auto part = propagate(g, cd, plans[c].vertex, detail::seed_value(plans[c], 0));
        detail::assign_component(f, part, cd.components[c]);
    }
    detail::verify_or_throw(g, f);
    return f;
}

struct SolutionCount {
    std::vector<std::int64_t> per_component;  // each d, 1 or 2
    BigInt total = 1;
};

/// Number of valid labelings: d per bipartite component, otherwise 1 for odd
/// d and 2 for even d; multiplied over components.
inline std::optional<SolutionCount> count(const LabeledGraph& g, unsigned jobs = 1) {
    if (!check(g, jobs).additive) return std::nullopt;
    const auto cd = components_and_parity(g);
    const auto d = g.modulus();
    SolutionCount out;
    for (std::size_t c = 0; c < cd.count(); ++c) {
        const bool bipartite = !find_odd_cycle(g, cd, c).has_value();
        const std::int64_t k = bipartite ? d : (d % 2 == 1 ? 1 : 2);
        out.per_component.push_back(k);
        out.total *= k;
    }
    return out;
}

/// Lazily walks all valid labelings: components in vertex order, seeds
/// ascending, the last component varying fastest.
class LabelingEnumerator {
public:
    LabelingEnumerator(const LabeledGraph& g, std::size_t limit) : g_(g), limit_(limit) {
        if (!check(g).additive) {
            done_ = true;
            return;
        }
        cd_ = components_and_parity(g);
        plans_ = detail::seed_plans(g, cd_);
        index_.assign(plans_.size(), 0);
        done_ = limit_ == 0;
    }

    std::optional<VLabeling> next() {
        if (done_) return std::nullopt;
        VLabeling f{std::vector<Residue>(g_.vertex_count(), 0)};
        for (std::size_t c = 0; c < plans_.size(); ++c) {
            const auto part = propagate(g_, cd_, plans_[c].vertex, detail::seed_value(plans_[c], index_[c]));
            detail::assign_component(f, part, cd_.components[c]);
        }
        detail::verify_or_throw(g_, f);
        ++emitted_;
        advance();
        if (emitted_ >= limit_) done_ = true;
        return f;
    }

private:
    void advance() {
        for (std::size_t c = plans_.size(); c-- > 0;) {
            if (++index_[c] < detail::seed_count(plans_[c], g_.modulus())) return;
            index_[c] = 0;
        }
        done_ = true;
    }

    const LabeledGraph& g_;
    std::size_t limit_;
    ComponentDecomposition cd_;
    std::vector<ComponentSeeds> plans_;
    std::vector<std::int64_t> index_;
    std::size_t emitted_ = 0;
    bool done_ = false;
};

inline std::vector<VLabeling> enumerate(const LabeledGraph& g, std::size_t limit) {
    std::vector<VLabeling> out;
    LabelingEnumerator it(g, limit);
    while (auto f = it.next()) out.push_back(std::move(*f));
    return out;
}

/// Completes the '?' edges: the labeled edges (on all vertices) are solved,
/// vertices they do not reach get 0, and each unlabeled edge (u, v) receives
/// f(u) + f(v). nullopt iff the labeled edges alone are not additive.
inline std::optional<LabeledGraph> extend(const LabeledGraph& g) {
    const auto labeled = g.labeled_part();
    const auto f = solve_one(labeled);
    if (!f) return std::nullopt;
    LabeledGraph out = g;
    for (std::size_t e = 0; e < out.edge_count(); ++e)
        if (!out.edge(e).label)
            out.set_label(e, mod::add(f->values[out.edge(e).u], f->values[out.edge(e).v], g.modulus()));
    if (!check(out).additive) throw InternalInconsistency("extension is not additive");
    return out;
}

}  // namespace addlab

#endif  // ADDLAB_LABELING_HPP

#ifndef ADDLAB_TORIC_HPP
#define ADDLAB_TORIC_HPP

#include "arith.hpp"
#include "graph.hpp"
#include "labeling.hpp"
#include "snf.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace addlab {

/// exp(2*pi*i*exponent/order), kept as its exponent.
class RootOfUnity {
public:
    RootOfUnity(std::int64_t order, std::int64_t exponent) : order_(order), exponent_(mod::reduce(exponent, order)) {
        if (order < 1) throw PreconditionError("root of unity order must be positive");
    }

    static RootOfUnity one(std::int64_t order) { return {order, 0}; }

    std::int64_t order() const noexcept { return order_; }
    Residue exponent() const noexcept { return exponent_; }
    bool is_one() const noexcept { return exponent_ == 0; }

    RootOfUnity pow(std::int64_t k) const { return {order_, mod::mul(exponent_, mod::reduce(k, order_), order_)}; }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        if (a.order_ != b.order_) throw PreconditionError("mixing roots of different orders");
        return {a.order_, mod::add(a.exponent_, b.exponent_, a.order_)};
    }

    bool operator==(const RootOfUnity&) const = default;

private:
    std::int64_t order_;
    Residue exponent_;
};

/// Exponents of the vertex values x and edge values y.
struct RootAssignment {
    std::int64_t order = 1;
    std::vector<Residue> vertex_exponents;
    std::vector<Residue> edge_exponents;
};

/// y^u for an integer exponent vector u.
inline RootOfUnity monomial(std::span<const RootOfUnity> y, std::span<const Residue> u, std::int64_t order) {
    auto acc = RootOfUnity::one(order);
    for (std::size_t i = 0; i < y.size(); ++i) acc = acc * y[i].pow(u[i]);
    return acc;
}

inline std::vector<RootOfUnity> edge_roots(const LabeledGraph& g) {
    std::vector<RootOfUnity> y;
    for (auto k : g.labels()) y.emplace_back(g.modulus(), k);
    return y;
}

/// y = x_u x_v is solvable in roots of unity iff y^u = 1 for every kernel
/// generator u. Edge labels are read as exponents.
inline AdditivityVerdict multiplicative_check(const LabeledGraph& g, unsigned jobs = 1) {
    const auto y = edge_roots(g);
    const auto cd = components_and_parity(g);
    const auto parts = analyze(g, cd, jobs);
    AdditivityVerdict verdict;
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (const auto& gen : parts[c].kernel.generators) {
            auto full = embed_generator(parts[c], gen, g.edge_count());
            const auto value = monomial(y, full, g.modulus());
            if (!value.is_one()) verdict.violations.push_back({c, std::move(full), gen.source, value.exponent()});
        }
    verdict.additive = verdict.violations.empty();
    return verdict;
}

struct ToricCount {
    std::int64_t solutions = 0;
    BigInt g;       // gcd of maximal minors of the incidence matrix
    int alpha = 0;  // last invariant-factor slot
};

/// Matrices up to this size get their SNF-derived g re-derived from minors.
inline constexpr std::size_t toric_minor_check_limit = 8;

/// Solutions in d-th roots of unity of a connected graph: d when the last
/// slot is 0 (bipartite), 2 when it is 2 and d is even, otherwise 1.
inline std::optional<ToricCount> toric_count(const LabeledGraph& g) {
    const auto cd = components_and_parity(g);
    if (cd.count() != 1) throw PreconditionError("toric_count needs a connected graph");
    if (!multiplicative_check(g).additive) return std::nullopt;
    const auto part = analyze_component(g, cd, 0);

    ToricCount out;
    out.alpha = part.summary.alpha;
    out.g = snf_maximal_minor_gcd(part.snf);
    if (part.incidence.rows() <= toric_minor_check_limit && part.incidence.cols() <= toric_minor_check_limit &&
        gcd_maximal_minors(part.incidence) != out.g)
        throw InternalInconsistency("SNF-derived g differs from the gcd of maximal minors");

    const auto d = g.modulus();
    if (out.alpha == 0)
        out.solutions = d;
    else
        out.solutions = d % 2 == 0 ? 2 : 1;
    return out;
}

/// One root assignment satisfying y_e = x_u x_v, or nullopt.
inline std::optional<RootAssignment> toric_solve(const LabeledGraph& g) {
    if (!multiplicative_check(g).additive) return std::nullopt;
    auto f = solve_one(g);
    if (!f) throw InternalInconsistency("multiplicative and additive verdicts differ");
    return RootAssignment{g.modulus(), std::move(f->values), g.labels()};
}

/// All root assignments, in the order of the additive enumeration.
inline std::vector<RootAssignment> toric_enumerate(const LabeledGraph& g, std::size_t limit) {
    std::vector<RootAssignment> out;
    if (!multiplicative_check(g).additive) return out;
    const auto y = g.labels();
    for (auto& f : enumerate(g, limit)) out.push_back({g.modulus(), std::move(f.values), y});
    return out;
}

/// Checks y_e = x_u x_v on every edge directly in the group of roots.
inline bool satisfies_monomial_map(const LabeledGraph& g, const RootAssignment& r) {
    if (r.vertex_exponents.size() != g.vertex_count()) return false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        const RootOfUnity x_u(r.order, r.vertex_exponents[edge.u]);
        const RootOfUnity x_v(r.order, r.vertex_exponents[edge.v]);
        if (!(x_u * x_v == RootOfUnity(r.order, r.edge_exponents.at(e)))) return false;
    }
    return true;
}

}  // namespace addlab

#endif  // ADDLAB_TORIC_HPP

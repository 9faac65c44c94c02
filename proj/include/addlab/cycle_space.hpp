#ifndef ADDLAB_CYCLE_SPACE_HPP
#define ADDLAB_CYCLE_SPACE_HPP

#include "arith.hpp"
#include "graph.hpp"
#include "snf.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace addlab {

/// Integer edge vector of a closed walk.
struct CycleVector {
    std::vector<std::int64_t> coords;
};

/// Vector of a closed walk over an edge set of size `edge_count`.
///
/// Even walks put +1, -1, +1, ... on consecutive appearances (first edge +1);
/// odd walks put d/2 on every appearance. Repeated edges accumulate.
inline CycleVector omega_of_walk_edges(std::span<const std::size_t> walk_edges, std::size_t edge_count,
                                       std::int64_t d) {
    CycleVector w{std::vector<std::int64_t>(edge_count, 0)};
    const bool odd = walk_edges.size() % 2 == 1;
    if (odd && d % 2 != 0)
        throw OddWalkOddModulusError("odd closed walk needs an even modulus, got d = " + std::to_string(d));
    for (std::size_t i = 0; i < walk_edges.size(); ++i) {
        const auto e = walk_edges[i];
        if (e >= edge_count) throw PreconditionError("walk edge index out of range");
        w.coords[e] += odd ? d / 2 : (i % 2 == 0 ? 1 : -1);
    }
    return w;
}

inline CycleVector omega_of_cycle(const LabeledGraph& g, const CycleWalk& walk, std::int64_t d) {
    if (!is_closed_walk(g, walk)) throw PreconditionError("not a closed walk");
    return omega_of_walk_edges(walk.edges, g.edge_count(), d);
}

struct CoordinateSum {
    std::int64_t exact = 0;  // sum over the integers
    Residue residue = 0;     // the same sum mod d
};

/// Even walks sum to exactly 0; odd walks to d/2 mod d.
inline CoordinateSum coordinate_sum(const CycleVector& v, std::int64_t d) {
    CoordinateSum s;
    for (auto c : v.coords) s.exact += c;
    s.residue = mod::reduce(s.exact, d);
    return s;
}

enum class GeneratorSource {
    vinv_column,           // a column of V^-1 past the rank
    half_modulus_nth_column,  // (d/2) times the n-th column of V^-1
    odd_cycle_vector,      // omega of an odd closed walk
};

inline const char* to_string(GeneratorSource s) {
    switch (s) {
    case GeneratorSource::vinv_column: return "column-of-Vinv";
    case GeneratorSource::half_modulus_nth_column: return "half-d-times-nth-column";
    case GeneratorSource::odd_cycle_vector: return "odd-cycle-vector";
    }
    return "?";
}

struct KernelGenerator {
    std::vector<Residue> values;  // length m, entries in [0, d)
    GeneratorSource source = GeneratorSource::vinv_column;
    std::size_t column = 0;  // 0-based V^-1 column it came from (unused for odd-cycle vectors)
};

struct KernelBasis {
    std::vector<KernelGenerator> generators;
};

/// How the extra generator for even d on a non-bipartite component is formed.
enum class OddGeneratorChoice { half_nth_column, witness_vector };

namespace detail {

inline bool in_kernel_mod(const IntMatrix& a, std::span<const Residue> x, std::int64_t d) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Residue acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && x[j] != 0) acc = mod::add(acc, mod::mul(mod::reduce(a(i, j), d), x[j], d), d);
        if (acc != 0) return false;
    }
    return true;
}

inline std::vector<Residue> reduce_column(const IntMatrix& m, std::size_t c, std::int64_t d, std::int64_t scale = 1) {
    std::vector<Residue> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = mod::mul(mod::reduce(m(r, c), d), mod::reduce(scale, d), d);
    return out;
}

}  // namespace detail

/// Generators of ker_{Z_d}(a) for the incidence matrix of one connected
/// component, read off the columns of V^-1:
///   alpha = 0          -> last m-n+1 columns
///   alpha = 2, d odd   -> last m-n columns
///   alpha = 2, d even  -> last m-n columns and (d/2) * column n
/// `odd_witness` must be present exactly when alpha = 2.
inline KernelBasis kernel_generators(const IntMatrix& a, const SnfResult& res, const IncidenceSnfSummary& summary,
                                     std::int64_t d, const std::optional<OddCycleWitness>& odd_witness,
                                     OddGeneratorChoice choice = OddGeneratorChoice::half_nth_column) {
    const auto n = a.rows();
    const auto m = a.cols();
    if (n == 0) throw PreconditionError("empty component");
    if (odd_witness.has_value() != (summary.alpha == 2))
        throw PreconditionError("odd witness must be given exactly for non-bipartite components");
    const std::size_t expected_rank = summary.alpha == 2 ? n : n - 1;
    if (summary.rank != expected_rank || res.v_inv.rows() != m)
        throw InternalInconsistency("incidence rank does not match the component shape");

    KernelBasis basis;
    const std::size_t first = summary.alpha == 2 ? n : n - 1;
    for (std::size_t c = first; c < m; ++c)
        basis.generators.push_back({detail::reduce_column(res.v_inv, c, d), GeneratorSource::vinv_column, c});

    if (summary.alpha == 2 && d % 2 == 0) {
        if (choice == OddGeneratorChoice::half_nth_column) {
            basis.generators.push_back(
                {detail::reduce_column(res.v_inv, n - 1, d, d / 2), GeneratorSource::half_modulus_nth_column, n - 1});
        } else {
            auto w = omega_of_walk_edges(odd_witness->walk.edges, m, d);
            std::vector<Residue> values(m);
            for (std::size_t j = 0; j < m; ++j) values[j] = mod::reduce(w.coords[j], d);
            basis.generators.push_back({std::move(values), GeneratorSource::odd_cycle_vector, 0});
        }
    }

    for (const auto& gen : basis.generators)
        if (!detail::in_kernel_mod(a, gen.values, d))
            throw InternalInconsistency(std::string("generator from ") + to_string(gen.source) +
                                        " is not in the mod-d kernel");
    return basis;
}

/// sum_e omega_e * f(e) mod d.
template <typename Coord>
Residue pairing(std::span<const Coord> omega, std::span<const Residue> labels, std::int64_t d) {
    if (omega.size() != labels.size()) throw PreconditionError("pairing length mismatch");
    Residue acc = 0;
    for (std::size_t i = 0; i < omega.size(); ++i)
        acc = mod::add(acc, mod::mul(mod::reduce(static_cast<std::int64_t>(omega[i]), d), labels[i], d), d);
    return acc;
}

/// Pairing against the labels of `g`; throws UnlabeledEdgeError on a missing label.
template <typename Coord>
Residue pairing(std::span<const Coord> omega, const LabeledGraph& g) {
    const auto labels = g.labels();
    return pairing<Coord>(omega, labels, g.modulus());
}

}  // namespace addlab

#endif  // ADDLAB_CYCLE_SPACE_HPP

#ifndef ADDLAB_SNF_HPP
#define ADDLAB_SNF_HPP

#include "arith.hpp"
#include "graph.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace addlab {

/// Smith normal form a = u * s * v with u, v unimodular.
///
/// `s` is diagonal with nonnegative entries, nonzero entries first, each
/// dividing the next. `v_inv` is accumulated alongside `v` rather than
/// inverted afterwards.
template <typename Integer>
struct BasicSnfResult {
    Matrix<Integer> s;
    Matrix<Integer> u;
    Matrix<Integer> v;
    Matrix<Integer> v_inv;
    /// Nonzero diagonal entries of s, in order.
    std::vector<Integer> invariant_factors;

    std::size_t rank() const noexcept { return invariant_factors.size(); }

    /// Diagonal entry i of s, or nullopt when i is past min(rows, cols).
    std::optional<Integer> diagonal(std::size_t i) const {
        if (i >= std::min(s.rows(), s.cols())) return std::nullopt;
        return s(i, i);
    }
};

using SnfResult = BasicSnfResult<BigInt>;

namespace detail {

template <typename Integer>
Integer abs_value(const Integer& x) {
    return x < 0 ? Integer(-x) : x;
}

// Working state. u and v_inv are stored transposed so every multiplier
// update is a row operation on contiguous storage.
template <typename Integer>
class SnfWorker {
public:
    explicit SnfWorker(const Matrix<Integer>& a)
        : s_(a),
          ut_(Matrix<Integer>::identity(a.rows())),
          v_(Matrix<Integer>::identity(a.cols())),
          vinv_t_(Matrix<Integer>::identity(a.cols())) {}

    BasicSnfResult<Integer> run() {
        const auto limit = std::min(s_.rows(), s_.cols());
        for (std::size_t t = 0; t < limit; ++t) {
            auto p = min_abs_entry(t, t);
            if (!p) break;
            move_to_pivot(t, p->first, p->second);
            settle_pivot(t);
            if (s_(t, t) < 0) {
                s_.negate_row(t);
                ut_.negate_row(t);
            }
        }
        BasicSnfResult<Integer> out;
        for (std::size_t i = 0; i < limit && s_(i, i) != 0; ++i) out.invariant_factors.push_back(s_(i, i));
        out.s = std::move(s_);
        out.u = ut_.transposed();
        out.v = std::move(v_);
        out.v_inv = vinv_t_.transposed();
        return out;
    }

private:
    // Smallest nonzero |entry| in the trailing block, ties by lowest (row, col).
    std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(std::size_t r0, std::size_t c0) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t i = r0; i < s_.rows(); ++i) {
            const auto row = s_.row(i);
            for (std::size_t j = c0; j < s_.cols(); ++j) {
                if (row[j] == 0) continue;
                Integer a = abs_value(row[j]);
                if (!best || a < best_abs) {
                    best = {i, j};
                    best_abs = std::move(a);
                    if (best_abs == 1) return best;
                }
            }
        }
        return best;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        s_.swap_rows(a, b);
        ut_.swap_rows(a, b);
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < s_.rows(); ++i) std::swap(s_(i, a), s_(i, b));
        v_.swap_rows(a, b);
        vinv_t_.swap_rows(a, b);
    }

    void move_to_pivot(std::size_t t, std::size_t r, std::size_t c) {
        swap_rows(t, r);
        swap_cols(t, c);
    }

    // row i -= q * row t
    void row_op(std::size_t i, std::size_t t, const Integer& q) {
        s_.add_row_multiple(i, t, Integer(-q), t);
        ut_.add_row_multiple(t, i, q);
    }

    // col j -= q * col t
    void col_op(std::size_t j, std::size_t t, const Integer& q) {
        for (std::size_t i = t; i < s_.rows(); ++i)
            if (s_(i, t) != 0) s_(i, j) -= q * s_(i, t);
        v_.add_row_multiple(t, j, q);
        vinv_t_.add_row_multiple(j, t, Integer(-q));
    }

    // Clear row t and column t beyond the pivot, and make the pivot divide
    // the whole trailing block.
    void settle_pivot(std::size_t t) {
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < s_.rows(); ++i) {
                if (s_(i, t) == 0) continue;
                Integer q = s_(i, t) / s_(t, t);
                if (q != 0) row_op(i, t, q);
                if (s_(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < s_.cols(); ++j) {
                if (s_(t, j) == 0) continue;
                Integer q = s_(t, j) / s_(t, t);
                if (q != 0) col_op(j, t, q);
                if (s_(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // A remainder smaller than the pivot survived; promote it.
                std::size_t br = t, bc = t;
                Integer best = abs_value(s_(t, t));
                for (std::size_t i = t + 1; i < s_.rows(); ++i)
                    if (s_(i, t) != 0 && abs_value(s_(i, t)) < best) {
                        best = abs_value(s_(i, t));
                        br = i;
                        bc = t;
                    }
                for (std::size_t j = t + 1; j < s_.cols(); ++j)
                    if (s_(t, j) != 0 && abs_value(s_(t, j)) < best) {
                        best = abs_value(s_(t, j));
                        br = t;
                        bc = j;
                    }
                move_to_pivot(t, br, bc);
                continue;
            }
            if (abs_value(s_(t, t)) == 1) return;
            auto bad = first_non_multiple(t);
            if (!bad) return;
            // row t += row i brings the offending entry into the pivot row.
            s_.add_row_multiple(t, *bad, Integer(1), t);
            ut_.add_row_multiple(*bad, t, Integer(-1));
        }
    }

    std::optional<std::size_t> first_non_multiple(std::size_t t) const {
        const Integer& p = s_(t, t);
        for (std::size_t i = t + 1; i < s_.rows(); ++i)
            for (std::size_t j = t + 1; j < s_.cols(); ++j)
                if (s_(i, j) != 0 && s_(i, j) % p != 0) return i;
        return std::nullopt;
    }

    Matrix<Integer> s_;
    Matrix<Integer> ut_;
    Matrix<Integer> v_;
    Matrix<Integer> vinv_t_;
};

}  // namespace detail

/// Exact Smith normal form with both multipliers and the inverse of the right one.
template <typename Integer>
BasicSnfResult<Integer> snf(const Matrix<Integer>& a) {
    return detail::SnfWorker<Integer>(a).run();
}

/// Last-slot summary of a connected component's incidence matrix.
struct IncidenceSnfSummary {
    int alpha = 0;  // 0 or 2
    std::size_t rank = 0;
};

/// alpha is the n-th invariant factor when the diagonal reaches row n and it
/// is nonzero, otherwise 0. `g` must be the component's own graph; the value
/// is cross-checked against BFS bipartiteness.
inline IncidenceSnfSummary incidence_snf_summary(const LabeledGraph& g, const IntMatrix& a, const SnfResult& res) {
    const auto n = a.rows();
    if (n != g.vertex_count() || a.cols() != g.edge_count())
        throw PreconditionError("incidence matrix does not match the graph");
    const auto cd = components_and_parity(g);
    if (cd.count() > 1) throw PreconditionError("incidence_snf_summary needs a connected graph");

    IncidenceSnfSummary out;
    out.rank = res.rank();
    if (n > 0) {
        if (auto last = res.diagonal(n - 1); last && *last != 0) {
            if (*last != 2)
                throw InternalInconsistency("incidence matrix has final invariant factor " + last->str());
            out.alpha = 2;
        }
    }
    for (std::size_t i = 0; i + 1 < n && i < res.rank(); ++i)
        if (res.invariant_factors[i] != 1)
            throw InternalInconsistency("incidence matrix has a non-unit leading invariant factor");

    const bool odd = find_odd_cycle(g, cd).has_value();
    if (odd != (out.alpha == 2))
        throw InternalInconsistency("SNF last slot disagrees with the bipartiteness test");
    return out;
}

/// Gcd of the determinants of all maximal square submatrices; 0 if all vanish.
/// Exhaustive, so limited to 12 rows and 12 columns.
inline BigInt gcd_maximal_minors(const IntMatrix& a) {
    constexpr std::size_t max_dim = 12;
    if (a.rows() > max_dim || a.cols() > max_dim)
        throw SizeLimitError("gcd_maximal_minors is limited to " + std::to_string(max_dim) + "x" +
                             std::to_string(max_dim) + " matrices");
    const bool wide = a.cols() >= a.rows();
    const std::size_t k = std::min(a.rows(), a.cols());
    const std::size_t pool = wide ? a.cols() : a.rows();

    BigInt g = 0;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = wide ? a(i, pick[j]) : a(pick[i], j);
        g = boost::multiprecision::gcd(g, determinant(std::move(minor)));
        if (g == 1) return g;
        // next k-combination of [0, pool)
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == pool - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return g;
}

/// Product of the first min(rows, cols) diagonal entries of s, which equals
/// the gcd of the maximal minors.
inline BigInt snf_maximal_minor_gcd(const SnfResult& res) {
    BigInt g = 1;
    for (std::size_t i = 0; i < std::min(res.s.rows(), res.s.cols()); ++i) g *= res.s(i, i);
    return g;
}

}  // namespace addlab

#endif  // ADDLAB_SNF_HPP

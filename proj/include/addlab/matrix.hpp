#ifndef ADDLAB_MATRIX_HPP
#define ADDLAB_MATRIX_HPP

#include "arith.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace addlab {

/// Dense row-major matrix over an exact integer type.
template <typename Integer>
class Matrix {
public:
    using value_type = Integer;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw PreconditionError("ragged matrix initializer");
            for (auto x : row) data_.emplace_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const Integer& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<Integer> column(std::size_t c) const {
        std::vector<Integer> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }

    /// row(dst) += factor * row(src); zero source entries are skipped.
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor, std::size_t from = 0) {
        auto d = row(dst);
        auto s = row(src);
        for (std::size_t c = from; c < cols_; ++c)
            if (!is_zero(s[c])) d[c] += factor * s[c];
    }

    void negate_row(std::size_t r) {
        for (auto& x : row(r)) x = -x;
    }

    bool operator==(const Matrix&) const = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    static bool is_zero(const Integer& x) { return x == 0; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

using IntMatrix = Matrix<BigInt>;

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Integer>
Integer determinant(Matrix<Integer> a) {
    if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Integer(1);
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Integer(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Text dump: "rows cols" then one line of space-separated integers per row.
template <typename Integer>
void write_matrix(std::ostream& os, const Matrix<Integer>& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m(r, c);
        }
        os << '\n';
    }
}

inline IntMatrix read_matrix(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    std::string token;
    auto next = [&](const char* what) {
        // skip '#' comments
        while (is >> token) {
            if (token.front() == '#') {
                std::string rest;
                std::getline(is, rest);
                continue;
            }
            return token;
        }
        throw ParseError(0, std::string("unexpected end of matrix input while reading ") + what);
    };
    try {
        rows = std::stoull(next("row count"));
        cols = std::stoull(next("column count"));
    } catch (const std::logic_error&) {
        throw ParseError(1, "matrix header must be \"rows cols\"");
    }
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            auto tok = next("matrix entry");
            try {
                m(r, c) = BigInt(tok);
            } catch (const std::exception&) {
                throw ParseError(r + 2, "bad integer '" + tok + "'");
            }
        }
    while (is >> token) {
        if (token.front() != '#') throw ParseError(rows + 2, "trailing data after matrix entries");
        std::getline(is, token);
    }
    return m;
}

}  // namespace addlab

#endif  // ADDLAB_MATRIX_HPP

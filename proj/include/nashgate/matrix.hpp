#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nashgate/diagnostics.hpp"
#include "nashgate/exact.hpp"

namespace nashgate {

// Small dense matrix with value semantics. Row-major storage.
template <typename T>
class matrix {
  public:
    matrix() = default;
    matrix(std::size_t rows, std::size_t cols, T init = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, std::move(init)) {}

    static matrix identity(std::size_t n) {
        matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const matrix&) const = default;

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    matrix operator*(const matrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw error(errc::dimension_mismatch, "matrix product dimension mismatch");
        matrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& lik = (*this)(i, k);
                if (lik == T(0)) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) += lik * rhs(k, j);
            }
        return out;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (cols_ != v.size())
            throw error(errc::dimension_mismatch, "matrix-vector dimension mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

inline matrix<big_rat> to_rational(const matrix<big_int>& m) {
    matrix<big_rat> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = big_rat(m(i, j));
    return out;
}

// Determinant of the leading k x k block by fraction-free (Bareiss)
// elimination. Exact over the integers.
inline big_int leading_minor(const matrix<big_int>& m, std::size_t k) {
    if (k == 0) return big_int(1);
    if (k > m.rows() || k > m.cols())
        throw error(errc::dimension_mismatch, "leading minor order exceeds matrix size");
    std::vector<std::vector<big_int>> a(k, std::vector<big_int>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = m(i, j);

    big_int prev(1);
    int sign = 1;
    for (std::size_t col = 0; col + 1 < k; ++col) {
        if (a[col][col] == 0) {
            std::size_t piv = col;
            while (piv < k && a[piv][col] == 0) ++piv;
            if (piv == k) return big_int(0);
            std::swap(a[col], a[piv]);
            sign = -sign;
        }
        for (std::size_t r = col + 1; r < k; ++r)
            for (std::size_t c = col + 1; c < k; ++c)
                a[r][c] = (a[col][col] * a[r][c] - a[r][col] * a[col][c]) / prev;
        prev = a[col][col];
    }
    return sign > 0 ? a[k - 1][k - 1] : -a[k - 1][k - 1];
}

inline big_int determinant(const matrix<big_int>& m) {
    if (m.rows() != m.cols())
        throw error(errc::dimension_mismatch, "determinant of non-square matrix");
    return leading_minor(m, m.rows());
}

// Gauss-Jordan inverse over exact rationals; nullopt if singular.
inline std::optional<matrix<big_rat>> inverse(const matrix<big_rat>& m) {
    if (m.rows() != m.cols())
        throw error(errc::dimension_mismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    matrix<big_rat> a = m;
    matrix<big_rat> inv = matrix<big_rat>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        const big_rat pv = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= pv;
            inv(col, j) /= pv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const big_rat f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

// Inverse of an integer matrix in adjugate form: inverse == numerators / den.
// The split keeps bulk solves in pure integer arithmetic.
struct exact_inverse {
    matrix<big_int> numerators;
    big_int den;  // |det(m)|; always positive

    std::vector<big_rat> solve(const std::vector<big_int>& rhs) const {
        if (rhs.size() != numerators.cols())
            throw error(errc::dimension_mismatch, "solve dimension mismatch");
        std::vector<big_rat> out(numerators.rows());
        for (std::size_t i = 0; i < numerators.rows(); ++i) {
            big_int acc(0);
            for (std::size_t j = 0; j < rhs.size(); ++j) {
                if (rhs[j] != 0) acc += numerators(i, j) * rhs[j];
            }
            out[i] = big_rat(acc, den);
        }
        return out;
    }
};

inline std::optional<exact_inverse> invert_integer_matrix(const matrix<big_int>& m) {
    big_int det = determinant(m);
    if (det == 0) return std::nullopt;
    auto inv = inverse(to_rational(m));
    if (!inv) return std::nullopt;
    if (det < 0) det = -det;
    matrix<big_int> num(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            big_rat scaled = (*inv)(i, j) * big_rat(det);
            if (!is_integer(scaled))
                throw error(errc::internal, "adjugate entry not integral");
            num(i, j) = rat_num(scaled);
        }
    return exact_inverse{std::move(num), det};
}

}  // namespace nashgate

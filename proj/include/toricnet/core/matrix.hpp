// Copyright 2026 The toricnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORICNET_CORE_MATRIX_HPP
#define TORICNET_CORE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <toricnet/core/rational.hpp>

namespace toricnet {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Copy with one row and one column removed.
    Matrix minor(std::size_t drop_row, std::size_t drop_col) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, r = 0; i < rows_; ++i) {
            if (i == drop_row) continue;
            for (std::size_t j = 0, c = 0; j < cols_; ++j) {
                if (j == drop_col) continue;
                m(r, c++) = (*this)(i, j);
            }
            ++r;
        }
        return m;
    }

    /// Submatrix on the given column indices (all rows).
    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    template <class F>
    auto map(F&& f) const {
        using S = std::decay_t<decltype(f(data_[0]))>;
        Matrix<S> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
        return r;
    }
    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: shape mismatch in product");
        std::vector<T> r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) r[i] = r[i] + a(i, k) * v[k];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    return m.map([](const BigInt& x) { return Rational(x); });
}

template <class T>
std::string to_string(const Matrix<T>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

/// Reduced row echelon form over Q; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(RatMatrix m) { return rref(m).size(); }
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

/// Basis of the right kernel over Q (one vector per free column).
inline std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves A x = b for square invertible A; nullopt when singular.
inline std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
    if (!a.is_square() || a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    std::size_t n = a.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

class MatrixError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fraction-free (Bareiss) determinant for integer or rational matrices.
template <class T>
T bareiss_determinant(Matrix<T> m) {
    if (!m.is_square()) throw MatrixError("determinant: matrix is not square");
    std::size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = v / prev;
            }
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? T(-d) : d;
}

inline BigInt ff_determinant(const IntMatrix& m) { return bareiss_determinant(m); }
inline Rational ff_determinant(const RatMatrix& m) { return bareiss_determinant(m); }

/// Division-free determinant over any commutative ring by Laplace expansion
/// along rows with memoization on the used-column set (O(2^n n) products).
template <class T>
T expansion_determinant(const Matrix<T>& m, std::size_t max_size = 20) {
    if (!m.is_square()) throw MatrixError("determinant: matrix is not square");
    std::size_t n = m.rows();
    if (n > max_size) throw MatrixError("determinant: matrix too large for cofactor expansion");
    if (n == 0) return T(Rational(1));
    // minors[mask] = determinant of the bottom |mask| rows restricted to the columns in mask.
    std::vector<T> minors(std::size_t(1) << n);
    minors[0] = T(Rational(1));
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        std::size_t count = static_cast<std::size_t>(__builtin_popcountll(mask));
        std::size_t row = n - count;
        T acc{};
        std::size_t position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (std::size_t(1) << c))) continue;
            const T& entry = m(row, c);
            const T& sub = minors[mask & ~(std::size_t(1) << c)];
            T prod = entry * sub;
            acc = (position % 2 == 0) ? acc + prod : acc - prod;
            ++position;
        }
        minors[mask] = acc;
    }
    return minors.back();
}

}  // namespace toricnet

#endif  // TORICNET_CORE_MATRIX_HPP

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

#ifndef TORICNET_CORE_LATTICE_HPP
#define TORICNET_CORE_LATTICE_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include <toricnet/core/matrix.hpp>

namespace toricnet {

using IntVector = std::vector<BigInt>;

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row[dst] -= q * row[src]
inline void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

inline void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Integer row echelon form on the first `width` columns using unimodular row
/// operations (applied to whole rows). Pivots are positive and entries above
/// each pivot are reduced into [0, pivot). Returns the pivot columns.
inline std::vector<std::size_t> hermite_rows(IntMatrix& m, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < width && r < m.rows(); ++c) {
        // Euclid on column c among rows r.. until one nonzero entry remains.
        while (true) {
            std::size_t best = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i) {
                if (m(i, c) == 0) continue;
                if (best == m.rows() || abs(m(i, c)) < abs(m(best, c))) best = i;
            }
            if (best == m.rows()) break;
            swap_rows(m, r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (m(i, c) == 0) continue;
                BigInt q = floor_div(m(i, c), m(r, c));
                sub_row(m, i, r, q);
                if (m(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (m(r, c) == 0) continue;
        if (m(r, c) < 0) negate_row(m, r);
        for (std::size_t i = 0; i < r; ++i) sub_row(m, i, r, floor_div(m(i, c), m(r, c)));
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

/// Row-style Hermite normal form of the lattice spanned by the given vectors;
/// zero rows are dropped, so the result is a basis in canonical form.
inline std::vector<IntVector> hermite_basis(const std::vector<IntVector>& vectors) {
    if (vectors.empty()) return {};
    IntMatrix m = IntMatrix::from_rows(vectors);
    auto pivots = detail::hermite_rows(m, m.cols());
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(i));
    return out;
}

/// Basis of the integer kernel {u : A u = 0}, normalized to Hermite form
/// (first nonzero entry of each vector positive, reduced above pivots).
inline std::vector<IntVector> lattice_kernel(const IntMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("lattice_kernel: empty matrix");
    std::size_t n = a.cols();
    std::size_t k = a.rows();
    // [A^T | I]: reducing the left block by unimodular row operations leaves the
    // kernel basis in the right block of the zero rows.
    IntMatrix work(n, k + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) work(i, j) = a(j, i);
        work(i, k + i) = 1;
    }
    auto pivots = detail::hermite_rows(work, k);
    std::vector<IntVector> kernel;
    for (std::size_t i = pivots.size(); i < n; ++i) {
        IntVector u(n);
        for (std::size_t j = 0; j < n; ++j) u[j] = work(i, k + j);
        kernel.push_back(std::move(u));
    }
    return hermite_basis(kernel);
}

/// Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix.
inline std::vector<BigInt> elementary_divisors(IntMatrix m) {
    std::vector<BigInt> divisors;
    std::size_t t = 0;
    auto rows = m.rows();
    auto cols = m.cols();
    while (t < rows && t < cols) {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0 && (pr == rows || abs(m(i, j)) < abs(m(pr, pc)))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        detail::swap_rows(m, t, pr);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            BigInt q = detail::floor_div(m(i, t), m(t, t));
            detail::sub_row(m, i, t, q);
            if (m(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            BigInt q = detail::floor_div(m(t, j), m(t, t));
            if (q != 0)
                for (std::size_t i = 0; i < rows; ++i) m(i, j) -= q * m(i, t);
            if (m(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        // Enforce divisibility: fold a non-divisible row into the pivot row.
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows && divisible; ++i)
            for (std::size_t j = t + 1; j < cols; ++j) {
                BigInt rem;
                mpz_tdiv_r(rem.get_mpz_t(), m(i, j).get_mpz_t(), m(t, t).get_mpz_t());
                if (rem != 0) {
                    for (std::size_t jj = 0; jj < cols; ++jj) m(t, jj) += m(i, jj);
                    divisible = false;
                    break;
                }
            }
        if (!divisible) continue;
        divisors.push_back(abs(m(t, t)));
        ++t;
    }
    return divisors;
}

}  // namespace toricnet

#endif  // TORICNET_CORE_LATTICE_HPP

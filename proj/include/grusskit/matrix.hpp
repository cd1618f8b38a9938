// Copyright 2026 The grusskit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "grusskit/errors.hpp"

namespace grusskit {

using cx = std::complex<double>;

/// Numerical slack for predicates that are exact in algebra but not in
/// floating point.
struct Tolerance {
    /// Absolute bound on max |A - A*| entry for Hermitian checks.
    double hermitian_tol = 1e-10;
    /// Relative slack on the minimum eigenvalue in PSD checks,
    /// scaled by max(1, ||A||).
    double psd_tol = 1e-8;
    /// Convergence threshold for iterative minimizers.
    double solve_tol = 1e-9;

    /// All fields must be strictly positive.
    void validate() const {
        if (!(hermitian_tol > 0.0) || !(psd_tol > 0.0) || !(solve_tol > 0.0))
            throw DomainError("Tolerance fields must be strictly positive");
    }
};

/// Dense complex matrix, row-major. Values are immutable in spirit: all
/// operations return fresh matrices, so sharing across threads is safe.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<cx> data);
    Matrix(std::initializer_list<std::initializer_list<cx>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);
    static Matrix diag(const std::vector<cx>& entries);
    /// E_{ij}: single 1 at (i, j), zero elsewhere.
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    bool is_square() const { return rows_ == cols_; }

    cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cx& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    cx* data() { return data_.data(); }
    const cx* data() const { return data_.data(); }
    const std::vector<cx>& entries() const { return data_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(cx s) const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(cx s);

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conj() const;
    cx trace() const;

    double frobenius_norm() const;
    /// max entrywise modulus
    double max_abs() const;
    bool all_finite() const;

    Matrix submatrix(std::size_t r0, std::size_t c0,
                     std::size_t rows, std::size_t cols) const;
    void set_submatrix(std::size_t r0, std::size_t c0, const Matrix& block);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cx> data_;
};

inline Matrix operator*(cx s, const Matrix& m) { return m * s; }
inline Matrix operator*(double s, const Matrix& m) { return m * cx(s, 0.0); }

/// Kronecker product, row-major convention:
/// (A (x) B)[i*rows(B)+k, j*cols(B)+l] = A[i,j] * B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

/// Assemble a k x k grid of equally sized m x m blocks into a km x km
/// matrix; block (i, j) lands at offset (i*m, j*m).
Matrix block_assemble(const std::vector<std::vector<Matrix>>& blocks);

/// Inverse of block_assemble for a given grid size k.
std::vector<std::vector<Matrix>> block_extract(const Matrix& a, std::size_t k);

/// max entrywise |a - b|
double max_abs_diff(const Matrix& a, const Matrix& b);

/// true iff max |A - A*| entry <= tol (absolute)
bool is_hermitian(const Matrix& a, double tol = Tolerance{}.hermitian_tol);

} // namespace grusskit

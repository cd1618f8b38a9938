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

#include "grusskit/matrix.hpp"

#include <cmath>
#include <string>

#include "grusskit/simd/kernels.hpp"

namespace grusskit {

namespace {
void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(op) + ": shape mismatch (" +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()) + ")");
}
} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        throw DimensionError("Matrix: data length " + std::to_string(data_.size()) +
                             " != rows*cols " + std::to_string(rows_ * cols_));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("Matrix: ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

Matrix Matrix::diag(const std::vector<cx>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1.0;
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_shape(*this, o, "operator+");
    Matrix out(rows_, cols_);
    simd::kernels().add(out.data(), data(), o.data(), size());
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_shape(*this, o, "operator-");
    Matrix out(rows_, cols_);
    simd::kernels().sub(out.data(), data(), o.data(), size());
    return out;
}

Matrix Matrix::operator-() const { return *this * cx(-1.0, 0.0); }

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows())
        throw DimensionError("operator*: inner dimensions " + std::to_string(cols_) +
                             " and " + std::to_string(o.rows()) + " differ");
    Matrix out(rows_, o.cols());
    simd::kernels().matmul(out.data(), data(), o.data(), rows_, cols_, o.cols());
    return out;
}

Matrix Matrix::operator*(cx s) const {
    Matrix out(rows_, cols_);
    simd::kernels().scale(out.data(), data(), s, size());
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(*this, o, "operator+=");
    simd::kernels().add(data(), data(), o.data(), size());
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(*this, o, "operator-=");
    simd::kernels().sub(data(), data(), o.data(), size());
    return *this;
}

Matrix& Matrix::operator*=(cx s) {
    simd::kernels().scale(data(), data(), s, size());
    return *this;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::conj() const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < size(); ++i) out.data()[i] = std::conj(data()[i]);
    return out;
}

cx Matrix::trace() const {
    if (!is_square()) throw DimensionError("trace: matrix not square");
    cx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    return std::sqrt(simd::kernels().sum_abs2(data(), size()));
}

double Matrix::max_abs() const {
    return std::sqrt(simd::kernels().max_abs2(data(), size()));
}

bool Matrix::all_finite() const {
    for (const cx& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0,
                         std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_)
        throw DimensionError("submatrix: range out of bounds");
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void Matrix::set_submatrix(std::size_t r0, std::size_t c0, const Matrix& block) {
    if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
        throw DimensionError("set_submatrix: range out of bounds");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            (*this)(r0 + i, c0 + j) = block(i, j);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cx s = a(i, j);
            if (s == cx(0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                cx* dst = out.data() + (i * b.rows() + k) * out.cols() + j * b.cols();
                simd::kernels().axpy(dst, s, b.data() + k * b.cols(), b.cols());
            }
        }
    return out;
}

Matrix block_assemble(const std::vector<std::vector<Matrix>>& blocks) {
    const std::size_t k = blocks.size();
    if (k == 0) throw DimensionError("block_assemble: empty grid");
    const std::size_t m = blocks[0][0].rows();
    for (const auto& row : blocks) {
        if (row.size() != k)
            throw DimensionError("block_assemble: grid not square");
        for (const auto& blk : row)
            if (blk.rows() != m || blk.cols() != m)
                throw DimensionError("block_assemble: blocks not uniformly " +
                                     std::to_string(m) + "x" + std::to_string(m));
    }
    Matrix out(k * m, k * m);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out.set_submatrix(i * m, j * m, blocks[i][j]);
    return out;
}

std::vector<std::vector<Matrix>> block_extract(const Matrix& a, std::size_t k) {
    if (!a.is_square()) throw DimensionError("block_extract: matrix not square");
    if (k == 0 || a.rows() % k != 0)
        throw DimensionError("block_extract: dimension " + std::to_string(a.rows()) +
                             " not divisible by " + std::to_string(k));
    const std::size_t m = a.rows() / k;
    std::vector<std::vector<Matrix>> out(k, std::vector<Matrix>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out[i][j] = a.submatrix(i * m, j * m, m, m);
    return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

bool is_hermitian(const Matrix& a, double tol) {
    if (!a.is_square()) throw DimensionError("is_hermitian: matrix not square");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    return true;
}

} // namespace grusskit

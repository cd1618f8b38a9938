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

#include "grusskit/rng.hpp"

#include <cmath>

namespace grusskit {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 in (0, 1]
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    if (rows == 0 || cols == 0) throw DimensionError("random_matrix: empty shape");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] = rng.cgaussian();
    return m;
}

Matrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
    if (rows < cols) throw DimensionError("random_isometry: rows < cols");
    Matrix q = random_matrix(rows, cols, rng);
    for (std::size_t j = 0; j < cols; ++j) {
        for (int attempt = 0;; ++attempt) {
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t c = 0; c < j; ++c) {
                    cx proj = 0.0;
                    for (std::size_t i = 0; i < rows; ++i)
                        proj += std::conj(q(i, c)) * q(i, j);
                    for (std::size_t i = 0; i < rows; ++i) q(i, j) -= proj * q(i, c);
                }
            double nrm = 0.0;
            for (std::size_t i = 0; i < rows; ++i) nrm += std::norm(q(i, j));
            nrm = std::sqrt(nrm);
            if (nrm > 1e-8 || attempt > 8) {
                for (std::size_t i = 0; i < rows; ++i) q(i, j) /= nrm;
                break;
            }
            for (std::size_t i = 0; i < rows; ++i) q(i, j) = rng.cgaussian();
        }
    }
    return q;
}

Matrix random_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw DimensionError("random_unitary: n = 0");
    Rng rng(seed);
    return random_isometry(n, n, rng);
}

Matrix random_hermitian(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw DimensionError("random_hermitian: n = 0");
    Rng rng(seed);
    const Matrix g = random_matrix(n, n, rng);
    return 0.5 * (g + g.adjoint());
}

Matrix random_psd(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw DimensionError("random_psd: n = 0");
    Rng rng(seed);
    const Matrix g = random_matrix(n, n, rng);
    return g.adjoint() * g;
}

std::pair<Matrix, Matrix> random_normal_commuting_pair(std::size_t n,
                                                       std::uint64_t seed) {
    if (n == 0) throw DimensionError("random_normal_commuting_pair: n = 0");
    Rng rng(seed);
    const Matrix u = random_isometry(n, n, rng);
    std::vector<cx> d1(n), d2(n);
    for (std::size_t i = 0; i < n; ++i) d1[i] = rng.cgaussian();
    for (std::size_t i = 0; i < n; ++i) d2[i] = rng.cgaussian();
    const Matrix ustar = u.adjoint();
    return {u * Matrix::diag(d1) * ustar, u * Matrix::diag(d2) * ustar};
}

} // namespace grusskit

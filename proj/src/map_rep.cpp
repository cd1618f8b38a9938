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

#include "grusskit/map_rep.hpp"

#include <string>

#include "grusskit/eig.hpp"
#include "grusskit/rng.hpp"
#include "grusskit/simd/kernels.hpp"
#include "grusskit/svd.hpp"

namespace grusskit {

MapRep::MapRep(std::size_t dim_in, std::size_t dim_out, Matrix choi,
               std::vector<Matrix> kraus)
    : dim_in_(dim_in), dim_out_(dim_out), choi_(std::move(choi)),
      kraus_(std::move(kraus)) {
    if (dim_in_ == 0 || dim_out_ == 0)
        throw DimensionError("MapRep: dimensions must be positive");
    const std::size_t d = dim_in_ * dim_out_;
    if (choi_.rows() != d || choi_.cols() != d)
        throw DimensionError("MapRep: Choi matrix must be " + std::to_string(d) +
                             "x" + std::to_string(d));
    for (const Matrix& k : kraus_)
        if (k.rows() != dim_out_ || k.cols() != dim_in_)
            throw DimensionError("MapRep: Kraus operator shape mismatch");
}

MapRep MapRep::from_action(std::size_t dim_in, std::size_t dim_out,
                           const std::function<Matrix(const Matrix&)>& action) {
    const std::size_t n = dim_in, m = dim_out;
    if (n == 0 || m == 0) throw DimensionError("MapRep: dimensions must be positive");
    Matrix choi(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix img = action(Matrix::unit(n, i, j));
            if (img.rows() != m || img.cols() != m)
                throw DimensionError("MapRep: action output shape mismatch");
            choi.set_submatrix(i * m, j * m, img);
        }
    return MapRep(n, m, std::move(choi));
}

MapRep MapRep::from_kraus(std::size_t dim_in, std::size_t dim_out,
                          std::vector<Matrix> kraus) {
    const std::size_t n = dim_in, m = dim_out;
    Matrix choi(n * m, n * m);
    for (const Matrix& k : kraus) {
        if (k.rows() != m || k.cols() != n)
            throw DimensionError("MapRep: Kraus operator shape mismatch");
        // Choi += vec(K) vec(K)* with vec(K)[i*m + r] = K[r, i]
        std::vector<cx> v(n * m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < m; ++r) v[i * m + r] = k(r, i);
        for (std::size_t p = 0; p < n * m; ++p) {
            const cx vp = v[p];
            if (vp == cx(0.0)) continue;
            cx* row = choi.data() + p * n * m;
            for (std::size_t q = 0; q < n * m; ++q) row[q] += vp * std::conj(v[q]);
        }
    }
    return MapRep(n, m, std::move(choi), std::move(kraus));
}

Matrix apply(const MapRep& phi, const Matrix& x) {
    const std::size_t n = phi.dim_in(), m = phi.dim_out();
    if (x.rows() != n || x.cols() != n)
        throw DimensionError("apply: input must be " + std::to_string(n) + "x" +
                             std::to_string(n));
    Matrix out(m, m);
    const Matrix& c = phi.choi();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cx w = x(i, j);
            if (w == cx(0.0)) continue;
            for (std::size_t r = 0; r < m; ++r)
                simd::kernels().axpy(out.data() + r * m, w,
                                     c.data() + (i * m + r) * c.cols() + j * m, m);
        }
    return out;
}

Matrix apply_via_kraus(const MapRep& phi, const Matrix& x) {
    if (!phi.has_kraus())
        throw PreconditionError("apply_via_kraus: no Kraus family cached");
    const std::size_t n = phi.dim_in(), m = phi.dim_out();
    if (x.rows() != n || x.cols() != n)
        throw DimensionError("apply_via_kraus: input shape mismatch");
    Matrix out(m, m);
    for (const Matrix& k : phi.kraus_family()) out += k * x * k.adjoint();
    return out;
}

Matrix amplify(const MapRep& phi, std::size_t k, const Matrix& xbig) {
    const std::size_t n = phi.dim_in();
    if (!xbig.is_square() || xbig.rows() != k * n)
        throw DimensionError("amplify: input must be " + std::to_string(k * n) +
                             "x" + std::to_string(k * n));
    const auto blocks = block_extract(xbig, k);
    std::vector<std::vector<Matrix>> out(k, std::vector<Matrix>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out[i][j] = apply(phi, blocks[i][j]);
    return block_assemble(out);
}

bool is_unital(const MapRep& phi, double tol) {
    return op_norm(apply(phi, Matrix::identity(phi.dim_in())) -
                   Matrix::identity(phi.dim_out())) <= tol;
}

bool is_star_preserving(const MapRep& phi, std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const Matrix x = random_matrix(phi.dim_in(), phi.dim_in(), rng);
        if (op_norm(apply(phi, x.adjoint()) - apply(phi, x).adjoint()) > 1e-10)
            return false;
    }
    return true;
}

bool is_cp(const MapRep& phi, const Tolerance& tol) {
    tol.validate();
    if (!is_hermitian(phi.choi(), tol.hermitian_tol)) return false;
    const std::vector<double> vals = eigvalsh(phi.choi(), tol.hermitian_tol);
    const double scale = std::max(std::abs(vals.front()), std::abs(vals.back()));
    return vals.front() >= -tol.psd_tol * std::max(1.0, scale);
}

MapRep identity_map(std::size_t n) {
    if (n == 0) throw DimensionError("identity_map: n = 0");
    return MapRep::from_action(n, n, [](const Matrix& x) { return x; });
}

MapRep transpose_map(std::size_t n) {
    if (n < 2)
        throw DomainError("transpose_map: need n >= 2 (the 1x1 transpose is the identity)");
    return MapRep::from_action(n, n, [](const Matrix& x) { return x.transpose(); });
}

MapRep embedded_transpose_map(std::size_t k, std::size_t pad) {
    if (k < 2) throw DomainError("embedded_transpose_map: need k >= 2");
    const std::size_t m = k + pad;
    return MapRep::from_action(k, m, [k, m, pad](const Matrix& x) {
        Matrix out(m, m);
        out.set_submatrix(0, 0, x.transpose());
        const cx scaled_tr = x.trace() / static_cast<double>(k);
        for (std::size_t i = 0; i < pad; ++i) out(k + i, k + i) = scaled_tr;
        return out;
    });
}

MapRep reduction_map(std::size_t n) {
    if (n < 2) throw DomainError("reduction_map: need n >= 2");
    return MapRep::from_action(n, n, [n](const Matrix& x) {
        Matrix out = Matrix::identity(n) * x.trace() - x;
        return out * (1.0 / static_cast<double>(n - 1));
    });
}

MapRep isotropic_map(std::size_t n, double s) {
    if (n == 0) throw DimensionError("isotropic_map: n = 0");
    return MapRep::from_action(n, n, [n, s](const Matrix& x) {
        Matrix out = x * cx(s);
        const cx t = x.trace() * ((1.0 - s) / static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i) out(i, i) += t;
        return out;
    });
}

MapRep random_unital_cp(std::size_t n, std::size_t r, std::uint64_t seed) {
    if (n == 0 || r == 0) throw DimensionError("random_unital_cp: n, r >= 1");
    Rng rng(seed);
    const Matrix w = random_isometry(n * r, n, rng);
    // W = sum_t A_t (x) e_t with A_t[i, j] = W[i*r + t, j]; then
    // phi(x) = W*(x (x) I_r)W = sum_t A_t* x A_t, so K_t = A_t*.
    std::vector<Matrix> kraus;
    kraus.reserve(r);
    for (std::size_t t = 0; t < r; ++t) {
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = w(i * r + t, j);
        kraus.push_back(a.adjoint());
    }
    return MapRep::from_kraus(n, n, std::move(kraus));
}

} // namespace grusskit

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

#include "grusskit/schmidt_falsifier.hpp"

#include <algorithm>
#include <cmath>

#include "grusskit/eig.hpp"
#include "grusskit/rng.hpp"
#include "grusskit/svd.hpp"

namespace grusskit {

namespace {

// The coefficient matrix Z[i, r] of a vector v[i*m + r]; Schmidt rank of
// v = matrix rank of Z, and the Schmidt factors come out of Z's SVD.
struct Factors {
    Matrix x;    // n x k, orthonormal columns
    Matrix y;    // m x k, column t scaled by sigma_t
    Matrix ydir; // m x k, orthonormal (conjugated right singular vectors)
};

Factors factor_rank_k(const Matrix& z, std::size_t k) {
    const SvdResult s = svd(z);
    const std::size_t n = z.rows(), m = z.cols();
    Factors f{Matrix(n, k), Matrix(m, k), Matrix(m, k)};
    for (std::size_t t = 0; t < k; ++t) {
        const double sig = t < s.singular_values.size() ? s.singular_values[t] : 0.0;
        for (std::size_t i = 0; i < n; ++i) f.x(i, t) = s.u(i, t);
        for (std::size_t r = 0; r < m; ++r) {
            f.ydir(r, t) = std::conj(s.v(r, t));
            f.y(r, t) = sig * f.ydir(r, t);
        }
    }
    return f;
}

double frob(const Matrix& z) { return z.frobenius_norm(); }

// Compressed Choi on the right factors: fixing orthonormal left vectors
// x_t, the map y -> <v, C v> is the quadratic form of
// M[(t,r),(t',s)] = sum_ij conj(x_t[i]) C[(i m + r),(j m + s)] x_t'[j].
Matrix compress_right(const Matrix& choi, const Matrix& x, std::size_t m) {
    const std::size_t n = x.rows(), k = x.cols();
    Matrix out(k * m, k * m);
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t tp = 0; tp < k; ++tp)
            for (std::size_t i = 0; i < n; ++i) {
                const cx xi = std::conj(x(i, t));
                if (xi == cx(0.0)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const cx w = xi * x(j, tp);
                    if (w == cx(0.0)) continue;
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t s = 0; s < m; ++s)
                            out(t * m + r, tp * m + s) +=
                                w * choi(i * m + r, j * m + s);
                }
            }
    return out;
}

// Same with orthonormal right factors fixed; quadratic form in the x_t.
Matrix compress_left(const Matrix& choi, const Matrix& y, std::size_t n) {
    const std::size_t m = y.rows(), k = y.cols();
    Matrix out(k * n, k * n);
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t tp = 0; tp < k; ++tp)
            for (std::size_t r = 0; r < m; ++r) {
                const cx yr = std::conj(y(r, t));
                if (yr == cx(0.0)) continue;
                for (std::size_t s = 0; s < m; ++s) {
                    const cx w = yr * y(s, tp);
                    if (w == cx(0.0)) continue;
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j)
                            out(t * n + i, tp * n + j) +=
                                w * choi(i * m + r, j * m + s);
                }
            }
    return out;
}

} // namespace

std::vector<cx> SchmidtWitness::assemble() const {
    const std::size_t n = left.empty() ? 0 : left[0].size();
    const std::size_t m = right.empty() ? 0 : right[0].size();
    std::vector<cx> v(n * m, 0.0);
    for (std::size_t t = 0; t < left.size(); ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < m; ++r)
                v[i * m + r] += left[t][i] * right[t][r];
    return v;
}

double choi_expectation(const MapRep& phi, const std::vector<cx>& v) {
    const Matrix& c = phi.choi();
    if (v.size() != c.rows())
        throw DimensionError("choi_expectation: vector dimension mismatch");
    cx acc = 0.0;
    for (std::size_t p = 0; p < v.size(); ++p) {
        cx row = 0.0;
        for (std::size_t q = 0; q < v.size(); ++q) {
            // Hermitian part of the Choi matrix
            row += 0.5 * (c(p, q) + std::conj(c(q, p))) * v[q];
        }
        acc += std::conj(v[p]) * row;
    }
    return acc.real();
}

std::optional<SchmidtWitness> k_positivity_falsify(const MapRep& phi, std::size_t k,
                                                   std::size_t restarts,
                                                   std::size_t iters,
                                                   std::uint64_t seed,
                                                   const Tolerance& tol) {
    tol.validate();
    if (k == 0) throw DomainError("k_positivity_falsify: k must be >= 1");
    const std::size_t n = phi.dim_in(), m = phi.dim_out();
    const std::size_t keff = std::min(k, std::min(n, m));

    Matrix choi = phi.choi();
    // quadratic forms only see the Hermitian part
    choi = 0.5 * (choi + choi.adjoint());

    double best_value = 0.0;
    Matrix best_z;
    bool have = false;

    for (std::size_t t = 0; t < restarts; ++t) {
        Rng rng(seed + t);
        Matrix z = random_matrix(n, m, rng);
        z *= cx(1.0 / frob(z), 0.0);
        double value = 0.0;
        double prev = 1e300;
        for (std::size_t it = 0; it < iters; ++it) {
            Factors f = factor_rank_k(z, keff);

            // right half-step: orthonormal x fixed, best y = bottom eigvec
            const EighResult er = eigh(compress_right(choi, f.x, m), 1e300);
            value = er.values.front();
            Matrix y(m, keff);
            for (std::size_t tt = 0; tt < keff; ++tt)
                for (std::size_t r = 0; r < m; ++r)
                    y(r, tt) = er.vectors(tt * m + r, 0);
            z = f.x * y.transpose();

            // left half-step: orthonormal right directions from the
            // refreshed SVD (unit conj(V) columns, orthonormal even when
            // singular values vanish)
            const Factors g = factor_rank_k(z, keff);
            const EighResult el = eigh(compress_left(choi, g.ydir, n), 1e300);
            value = el.values.front();
            Matrix x(n, keff);
            for (std::size_t tt = 0; tt < keff; ++tt)
                for (std::size_t i = 0; i < n; ++i)
                    x(i, tt) = el.vectors(tt * n + i, 0);
            z = x * g.ydir.transpose();

            if (std::abs(prev - value) <= 1e-13 * std::max(1.0, std::abs(value)))
                break;
            prev = value;
        }
        if (!have || value < best_value) {
            best_value = value;
            best_z = z;
            have = true;
        }
    }

    const std::vector<double> spec = eigvalsh(choi);
    const double scale = std::max(std::abs(spec.front()), std::abs(spec.back()));
    const double threshold = -tol.psd_tol * std::max(1.0, scale);
    if (!have || best_value >= threshold) return std::nullopt;

    // repackage the best vector and re-evaluate it from scratch
    best_z *= cx(1.0 / frob(best_z), 0.0);
    const Factors f = factor_rank_k(best_z, keff);
    SchmidtWitness w;
    w.k = keff;
    w.left.assign(keff, std::vector<cx>(n));
    w.right.assign(keff, std::vector<cx>(m));
    for (std::size_t t = 0; t < keff; ++t) {
        for (std::size_t i = 0; i < n; ++i) w.left[t][i] = f.x(i, t);
        for (std::size_t r = 0; r < m; ++r) w.right[t][r] = f.y(r, t);
    }
    w.value = choi_expectation(phi, w.assemble());
    if (w.value >= threshold) return std::nullopt;
    return w;
}

} // namespace grusskit

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

#include "grusskit/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "grusskit/eig.hpp"

namespace grusskit {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kPairTol = 1e-15;

struct ColRot {
    double c;
    cx sigma;
};

// J = [[c, -conj(sigma)], [sigma, c]] diagonalizing the 2x2 column Gram
// [[app, apq], [conj(apq), aqq]].
ColRot gram_rotation(double app, double aqq, cx apq) {
    const double b = std::abs(apq);
    const cx phase = apq / b;
    const double tau = (aqq - app) / (2.0 * b);
    const double t = tau >= 0.0 ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, (t * c) * std::conj(phase)};
}

void rotate_cols(Matrix& m, std::size_t p, std::size_t q, const ColRot& r) {
    const cx sig_conj = std::conj(r.sigma);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const cx vp = m(i, p);
        const cx vq = m(i, q);
        m(i, p) = r.c * vp + r.sigma * vq;
        m(i, q) = -sig_conj * vp + r.c * vq;
    }
}

cx col_dotc(const Matrix& m, std::size_t p, std::size_t q) {
    cx s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::conj(m(i, p)) * m(i, q);
    return s;
}

double col_norm_sq(const Matrix& m, std::size_t p) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::norm(m(i, p));
    return s;
}

// Orthonormal completion: fill every column j with keep[j] == false so the
// full column set is orthonormal. Candidates are standard basis vectors,
// re-orthogonalized twice.
void complete_columns(Matrix& u, const std::vector<bool>& keep) {
    const std::size_t m = u.rows();
    std::vector<std::size_t> have;
    for (std::size_t j = 0; j < u.cols(); ++j)
        if (keep[j]) have.push_back(j);
    std::size_t candidate = 0;
    for (std::size_t j = 0; j < u.cols(); ++j) {
        if (keep[j]) continue;
        while (true) {
            if (candidate >= m)
                throw PreconditionError("svd: failed to complete orthonormal basis");
            std::vector<cx> v(m, 0.0);
            v[candidate++] = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t c : have) {
                    cx proj = 0.0;
                    for (std::size_t i = 0; i < m; ++i) proj += std::conj(u(i, c)) * v[i];
                    for (std::size_t i = 0; i < m; ++i) v[i] -= proj * u(i, c);
                }
            double nrm = 0.0;
            for (const cx& x : v) nrm += std::norm(x);
            nrm = std::sqrt(nrm);
            if (nrm > 0.1) {
                for (std::size_t i = 0; i < m; ++i) u(i, j) = v[i] / nrm;
                have.push_back(j);
                break;
            }
        }
    }
}

SvdResult svd_tall(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Matrix w = a;
    Matrix v = Matrix::identity(n);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool converged = true;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double app = col_norm_sq(w, p);
                const double aqq = col_norm_sq(w, q);
                const cx apq = col_dotc(w, p, q);
                if (std::abs(apq) <= kPairTol * std::sqrt(app * aqq) ||
                    std::abs(apq) <= 1e-300)
                    continue;
                converged = false;
                const ColRot r = gram_rotation(app, aqq, apq);
                rotate_cols(w, p, q, r);
                rotate_cols(v, p, q, r);
            }
        if (converged) break;
    }

    std::vector<double> sig(n);
    for (std::size_t j = 0; j < n; ++j) sig[j] = std::sqrt(col_norm_sq(w, j));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return sig[i] > sig[j]; });

    SvdResult res;
    res.singular_values.resize(n);
    res.v = Matrix(n, n);
    res.u = Matrix(m, m);
    const double cutoff = sig[order[0]] * 1e-13;
    std::vector<bool> keep(m, false);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        res.singular_values[k] = sig[j];
        for (std::size_t i = 0; i < n; ++i) res.v(i, k) = v(i, j);
        if (sig[j] > cutoff && sig[j] > 0.0) {
            keep[k] = true;
            for (std::size_t i = 0; i < m; ++i) res.u(i, k) = w(i, j) / sig[j];
        }
    }
    complete_columns(res.u, keep);
    return res;
}

} // namespace

SvdResult svd(const Matrix& a) {
    if (a.empty()) throw DimensionError("svd: empty matrix");
    if (a.rows() >= a.cols()) return svd_tall(a);
    SvdResult t = svd_tall(a.adjoint());
    return {std::move(t.v), std::move(t.singular_values), std::move(t.u)};
}

double op_norm(const Matrix& a) {
    if (a.empty()) throw DimensionError("op_norm: empty matrix");
    // sqrt of the top eigenvalue of the smaller-side Gram matrix
    const Matrix g = a.rows() >= a.cols() ? a.adjoint() * a : a * a.adjoint();
    std::vector<cx> w(g.entries());
    const double lam = detail::hermitian_max_eigenvalue_inplace(w.data(), g.rows());
    return std::sqrt(std::max(0.0, lam));
}

} // namespace grusskit

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

#include "grusskit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace grusskit {

namespace {

constexpr int kMaxSweeps = 50;

// Unitary 2x2 J = [[c, -conj(sigma)], [sigma, c]] with J* M J diagonal for
// Hermitian M = [[alpha, beta], [conj(beta), gamma]].
struct Rotation {
    double c;
    cx sigma;
};

Rotation make_rotation(double alpha, double gamma, cx beta) {
    const double b = std::abs(beta);
    const cx phase = beta / b;
    const double tau = (gamma - alpha) / (2.0 * b);
    const double t = tau >= 0.0 ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    return {c, s * std::conj(phase)};
}

// Column update [col_p, col_q] <- [col_p, col_q] * J for row-major storage.
void rotate_columns(cx* w, std::size_t n, std::size_t stride, std::size_t p,
                    std::size_t q, const Rotation& r) {
    const cx sig_conj = std::conj(r.sigma);
    for (std::size_t i = 0; i < n; ++i) {
        const cx wp = w[i * stride + p];
        const cx wq = w[i * stride + q];
        w[i * stride + p] = r.c * wp + r.sigma * wq;
        w[i * stride + q] = -sig_conj * wp + r.c * wq;
    }
}

// Row update (rows p, q) <- J* (rows p, q).
void rotate_rows(cx* w, std::size_t cols, std::size_t p, std::size_t q,
                 const Rotation& r) {
    const cx sig_conj = std::conj(r.sigma);
    for (std::size_t j = 0; j < cols; ++j) {
        const cx wp = w[p * cols + j];
        const cx wq = w[q * cols + j];
        w[p * cols + j] = r.c * wp + sig_conj * wq;
        w[q * cols + j] = -r.sigma * wp + r.c * wq;
    }
}

double off_diag_frob_sq(const cx* w, std::size_t n) {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += std::norm(w[p * n + q]);
    return 2.0 * s;
}

double frob_sq(const cx* w, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n * n; ++i) s += std::norm(w[i]);
    return s;
}

// Cyclic Jacobi; accumulates eigenvectors into v (n x n, pre-set to I)
// when v != nullptr. w converges to diag(eigenvalues), unordered.
void jacobi(cx* w, std::size_t n, cx* v) {
    const double total = frob_sq(w, n);
    if (total == 0.0) return;
    const double stop = 1e-30 * total;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diag_frob_sq(w, n) <= stop) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cx beta = w[p * n + q];
                if (std::abs(beta) <= 1e-300) {
                    w[p * n + q] = 0.0;
                    w[q * n + p] = 0.0;
                    continue;
                }
                const Rotation r = make_rotation(w[p * n + p].real(),
                                                 w[q * n + q].real(), beta);
                rotate_columns(w, n, n, p, q, r);
                rotate_rows(w, n, p, q, r);
                w[p * n + q] = 0.0;
                w[q * n + p] = 0.0;
                w[p * n + p] = w[p * n + p].real();
                w[q * n + q] = w[q * n + q].real();
                if (v != nullptr) rotate_columns(v, n, n, p, q, r);
            }
    }
}

// Householder reduction of a Hermitian matrix (row-major, destroyed) to a
// real symmetric tridiagonal (d, e); the diagonal phase similarity that
// would make the subdiagonal real leaves eigenvalues unchanged, so |.| of
// the complex subdiagonal is taken directly.
void tridiagonalize(cx* w, std::size_t n, double* d, double* e) {
    cx vbuf[32], pbuf[32];
    std::vector<cx> vheap, pheap;
    cx* v = vbuf;
    cx* p = pbuf;
    if (n > 32) {
        vheap.resize(n);
        pheap.resize(n);
        v = vheap.data();
        p = pheap.data();
    }
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1; // active column height below diag
        double xnorm2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) xnorm2 += std::norm(w[(k + 1 + i) * n + k]);
        const cx x0 = w[(k + 1) * n + k];
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm2 - std::norm(x0) <= 1e-60 * xnorm2) continue; // already tridiagonal here
        const cx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cx(1.0);
        const cx alpha = -phase * xnorm;
        double vnorm2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = w[(k + 1 + i) * n + k];
            if (i == 0) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 <= 0.0) continue;
        const double inv = 1.0 / std::sqrt(vnorm2);
        for (std::size_t i = 0; i < m; ++i) v[i] *= inv;
        // W <- H W H with H = I - 2 v v* on the trailing (m x m) block
        for (std::size_t i = 0; i < m; ++i) {
            cx acc = 0.0;
            for (std::size_t j = 0; j < m; ++j)
                acc += w[(k + 1 + i) * n + (k + 1 + j)] * v[j];
            p[i] = acc;
        }
        cx mu = 0.0;
        for (std::size_t i = 0; i < m; ++i) mu += std::conj(v[i]) * p[i];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                w[(k + 1 + i) * n + (k + 1 + j)] +=
                    -2.0 * v[i] * std::conj(p[j]) - 2.0 * p[i] * std::conj(v[j]) +
                    4.0 * mu.real() * v[i] * std::conj(v[j]);
        w[(k + 1) * n + k] = alpha;
        w[k * n + k + 1] = std::conj(alpha);
        for (std::size_t i = 1; i < m; ++i) {
            w[(k + 1 + i) * n + k] = 0.0;
            w[k * n + k + 1 + i] = 0.0;
        }
    }
    for (std::size_t i = 0; i < n; ++i) d[i] = w[i * n + i].real();
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(w[(i + 1) * n + i]);
}

// Number of eigenvalues of the tridiagonal strictly below x: sign changes
// of the leading-principal-minor sequence. Multiplication-only (the
// division form costs ~3 dependent divides per step, which dominates hot
// grid loops); occasional rescaling keeps the products in range.
// Callers pre-scale d, e, x to order 1, so the minors stay in range for
// n <= ~64 without per-step rescaling.
int sturm_count(const double* d, const double* e2, std::size_t n, double x) {
    double pm1 = 1.0;
    double p = d[0] - x;
    bool prev_neg = false; // sign of p_0 = 1
    bool neg = p < 0.0 || (p == 0.0 && !prev_neg); // zero flips the sign
    int count = neg != prev_neg ? 1 : 0;
    for (std::size_t k = 1; k < n; ++k) {
        const double pn = (d[k] - x) * p - e2[k - 1] * pm1;
        pm1 = p;
        p = pn;
        prev_neg = neg;
        neg = p < 0.0 || (p == 0.0 && !prev_neg);
        if (neg != prev_neg) ++count;
    }
    return count;
}

// largest eigenvalue of the tridiagonal by bisection; robust at
// multiplicities, absolute accuracy ~eps * spectral scale
double tridiag_max_eigenvalue(const double* d, const double* e, std::size_t n) {
    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(e[i]) : 0.0);
        lo = std::max(lo, d[i]);     // lambda_max >= every diagonal entry
        hi = std::max(hi, d[i] + r); // Gershgorin
        lo = std::min(lo, hi);
    }
    const double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
    const double inv = 1.0 / scale;
    double ds[32], e2s[31];
    std::vector<double> dheap, eheap;
    double* dn = ds;
    double* en = e2s;
    if (n > 32) {
        dheap.resize(n);
        eheap.resize(n - 1);
        dn = dheap.data();
        en = eheap.data();
    }
    for (std::size_t i = 0; i < n; ++i) dn[i] = d[i] * inv;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double v = e[i] * inv;
        en[i] = v * v;
    }
    double loS = lo * inv;
    double hiS = hi * inv + 1e-15; // ensure count(hi) == n
    for (int it = 0; it < 64 && hiS - loS > 1e-16; ++it) {
        const double mid = 0.5 * (loS + hiS);
        if (sturm_count(dn, en, n, mid) == static_cast<int>(n))
            hiS = mid;
        else
            loS = mid;
    }
    return 0.5 * (loS + hiS) * scale;
}

void eig2(double a00, double a11, double b2, double* out) {
    // b2 = |offdiag|^2
    const double tr = a00 + a11;
    const double disc = std::sqrt((a00 - a11) * (a00 - a11) + 4.0 * b2);
    out[0] = 0.5 * (tr - disc);
    out[1] = 0.5 * (tr + disc);
}

void eig3(const cx* w, double* out) {
    const double a00 = w[0].real(), a11 = w[4].real(), a22 = w[8].real();
    const double p1 = std::norm(w[1]) + std::norm(w[2]) + std::norm(w[5]);
    if (p1 == 0.0) {
        out[0] = a00;
        out[1] = a11;
        out[2] = a22;
        std::sort(out, out + 3);
        return;
    }
    const double q = (a00 + a11 + a22) / 3.0;
    const double p2 = (a00 - q) * (a00 - q) + (a11 - q) * (a11 - q) +
                      (a22 - q) * (a22 - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    // det of the shifted, scaled matrix B = (A - qI)/p; real for Hermitian A
    const cx b00 = (w[0] - q) / p, b11 = (w[4] - q) / p, b22 = (w[8] - q) / p;
    const cx b01 = w[1] / p, b02 = w[2] / p, b12 = w[5] / p;
    const cx det = b00 * (b11 * b22 - b12 * std::conj(b12)) -
                   b01 * (std::conj(b01) * b22 - b12 * std::conj(b02)) +
                   b02 * (std::conj(b01) * std::conj(b12) - b11 * std::conj(b02));
    double r = det.real() / 2.0;
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double two_pi_3 = 2.0943951023931953;
    const double e_hi = q + 2.0 * p * std::cos(phi);
    const double e_lo = q + 2.0 * p * std::cos(phi + two_pi_3);
    out[0] = e_lo;
    out[1] = 3.0 * q - e_hi - e_lo;
    out[2] = e_hi;
}

} // namespace

namespace detail {

void hermitian_eigenvalues_inplace(cx* w, std::size_t n, double* out) {
    switch (n) {
        case 0:
            return;
        case 1:
            out[0] = w[0].real();
            return;
        case 2:
            eig2(w[0].real(), w[3].real(), std::norm(w[1]), out);
            return;
        case 3:
            eig3(w, out);
            return;
        default: {
            jacobi(w, n, nullptr);
            for (std::size_t i = 0; i < n; ++i) out[i] = w[i * n + i].real();
            std::sort(out, out + n);
        }
    }
}

double hermitian_max_eigenvalue_inplace(cx* w, std::size_t n) {
    double buf[3];
    switch (n) {
        case 0: return 0.0;
        case 1: return w[0].real();
        case 2:
            eig2(w[0].real(), w[3].real(), std::norm(w[1]), buf);
            return buf[1];
        case 3:
            eig3(w, buf);
            return buf[2];
        default: {
            if (n <= 32) {
                double d[32], e[31];
                tridiagonalize(w, n, d, e);
                return tridiag_max_eigenvalue(d, e, n);
            }
            std::vector<double> d(n), e(n - 1);
            tridiagonalize(w, n, d.data(), e.data());
            return tridiag_max_eigenvalue(d.data(), e.data(), n);
        }
    }
}

} // namespace detail

EighResult eigh(const Matrix& a, double herm_tol) {
    if (!a.is_square()) throw DimensionError("eigh: matrix not square");
    if (a.empty()) throw DimensionError("eigh: empty matrix");
    if (!is_hermitian(a, herm_tol))
        throw PreconditionError("eigh: matrix not Hermitian within tolerance");
    const std::size_t n = a.rows();

    // symmetrize to kill rounding-level skew parts
    std::vector<cx> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w[i * n + j] = 0.5 * (a(i, j) + std::conj(a(j, i)));

    Matrix v = Matrix::identity(n);
    jacobi(w.data(), n, v.data());

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return w[i * n + i].real() < w[j * n + j].real();
    });

    EighResult res;
    res.values.resize(n);
    res.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        res.values[k] = w[order[k] * n + order[k]].real();
        for (std::size_t i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
    }
    return res;
}

std::vector<double> eigvalsh(const Matrix& a, double herm_tol) {
    if (!a.is_square()) throw DimensionError("eigvalsh: matrix not square");
    if (a.empty()) throw DimensionError("eigvalsh: empty matrix");
    if (!is_hermitian(a, herm_tol))
        throw PreconditionError("eigvalsh: matrix not Hermitian within tolerance");
    const std::size_t n = a.rows();
    std::vector<cx> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w[i * n + j] = 0.5 * (a(i, j) + std::conj(a(j, i)));
    std::vector<double> out(n);
    detail::hermitian_eigenvalues_inplace(w.data(), n, out.data());
    return out;
}

double min_eig_herm(const Matrix& a, double herm_tol) {
    return eigvalsh(a, herm_tol).front();
}

bool is_psd(const Matrix& a, const Tolerance& tol) {
    tol.validate();
    if (!a.is_square()) throw DimensionError("is_psd: matrix not square");
    if (!is_hermitian(a, tol.hermitian_tol))
        throw PreconditionError("is_psd: matrix not Hermitian within tolerance");
    const std::vector<double> vals = eigvalsh(a, tol.hermitian_tol);
    const double scale = std::max(std::abs(vals.front()), std::abs(vals.back()));
    return vals.front() >= -tol.psd_tol * std::max(1.0, scale);
}

} // namespace grusskit

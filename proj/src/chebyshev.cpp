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

#include "grusskit/chebyshev.hpp"

#include <algorithm>
#include <cmath>

#include "grusskit/eig.hpp"
#include "grusskit/svd.hpp"

namespace grusskit {

namespace {

double commutator_norm(const Matrix& a) {
    return op_norm(a.adjoint() * a - a * a.adjoint());
}

} // namespace

ShiftNormEvaluator::ShiftNormEvaluator(const Matrix& a)
    : n_(a.rows()),
      gram_((a.adjoint() * a).entries()),
      amat_(a.entries()),
      astar_(a.adjoint().entries()),
      scratch_(n_ * n_) {
    if (!a.is_square() || a.empty())
        throw DimensionError("ShiftNormEvaluator: need a nonempty square matrix");
}

double ShiftNormEvaluator::lower_sq(cx lam) const {
    const double l2 = std::norm(lam);
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t d = i * n_ + i;
        const double g =
            gram_[d].real() - 2.0 * (std::conj(lam) * amat_[d]).real() + l2;
        m = std::max(m, g);
    }
    return m;
}

double ShiftNormEvaluator::value_sq(cx lam) const {
    const cx lc = std::conj(lam);
    const double l2 = std::norm(lam);
    for (std::size_t i = 0; i < n_ * n_; ++i)
        scratch_[i] = gram_[i] - lc * amat_[i] - lam * astar_[i];
    for (std::size_t i = 0; i < n_; ++i) scratch_[i * n_ + i] += l2;
    return std::max(0.0,
                    detail::hermitian_max_eigenvalue_inplace(scratch_.data(), n_));
}

double ShiftNormEvaluator::value(cx lam) const { return std::sqrt(value_sq(lam)); }

bool is_normal(const Matrix& a, double rel_tol) {
    if (!a.is_square()) throw DimensionError("is_normal: matrix not square");
    const double nrm = op_norm(a);
    return commutator_norm(a) <= rel_tol * nrm * nrm;
}

std::vector<cx> normal_eigenvalues(const Matrix& a, double rel_tol) {
    if (!a.is_square() || a.empty())
        throw DimensionError("normal_eigenvalues: need a nonempty square matrix");
    if (!is_normal(a, rel_tol))
        throw PreconditionError("normal_eigenvalues: matrix not normal within tolerance");
    const std::size_t n = a.rows();

    const Matrix h = 0.5 * (a + a.adjoint());
    const Matrix k = cx(0.0, -0.5) * (a - a.adjoint());

    EighResult eh = eigh(h, 1e300); // symmetrized by construction
    Matrix v = std::move(eh.vectors);

    // Rotate within clusters of equal H-eigenvalues so K becomes diagonal
    // there too; across distinct eigenvalues K is already block diagonal
    // because [H, K] = 0.
    double scale = std::max(1.0, std::max(std::abs(eh.values.front()),
                                          std::abs(eh.values.back())));
    const double gap_tol = 1e-7 * scale;
    std::size_t lo = 0;
    while (lo < n) {
        std::size_t hi = lo + 1;
        while (hi < n && eh.values[hi] - eh.values[hi - 1] <= gap_tol) ++hi;
        if (hi - lo > 1) {
            const std::size_t m = hi - lo;
            const Matrix vc = v.submatrix(0, lo, n, m);
            const Matrix block = vc.adjoint() * k * vc;
            const EighResult eb = eigh(0.5 * (block + block.adjoint()), 1e300);
            v.set_submatrix(0, lo, vc * eb.vectors);
        }
        lo = hi;
    }

    const Matrix av = a * v;
    std::vector<cx> lam(n);
    for (std::size_t j = 0; j < n; ++j) {
        cx s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::conj(v(i, j)) * av(i, j);
        lam[j] = s;
    }

    // residual guard: a v_j should equal lam_j v_j
    double resid = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            resid = std::max(resid, std::abs(av(i, j) - lam[j] * v(i, j)));
    if (resid > 1e-7 * std::max(1.0, a.max_abs()))
        throw PreconditionError("normal_eigenvalues: joint diagonalization residual too large");
    return lam;
}

namespace {

// golden-section minimization of a convex 1-D function
template <typename F>
double golden_min(F&& f, double lo, double hi, double xtol, double* xmin) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > xtol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        }
    }
    *xmin = f1 <= f2 ? x1 : x2;
    return std::min(f1, f2);
}

} // namespace

Disk chebyshev_radius_general(const Matrix& a, const Tolerance& tol) {
    tol.validate();
    if (!a.is_square() || a.empty())
        throw DimensionError("chebyshev_radius: need a nonempty square matrix");
    const std::size_t n = a.rows();
    if (n == 1) return {a(0, 0), 0.0};
    const double nrm = op_norm(a);
    if (nrm == 0.0) return {cx(0.0), 0.0};

    const ShiftNormEvaluator eval(a);
    cx center = a.trace() / static_cast<double>(n);
    double w = 2.0 * nrm;
    const double w_cap = 4.0 * nrm;

    double best_sq = eval.value_sq(center);
    cx best_lam = center;

    // Stage 1: the coarse-to-fine grid. It brackets the minimizer
    // quickly but cannot track minimum valleys thinner than a cell
    // (multiplicity-crossing loci run diagonally through the lattice),
    // so it stops early and hands over to the line-search stage.
    const double grid_stop = std::max(tol.solve_tol, 1e-3 * nrm);
    constexpr int kGrid = 33;
    constexpr int kEdge = kGrid - 1;
    int rounds = 0;
    while (true) {
        const double cell = 2.0 * w / kEdge;
        double level_sq = best_sq * (1.0 + 1e-14) + 1e-300;
        int bi = -1, bj = -1;
        cx level_lam = best_lam;
        for (int iy = 0; iy <= kEdge; ++iy) {
            const double y = center.imag() - w + iy * cell;
            for (int ix = 0; ix <= kEdge; ++ix) {
                const cx lam(center.real() - w + ix * cell, y);
                if (eval.lower_sq(lam) >= level_sq) continue;
                const double v = eval.value_sq(lam);
                if (v < level_sq) {
                    level_sq = v;
                    level_lam = lam;
                    bi = ix;
                    bj = iy;
                }
            }
        }
        if (level_sq < best_sq) {
            best_sq = level_sq;
            best_lam = level_lam;
        }
        center = best_lam;
        const bool on_boundary =
            bi >= 0 && (bi <= 1 || bi >= kEdge - 1 || bj <= 1 || bj >= kEdge - 1);
        if (cell < grid_stop || ++rounds > 300) break;
        // trust-region step: shrink around an interior argmin, zoom back
        // out when the argmin lands on the rim
        if (on_boundary)
            w = std::min(2.0 * w, w_cap);
        else
            w *= 0.25;
    }

    // Stage 2: nested 1-D convex minimization. g(x) = min_y f(x + iy) is
    // convex in x, so two nested golden sections reach the global
    // minimum of f without lattice artifacts.
    const double span = 0.05 * nrm;
    const double xtol = 0.5 * std::min(tol.solve_tol, 1e-9 * std::max(1.0, nrm));
    const double cx0 = best_lam.real(), cy0 = best_lam.imag();
    auto g_of_x = [&](double x) {
        double ymin = cy0;
        return golden_min([&](double yy) { return eval.value_sq(cx(x, yy)); },
                          cy0 - span, cy0 + span, xtol, &ymin);
    };
    double xbest = cx0;
    const double polished_sq = golden_min(g_of_x, cx0 - span, cx0 + span, xtol, &xbest);
    // re-run the inner solve at the final x so ybest_final matches xbest
    double ybest = cy0;
    const double inner_sq = golden_min(
        [&](double yy) { return eval.value_sq(cx(xbest, yy)); }, cy0 - span,
        cy0 + span, xtol, &ybest);
    if (std::min(polished_sq, inner_sq) < best_sq) {
        best_sq = std::min(polished_sq, inner_sq);
        best_lam = cx(xbest, ybest);
    }
    return {best_lam, std::sqrt(best_sq)};
}

Disk chebyshev_radius(const Matrix& a, const Tolerance& tol) {
    tol.validate();
    if (!a.is_square() || a.empty())
        throw DimensionError("chebyshev_radius: need a nonempty square matrix");
    if (a.rows() == 1) return {a(0, 0), 0.0};
    if (op_norm(a) == 0.0) return {cx(0.0), 0.0};
    if (is_normal(a)) {
        // borderline cases fall back to the always-correct convex solver
        try {
            return smallest_enclosing_disk(normal_eigenvalues(a));
        } catch (const PreconditionError&) {
        }
    }
    return chebyshev_radius_general(a, tol);
}

} // namespace grusskit

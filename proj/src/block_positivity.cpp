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

#include "grusskit/block_positivity.hpp"

#include <algorithm>
#include <cmath>

#include "grusskit/eig.hpp"
#include "grusskit/svd.hpp"

namespace grusskit {

namespace {

// non-throwing PSD verdict: Hermitian within tol and min eig above slack
bool psd_verdict(const Matrix& a, const Tolerance& tol) {
    if (!a.is_square() || !is_hermitian(a, tol.hermitian_tol)) return false;
    const std::vector<double> vals = eigvalsh(a, tol.hermitian_tol);
    const double scale = std::max(std::abs(vals.front()), std::abs(vals.back()));
    return vals.front() >= -tol.psd_tol * std::max(1.0, scale);
}

// signed relative margin of the smallest eigenvalue, for boundary detection
double psd_margin(const Matrix& a, const Tolerance& tol) {
    const std::vector<double> vals = eigvalsh(a, tol.hermitian_tol);
    const double scale = std::max(std::abs(vals.front()), std::abs(vals.back()));
    return vals.front() / std::max(1.0, scale);
}

std::vector<cx> gaussian_vector(std::size_t n, Rng& rng) {
    std::vector<cx> v(n);
    for (cx& e : v) e = rng.cgaussian();
    return v;
}

} // namespace

Matrix Block2x2::assemble() const {
    if (!p.is_square() || !q.is_square() || r.rows() != p.rows() ||
        r.cols() != q.rows())
        throw DimensionError("Block2x2: P must be pxp, Q qxq, R pxq");
    Matrix out(p.rows() + q.rows(), p.rows() + q.rows());
    out.set_submatrix(0, 0, p);
    out.set_submatrix(0, p.cols(), r);
    out.set_submatrix(p.rows(), 0, r.adjoint());
    out.set_submatrix(p.rows(), p.cols(), q);
    return out;
}

BlockPairingReport check_block_pairing(const Block2x2& blk, double tol,
                                       std::size_t trials, std::uint64_t seed) {
    const Matrix a = blk.assemble();
    Tolerance t;
    BlockPairingReport rep{};
    rep.block_psd = psd_verdict(a, t);

    Rng rng(seed);
    rep.pairing_ok = true;
    const std::size_t pd = blk.p.rows(), qd = blk.q.rows();
    for (std::size_t i = 0; i < trials && rep.pairing_ok; ++i) {
        const std::vector<cx> x = gaussian_vector(pd, rng);
        const std::vector<cx> y = gaussian_vector(qd, rng);
        cx ry_x = 0.0, px_x = 0.0, qy_y = 0.0;
        for (std::size_t u = 0; u < pd; ++u) {
            cx ry = 0.0, px = 0.0;
            for (std::size_t w = 0; w < qd; ++w) ry += blk.r(u, w) * y[w];
            for (std::size_t w = 0; w < pd; ++w) px += blk.p(u, w) * x[w];
            ry_x += std::conj(x[u]) * ry;
            px_x += std::conj(x[u]) * px;
        }
        for (std::size_t u = 0; u < qd; ++u) {
            cx qy = 0.0;
            for (std::size_t w = 0; w < qd; ++w) qy += blk.q(u, w) * y[w];
            qy_y += std::conj(y[u]) * qy;
        }
        const double lhs = std::norm(ry_x);
        const double rhs = px_x.real() * qy_y.real();
        if (lhs > rhs + tol * std::max(1.0, std::abs(rhs))) rep.pairing_ok = false;
    }

    const double rn = op_norm(blk.r);
    const double rhs = op_norm(blk.p) * op_norm(blk.q);
    rep.norm_ok = rn * rn <= rhs + tol * std::max(1.0, rhs);
    return rep;
}

Matrix SchurTriple::assemble() const {
    if (!t.is_square() || !r.is_square() || s.rows() != t.rows() ||
        s.cols() != r.rows())
        throw DimensionError("SchurTriple: T must be txt, R rxr, S txr");
    Matrix out(t.rows() + r.rows(), t.rows() + r.rows());
    out.set_submatrix(0, 0, t);
    out.set_submatrix(0, t.cols(), s);
    out.set_submatrix(t.rows(), 0, s.adjoint());
    out.set_submatrix(t.rows(), t.cols(), r);
    return out;
}

bool schur_positivity(const SchurTriple& triple, const Tolerance& tol) {
    tol.validate();
    const Matrix assembled = triple.assemble(); // validates shapes
    if (!is_hermitian(triple.t, tol.hermitian_tol) ||
        !is_hermitian(triple.r, tol.hermitian_tol))
        throw PreconditionError("schur_positivity: T and R must be Hermitian");

    const EighResult er = eigh(triple.r, tol.hermitian_tol);
    double min_abs = 1e300;
    for (double v : er.values) min_abs = std::min(min_abs, std::abs(v));
    if (min_abs <= 1e-12)
        throw PreconditionError("schur_positivity: pivot block R is singular");

    // R^{-1} through its spectral decomposition
    const std::size_t rd = triple.r.rows();
    Matrix rinv(rd, rd);
    for (std::size_t a = 0; a < rd; ++a)
        for (std::size_t b = 0; b < rd; ++b) {
            cx acc = 0.0;
            for (std::size_t k = 0; k < rd; ++k)
                acc += er.vectors(a, k) * std::conj(er.vectors(b, k)) / er.values[k];
            rinv(a, b) = acc;
        }

    Matrix comp = triple.t - triple.s * rinv * triple.s.adjoint();
    comp = 0.5 * (comp + comp.adjoint());

    const bool via_schur = psd_verdict(triple.t, tol) && psd_verdict(triple.r, tol) &&
                           psd_verdict(comp, tol);
    const bool direct = psd_verdict(assembled, tol);

    if (via_schur != direct) {
        const double m_direct = psd_margin(assembled, tol);
        const double m_schur = std::min({psd_margin(triple.t, tol),
                                         psd_margin(triple.r, tol),
                                         psd_margin(comp, tol)});
        if (std::abs(m_direct) > 1e-6 && std::abs(m_schur) > 1e-6)
            throw Error("schur_positivity: Schur-complement and direct verdicts "
                        "disagree away from the PSD boundary");
    }
    return via_schur;
}

Matrix defect_schwarz_block(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionError("defect_schwarz_block: a, b must be square, equal size");
    const Matrix as = a.adjoint();
    const Matrix bs = b.adjoint();
    const Matrix asa = as * a;
    const Matrix asb = as * b;
    const Matrix bsa = bs * a;
    const Matrix bsb = bs * b;
    return block_assemble({{asa, asb, as, as * asb},
                           {bsa, bsb, bs, bs * asb},
                           {a, b, asa, asb},
                           {bsa * a, bsa * b, bsa, bsb}});
}

ChoiLemmaReport choi_lemma_check(const MapRep& phi, const Matrix& x,
                                 const Matrix& y, const Tolerance& tol) {
    tol.validate();
    const std::size_t n = phi.dim_in();
    if (!x.is_square() || !y.is_square() || x.rows() != n || y.rows() != n)
        throw DimensionError("choi_lemma_check: x, y must match the map input size");

    const Matrix premise_block =
        block_assemble({{x, y}, {y.adjoint(), x}});
    const Matrix fx = apply(phi, x);
    const Matrix fy = apply(phi, y);
    const Matrix fys = apply(phi, y.adjoint());
    const Matrix conclusion_block = block_assemble({{fx, fy}, {fys, fx}});

    return {psd_verdict(premise_block, tol), psd_verdict(conclusion_block, tol)};
}

std::pair<Matrix, Matrix> random_premise_pair(std::size_t n, Rng& rng) {
    const Matrix c = random_matrix(2 * n, n, rng);
    const Matrix w = random_isometry(2 * n, 2 * n, rng);
    const Matrix wc = w * c;
    return {c.adjoint() * c, c.adjoint() * wc};
}

} // namespace grusskit

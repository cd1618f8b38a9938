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

#include "grusskit/dilation.hpp"

#include <algorithm>
#include <cmath>

#include "grusskit/chebyshev.hpp"
#include "grusskit/eig.hpp"
#include "grusskit/gruss.hpp"
#include "grusskit/svd.hpp"

namespace grusskit {

std::vector<Matrix> kraus_from_choi(const MapRep& phi, const Tolerance& tol) {
    tol.validate();
    if (!is_cp(phi, tol)) throw DomainError("kraus_from_choi: Choi matrix not PSD");
    const std::size_t n = phi.dim_in(), m = phi.dim_out();
    const Matrix herm = 0.5 * (phi.choi() + phi.choi().adjoint());
    const EighResult e = eigh(herm, 1e300);
    std::vector<Matrix> kraus;
    for (std::size_t t = 0; t < e.values.size(); ++t) {
        if (e.values[t] <= 1e-12) continue;
        const double w = std::sqrt(e.values[t]);
        Matrix k(m, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < m; ++r)
                k(r, i) = w * e.vectors(i * m + r, t);
        kraus.push_back(std::move(k));
    }
    return kraus;
}

StinespringDilation stinespring(const MapRep& phi, const Tolerance& tol) {
    if (!is_unital(phi, 1e-10))
        throw PreconditionError("stinespring: map must be unital");
    const std::vector<Matrix> kraus =
        phi.has_kraus() ? phi.kraus_family() : kraus_from_choi(phi, tol);
    const std::size_t n = phi.dim_in(), m = phi.dim_out();
    const std::size_t r = kraus.size();
    // (v h)  =  sum_t (K_t* h) (x) e_t
    Matrix v(n * r, m);
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < m; ++c)
                v(i * r + t, c) = std::conj(kraus[t](c, i));
    return {std::move(v), r};
}

UnitaryDecomposition russo_dye_decompose(const Matrix& a) {
    if (!a.is_square() || a.empty())
        throw DimensionError("russo_dye_decompose: need a nonempty square matrix");
    const std::size_t n = a.rows();
    const SvdResult s = svd(a);
    double scale = s.singular_values.front();
    if (scale == 0.0) scale = 1.0;
    scale = std::max(scale, 1e-300);

    // sigma_j / scale in [0, 1]; write it as cos(theta_j) and split into
    // the two unitary phase matrices diag(exp(+-i theta_j)).
    Matrix e_plus(n, n), e_minus(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double c = std::clamp(s.singular_values[j] / scale, 0.0, 1.0);
        const double theta = std::acos(c);
        e_plus(j, j) = cx(c, std::sin(theta));
        e_minus(j, j) = cx(c, -std::sin(theta));
    }
    const Matrix vs = s.v.adjoint();
    UnitaryDecomposition out;
    out.weights = {0.5, 0.5};
    out.unitaries = {s.u * e_plus * vs, s.u * e_minus * vs};
    out.scale = scale;
    return out;
}

DefectChainTrace defect_chain_trace(const MapRep& phi, const Matrix& a,
                                    const Matrix& b, double tol) {
    const std::size_t n = phi.dim_in();
    if (!a.is_square() || !b.is_square() || a.rows() != n || b.rows() != n)
        throw DimensionError("defect_chain_trace: a, b must match the map input");

    DefectChainTrace tr;
    const UnitaryDecomposition da = russo_dye_decompose(a);
    const UnitaryDecomposition db = russo_dye_decompose(b);
    tr.defect = defect(phi, a, b);
    tr.norm_a = op_norm(a);
    tr.norm_b = op_norm(b);

    auto push = [&](const std::string& name, double lhs, double rhs) {
        const bool pass = lhs <= rhs + tol * std::max(1.0, std::abs(rhs));
        tr.links.push_back({name, lhs, rhs, pass});
        tr.all_pass = tr.all_pass && pass;
    };

    const double scaled_defect = tr.defect / (da.scale * db.scale);

    // convexity over the unitary grid
    double convex_sum = 0.0;
    std::vector<std::vector<double>> d(da.unitaries.size(),
                                       std::vector<double>(db.unitaries.size()));
    for (std::size_t i = 0; i < da.unitaries.size(); ++i)
        for (std::size_t j = 0; j < db.unitaries.size(); ++j) {
            d[i][j] = defect(phi, da.unitaries[i], db.unitaries[j]);
            convex_sum += da.weights[i] * db.weights[j] * d[i][j];
        }
    push("convexity: defect(a,b)/(|a||b|) <= sum w_i w_j defect(u_i,v_j)",
         scaled_defect, convex_sum);

    // Cauchy-Schwarz factor per unitary pair, then the radius bounds
    std::vector<double> p(da.unitaries.size()), q(db.unitaries.size());
    for (std::size_t i = 0; i < da.unitaries.size(); ++i) {
        const Matrix& u = da.unitaries[i];
        const Matrix fu = apply(phi, u);
        p[i] = op_norm(apply(phi, u * u.adjoint()) - fu * fu.adjoint());
    }
    for (std::size_t j = 0; j < db.unitaries.size(); ++j) {
        const Matrix& v = db.unitaries[j];
        const Matrix fv = apply(phi, v);
        q[j] = op_norm(apply(phi, v.adjoint() * v) - fv.adjoint() * fv);
    }
    double schwarz_sum = 0.0;
    for (std::size_t i = 0; i < da.unitaries.size(); ++i)
        for (std::size_t j = 0; j < db.unitaries.size(); ++j) {
            push("schwarz: defect(u_" + std::to_string(i) + ",v_" +
                     std::to_string(j) + ") <= sqrt(var_a var_b)",
                 d[i][j], std::sqrt(p[i] * q[j]));
            schwarz_sum += da.weights[i] * db.weights[j] * std::sqrt(p[i] * q[j]);
        }

    for (std::size_t i = 0; i < da.unitaries.size(); ++i) {
        const double r = chebyshev_radius(da.unitaries[i]).radius;
        push("variance_radius: sqrt(var(u_" + std::to_string(i) + ")) <= radius",
             std::sqrt(p[i]), r);
        push("radius_bound: radius(u_" + std::to_string(i) + ") <= 1", r, 1.0);
    }
    for (std::size_t j = 0; j < db.unitaries.size(); ++j) {
        const double r = chebyshev_radius(db.unitaries[j]).radius;
        push("variance_radius: sqrt(var(v_" + std::to_string(j) + ")) <= radius",
             std::sqrt(q[j]), r);
        push("radius_bound: radius(v_" + std::to_string(j) + ") <= 1", r, 1.0);
    }

    push("total: sum w_i w_j sqrt(var_a var_b) <= 1", schwarz_sum, 1.0);
    push("norm_bound: defect(a,b) <= |a| |b|", tr.defect, tr.norm_a * tr.norm_b);
    return tr;
}

} // namespace grusskit

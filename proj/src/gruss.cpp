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

#include "grusskit/gruss.hpp"

#include <algorithm>
#include <cmath>

#include "grusskit/rng.hpp"
#include "grusskit/svd.hpp"

namespace grusskit {

double defect(const MapRep& phi, const Matrix& a, const Matrix& b) {
    return op_norm(apply(phi, a * b) - apply(phi, a) * apply(phi, b));
}

GrussReport gruss_check(const MapRep& phi, const Matrix& a, const Matrix& b,
                        const Tolerance& tol) {
    GrussReport rep;
    rep.defect = defect(phi, a, b);
    rep.radius_a = chebyshev_radius(a, tol);
    rep.radius_b = chebyshev_radius(b, tol);
    rep.bound = rep.radius_a.radius * rep.radius_b.radius;
    rep.margin = rep.bound - rep.defect;
    rep.holds = rep.defect <= rep.bound + 1e-8 * std::max(1.0, rep.bound);
    return rep;
}

SchwarzSides defect_schwarz_sides(const MapRep& phi, const Matrix& a,
                                  const Matrix& b) {
    const double lhs = defect(phi, a, b);
    const Matrix fa = apply(phi, a);
    const Matrix fb = apply(phi, b);
    const double va = op_norm(apply(phi, a * a.adjoint()) - fa * fa.adjoint());
    const double vb = op_norm(apply(phi, b.adjoint() * b) - fb.adjoint() * fb);
    return {lhs * lhs, va * vb};
}

bool defect_schwarz_check(const MapRep& phi, const Matrix& a, const Matrix& b,
                          double tol) {
    const std::size_t n = phi.dim_in();
    if (!a.is_square() || !b.is_square() || a.rows() != n || b.rows() != n)
        throw DimensionError("defect_schwarz_check: a, b must match the map input");
    const Matrix eye = Matrix::identity(n);
    if (op_norm(a.adjoint() * a - eye) > 1e-10 ||
        op_norm(b.adjoint() * b - eye) > 1e-10)
        throw PreconditionError("defect_schwarz_check: a and b must be unitary");
    const SchwarzSides s = defect_schwarz_sides(phi, a, b);
    return s.lhs_sq <= s.rhs + tol * std::max(1.0, s.rhs);
}

bool variance_radius_check(const MapRep& phi, const Matrix& a,
                           const Tolerance& tol, double check_tol) {
    if (!a.is_square() || a.rows() != phi.dim_in())
        throw DimensionError("variance_radius_check: a must match the map input");
    if (!is_normal(a, 1e-10))
        throw PreconditionError("variance_radius_check: a must be normal");
    const Matrix fa = apply(phi, a);
    const double lhs = op_norm(apply(phi, a * a.adjoint()) - fa * fa.adjoint());
    const double r = chebyshev_radius(a, tol).radius;
    return lhs <= r * r + check_tol * std::max(1.0, r * r);
}

bool fuglede_putnam_check(const Matrix& x, const Matrix& y, double tol) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw DimensionError("fuglede_putnam_check: x, y must be square, equal size");
    const double nx = op_norm(x);
    const double ny = op_norm(y);
    const double pair_scale = std::max(1.0, nx * ny);
    if (op_norm(x.adjoint() * x - x * x.adjoint()) > tol * std::max(1.0, nx * nx))
        throw PreconditionError("fuglede_putnam_check: x must be normal");
    if (op_norm(x * y - y * x) > tol * pair_scale)
        throw PreconditionError("fuglede_putnam_check: x and y must commute");
    return op_norm(x.adjoint() * y - y * x.adjoint()) <= 100.0 * tol * pair_scale;
}

CommutingSuiteReport commuting_normal_suite(const MapRep& phi, std::size_t trials,
                                            std::uint64_t seed,
                                            const Tolerance& tol) {
    CommutingSuiteReport rep;
    rep.trials = trials;
    bool first = true;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto [a, b] = random_normal_commuting_pair(phi.dim_in(), seed + t);
        const GrussReport g = gruss_check(phi, a, b, tol);
        if (g.holds) ++rep.passes;
        if (first || g.margin < rep.worst_margin) {
            rep.worst_margin = g.margin;
            first = false;
        }
    }
    return rep;
}

} // namespace grusskit

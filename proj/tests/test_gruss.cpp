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

#include <doctest.h>

#include <cmath>

#include "grusskit/counterexample.hpp"
#include "grusskit/gruss.hpp"
#include "grusskit/rng.hpp"
#include "grusskit/svd.hpp"
#include "test_helpers.hpp"

using namespace grusskit;

namespace {

const Matrix kA{{cx(1), cx(3)}, {cx(3), cx(3)}};
const Matrix kB = Matrix::diag({cx(1), cx(3)});

} // namespace

TEST_SUITE("gruss") {

TEST_CASE("defect frozen values") {
    CHECK(gktest::approx(defect(transpose_map(2), kA, kB), 6.0, 1e-12));
    CHECK(gktest::approx(defect(embedded_transpose_map(2, 1), kA, kB), 6.0, 1e-12));

    Rng rng(3);
    const Matrix x = random_matrix(3, 3, rng), y = random_matrix(3, 3, rng);
    CHECK(defect(identity_map(3), x, y) < 1e-13);
    CHECK(defect(random_unital_cp(3, 1, 5), x, y) < 1e-12); // unitary conjugation
    CHECK_THROWS_AS(defect(transpose_map(2), Matrix::identity(3), kB),
                    DimensionError);
}

TEST_CASE("gruss_check on the counterexample pair") {
    Matrix a3(3, 3);
    a3.set_submatrix(0, 0, kA);
    const Matrix b3 = Matrix::diag({cx(1), cx(3), cx(0)});
    const GrussReport g = gruss_check(transpose_map(3), a3, b3);
    CHECK(gktest::approx(g.defect, 6.0, 1e-9));
    CHECK(gktest::approx(g.radius_a.radius, std::sqrt(10.0), 1e-9));
    CHECK(gktest::approx(g.radius_b.radius, 1.5, 1e-9));
    CHECK(gktest::approx(g.bound, std::sqrt(10.0) * 1.5, 1e-9));
    CHECK_FALSE(g.holds);
    CHECK(g.margin <= -1.25);
}

TEST_CASE("scalar inputs trivialize both sides") {
    const MapRep th = transpose_map(2);
    const Matrix lam = cx(2.0, -1.0) * Matrix::identity(2);
    Rng rng(4);
    const Matrix b = random_matrix(2, 2, rng);
    const GrussReport g = gruss_check(th, lam, b);
    CHECK(g.defect < 1e-12);
    CHECK(g.radius_a.radius < 1e-12);
    CHECK(g.bound < 1e-10);
    CHECK(g.holds);
}

TEST_CASE("counterexample report is self-checking") {
    const CounterexampleReport rep = transpose_counterexample();
    CHECK(rep.ok);
    CHECK(rep.diff.empty());
    CHECK(gktest::approx(rep.defect_m2, 6.0, 1e-9));
    CHECK(gktest::approx(rep.radius_b_m2, 1.0, 1e-9));
    CHECK(counterexample_text(rep).find("VIOLATED") != std::string::npos);
}

TEST_CASE("schwarz check preconditions and trivial case") {
    const MapRep id2 = identity_map(2);
    const Matrix u = random_unitary(2, 9);
    CHECK(defect_schwarz_check(id2, u, u));
    CHECK_THROWS_AS(defect_schwarz_check(id2, 2.0 * u, u), PreconditionError);
}

TEST_CASE("variance radius check") {
    const MapRep th3 = transpose_map(3);
    // diagonal a is fixed by the transpose and multiplicative on diagonals
    const Matrix d = Matrix::diag({cx(0), cx(1), cx(3)});
    const Matrix fd = apply(th3, d * d.adjoint()) -
                      apply(th3, d) * apply(th3, d).adjoint();
    CHECK(op_norm(fd) < 1e-13);
    CHECK(variance_radius_check(th3, d));

    // a = lambda e: both sides vanish
    CHECK(variance_radius_check(th3, cx(1, 2) * Matrix::identity(3)));

    // unitaries against the transpose map; RHS is at most 1
    for (int t = 0; t < 10; ++t)
        CHECK(variance_radius_check(th3, random_unitary(3, 100 + t)));

    CHECK_THROWS_AS(
        variance_radius_check(th3, Matrix{{cx(0), cx(1), cx(0)},
                                          {cx(0), cx(0), cx(1)},
                                          {cx(0), cx(0), cx(0)}}),
        PreconditionError);
}

TEST_CASE("fuglede-putnam transport") {
    // diagonal pair
    CHECK(fuglede_putnam_check(Matrix::diag({cx(1, 1), cx(2)}),
                               Matrix::diag({cx(5), cx(0, 3)})));
    // constructed commuting normal pair
    const auto [x, y] = random_normal_commuting_pair(4, 5);
    CHECK(fuglede_putnam_check(x, y));
    // polynomial in a unitary
    const Matrix u = random_unitary(3, 6);
    CHECK(fuglede_putnam_check(u, u * u));
    // violated preconditions
    const Matrix nonnormal{{cx(0), cx(1)}, {cx(0), cx(0)}};
    CHECK_THROWS_AS(fuglede_putnam_check(nonnormal, Matrix::identity(2)),
                    PreconditionError);
    Rng rng(8);
    CHECK_THROWS_AS(
        fuglede_putnam_check(random_hermitian(3, 1), random_matrix(3, 3, rng)),
        PreconditionError);
}

TEST_CASE("commuting normal suite passes for the transpose map") {
    const auto rep = commuting_normal_suite(transpose_map(3), 50, 11);
    CHECK(rep.trials == 50);
    CHECK(rep.passes == 50);
    CHECK(rep.worst_margin > -1e-8);
}

TEST_CASE("commuting normal suite under the identity map has zero defect") {
    const auto rep = commuting_normal_suite(identity_map(3), 10, 13);
    CHECK(rep.passes == 10);
    // margin equals the bound itself when the defect vanishes
    for (std::uint64_t s = 0; s < 3; ++s) {
        const auto [a, b] = random_normal_commuting_pair(3, 13 + s);
        CHECK(defect(identity_map(3), a, b) < 1e-12);
    }
}

TEST_CASE("gruss holds for 2-positive maps on random pairs") {
    Tolerance tol;
    tol.solve_tol = 1e-6;
    const MapRep iso = isotropic_map(3, -0.16);
    const MapRep cp = random_unital_cp(4, 2, 3);
    Rng rng(12);
    for (int t = 0; t < 40; ++t) {
        const Matrix a3 = random_matrix(3, 3, rng), b3 = random_matrix(3, 3, rng);
        CHECK(gruss_check(iso, a3, b3, tol).holds);
        const Matrix a4 = random_matrix(4, 4, rng), b4 = random_matrix(4, 4, rng);
        CHECK(gruss_check(cp, a4, b4, tol).holds);
    }
}

} // TEST_SUITE

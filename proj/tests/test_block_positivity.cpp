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

#include "grusskit/block_positivity.hpp"
#include "grusskit/eig.hpp"
#include "grusskit/rng.hpp"
#include "grusskit/svd.hpp"
#include "test_helpers.hpp"

using namespace grusskit;

TEST_SUITE("block_positivity") {

TEST_CASE("pairing report on hand-picked blocks") {
    const Matrix e2 = Matrix::identity(2);
    const auto all_ok = check_block_pairing({e2, e2, e2}, 1e-8, 50, 1);
    CHECK(all_ok.block_psd);
    CHECK(all_ok.pairing_ok);
    CHECK(all_ok.norm_ok);

    const auto too_big = check_block_pairing({e2, e2, 2.0 * e2}, 1e-8, 50, 1);
    CHECK_FALSE(too_big.block_psd);
    CHECK_FALSE(too_big.norm_ok); // 4 > 1
}

TEST_CASE("rank-one PSD block with mismatched projectors") {
    // the Gram matrix of (e1; e2): P = E11, Q = E22, R = E12 is PSD, and a
    // correctly oriented pairing inequality must hold on it
    const Matrix p = Matrix::unit(2, 0, 0);
    const Matrix q = Matrix::unit(2, 1, 1);
    const Matrix r = Matrix::unit(2, 0, 1);
    const auto rep = check_block_pairing({p, q, r}, 1e-8, 500, 3);
    CHECK(rep.block_psd);
    CHECK(rep.pairing_ok);
    CHECK(rep.norm_ok);
}

TEST_CASE("gram-constructed blocks pass everything") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const std::size_t pd = 1 + (t % 3), qd = 1 + ((t / 3) % 3);
        const Matrix g = random_matrix(pd + qd + 1, pd + qd, rng);
        const Matrix gram = g.adjoint() * g;
        const Block2x2 blk{gram.submatrix(0, 0, pd, pd),
                           gram.submatrix(pd, pd, qd, qd),
                           gram.submatrix(0, pd, pd, qd)};
        const auto rep = check_block_pairing(blk, 1e-8, 64, 10 + t);
        CHECK(rep.block_psd);
        CHECK(rep.pairing_ok);
        CHECK(rep.norm_ok);
    }
}

TEST_CASE("non-PSD blocks at least keep the implication direction") {
    // block_psd == true must imply the other two flags; sample random
    // indefinite blocks and check no counterexample to the implication
    Rng rng(6);
    for (int t = 0; t < 30; ++t) {
        const Block2x2 blk{random_hermitian(2, 100 + t), random_hermitian(2, 200 + t),
                           random_matrix(2, 2, rng)};
        const auto rep = check_block_pairing(blk, 1e-8, 64, 300 + t);
        if (rep.block_psd) {
            CHECK(rep.pairing_ok);
            CHECK(rep.norm_ok);
        }
    }
}

TEST_CASE("schur positivity hand-picked cases") {
    const Matrix e2 = Matrix::identity(2);
    CHECK(schur_positivity({e2, e2, e2}));
    CHECK_FALSE(schur_positivity({Matrix::zero(2, 2), e2, e2}));
    CHECK_THROWS_AS(schur_positivity({e2, e2, Matrix::zero(2, 2)}),
                    PreconditionError); // singular pivot
    CHECK_THROWS_AS(
        schur_positivity({Matrix{{cx(0), cx(1)}, {cx(0), cx(0)}}, e2, e2}),
        PreconditionError); // non-Hermitian corner
}

TEST_CASE("schur complement route equals the direct eigenvalue route") {
    Rng rng(7);
    std::size_t compared = 0;
    for (int t = 0; t < 60; ++t) {
        SchurTriple triple;
        if (t % 2 == 0) {
            const Matrix g = random_matrix(6, 4, rng);
            Matrix gram = g.adjoint() * g;
            for (int i = 0; i < 4; ++i) gram(i, i) += 1e-3;
            triple = {gram.submatrix(0, 0, 2, 2), gram.submatrix(0, 2, 2, 2),
                      gram.submatrix(2, 2, 2, 2)};
        } else {
            triple = {random_hermitian(2, 400 + t), random_matrix(2, 2, rng),
                      random_hermitian(2, 500 + t)};
            const auto ev = eigvalsh(triple.r);
            if (std::min(std::abs(ev[0]), std::abs(ev[1])) < 1e-3) continue;
        }
        const auto ev = eigvalsh(triple.assemble());
        const double scale = std::max(std::abs(ev.front()), std::abs(ev.back()));
        const double margin = ev.front() / std::max(1.0, scale);
        if (std::abs(margin) <= 1e-6) continue;
        ++compared;
        CHECK(schur_positivity(triple) == (margin > 0.0));
    }
    CHECK(compared >= 40);
}

TEST_CASE("defect schwarz block structure") {
    const Matrix e2 = Matrix::identity(2);
    // at a = b = e every block is the identity: all-ones pattern (x) I
    Matrix ones(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) ones(i, j) = 1.0;
    CHECK(gktest::matrix_close(defect_schwarz_block(e2, e2), kron(ones, e2), 0.0));
    CHECK(is_psd(defect_schwarz_block(e2, e2)));

    // unitary pairs across sizes give PSD blocks
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + (t % 3);
        const Matrix u = random_unitary(n, 700 + t);
        const Matrix v = random_unitary(n, 800 + t);
        const Matrix blk = defect_schwarz_block(u, v);
        CHECK(is_hermitian(blk, 1e-10));
        CHECK(is_psd(blk));
    }

    // a non-unitary pair may fail PSD; must report false without error
    const Matrix a = 2.0 * Matrix::identity(2);
    const Matrix blk = defect_schwarz_block(a, e2);
    CHECK(is_hermitian(blk, 1e-12));
    CHECK_FALSE(is_psd(blk));
    CHECK_THROWS_AS(defect_schwarz_block(e2, Matrix::identity(3)), DimensionError);
}

TEST_CASE("schur triple carved from the unitary defect block") {
    // For unitary a, b the 4n x 4n block splits as T = SS*, R = e, so the
    // Schur route must certify it PSD.
    for (int t = 0; t < 6; ++t) {
        const std::size_t n = 2 + (t % 3);
        const Matrix u = random_unitary(n, 900 + t);
        const Matrix v = random_unitary(n, 960 + t);
        const Matrix blk = defect_schwarz_block(u, v);
        const SchurTriple triple{blk.submatrix(0, 0, 3 * n, 3 * n),
                                 blk.submatrix(0, 3 * n, 3 * n, n),
                                 blk.submatrix(3 * n, 3 * n, n, n)};
        CHECK(max_abs_diff(triple.r, Matrix::identity(n)) < 1e-12); // R = b*b = e
        CHECK(max_abs_diff(triple.t, triple.s * triple.s.adjoint()) < 1e-12);
        CHECK(schur_positivity(triple));
    }
}

TEST_CASE("choi lemma transport for positive maps") {
    const MapRep th = transpose_map(2);
    const Matrix e2 = Matrix::identity(2);
    const auto trivial = choi_lemma_check(th, e2, e2);
    CHECK(trivial.premise);
    CHECK(trivial.conclusion);

    const auto off = choi_lemma_check(th, e2, 2.0 * e2);
    CHECK_FALSE(off.premise); // [[I, 2I], [2I, I]] is indefinite

    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        const auto [x, y] = random_premise_pair(2, rng);
        const auto rep = choi_lemma_check(th, x, y);
        CHECK(rep.premise);
        CHECK(rep.conclusion);
    }
    CHECK_THROWS_AS(choi_lemma_check(th, Matrix::identity(3), Matrix::identity(3)),
                    DimensionError);
}

TEST_CASE("choi lemma transport across the whole positive-constructor family") {
    std::vector<std::pair<std::size_t, MapRep>> maps;
    maps.emplace_back(3, transpose_map(3));
    maps.emplace_back(3, reduction_map(3));
    maps.emplace_back(2, embedded_transpose_map(2, 1));
    maps.emplace_back(3, isotropic_map(3, -0.16));
    maps.emplace_back(3, random_unital_cp(3, 2, 91));
    Rng rng(12);
    for (const auto& [n, phi] : maps) {
        for (int t = 0; t < 100; ++t) {
            const auto [x, y] = random_premise_pair(n, rng);
            const auto rep = choi_lemma_check(phi, x, y);
            CHECK(rep.premise);
            CHECK(rep.conclusion);
        }
    }
}

TEST_CASE("premise pair generator builds PSD blocks with equal corners") {
    Rng rng(10);
    for (int t = 0; t < 20; ++t) {
        const auto [x, y] = random_premise_pair(3, rng);
        CHECK(is_hermitian(x, 1e-10));
        const Matrix blk = block_assemble({{x, y}, {y.adjoint(), x}});
        CHECK(min_eig_herm(blk) >= -1e-10);
    }
}

} // TEST_SUITE

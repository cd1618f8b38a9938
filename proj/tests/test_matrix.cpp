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

#include "grusskit/matrix.hpp"
#include "grusskit/rng.hpp"
#include "test_helpers.hpp"

using namespace grusskit;

TEST_SUITE("matrix") {

TEST_CASE("construction and shape errors") {
    const Matrix m{{cx(1), cx(2)}, {cx(3), cx(4)}};
    CHECK(m(0, 1) == cx(2));
    CHECK_THROWS_AS(Matrix(2, 2, std::vector<cx>(3)), DimensionError);
    CHECK_THROWS_AS((Matrix{{cx(1)}, {cx(1), cx(2)}}), DimensionError);
    CHECK_THROWS_AS(m + Matrix::identity(3), DimensionError);
    CHECK_THROWS_AS(m * Matrix::identity(3), DimensionError);
    CHECK_THROWS_AS(Matrix(2, 3).trace(), DimensionError);
}

TEST_CASE("arithmetic basics") {
    Rng rng(3);
    const Matrix a = random_matrix(4, 4, rng);
    const Matrix b = random_matrix(4, 4, rng);
    CHECK(gktest::matrix_close(a + b - b, a, 1e-14));
    CHECK(gktest::matrix_close((a * b).adjoint(), b.adjoint() * a.adjoint(), 1e-13));
    CHECK(gktest::matrix_close(a.transpose().transpose(), a, 0.0));
    CHECK(gktest::matrix_close(a.conj().conj(), a, 0.0));
    CHECK(std::abs((a * b).trace() - (b * a).trace()) < 1e-12);
    CHECK(a.all_finite());
}

TEST_CASE("kron convention and examples") {
    const Matrix i2 = Matrix::identity(2);
    CHECK(gktest::matrix_close(kron(i2, i2), Matrix::identity(4), 0.0));
    CHECK(gktest::matrix_close(kron(Matrix::diag({cx(1), cx(2)}), i2),
                               Matrix::diag({cx(1), cx(1), cx(2), cx(2)}), 0.0));

    // E_12 (x) B puts B in the top-right block
    Rng rng(9);
    const Matrix b = random_matrix(2, 2, rng);
    const Matrix k = kron(Matrix::unit(2, 0, 1), b);
    CHECK(gktest::matrix_close(k.submatrix(0, 2, 2, 2), b, 0.0));
    CHECK(k.submatrix(0, 0, 2, 2).max_abs() == 0.0);
    CHECK(k.submatrix(2, 0, 2, 4).max_abs() == 0.0);

    // index law: (A (x) B)[i*rB+k, j*cB+l] = A[i,j] B[k,l]
    const Matrix a = random_matrix(3, 2, rng);
    const Matrix c = random_matrix(2, 4, rng);
    const Matrix kc = kron(a, c);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 4; ++q)
                    CHECK(std::abs(kc(i * 2 + p, j * 4 + q) - a(i, j) * c(p, q)) <
                          1e-15);

    // mixed-product law
    const Matrix x = random_matrix(2, 2, rng), y = random_matrix(2, 2, rng);
    const Matrix u = random_matrix(3, 3, rng), v = random_matrix(3, 3, rng);
    CHECK(gktest::matrix_close(kron(x, u) * kron(y, v), kron(x * y, u * v), 1e-12));
}

TEST_CASE("block assemble and extract are mutually inverse") {
    CHECK_THROWS_AS(block_assemble({}), DimensionError);
    Rng rng(11);
    const Matrix a = random_matrix(3, 3, rng);
    CHECK(gktest::matrix_close(block_assemble({{a}}), a, 0.0));

    std::vector<std::vector<Matrix>> grid(2, std::vector<Matrix>(2));
    for (auto& row : grid)
        for (auto& blk : row) blk = random_matrix(3, 3, rng);
    const Matrix big = block_assemble(grid);
    const auto back = block_extract(big, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(max_abs_diff(back[i][j], grid[i][j]) == 0.0);

    grid[0][1] = random_matrix(2, 2, rng);
    CHECK_THROWS_AS(block_assemble(grid), DimensionError);
    CHECK_THROWS_AS(block_extract(big, 4), DimensionError);
}

TEST_CASE("hermitian detection") {
    CHECK(is_hermitian(Matrix{{cx(1), cx(3)}, {cx(3), cx(3)}}));
    CHECK_FALSE(is_hermitian(Matrix{{cx(0), cx(-6)}, {cx(6), cx(0)}}));
    CHECK(is_hermitian(Matrix{{cx(0), cx(0, 1)}, {cx(0, -1), cx(0)}}));
    CHECK_THROWS_AS(is_hermitian(Matrix(2, 3)), DimensionError);
}

TEST_CASE("tolerance validation") {
    Tolerance t;
    CHECK_NOTHROW(t.validate());
    t.psd_tol = 0.0;
    CHECK_THROWS_AS(t.validate(), DomainError);
}

} // TEST_SUITE

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

#include "grusskit/eig.hpp"
#include "grusskit/rng.hpp"
#include "grusskit/svd.hpp"
#include "test_helpers.hpp"

using namespace grusskit;

TEST_SUITE("rng") {

TEST_CASE("random_unitary satisfies its contract") {
    for (std::uint64_t s : {1ull, 2ull, 42ull}) {
        const Matrix u = random_unitary(3, s);
        CHECK(op_norm(u.adjoint() * u - Matrix::identity(3)) <= 1e-12);
    }
    CHECK_THROWS_AS(random_unitary(0, 1), DimensionError);
}

TEST_CASE("commuting normal pairs commute and are normal") {
    for (std::uint64_t s : {5ull, 6ull, 7ull}) {
        const auto [x, y] = random_normal_commuting_pair(4, s);
        CHECK(op_norm(x * y - y * x) <= 1e-12);
        CHECK(op_norm(x * x.adjoint() - x.adjoint() * x) <= 1e-12);
        CHECK(op_norm(y * y.adjoint() - y.adjoint() * y) <= 1e-12);
    }
}

TEST_CASE("random_psd passes is_psd") {
    for (std::uint64_t s : {1ull, 9ull, 33ull}) CHECK(is_psd(random_psd(2, s)));
}

TEST_CASE("random_hermitian is Hermitian") {
    CHECK(is_hermitian(random_hermitian(5, 3)));
}

TEST_CASE("streams are reproducible per seed") {
    Rng a(123), b(123), c(124);
    bool all_equal = true, any_differs = false;
    for (int i = 0; i < 64; ++i) {
        const double x = a.gaussian(), y = b.gaussian(), z = c.gaussian();
        all_equal = all_equal && x == y;
        any_differs = any_differs || x != z;
    }
    CHECK(all_equal);
    CHECK(any_differs);
    CHECK(max_abs_diff(random_unitary(4, 7), random_unitary(4, 7)) == 0.0);
}

TEST_CASE("gaussian moments look sane") {
    Rng rng(2024);
    double sum = 0.0, sum2 = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gaussian();
        sum += g;
        sum2 += g * g;
    }
    CHECK(std::abs(sum / n) < 0.05);
    CHECK(std::abs(sum2 / n - 1.0) < 0.05);
}

} // TEST_SUITE

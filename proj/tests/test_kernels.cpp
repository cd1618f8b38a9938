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

// Scalar-vs-vector equivalence for every kernel entry, across sizes that
// exercise the vector body and the scalar tail.

#include <doctest.h>

#include <array>
#include <vector>

#include "grusskit/rng.hpp"
#include "grusskit/simd/kernels.hpp"
#include "test_helpers.hpp"

using namespace grusskit;
using simd::cx;

namespace {

std::vector<cx> random_buf(std::size_t n, Rng& rng) {
    std::vector<cx> v(n);
    for (cx& e : v) e = rng.cgaussian();
    return v;
}

double buf_diff(const std::vector<cx>& a, const std::vector<cx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar backend is always available") {
    CHECK(simd::backend_available(simd::Backend::scalar));
    CHECK(simd::backend_name(simd::Backend::scalar) == std::string("scalar"));
}

TEST_CASE("elementwise kernels agree between backends") {
    const simd::KernelTable& ref = simd::scalar_kernels();
    const simd::KernelTable* vec = simd::avx2_kernels();
    if (vec == nullptr) return; // nothing to compare on this host
    Rng rng(1234);
    for (std::size_t n : {0, 1, 2, 3, 5, 8, 17, 64, 129}) {
        const std::vector<cx> a = random_buf(n, rng);
        const std::vector<cx> b = random_buf(n, rng);
        const cx s = rng.cgaussian();

        std::vector<cx> r1(n), r2(n);
        ref.add(r1.data(), a.data(), b.data(), n);
        vec->add(r2.data(), a.data(), b.data(), n);
        CHECK(buf_diff(r1, r2) == 0.0);

        ref.sub(r1.data(), a.data(), b.data(), n);
        vec->sub(r2.data(), a.data(), b.data(), n);
        CHECK(buf_diff(r1, r2) == 0.0);

        ref.scale(r1.data(), a.data(), s, n);
        vec->scale(r2.data(), a.data(), s, n);
        CHECK(buf_diff(r1, r2) < 1e-14);

        r1 = b;
        r2 = b;
        ref.axpy(r1.data(), s, a.data(), n);
        vec->axpy(r2.data(), s, a.data(), n);
        CHECK(buf_diff(r1, r2) < 1e-14);

        const cx d1 = ref.dotc(a.data(), b.data(), n);
        const cx d2 = vec->dotc(a.data(), b.data(), n);
        CHECK(std::abs(d1 - d2) < 1e-12 * std::max(1.0, std::abs(d1)));

        CHECK(gktest::approx(ref.sum_abs2(a.data(), n), vec->sum_abs2(a.data(), n),
                             1e-12 * std::max(1.0, ref.sum_abs2(a.data(), n))));
        CHECK(gktest::approx(ref.max_abs2(a.data(), n), vec->max_abs2(a.data(), n),
                             1e-13));
    }
}

TEST_CASE("matmul agrees between backends") {
    const simd::KernelTable& ref = simd::scalar_kernels();
    const simd::KernelTable* vec = simd::avx2_kernels();
    if (vec == nullptr) return;
    Rng rng(77);
    for (auto [m, k, n] : std::vector<std::array<std::size_t, 3>>{
             {1, 1, 1}, {2, 3, 4}, {5, 5, 5}, {7, 4, 9}, {16, 16, 16}, {3, 1, 8}}) {
        const std::vector<cx> a = random_buf(m * k, rng);
        const std::vector<cx> b = random_buf(k * n, rng);
        std::vector<cx> r1(m * n), r2(m * n);
        ref.matmul(r1.data(), a.data(), b.data(), m, k, n);
        vec->matmul(r2.data(), a.data(), b.data(), m, k, n);
        CHECK(buf_diff(r1, r2) < 1e-12);
    }
}

TEST_CASE("forced backend selection is honored and restored") {
    const simd::Backend initial = simd::active_backend();
    simd::set_backend(simd::Backend::scalar);
    CHECK(simd::active_backend() == simd::Backend::scalar);
    if (simd::backend_available(simd::Backend::avx2)) {
        simd::set_backend(simd::Backend::avx2);
        CHECK(simd::active_backend() == simd::Backend::avx2);
    } else {
        CHECK_THROWS_AS(simd::set_backend(simd::Backend::avx2), PreconditionError);
    }
    simd::set_backend(initial);
}

TEST_CASE("matrix products are backend independent") {
    if (!simd::backend_available(simd::Backend::avx2)) return;
    Rng rng(5);
    const Matrix a = random_matrix(6, 7, rng);
    const Matrix b = random_matrix(7, 5, rng);
    const simd::Backend initial = simd::active_backend();
    simd::set_backend(simd::Backend::scalar);
    const Matrix r1 = a * b;
    simd::set_backend(simd::Backend::avx2);
    const Matrix r2 = a * b;
    simd::set_backend(initial);
    CHECK(max_abs_diff(r1, r2) < 1e-12);
}

} // TEST_SUITE

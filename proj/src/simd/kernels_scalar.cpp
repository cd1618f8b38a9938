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

// Scalar reference kernels. These define the semantics; vector variants
// must agree with them up to rounding (see tests/test_kernels.cpp).

#include "grusskit/simd/kernels.hpp"

#include <algorithm>
#include <cstring>

namespace grusskit::simd {
namespace {

void add_scalar(cx* dst, const cx* a, const cx* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

void sub_scalar(cx* dst, const cx* a, const cx* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}

void scale_scalar(cx* dst, const cx* a, cx s, std::size_t n) {
    const double sr = s.real(), si = s.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        dst[i] = cx(sr * ar - si * ai, sr * ai + si * ar);
    }
}

void axpy_scalar(cx* acc, cx s, const cx* x, std::size_t n) {
    const double sr = s.real(), si = s.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        acc[i] += cx(sr * xr - si * xi, sr * xi + si * xr);
    }
}

cx dotc_scalar(const cx* a, const cx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double sum_abs2_scalar(const cx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

double max_abs2_scalar(const cx* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
        m = std::max(m, v);
    }
    return m;
}

void matmul_scalar(cx* dst, const cx* a, const cx* b,
                   std::size_t m, std::size_t k, std::size_t n) {
    std::memset(static_cast<void*>(dst), 0, m * n * sizeof(cx));
    for (std::size_t i = 0; i < m; ++i) {
        cx* row = dst + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const cx s = a[i * k + l];
            if (s.real() == 0.0 && s.imag() == 0.0) continue;
            axpy_scalar(row, s, b + l * n, n);
        }
    }
}

} // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{add_scalar,      sub_scalar,
                                   scale_scalar,    axpy_scalar,
                                   dotc_scalar,     sum_abs2_scalar,
                                   max_abs2_scalar, matmul_scalar};
    return table;
}

} // namespace grusskit::simd

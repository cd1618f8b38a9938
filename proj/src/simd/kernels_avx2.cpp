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

// AVX2+FMA variants. Complex<double> is interleaved (re, im), so one
// 256-bit register holds two complex numbers. Compiled with
// -mavx2 -mfma on x86-64 only; reached exclusively through the dispatch
// table after a cpuid check.

#include "grusskit/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cstring>

namespace grusskit::simd {
namespace {

inline const double* dp(const cx* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cx* p) { return reinterpret_cast<double*>(p); }

void add_avx2(cx* dst, const cx* a, const cx* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(dp(a) + 2 * i);
        __m256d vb = _mm256_loadu_pd(dp(b) + 2 * i);
        _mm256_storeu_pd(dp(dst) + 2 * i, _mm256_add_pd(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}

void sub_avx2(cx* dst, const cx* a, const cx* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(dp(a) + 2 * i);
        __m256d vb = _mm256_loadu_pd(dp(b) + 2 * i);
        _mm256_storeu_pd(dp(dst) + 2 * i, _mm256_sub_pd(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] - b[i];
}

// (sr + i si) * (xr + i xi): even lanes xr*sr - xi*si, odd lanes xi*sr + xr*si.
inline __m256d cmul(__m256d v, __m256d sr, __m256d si) {
    __m256d vswap = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(v, sr, _mm256_mul_pd(vswap, si));
}

void scale_avx2(cx* dst, const cx* a, cx s, std::size_t n) {
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(dp(a) + 2 * i);
        _mm256_storeu_pd(dp(dst) + 2 * i, cmul(v, sr, si));
    }
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        dst[i] = cx(s.real() * ar - s.imag() * ai, s.real() * ai + s.imag() * ar);
    }
}

inline void axpy_core(cx* acc, cx s, const cx* x, std::size_t n) {
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v0 = _mm256_loadu_pd(dp(x) + 2 * i);
        __m256d v1 = _mm256_loadu_pd(dp(x) + 2 * i + 4);
        __m256d a0 = _mm256_loadu_pd(dp(acc) + 2 * i);
        __m256d a1 = _mm256_loadu_pd(dp(acc) + 2 * i + 4);
        _mm256_storeu_pd(dp(acc) + 2 * i, _mm256_add_pd(a0, cmul(v0, sr, si)));
        _mm256_storeu_pd(dp(acc) + 2 * i + 4, _mm256_add_pd(a1, cmul(v1, sr, si)));
    }
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(dp(x) + 2 * i);
        __m256d a0 = _mm256_loadu_pd(dp(acc) + 2 * i);
        _mm256_storeu_pd(dp(acc) + 2 * i, _mm256_add_pd(a0, cmul(v, sr, si)));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        acc[i] += cx(s.real() * xr - s.imag() * xi, s.real() * xi + s.imag() * xr);
    }
}

void axpy_avx2(cx* acc, cx s, const cx* x, std::size_t n) { axpy_core(acc, s, x, n); }

cx dotc_avx2(const cx* a, const cx* b, std::size_t n) {
    __m256d racc = _mm256_setzero_pd();
    __m256d iacc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(dp(a) + 2 * i);
        __m256d vb = _mm256_loadu_pd(dp(b) + 2 * i);
        __m256d vas = _mm256_permute_pd(va, 0x5);
        racc = _mm256_fmadd_pd(va, vb, racc);  // even ar*br, odd ai*bi
        iacc = _mm256_fmadd_pd(vas, vb, iacc); // even ai*br, odd ar*bi
    }
    alignas(32) double r[4], im[4];
    _mm256_store_pd(r, racc);
    _mm256_store_pd(im, iacc);
    double re = r[0] + r[1] + r[2] + r[3];
    double ii = (im[1] - im[0]) + (im[3] - im[2]);
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        ii += ar * bi - ai * br;
    }
    return {re, ii};
}

double sum_abs2_avx2(const cx* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(dp(a) + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double t[4];
    _mm256_store_pd(t, acc);
    double s = t[0] + t[1] + t[2] + t[3];
    for (; i < n; ++i)
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

double max_abs2_avx2(const cx* a, std::size_t n) {
    __m256d macc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(dp(a) + 2 * i);
        __m256d sq = _mm256_mul_pd(v, v);
        __m256d pair = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5));
        macc = _mm256_max_pd(macc, pair);
    }
    alignas(32) double t[4];
    _mm256_store_pd(t, macc);
    double m = std::max(std::max(t[0], t[1]), std::max(t[2], t[3]));
    for (; i < n; ++i) {
        const double v = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
        m = std::max(m, v);
    }
    return m;
}

void matmul_avx2(cx* dst, const cx* a, const cx* b,
                 std::size_t m, std::size_t k, std::size_t n) {
    std::memset(static_cast<void*>(dst), 0, m * n * sizeof(cx));
    for (std::size_t i = 0; i < m; ++i) {
        cx* row = dst + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const cx s = a[i * k + l];
            if (s.real() == 0.0 && s.imag() == 0.0) continue;
            axpy_core(row, s, b + l * n, n);
        }
    }
}

} // namespace

const KernelTable* avx2_kernels() {
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (!supported) return nullptr;
    static const KernelTable table{add_avx2,      sub_avx2,
                                   scale_avx2,    axpy_avx2,
                                   dotc_avx2,     sum_abs2_avx2,
                                   max_abs2_avx2, matmul_avx2};
    return &table;
}

} // namespace grusskit::simd

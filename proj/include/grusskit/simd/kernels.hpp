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

#pragma once

#include <complex>
#include <cstddef>

namespace grusskit::simd {

using cx = std::complex<double>;

// Data-parallel inner loops on interleaved complex<double> arrays.
// Every entry has a scalar reference implementation and may have
// vectorized variants; the active variant is chosen at runtime from
// CPU features and can be forced for equivalence testing.
//
// Aliasing: add/sub/scale tolerate dst == a or dst == b (pure
// elementwise); matmul requires dst disjoint from a and b.
struct KernelTable {
    void (*add)(cx* dst, const cx* a, const cx* b, std::size_t n);
    void (*sub)(cx* dst, const cx* a, const cx* b, std::size_t n);
    // dst[i] = s * a[i]
    void (*scale)(cx* dst, const cx* a, cx s, std::size_t n);
    // acc[i] += s * x[i]
    void (*axpy)(cx* acc, cx s, const cx* x, std::size_t n);
    // sum_i conj(a[i]) * b[i]
    cx (*dotc)(const cx* a, const cx* b, std::size_t n);
    // sum_i |a[i]|^2
    double (*sum_abs2)(const cx* a, std::size_t n);
    // max_i |a[i]|^2
    double (*max_abs2)(const cx* a, std::size_t n);
    // dst (m x n) = a (m x k) * b (k x n), row-major
    void (*matmul)(cx* dst, const cx* a, const cx* b,
                   std::size_t m, std::size_t k, std::size_t n);
};

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);

/// True when the running CPU (and this build) can execute the backend.
bool backend_available(Backend b);

/// Best backend the running CPU supports.
Backend preferred_backend();

/// Currently selected backend (defaults to preferred_backend()).
Backend active_backend();

/// Force a backend, e.g. to compare variants; throws PreconditionError
/// if the backend is unavailable.
void set_backend(Backend b);

/// Kernel table of the active backend.
const KernelTable& kernels();

/// Specific tables, for direct equivalence tests.
const KernelTable& scalar_kernels();
const KernelTable* avx2_kernels(); // nullptr when not built in or unsupported

} // namespace grusskit::simd

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

#include "grusskit/simd/kernels.hpp"

#include <atomic>

#include "grusskit/errors.hpp"

namespace grusskit::simd {

#ifndef GRUSSKIT_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

namespace {

struct Registry {
    std::atomic<const KernelTable*> table;
    std::atomic<Backend> backend;
    Registry() {
        if (const KernelTable* t = avx2_kernels()) {
            table.store(t);
            backend.store(Backend::avx2);
        } else {
            table.store(&scalar_kernels());
            backend.store(Backend::scalar);
        }
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return avx2_kernels() != nullptr;
    }
    return false;
}

Backend preferred_backend() {
    return avx2_kernels() ? Backend::avx2 : Backend::scalar;
}

Backend active_backend() { return registry().backend.load(); }

void set_backend(Backend b) {
    switch (b) {
        case Backend::scalar:
            registry().table.store(&scalar_kernels());
            registry().backend.store(b);
            return;
        case Backend::avx2:
            if (const KernelTable* t = avx2_kernels()) {
                registry().table.store(t);
                registry().backend.store(b);
                return;
            }
            throw PreconditionError("simd backend 'avx2' not available on this CPU");
    }
    throw PreconditionError("unknown simd backend");
}

const KernelTable& kernels() { return *registry().table.load(); }

} // namespace grusskit::simd

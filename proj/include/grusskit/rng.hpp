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

#include <cstdint>
#include <random>
#include <utility>

#include "grusskit/matrix.hpp"

namespace grusskit {

/// mt19937_64 with an explicit Box-Muller Gaussian, so streams are
/// reproducible across standard libraries. Instances are caller-owned;
/// nothing global.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// standard normal
    double gaussian();

    /// standard complex normal, E|z|^2 = 1
    cx cgaussian() { return {gaussian() * kInvSqrt2, gaussian() * kInvSqrt2}; }

private:
    static constexpr double kInvSqrt2 = 0.7071067811865476;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// iid standard complex Gaussian entries
Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Columns of a Gaussian matrix orthonormalized (two-pass Gram-Schmidt);
/// U*U = I to ~1e-14. rows >= cols required.
Matrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);

Matrix random_unitary(std::size_t n, std::uint64_t seed);
Matrix random_hermitian(std::size_t n, std::uint64_t seed);
/// G*G for Gaussian G
Matrix random_psd(std::size_t n, std::uint64_t seed);

/// (U D1 U*, U D2 U*) with a shared Haar-ish unitary U and independent
/// complex diagonals: normal and commuting by construction.
std::pair<Matrix, Matrix> random_normal_commuting_pair(std::size_t n,
                                                       std::uint64_t seed);

} // namespace grusskit

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

#include <optional>

#include "grusskit/map_rep.hpp"

namespace grusskit {

/// Certificate that a map is not k-positive: a unit vector of Schmidt
/// rank <= k on which the Choi matrix has a negative expectation.
struct SchmidtWitness {
    std::size_t k;
    std::vector<std::vector<cx>> left;  // k vectors in C^n
    std::vector<std::vector<cx>> right; // k vectors in C^m
    double value;                       // <v, Choi v>, negative

    /// v = sum_t left_t (x) right_t (input factor first)
    std::vector<cx> assemble() const;
};

/// Minimizes <v, Choi v> over unit vectors of Schmidt rank <= k by
/// alternating eigenproblems on the two tensor factors, with seeded
/// restarts (restart t reseeds with seed + t). Returns a witness iff the
/// best value clears -psd_tol * max(1, ||Choi||); returning nullopt is
/// evidence of k-positivity, not a proof — this is a falsifier, not a
/// certifier. k above min(n, m) is clamped (full Schmidt rank makes the
/// search an exact CP test).
std::optional<SchmidtWitness> k_positivity_falsify(
    const MapRep& phi, std::size_t k, std::size_t restarts = 32,
    std::size_t iters = 200, std::uint64_t seed = 0, const Tolerance& tol = {});

/// <v, Choi v> for an arbitrary vector of matching dimension, real part
/// against the Hermitian part of Choi; used to re-validate witnesses.
double choi_expectation(const MapRep& phi, const std::vector<cx>& v);

} // namespace grusskit

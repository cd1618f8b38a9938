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
#include <string>
#include <vector>

#include "grusskit/map_rep.hpp"

namespace grusskit::suites {

struct SuiteResult {
    std::string name;
    bool pass = false;
    bool contractual = true; // diagnostic suites never fail the run
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst = 0.0; // suite-specific extremal margin or error
    std::string note;
    double seconds = 0.0;
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    double scale = 1.0; // multiplies the canonical trial counts
    Tolerance tol{};
};

/// The map zoo the randomized Gruss suites run over: the reduction map
/// (positive only), a 2-positive non-CP isotropic map, and the random
/// unital CP family across n in {2,3,4}, r in {1,2,3}.
std::vector<std::pair<std::string, MapRep>> gruss_map_zoo(std::uint64_t seed);

SuiteResult counterexample_suite();
SuiteResult falsifier_witness_suite(std::uint64_t seed = 42);
SuiteResult gruss_random_pairs_suite(std::uint64_t seed = 42,
                                     std::size_t pairs_per_map = 1000,
                                     const Tolerance& tol = {});
SuiteResult schwarz_unitary_suite(std::uint64_t seed = 42,
                                  std::size_t pairs_per_map = 200);
SuiteResult gruss_commuting_normal_suite(std::uint64_t seed = 42,
                                         std::size_t trials = 500,
                                         const Tolerance& tol = {});
SuiteResult gruss_cp_arbitrary_suite(std::uint64_t seed = 42,
                                     std::size_t trials = 500,
                                     const Tolerance& tol = {});
SuiteResult schur_equivalence_suite(std::uint64_t seed = 42,
                                    std::size_t trials = 200);
SuiteResult choi_lemma_suite(std::uint64_t seed = 42,
                             std::size_t trials_per_map = 200);
SuiteResult stinespring_suite(std::uint64_t seed = 42, std::size_t maps = 50);
SuiteResult russo_dye_suite(std::uint64_t seed = 42, std::size_t trials = 100);
SuiteResult chebyshev_crossval_suite(std::uint64_t seed = 42,
                                     std::size_t normal_trials = 50,
                                     std::size_t nonnormal_trials = 20);
SuiteResult block_pairing_suite(std::uint64_t seed = 42, std::size_t trials = 200);
/// Diagnostic: violation rate of the unitary Cauchy-Schwarz inequality
/// for maps that are positive but NOT 2-positive (expected nonzero).
SuiteResult schwarz_violation_rate_suite(std::uint64_t seed = 42,
                                         std::size_t trials = 200);

std::vector<SuiteResult> run_all(const SuiteConfig& cfg);

std::string render_table(const std::vector<SuiteResult>& results);
std::string render_json(const std::vector<SuiteResult>& results);
bool all_contractual_pass(const std::vector<SuiteResult>& results);

/// Brute-force reference for min over lambda of ||a - lambda I||: one
/// flat dense scan of the full window (side 4.8 ||a||) followed by two
/// refinements around the best cell. No recentered shrinking, no line
/// searches: a deliberately different search from the production solver.
/// 1601 points per side puts the final cell near 2e-7 * ||a||.
double chebyshev_bruteforce_value(const Matrix& a, std::size_t grid_points = 1601);

} // namespace grusskit::suites

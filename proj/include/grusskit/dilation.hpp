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

#include <string>

#include "grusskit/map_rep.hpp"

namespace grusskit {

/// Kraus family of a CP map from the spectral decomposition of its Choi
/// matrix; eigenpairs with eigenvalue <= 1e-12 are dropped.
/// DomainError ("Choi matrix not PSD") when the map is not CP.
std::vector<Matrix> kraus_from_choi(const MapRep& phi, const Tolerance& tol = {});

/// phi(x) = v* (x (x) I_r) v with v an isometry into C^n (x) C^r
/// (input factor first, environment second).
struct StinespringDilation {
    Matrix v;                // (n * env_dim) x m, v* v = I_m
    std::size_t env_dim = 0; // Kraus rank r
};

/// Requires phi unital (PreconditionError) and CP (DomainError).
StinespringDilation stinespring(const MapRep& phi, const Tolerance& tol = {});

/// a = scale * (w_1 u_1 + w_2 u_2) with u_i unitary: the constructive
/// two-unitary convex decomposition of an arbitrary square matrix,
/// exact for any contraction a/scale.
struct UnitaryDecomposition {
    std::vector<double> weights;   // nonnegative, sum to 1
    std::vector<Matrix> unitaries;
    double scale = 0.0;            // ||a||, or 1 for a = 0
};

UnitaryDecomposition russo_dye_decompose(const Matrix& a);

/// One link of the norm chain behind the Gruss bound.
struct ChainLink {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

/// Step-by-step numeric replay of the bound's derivation: Russo-Dye
/// decompositions of a and b, the convexity step over unitary pairs, the
/// Cauchy-Schwarz factors, the radius bounds, and the final
/// ||phi(ab) - phi(a)phi(b)|| <= ||a|| ||b||. For unital 2-positive phi
/// every link must hold; for merely positive maps the failing links
/// localize where the argument breaks.
struct DefectChainTrace {
    std::vector<ChainLink> links;
    bool all_pass = true;
    double defect = 0.0;
    double norm_a = 0.0;
    double norm_b = 0.0;
};

DefectChainTrace defect_chain_trace(const MapRep& phi, const Matrix& a,
                                    const Matrix& b, double tol = 1e-8);

} // namespace grusskit

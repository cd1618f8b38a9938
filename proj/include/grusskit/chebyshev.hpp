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

#include <vector>

#include "grusskit/enclosing_disk.hpp"
#include "grusskit/matrix.hpp"

namespace grusskit {

/// ||a* a - a a*|| <= rel_tol * ||a||^2
bool is_normal(const Matrix& a, double rel_tol = 1e-10);

/// Eigenvalues of a normal matrix, by joint diagonalization of its
/// commuting Hermitian and skew-Hermitian parts. PreconditionError when
/// the input fails is_normal, or when the joint basis does not reproduce
/// the matrix (a sign of borderline normality).
std::vector<cx> normal_eigenvalues(const Matrix& a, double rel_tol = 1e-10);

/// Chebyshev radius of an operator: the Disk realizing
/// min over lambda of ||a - lambda I||. Normal matrices go through the
/// spectrum + smallest enclosing disk; everything else through the
/// derivative-free convex minimizer below.
Disk chebyshev_radius(const Matrix& a, const Tolerance& tol = {});

/// Adaptive grid refinement for f(lambda) = ||a - lambda I|| (convex,
/// 1-Lipschitz): 33 x 33 grid seeded at tr(a)/n over a window of radius
/// 2||a||, recentered on the argmin each round and shrunk 4x once the
/// argmin is interior, finished by nested golden-section line searches.
/// Exposed separately so the two routes can be cross-validated.
Disk chebyshev_radius_general(const Matrix& a, const Tolerance& tol = {});

/// f(lambda) = ||a - lambda I|| via the cached Gram form
/// G(lambda) = a*a - conj(lambda) a - lambda a* + |lambda|^2 I, whose top
/// eigenvalue is f^2. One construction amortizes over many evaluations;
/// shared by the solver, the brute-force oracles, and tests.
class ShiftNormEvaluator {
public:
    explicit ShiftNormEvaluator(const Matrix& a);

    double value(cx lambda) const;
    double value_sq(cx lambda) const;
    /// max diagonal entry of G: a cheap lower bound for value_sq
    double lower_sq(cx lambda) const;

private:
    std::size_t n_;
    std::vector<cx> gram_;
    std::vector<cx> amat_;
    std::vector<cx> astar_;
    mutable std::vector<cx> scratch_;
};

} // namespace grusskit

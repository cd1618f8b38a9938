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

#include "grusskit/chebyshev.hpp"
#include "grusskit/map_rep.hpp"

namespace grusskit {

/// ||phi(ab) - phi(a) phi(b)||, the deviation of phi from
/// multiplicativity on the pair (a, b).
double defect(const MapRep& phi, const Matrix& a, const Matrix& b);

/// Both sides of the Gruss inequality
///   ||phi(ab) - phi(a)phi(b)|| <= inf_l ||a - l e|| * inf_m ||b - m e||
/// with an observational verdict; holds is a statement about the
/// numbers, not about 2-positivity of phi.
struct GrussReport {
    double defect = 0.0;
    Disk radius_a;
    Disk radius_b;
    double bound = 0.0; // radius_a.radius * radius_b.radius
    bool holds = false; // defect <= bound + 1e-8 * max(1, bound)
    double margin = 0.0; // bound - defect
};

GrussReport gruss_check(const MapRep& phi, const Matrix& a, const Matrix& b,
                        const Tolerance& tol = {});

/// Squared Cauchy-Schwarz form at unitaries:
///   ||phi(ab) - phi(a)phi(b)||^2
///     <= ||phi(aa*) - phi(a)phi(a)*|| * ||phi(b*b) - phi(b)*phi(b)||.
/// PreconditionError unless a and b are unitary within 1e-10.
bool defect_schwarz_check(const MapRep& phi, const Matrix& a, const Matrix& b,
                          double tol = 1e-8);

/// Raw sides of the same inequality with no precondition enforcement;
/// diagnostic use only (e.g. measuring how often merely-positive maps
/// break it).
struct SchwarzSides {
    double lhs_sq;
    double rhs;
};
SchwarzSides defect_schwarz_sides(const MapRep& phi, const Matrix& a,
                                  const Matrix& b);

/// Variance bound at a normal element:
///   ||phi(aa*) - phi(a)phi(a)*|| <= (inf_l ||a - l e||)^2.
/// PreconditionError unless a is normal within 1e-10.
bool variance_radius_check(const MapRep& phi, const Matrix& a,
                           const Tolerance& tol = {}, double check_tol = 1e-8);

/// Fuglede-Putnam transport: x normal and xy = yx imply x*y = yx*.
/// Preconditions within tol, output within 100*tol (the implication
/// amplifies rounding).
bool fuglede_putnam_check(const Matrix& x, const Matrix& y, double tol = 1e-10);

struct CommutingSuiteReport {
    std::size_t trials = 0;
    std::size_t passes = 0;
    double worst_margin = 0.0;
};

/// Draws commuting normal pairs and runs gruss_check on each; for unital
/// positive phi every trial must hold, 2-positive or not.
CommutingSuiteReport commuting_normal_suite(const MapRep& phi, std::size_t trials,
                                            std::uint64_t seed,
                                            const Tolerance& tol = {});

} // namespace grusskit

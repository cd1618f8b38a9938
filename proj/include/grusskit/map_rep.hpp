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
#include <functional>
#include <vector>

#include "grusskit/matrix.hpp"

namespace grusskit {

/// Linear map phi: M_n -> M_m, stored canonically as its Choi matrix
///   C = sum_ij E_ij (x) phi(E_ij)
/// under the row-major Kronecker convention (input factor first), i.e.
/// C[i*m + r, j*m + s] = phi(E_ij)[r, s]. A Kraus family is cached when
/// the construction provides one; it is derived data, never serialized.
class MapRep {
public:
    MapRep(std::size_t dim_in, std::size_t dim_out, Matrix choi,
           std::vector<Matrix> kraus = {});

    /// Build the Choi matrix by probing an arbitrary action on the E_ij.
    static MapRep from_action(std::size_t dim_in, std::size_t dim_out,
                              const std::function<Matrix(const Matrix&)>& action);

    /// phi(X) = sum_t K_t X K_t*; the family is cached.
    static MapRep from_kraus(std::size_t dim_in, std::size_t dim_out,
                             std::vector<Matrix> kraus);

    std::size_t dim_in() const { return dim_in_; }
    std::size_t dim_out() const { return dim_out_; }
    const Matrix& choi() const { return choi_; }
    bool has_kraus() const { return !kraus_.empty(); }
    const std::vector<Matrix>& kraus_family() const { return kraus_; }

private:
    std::size_t dim_in_;
    std::size_t dim_out_;
    Matrix choi_;
    std::vector<Matrix> kraus_;
};

/// phi(X) by contracting the Choi matrix against X.
Matrix apply(const MapRep& phi, const Matrix& x);

/// phi(X) through the cached Kraus family (PreconditionError if absent);
/// agrees with apply() within rounding, kept separate as a cross-check.
Matrix apply_via_kraus(const MapRep& phi, const Matrix& x);

/// Entrywise amplification phi_k: acts blockwise on a kn x kn matrix.
Matrix amplify(const MapRep& phi, std::size_t k, const Matrix& xbig);

/// ||phi(I_n) - I_m|| <= tol
bool is_unital(const MapRep& phi, double tol = 1e-10);

/// ||phi(X*) - phi(X)*|| <= 1e-10 over `trials` Gaussian X
bool is_star_preserving(const MapRep& phi, std::size_t trials, std::uint64_t seed);

/// Choi matrix PSD (Hermitian within tol and min eigenvalue above the
/// relative slack). Never throws: a non-Hermitian Choi simply is not PSD.
bool is_cp(const MapRep& phi, const Tolerance& tol = {});

MapRep identity_map(std::size_t n);

/// X -> X^T. Unital, positive, not 2-positive for n >= 2 (n = 1 is
/// rejected: the scalar transpose is the identity and makes a useless
/// counterexample subject).
MapRep transpose_map(std::size_t n);

/// X -> X^T (+) (tr X / k) I_pad : M_k -> M_{k+pad}. The linear unital
/// completion of a transpose block embedded in a larger algebra.
MapRep embedded_transpose_map(std::size_t k, std::size_t pad);

/// X -> (tr X * I - X)/(n - 1). Unital and positive; its Choi matrix is
/// (I - omega omega*)/(n - 1) for the unnormalized maximally entangled
/// omega, so the minimum of <v, Choi v> over unit vectors of Schmidt
/// rank k is (1 - k)/(n - 1): not 2-positive for any n >= 2, and the
/// falsifier certifies that with a rank-2 witness of value -1/(n-1).
MapRep reduction_map(std::size_t n);

/// X -> s X + (1 - s) tr(X) I / n. Unital for every real s; the Choi
/// matrix is s omega omega* + ((1-s)/n) I, so the map is k-positive iff
/// s >= -1/(kn - 1) and CP iff s >= -1/(n^2 - 1). Negative s in
/// [-1/(2n-1), -1/(n^2-1)) gives unital 2-positive maps that are not CP,
/// the regime the Gruss bound newly covers.
MapRep isotropic_map(std::size_t n, double s);

/// phi(x) = W* (x (x) I_r) W for a Gaussian-seeded isometry
/// W: C^n -> C^n (x) C^r. Unital and CP by construction; Kraus cached.
MapRep random_unital_cp(std::size_t n, std::size_t r, std::uint64_t seed);

} // namespace grusskit

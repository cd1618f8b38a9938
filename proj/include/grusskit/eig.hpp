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

#include "grusskit/matrix.hpp"

namespace grusskit {

/// Spectral decomposition A = V diag(values) V* of a Hermitian matrix.
struct EighResult {
    std::vector<double> values; // ascending
    Matrix vectors;             // unitary, eigenvector columns
};

/// Cyclic complex Jacobi. Input must be Hermitian within herm_tol
/// (PreconditionError otherwise); the tiny skew part is discarded.
EighResult eigh(const Matrix& a, double herm_tol = Tolerance{}.hermitian_tol);

/// Eigenvalues only, ascending. Closed forms for n <= 3, Jacobi above.
std::vector<double> eigvalsh(const Matrix& a,
                             double herm_tol = Tolerance{}.hermitian_tol);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eig_herm(const Matrix& a, double herm_tol = Tolerance{}.hermitian_tol);

/// min eigenvalue >= -psd_tol * max(1, ||A||). Throws PreconditionError
/// when A is not Hermitian within tol.hermitian_tol.
bool is_psd(const Matrix& a, const Tolerance& tol = {});

namespace detail {

/// Eigenvalues of the Hermitian matrix stored row-major in w (n x n,
/// destroyed); ascending order into out[0..n). No allocation for n <= 3.
void hermitian_eigenvalues_inplace(cx* w, std::size_t n, double* out);

/// Largest eigenvalue only (same contract as above).
double hermitian_max_eigenvalue_inplace(cx* w, std::size_t n);

} // namespace detail

} // namespace grusskit

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

/// A = U Sigma V* with U (m x m), V (n x n) unitary and Sigma the
/// rectangular diagonal of singular_values (descending, min(m,n) many).
struct SvdResult {
    Matrix u;
    std::vector<double> singular_values;
    Matrix v;
};

/// One-sided Jacobi SVD. Columns of U are orthonormal to ~1e-14 even for
/// rank-deficient input (missing directions completed from the standard
/// basis).
SvdResult svd(const Matrix& a);

/// Largest singular value; equals max |eigenvalue| for normal input.
double op_norm(const Matrix& a);

} // namespace grusskit

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

#include <cmath>

#include "grusskit/matrix.hpp"
#include "grusskit/rng.hpp"

namespace gktest {

using grusskit::cx;
using grusskit::Matrix;

inline bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool matrix_close(const Matrix& a, const Matrix& b, double tol) {
    return grusskit::max_abs_diff(a, b) <= tol;
}

} // namespace gktest

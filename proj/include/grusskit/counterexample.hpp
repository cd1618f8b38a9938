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
#include <vector>

#include "grusskit/gruss.hpp"

namespace grusskit {

/// The classic transpose-map counterexample: a = [[1,3],[3,3]] (+) 0 and
/// b = diag(1, 3, 0) in M_3 under the transpose map. The Gruss bound
/// sqrt(10) * 3/2 ~ 4.743 is beaten by the defect 6 because the
/// transpose map, while unital and positive, is not 2-positive. The
/// report carries the M_2-restricted variant and the trace-padded unital
/// completion (both with defect 6) alongside.
struct CounterexampleReport {
    std::vector<double> eig_a; // spectrum of a in M_3: {2-sqrt10, 0, 2+sqrt10}
    std::vector<double> eig_b; // {0, 1, 3}
    GrussReport gruss;         // transpose_map(3) on (a, b)
    double defect_m2 = 0.0;    // transpose_map(2) on the unpadded pair
    double radius_a_m2 = 0.0;  // sqrt(10) again (the 0 eigenvalue is interior)
    double radius_b_m2 = 0.0;  // 1 for spectrum {1, 3}
    double defect_embedded = 0.0; // embedded_transpose_map(2, 1), also 6
    bool ok = false;           // all values match the closed forms
    std::string diff;          // mismatch description, empty when ok
};

CounterexampleReport transpose_counterexample();

std::string counterexample_text(const CounterexampleReport& rep);
std::string counterexample_json(const CounterexampleReport& rep);

} // namespace grusskit

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

#include <complex>
#include <vector>

namespace grusskit {

/// Closed disk in the complex plane.
struct Disk {
    std::complex<double> center{0.0, 0.0};
    double radius = 0.0;

    bool contains(std::complex<double> p, double slack = 0.0) const {
        return std::abs(p - center) <= radius + slack;
    }
};

/// Minimal-radius disk covering all points; Welzl's randomized
/// incremental algorithm with move-to-front. The input order does not
/// affect the result (the minimal disk is unique); the internal shuffle
/// is fixed-seeded so output is bit-reproducible.
/// DomainError on an empty list.
Disk smallest_enclosing_disk(const std::vector<std::complex<double>>& points);

} // namespace grusskit

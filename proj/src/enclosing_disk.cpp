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

#include "grusskit/enclosing_disk.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "grusskit/errors.hpp"

namespace grusskit {

namespace {

using C = std::complex<double>;

bool covers(const Disk& d, C p) {
    return std::abs(p - d.center) <= d.radius * (1.0 + 1e-12) + 1e-300;
}

Disk disk_two(C p, C q) {
    const C c = 0.5 * (p + q);
    return {c, std::max(std::abs(p - c), std::abs(q - c))};
}

// Unique circle through three non-collinear points; for (near-)collinear
// input falls back to the widest diametral pair, which is then minimal.
Disk disk_three(C a, C b, C c) {
    const C u = b - a;
    const C v = c - a;
    const double den = 2.0 * (u.real() * v.imag() - u.imag() * v.real());
    const double scale = std::max({std::norm(u), std::norm(v), std::norm(c - b)});
    if (std::abs(den) > 1e-12 * scale) {
        const double nu = std::norm(u);
        const double nv = std::norm(v);
        const double x = (v.imag() * nu - u.imag() * nv) / den;
        const double y = (u.real() * nv - v.real() * nu) / den;
        const C center = a + C(x, y);
        const double r = std::max({std::abs(a - center), std::abs(b - center),
                                   std::abs(c - center)});
        return {center, r};
    }
    Disk best{0.0, -1.0};
    const C pts[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Disk d = disk_two(pts[i], pts[j]);
            if (covers(d, pts[3 - i - j]) && (best.radius < 0.0 || d.radius < best.radius))
                best = d;
        }
    if (best.radius >= 0.0) return best;
    // numerically awkward: nearly collinear but no pair covers; take the
    // widest pair and stretch to cover
    Disk d = disk_two(a, b);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Disk t = disk_two(pts[i], pts[j]);
            if (t.radius > d.radius) d = t;
        }
    for (const C& p : pts) d.radius = std::max(d.radius, std::abs(p - d.center));
    return d;
}

Disk with_two(const std::vector<C>& pts, std::size_t count, C q1, C q2) {
    Disk d = disk_two(q1, q2);
    for (std::size_t i = 0; i < count; ++i)
        if (!covers(d, pts[i])) d = disk_three(q1, q2, pts[i]);
    return d;
}

Disk with_one(std::vector<C>& pts, std::size_t count, C q) {
    Disk d{q, 0.0};
    for (std::size_t i = 0; i < count; ++i)
        if (!covers(d, pts[i])) {
            d = with_two(pts, i, q, pts[i]);
            std::rotate(pts.begin(), pts.begin() + i, pts.begin() + i + 1);
        }
    return d;
}

} // namespace

Disk smallest_enclosing_disk(const std::vector<C>& points) {
    if (points.empty())
        throw DomainError("smallest_enclosing_disk: empty point list");
    std::vector<C> pts(points);
    std::shuffle(pts.begin(), pts.end(), std::mt19937_64(0x9e3779b97f4a7c15ull));
    Disk d{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!covers(d, pts[i])) {
            d = with_one(pts, i, pts[i]);
            std::rotate(pts.begin(), pts.begin() + i, pts.begin() + i + 1);
        }
    return d;
}

} // namespace grusskit

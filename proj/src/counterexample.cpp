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

#include "grusskit/counterexample.hpp"

#include <cmath>

#include "grusskit/eig.hpp"
#include "grusskit/io.hpp"

namespace grusskit {

namespace {

void expect(std::string& diff, const char* what, double got, double want,
            double tol) {
    if (std::abs(got - want) > tol)
        diff += std::string(what) + ": got " + io::format_real(got) + ", want " +
                io::format_real(want) + " (tol " + io::format_real(tol) + ")\n";
}

} // namespace

CounterexampleReport transpose_counterexample() {
    const double s10 = std::sqrt(10.0);

    const Matrix a2{{cx(1.0), cx(3.0)}, {cx(3.0), cx(3.0)}};
    const Matrix b2 = Matrix::diag({cx(1.0), cx(3.0)});
    Matrix a3(3, 3);
    a3.set_submatrix(0, 0, a2);
    const Matrix b3 = Matrix::diag({cx(1.0), cx(3.0), cx(0.0)});

    CounterexampleReport rep;
    rep.eig_a = eigvalsh(a3);
    rep.eig_b = eigvalsh(b3);

    const MapRep th3 = transpose_map(3);
    rep.gruss = gruss_check(th3, a3, b3);

    const MapRep th2 = transpose_map(2);
    rep.defect_m2 = defect(th2, a2, b2);
    rep.radius_a_m2 = chebyshev_radius(a2).radius;
    rep.radius_b_m2 = chebyshev_radius(b2).radius;

    const MapRep emb = embedded_transpose_map(2, 1);
    rep.defect_embedded = defect(emb, a2, b2);

    expect(rep.diff, "defect", rep.gruss.defect, 6.0, 1e-9);
    expect(rep.diff, "radius_a", rep.gruss.radius_a.radius, s10, 1e-9);
    expect(rep.diff, "radius_b", rep.gruss.radius_b.radius, 1.5, 1e-9);
    expect(rep.diff, "bound", rep.gruss.bound, s10 * 1.5, 1e-6);
    if (rep.gruss.holds) rep.diff += "verdict: got HOLDS, want VIOLATED\n";
    expect(rep.diff, "eig_a[0]", rep.eig_a[0], 2.0 - s10, 1e-9);
    expect(rep.diff, "eig_a[1]", rep.eig_a[1], 0.0, 1e-9);
    expect(rep.diff, "eig_a[2]", rep.eig_a[2], 2.0 + s10, 1e-9);
    expect(rep.diff, "eig_b[0]", rep.eig_b[0], 0.0, 1e-9);
    expect(rep.diff, "eig_b[1]", rep.eig_b[1], 1.0, 1e-9);
    expect(rep.diff, "eig_b[2]", rep.eig_b[2], 3.0, 1e-9);
    expect(rep.diff, "defect_m2", rep.defect_m2, 6.0, 1e-9);
    expect(rep.diff, "radius_a_m2", rep.radius_a_m2, s10, 1e-9);
    expect(rep.diff, "radius_b_m2", rep.radius_b_m2, 1.0, 1e-9);
    expect(rep.diff, "defect_embedded", rep.defect_embedded, 6.0, 1e-9);
    rep.ok = rep.diff.empty();
    return rep;
}

std::string counterexample_text(const CounterexampleReport& rep) {
    std::string out;
    out += "transpose-map counterexample in M_3 (a = [[1,3],[3,3]] (+) 0, "
           "b = diag(1,3,0))\n";
    out += "  spectrum(a)  = {" + io::format_real(rep.eig_a[0]) + ", " +
           io::format_real(rep.eig_a[1]) + ", " + io::format_real(rep.eig_a[2]) +
           "}\n";
    out += "  spectrum(b)  = {" + io::format_real(rep.eig_b[0]) + ", " +
           io::format_real(rep.eig_b[1]) + ", " + io::format_real(rep.eig_b[2]) +
           "}\n";
    out += "  defect       |phi(ab) - phi(a)phi(b)|  = " +
           io::format_real(rep.gruss.defect) + "\n";
    out += "  radius_a     min_l |a - l e|           = " +
           io::format_real(rep.gruss.radius_a.radius) + "\n";
    out += "  radius_b     min_m |b - m e|           = " +
           io::format_real(rep.gruss.radius_b.radius) + "\n";
    out += "  bound        radius_a * radius_b       = " +
           io::format_real(rep.gruss.bound) + "\n";
    out += std::string("  verdict: ") +
           (rep.gruss.holds ? "HOLDS (unexpected)" : "VIOLATED (defect > bound)") +
           "\n";
    out += "  M_2 variant: defect = " + io::format_real(rep.defect_m2) +
           ", radius_a = " + io::format_real(rep.radius_a_m2) +
           ", radius_b = " + io::format_real(rep.radius_b_m2) +
           " (spectrum {1,3} drops the 0)\n";
    out += "  unital completion M_2 -> M_3 (trace-padded): defect = " +
           io::format_real(rep.defect_embedded) + "\n";
    if (!rep.ok) out += "MISMATCHES:\n" + rep.diff;
    return out;
}

std::string counterexample_json(const CounterexampleReport& rep) {
    std::string out = "{\"eig_a\": [";
    for (std::size_t i = 0; i < rep.eig_a.size(); ++i) {
        if (i) out += ", ";
        out += io::format_real(rep.eig_a[i]);
    }
    out += "], \"eig_b\": [";
    for (std::size_t i = 0; i < rep.eig_b.size(); ++i) {
        if (i) out += ", ";
        out += io::format_real(rep.eig_b[i]);
    }
    out += "], \"gruss\": ";
    std::string g = io::gruss_report_to_json(rep.gruss);
    if (!g.empty() && g.back() == '\n') g.pop_back();
    out += g;
    out += ", \"defect_m2\": " + io::format_real(rep.defect_m2);
    out += ", \"radius_a_m2\": " + io::format_real(rep.radius_a_m2);
    out += ", \"radius_b_m2\": " + io::format_real(rep.radius_b_m2);
    out += ", \"defect_embedded\": " + io::format_real(rep.defect_embedded);
    out += std::string(", \"ok\": ") + (rep.ok ? "true" : "false") + "}\n";
    return out;
}

} // namespace grusskit

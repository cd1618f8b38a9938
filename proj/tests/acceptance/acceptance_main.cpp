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

// End-to-end acceptance checks. Every criterion runs at its full stated
// scale and tolerance and prints exactly one verdict line; the process
// exits nonzero if any of them fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "grusskit/counterexample.hpp"
#include "grusskit/eig.hpp"
#include "grusskit/schmidt_falsifier.hpp"
#include "grusskit/suites.hpp"

using namespace grusskit;

namespace {

int failures = 0;

void verdict(int number, bool pass, const std::string& detail) {
    std::printf("%-4s criterion %2d: %s\n", pass ? "PASS" : "FAIL", number,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void criterion_1_counterexample() {
    const auto t0 = std::chrono::steady_clock::now();
    const CounterexampleReport rep = transpose_counterexample();
    const double sec = seconds_since(t0);
    const bool pass = rep.ok && sec < 1.0;
    verdict(1, pass,
            "counterexample exact: defect " + fmt(rep.gruss.defect) + ", radii " +
                fmt(rep.gruss.radius_a.radius) + " and " +
                fmt(rep.gruss.radius_b.radius) + ", bound " + fmt(rep.gruss.bound) +
                ", verdict " + (rep.gruss.holds ? "HOLDS" : "VIOLATED") + " [" +
                fmt(sec) + " s]" + (rep.ok ? "" : "; " + rep.diff));
}

void criterion_2_witness() {
    const auto t0 = std::chrono::steady_clock::now();
    const MapRep th = transpose_map(2);
    const auto w = k_positivity_falsify(th, 2, 32, 200, 42);
    const double oracle = min_eig_herm(th.choi());
    const double sec = seconds_since(t0);
    const bool pass = w.has_value() && w->k == 2 &&
                      std::abs(w->value + 1.0) <= 1e-6 &&
                      std::abs(w->value - oracle) <= 1e-6 && sec < 5.0;
    verdict(2, pass,
            std::string("non-2-positivity witness: value ") +
                (w ? fmt(w->value) : "none") + " vs oracle " + fmt(oracle) + " [" +
                fmt(sec) + " s]");
}

void criterion_3_gruss_at_scale() {
    const auto res = suites::gruss_random_pairs_suite(42, 1000);
    const bool pass = res.failures == 0 && res.worst >= -1e-8 && res.seconds < 60.0;
    verdict(3, pass,
            "gruss bound over " + std::to_string(res.trials) + " random pairs (" +
                res.note + ") [" + fmt(res.seconds) + " s]");
}

void criterion_4_schwarz_unitary() {
    const auto res = suites::schwarz_unitary_suite(42, 200);
    verdict(4, res.failures == 0,
            "unitary Cauchy-Schwarz over " + std::to_string(res.trials) +
                " pairs, 2-positive maps (" + res.note + ") [" + fmt(res.seconds) +
                " s]");
}

void criterion_5_positive_regimes() {
    const auto commuting = suites::gruss_commuting_normal_suite(42, 500);
    const auto cp = suites::gruss_cp_arbitrary_suite(42, 500);
    const bool pass = commuting.failures == 0 && cp.failures == 0;
    verdict(5, pass,
            "commuting-normal transpose(3): " + std::to_string(commuting.trials) +
                " trials, " + std::to_string(commuting.failures) +
                " failures; cp arbitrary: " + std::to_string(cp.trials) +
                " trials, " + std::to_string(cp.failures) + " failures [" +
                fmt(commuting.seconds + cp.seconds) + " s]");
}

void criterion_6_schur() {
    const auto res = suites::schur_equivalence_suite(42, 200);
    verdict(6, res.failures == 0,
            "Schur-complement vs direct PSD on " + std::to_string(res.trials) +
                " clear-margin triples, " + std::to_string(res.failures) +
                " disagreements (" + res.note + ")");
}

void criterion_7_choi_lemma() {
    const auto res = suites::choi_lemma_suite(42, 200);
    verdict(7, res.failures == 0,
            "structured-block transport on " + std::to_string(res.trials) +
                " premise-true pairs, worst conclusion min-eig " + fmt(res.worst));
}

void criterion_8_stinespring() {
    const auto res = suites::stinespring_suite(42, 50);
    verdict(8, res.failures == 0 && res.worst <= 1e-10,
            "Stinespring on " + std::to_string(res.trials) +
                " unital CP maps, worst error " + fmt(res.worst));
}

void criterion_9_russo_dye() {
    const auto res = suites::russo_dye_suite(42, 100);
    verdict(9, res.failures == 0 && res.worst <= 1e-10,
            "two-unitary decomposition on " + std::to_string(res.trials) +
                " matrices, worst error " + fmt(res.worst));
}

void criterion_10_crossval() {
    const auto res = suites::chebyshev_crossval_suite(42, 50, 20);
    verdict(10, res.failures == 0 && res.worst <= 1e-6,
            "radius solver cross-validation on " + std::to_string(res.trials) +
                " matrices, worst disagreement " + fmt(res.worst) + " [" +
                fmt(res.seconds) + " s]");
}

} // namespace

int main() {
    std::printf("acceptance: full-scale checks, seed 42\n");
    criterion_1_counterexample();
    criterion_2_witness();
    criterion_3_gruss_at_scale();
    criterion_4_schwarz_unitary();
    criterion_5_positive_regimes();
    criterion_6_schur();
    criterion_7_choi_lemma();
    criterion_8_stinespring();
    criterion_9_russo_dye();
    criterion_10_crossval();
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}

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

#include "grusskit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "grusskit/block_positivity.hpp"
#include "grusskit/chebyshev.hpp"
#include "grusskit/counterexample.hpp"
#include "grusskit/dilation.hpp"
#include "grusskit/eig.hpp"
#include "grusskit/gruss.hpp"
#include "grusskit/io.hpp"
#include "grusskit/rng.hpp"
#include "grusskit/schmidt_falsifier.hpp"
#include "grusskit/svd.hpp"

namespace grusskit::suites {

namespace {

using clock_t_ = std::chrono::steady_clock;

double elapsed(clock_t_::time_point t0) {
    return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

std::size_t scaled(std::size_t canonical, double scale) {
    const double v = std::round(static_cast<double>(canonical) * scale);
    return std::max<std::size_t>(1, static_cast<std::size_t>(v));
}

// Trials write into pre-sized slots, so the reduction is deterministic
// regardless of scheduling.
template <typename F>
void parallel_trials(std::size_t n, F&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    hw = std::clamp(hw, 1u, 8u);
    if (hw <= 1 || n < 8) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < hw; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

} // namespace

std::vector<std::pair<std::string, MapRep>> gruss_map_zoo(std::uint64_t seed) {
    std::vector<std::pair<std::string, MapRep>> zoo;
    zoo.emplace_back("reduction(3)", reduction_map(3));
    zoo.emplace_back("isotropic(3,-0.16)", isotropic_map(3, -0.16));
    std::uint64_t idx = 0;
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t r = 1; r <= 3; ++r) {
            zoo.emplace_back("cp(" + std::to_string(n) + "," + std::to_string(r) + ")",
                             random_unital_cp(n, r, seed + 7000 + idx));
            ++idx;
        }
    return zoo;
}

SuiteResult counterexample_suite() {
    const auto t0 = clock_t_::now();
    const CounterexampleReport rep = transpose_counterexample();
    SuiteResult res;
    res.name = "counterexample-exact";
    res.trials = 1;
    res.failures = rep.ok ? 0 : 1;
    res.pass = rep.ok;
    res.worst = rep.gruss.margin;
    res.note = "defect " + fmt(rep.gruss.defect) + " > bound " + fmt(rep.gruss.bound);
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult falsifier_witness_suite(std::uint64_t seed) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "falsifier-witness";
    res.trials = 4;

    const MapRep th2 = transpose_map(2);
    const auto w = k_positivity_falsify(th2, 2, 32, 200, seed);
    const double oracle = min_eig_herm(th2.choi()); // swap operator: -1
    if (!w || std::abs(w->value - oracle) > 1e-6 || std::abs(w->value + 1.0) > 1e-6)
        ++res.failures;
    res.worst = w ? w->value : 0.0;

    if (k_positivity_falsify(th2, 1, 32, 200, seed)) ++res.failures;

    // the falsifier must also expose the reduction map at rank 2
    const auto wr = k_positivity_falsify(reduction_map(3), 2, 32, 200, seed);
    if (!wr || std::abs(wr->value + 0.5) > 1e-6) ++res.failures;

    // and stay silent for a genuinely 2-positive map
    if (k_positivity_falsify(isotropic_map(3, -0.16), 2, 32, 200, seed))
        ++res.failures;

    res.pass = res.failures == 0;
    res.note = "swap witness " + fmt(res.worst) + ", reduction rank-2 witness " +
               fmt(wr ? wr->value : 0.0);
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult gruss_random_pairs_suite(std::uint64_t seed, std::size_t pairs_per_map,
                                     const Tolerance& tol) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "gruss-random-pairs";
    const auto zoo = gruss_map_zoo(seed);
    double worst = 1e300;
    for (std::size_t mi = 0; mi < zoo.size(); ++mi) {
        const MapRep& phi = zoo[mi].second;
        const std::size_t n = phi.dim_in();
        std::vector<double> margins(pairs_per_map);
        std::vector<char> holds(pairs_per_map);
        parallel_trials(pairs_per_map, [&](std::size_t t) {
            Rng rng(seed + mi * 1000003ull + t);
            const Matrix a = random_matrix(n, n, rng);
            const Matrix b = random_matrix(n, n, rng);
            const GrussReport g = gruss_check(phi, a, b, tol);
            margins[t] = g.margin;
            holds[t] = g.holds ? 1 : 0;
        });
        for (std::size_t t = 0; t < pairs_per_map; ++t) {
            res.trials += 1;
            if (!holds[t] || margins[t] < -1e-8) ++res.failures;
            worst = std::min(worst, margins[t]);
        }
    }
    res.worst = worst;
    res.pass = res.failures == 0;
    res.note = std::to_string(zoo.size()) + " maps, worst margin " + fmt(worst);
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult schwarz_unitary_suite(std::uint64_t seed, std::size_t pairs_per_map) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "schwarz-unitary";
    // the genuinely 2-positive members of the zoo (CP family + isotropic)
    std::vector<std::pair<std::string, MapRep>> maps;
    for (auto& entry : gruss_map_zoo(seed))
        if (entry.first != "reduction(3)") maps.push_back(std::move(entry));
    double worst = -1e300;
    for (std::size_t mi = 0; mi < maps.size(); ++mi) {
        const MapRep& phi = maps[mi].second;
        const std::size_t n = phi.dim_in();
        std::vector<double> gap(pairs_per_map);
        std::vector<char> ok(pairs_per_map);
        parallel_trials(pairs_per_map, [&](std::size_t t) {
            Rng rng(seed + 31337 + mi * 1000003ull + t);
            const Matrix u = random_isometry(n, n, rng);
            const Matrix v = random_isometry(n, n, rng);
            ok[t] = defect_schwarz_check(phi, u, v, 1e-8) ? 1 : 0;
            const SchwarzSides s = defect_schwarz_sides(phi, u, v);
            gap[t] = s.lhs_sq - s.rhs;
        });
        for (std::size_t t = 0; t < pairs_per_map; ++t) {
            res.trials += 1;
            if (!ok[t]) ++res.failures;
            worst = std::max(worst, gap[t]);
        }
    }
    res.worst = worst;
    res.pass = res.failures == 0;
    res.note = std::to_string(maps.size()) + " maps, worst lhs^2-rhs " + fmt(worst);
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult gruss_commuting_normal_suite(std::uint64_t seed, std::size_t trials,
                                         const Tolerance& tol) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "gruss-commuting-normal";
    const MapRep th3 = transpose_map(3);
    const CommutingSuiteReport rep = commuting_normal_suite(th3, trials, seed, tol);
    res.trials = rep.trials;
    res.failures = rep.trials - rep.passes;
    res.worst = rep.worst_margin;
    res.pass = res.failures == 0;
    res.note = "transpose(3), worst margin " + fmt(rep.worst_margin);
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult gruss_cp_arbitrary_suite(std::uint64_t seed, std::size_t trials,
                                     const Tolerance& tol) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "gruss-cp-arbitrary";
    const MapRep phi = random_unital_cp(3, 2, seed + 99);
    std::vector<double> margins(trials);
    std::vector<char> holds(trials);
    parallel_trials(trials, [&](std::size_t t) {
        Rng rng(seed + 52000 + t);
        const Matrix a = random_matrix(3, 3, rng);
        const Matrix b = random_matrix(3, 3, rng);
        const GrussReport g = gruss_check(phi, a, b, tol);
        margins[t] = g.margin;
        holds[t] = g.holds ? 1 : 0;
    });
    double worst = 1e300;
    for (std::size_t t = 0; t < trials; ++t) {
        res.trials += 1;
        if (!holds[t]) ++res.failures;
        worst = std::min(worst, margins[t]);
    }
    res.worst = worst;
    res.pass = res.failures == 0;
    res.note = "cp(3,2) on arbitrary pairs, worst margin " + fmt(worst);
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult schur_equivalence_suite(std::uint64_t seed, std::size_t trials) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "schur-equivalence";
    std::size_t skipped = 0;
    double closest = 1e300;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(seed + 61000 + t);
        const std::size_t td = 2 + (t % 2);
        const std::size_t rd = 2 + ((t / 2) % 2);
        SchurTriple triple;
        if (t % 2 == 0) {
            // PSD by construction, pivot block bounded away from zero
            const Matrix g = random_matrix(td + rd + 2, td + rd, rng);
            Matrix gram = g.adjoint() * g;
            for (std::size_t i = 0; i < td + rd; ++i) gram(i, i) += 1e-3;
            triple = {gram.submatrix(0, 0, td, td), gram.submatrix(0, td, td, rd),
                      gram.submatrix(td, td, rd, rd)};
        } else {
            triple.t = random_hermitian(td, rng.next_u64());
            triple.s = random_matrix(td, rd, rng);
            for (int attempt = 0; attempt < 50; ++attempt) {
                triple.r = random_hermitian(rd, rng.next_u64());
                const std::vector<double> ev = eigvalsh(triple.r);
                double mn = 1e300;
                for (double v : ev) mn = std::min(mn, std::abs(v));
                if (mn > 1e-3) break;
            }
        }
        const Matrix assembled = triple.assemble();
        const std::vector<double> ev = eigvalsh(assembled);
        const double scale = std::max(std::abs(ev.front()), std::abs(ev.back()));
        const double margin = ev.front() / std::max(1.0, scale);
        closest = std::min(closest, std::abs(margin));
        if (std::abs(margin) <= 1e-6) {
            ++skipped; // boundary verdicts are legitimately unstable
            continue;
        }
        res.trials += 1;
        const bool direct = margin > 0.0;
        const bool schur = schur_positivity(triple);
        if (direct != schur) ++res.failures;
    }
    res.worst = closest;
    res.pass = res.failures == 0;
    res.note = std::to_string(skipped) + " boundary cases skipped";
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult choi_lemma_suite(std::uint64_t seed, std::size_t trials_per_map) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "choi-lemma";
    std::vector<std::pair<std::string, MapRep>> maps;
    maps.emplace_back("transpose(2)", transpose_map(2));
    maps.emplace_back("transpose(3)", transpose_map(3));
    maps.emplace_back("reduction(3)", reduction_map(3));
    double worst = 1e300;
    for (std::size_t mi = 0; mi < maps.size(); ++mi) {
        const MapRep& phi = maps[mi].second;
        const std::size_t n = phi.dim_in();
        Rng rng(seed + 71000 + mi);
        for (std::size_t t = 0; t < trials_per_map; ++t) {
            const auto [x, y] = random_premise_pair(n, rng);
            const Matrix premise = block_assemble({{x, y}, {y.adjoint(), x}});
            const Matrix conclusion = block_assemble(
                {{apply(phi, x), apply(phi, y)},
                 {apply(phi, y.adjoint()), apply(phi, x)}});
            res.trials += 1;
            const double pmin = min_eig_herm(premise);
            const double cmin = min_eig_herm(conclusion);
            worst = std::min(worst, cmin);
            // premise holds by construction; conclusion must be PSD for
            // these positive maps
            if (pmin < -1e-8 || cmin < -1e-8) ++res.failures;
        }
    }
    res.worst = worst;
    res.pass = res.failures == 0;
    res.note = "worst conclusion min-eig " + fmt(worst);
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult stinespring_suite(std::uint64_t seed, std::size_t maps) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "stinespring";
    double worst = 0.0;
    for (std::size_t t = 0; t < maps; ++t) {
        const std::size_t n = 2 + (t % 3);
        const std::size_t r = 1 + ((t / 3) % 3);
        MapRep phi = random_unital_cp(n, r, seed + 81000 + t);
        // alternate between the cached Kraus family and the
        // Choi-eigendecomposition route
        if (t % 2 == 1) phi = MapRep(n, n, phi.choi());
        const StinespringDilation dil = stinespring(phi);
        res.trials += 1;
        double err = op_norm(dil.v.adjoint() * dil.v - Matrix::identity(n));
        Rng rng(seed + 82000 + t);
        const Matrix eye_r = Matrix::identity(dil.env_dim);
        for (int k = 0; k < 20; ++k) {
            const Matrix x = random_matrix(n, n, rng);
            err = std::max(err, max_abs_diff(dil.v.adjoint() * kron(x, eye_r) * dil.v,
                                             apply(phi, x)));
        }
        worst = std::max(worst, err);
        if (err > 1e-10) ++res.failures;
    }
    res.worst = worst;
    res.pass = res.failures == 0;
    res.note = "worst isometry/dilation error " + fmt(worst);
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult russo_dye_suite(std::uint64_t seed, std::size_t trials) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "russo-dye";
    double worst = 0.0;
    const double norms[3] = {0.1, 1.0, 10.0};
    for (std::size_t t = 0; t <= trials; ++t) {
        Matrix a;
        if (t == trials) {
            a = Matrix::zero(3, 3); // explicit zero-matrix case
        } else {
            Rng rng(seed + 91000 + t);
            const std::size_t n = 2 + (t % 4);
            a = random_matrix(n, n, rng);
            a *= cx(norms[t % 3] / op_norm(a));
        }
        const UnitaryDecomposition d = russo_dye_decompose(a);
        res.trials += 1;
        double wsum = 0.0;
        for (double w : d.weights) wsum += w;
        Matrix rec(a.rows(), a.cols());
        double err = std::abs(wsum - 1.0) > 1e-12 ? 1.0 : 0.0;
        const Matrix eye = Matrix::identity(a.rows());
        for (std::size_t i = 0; i < d.unitaries.size(); ++i) {
            err = std::max(err, op_norm(d.unitaries[i].adjoint() * d.unitaries[i] - eye));
            rec += d.weights[i] * d.unitaries[i];
        }
        rec *= cx(d.scale);
        err = std::max(err, max_abs_diff(rec, a));
        worst = std::max(worst, err);
        if (err > 1e-10) ++res.failures;
    }
    res.worst = worst;
    res.pass = res.failures == 0;
    res.note = "worst reconstruction/unitarity error " + fmt(worst);
    res.seconds = elapsed(t0);
    return res;
}

double chebyshev_bruteforce_value(const Matrix& a, std::size_t grid_points) {
    const std::size_t n = a.rows();
    const ShiftNormEvaluator eval(a);
    const std::size_t m = std::max<std::size_t>(grid_points, 65) | 1; // odd
    cx center = a.trace() / static_cast<double>(n);
    double half = 2.4 * op_norm(a) + 1e-12;

    // Flat scans of a shrinking window. The next window is the bounding
    // box of every cell scoring within 1.5 cells of the incumbent: by the
    // Lipschitz bound the true minimizer always lies inside it, so the
    // refinement cannot lose a thin valley the way argmin-centered
    // refinement can.
    double best = eval.value(center);
    for (int stage = 0; stage < 5; ++stage) {
        const double cell = 2.0 * half / static_cast<double>(m - 1);
        double keep = best + 1.5 * cell;
        double lox = center.real() + half, hix = center.real() - half;
        double loy = center.imag() + half, hiy = center.imag() - half;
        for (std::size_t iy = 0; iy < m; ++iy) {
            const double y = center.imag() - half + iy * cell;
            for (std::size_t ix = 0; ix < m; ++ix) {
                const cx lam(center.real() - half + ix * cell, y);
                if (eval.lower_sq(lam) >= keep * keep) continue;
                const double v = eval.value(lam);
                if (v <= keep) {
                    lox = std::min(lox, lam.real());
                    hix = std::max(hix, lam.real());
                    loy = std::min(loy, lam.imag());
                    hiy = std::max(hiy, lam.imag());
                    if (v < best) {
                        best = v;
                        keep = std::min(keep, best + 1.5 * cell);
                    }
                }
            }
        }
        center = cx(0.5 * (lox + hix), 0.5 * (loy + hiy));
        half = 0.5 * std::max(hix - lox, hiy - loy) + 2.0 * cell;
        if (half <= 0.0 || cell < 1e-14) break;
    }
    return best;
}

SuiteResult chebyshev_crossval_suite(std::uint64_t seed, std::size_t normal_trials,
                                     std::size_t nonnormal_trials) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "chebyshev-crossval";
    Tolerance tol;
    tol.solve_tol = 1e-8;
    double worst = 0.0;

    std::vector<double> errs(normal_trials + nonnormal_trials, 0.0);
    parallel_trials(normal_trials + nonnormal_trials, [&](std::size_t t) {
        if (t < normal_trials) {
            const std::size_t n = 2 + (t % 4);
            const Matrix a = random_normal_commuting_pair(n, seed + 11000 + t).first;
            const double r_eig = smallest_enclosing_disk(normal_eigenvalues(a)).radius;
            const double r_gen = chebyshev_radius_general(a, tol).radius;
            errs[t] = std::abs(r_eig - r_gen);
        } else {
            Rng rng(seed + 12000 + t);
            const std::size_t n = 2 + (t % 2);
            const Matrix a = random_matrix(n, n, rng);
            const double r_solver = chebyshev_radius(a, tol).radius;
            const double r_oracle = chebyshev_bruteforce_value(a);
            errs[t] = std::abs(r_solver - r_oracle);
        }
    });
    for (std::size_t t = 0; t < errs.size(); ++t) {
        res.trials += 1;
        worst = std::max(worst, errs[t]);
        if (errs[t] > 1e-6) ++res.failures;
    }
    res.worst = worst;
    res.pass = res.failures == 0;
    res.note = "worst route disagreement " + fmt(worst);
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult block_pairing_suite(std::uint64_t seed, std::size_t trials) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "block-pairing";
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(seed + 13000 + t);
        const std::size_t pd = 1 + (t % 3);
        const std::size_t qd = 1 + ((t / 3) % 3);
        const Matrix g = random_matrix(pd + qd + 2, pd + qd, rng);
        const Matrix gram = g.adjoint() * g;
        const Block2x2 blk{gram.submatrix(0, 0, pd, pd),
                           gram.submatrix(pd, pd, qd, qd),
                           gram.submatrix(0, pd, pd, qd)};
        const BlockPairingReport rep =
            check_block_pairing(blk, 1e-8, 32, seed + 14000 + t);
        res.trials += 1;
        if (!rep.block_psd || !rep.pairing_ok || !rep.norm_ok) ++res.failures;
    }
    res.pass = res.failures == 0;
    res.note = "Gram-built PSD blocks";
    res.seconds = elapsed(t0);
    return res;
}

SuiteResult schwarz_violation_rate_suite(std::uint64_t seed, std::size_t trials) {
    const auto t0 = clock_t_::now();
    SuiteResult res;
    res.name = "schwarz-violation-rate";
    res.contractual = false;
    std::vector<std::pair<std::string, MapRep>> maps;
    maps.emplace_back("transpose(2)", transpose_map(2));
    maps.emplace_back("reduction(3)", reduction_map(3));
    std::string note;
    for (std::size_t mi = 0; mi < maps.size(); ++mi) {
        const MapRep& phi = maps[mi].second;
        const std::size_t n = phi.dim_in();
        std::size_t violations = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng(seed + 15000 + mi * 1000003ull + t);
            const Matrix u = random_isometry(n, n, rng);
            const Matrix v = random_isometry(n, n, rng);
            const SchwarzSides s = defect_schwarz_sides(phi, u, v);
            res.trials += 1;
            if (s.lhs_sq > s.rhs + 1e-8 * std::max(1.0, s.rhs)) ++violations;
        }
        if (!note.empty()) note += ", ";
        note += maps[mi].first + ": " + std::to_string(violations) + "/" +
                std::to_string(trials);
    }
    res.pass = true; // diagnostic only: positive-not-2-positive maps may violate
    res.note = note;
    res.seconds = elapsed(t0);
    return res;
}

std::vector<SuiteResult> run_all(const SuiteConfig& cfg) {
    std::vector<SuiteResult> out;
    out.push_back(counterexample_suite());
    out.push_back(falsifier_witness_suite(cfg.seed));
    out.push_back(gruss_random_pairs_suite(cfg.seed, scaled(1000, cfg.scale), cfg.tol));
    out.push_back(schwarz_unitary_suite(cfg.seed, scaled(200, cfg.scale)));
    out.push_back(gruss_commuting_normal_suite(cfg.seed, scaled(500, cfg.scale), cfg.tol));
    out.push_back(gruss_cp_arbitrary_suite(cfg.seed, scaled(500, cfg.scale), cfg.tol));
    out.push_back(schur_equivalence_suite(cfg.seed, scaled(200, cfg.scale)));
    out.push_back(choi_lemma_suite(cfg.seed, scaled(200, cfg.scale)));
    out.push_back(stinespring_suite(cfg.seed, scaled(50, cfg.scale)));
    out.push_back(russo_dye_suite(cfg.seed, scaled(100, cfg.scale)));
    out.push_back(chebyshev_crossval_suite(cfg.seed, scaled(50, cfg.scale),
                                           scaled(20, cfg.scale)));
    out.push_back(block_pairing_suite(cfg.seed, scaled(200, cfg.scale)));
    out.push_back(schwarz_violation_rate_suite(cfg.seed, scaled(200, cfg.scale)));
    return out;
}

std::string render_table(const std::vector<SuiteResult>& results) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%-24s %-6s %8s %8s %12s %8s  %s\n", "suite",
                  "status", "trials", "failures", "worst", "sec", "note");
    out += line;
    for (const SuiteResult& r : results) {
        std::snprintf(line, sizeof line, "%-24s %-6s %8zu %8zu %12.3e %8.2f  %s\n",
                      r.name.c_str(),
                      r.contractual ? (r.pass ? "PASS" : "FAIL") : "info", r.trials,
                      r.failures, r.worst, r.seconds, r.note.c_str());
        out += line;
    }
    return out;
}

std::string render_json(const std::vector<SuiteResult>& results) {
    std::string out = "[";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const SuiteResult& r = results[i];
        if (i) out += ", ";
        out += "{\"name\": \"" + r.name + "\", \"pass\": " +
               (r.pass ? "true" : "false") +
               ", \"contractual\": " + (r.contractual ? "true" : "false") +
               ", \"trials\": " + std::to_string(r.trials) +
               ", \"failures\": " + std::to_string(r.failures) +
               ", \"worst\": " + io::format_real(r.worst) + ", \"note\": \"" +
               r.note + "\"}";
    }
    out += "]\n";
    return out;
}

bool all_contractual_pass(const std::vector<SuiteResult>& results) {
    for (const SuiteResult& r : results)
        if (r.contractual && !r.pass) return false;
    return true;
}

} // namespace grusskit::suites

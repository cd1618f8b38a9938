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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grusskit/counterexample.hpp"
#include "grusskit/dilation.hpp"
#include "grusskit/gruss.hpp"
#include "grusskit/io.hpp"
#include "grusskit/schmidt_falsifier.hpp"
#include "grusskit/simd/kernels.hpp"
#include "grusskit/suites.hpp"

namespace {

using namespace grusskit;

// exit codes: 0 ok, 1 mathematical failure, 2 parse error, 3 precondition
constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + out_path);
    out << text;
}

int cmd_paper_example(bool machine, const std::string& out_path) {
    const CounterexampleReport rep = transpose_counterexample();
    emit(machine ? counterexample_json(rep) : counterexample_text(rep), out_path);
    return rep.ok ? kExitOk : kExitMathFailure;
}

int cmd_suite(std::uint64_t seed, std::size_t trials, std::optional<double> tol,
              bool machine, const std::string& out_path) {
    suites::SuiteConfig cfg;
    cfg.seed = seed;
    cfg.scale = static_cast<double>(trials) / 1000.0;
    if (tol) cfg.tol.solve_tol = *tol;
    cfg.tol.validate();
    const auto results = suites::run_all(cfg);
    emit(machine ? suites::render_json(results) : suites::render_table(results),
         out_path);
    return suites::all_contractual_pass(results) ? kExitOk : kExitMathFailure;
}

int cmd_defect(const std::string& map_file, const std::string& a_file,
               const std::string& b_file, bool machine,
               const std::string& out_path) {
    const MapRep phi = io::load_map(map_file);
    const Matrix a = io::load_matrix(a_file);
    const Matrix b = io::load_matrix(b_file);
    const GrussReport rep = gruss_check(phi, a, b);
    if (machine) {
        emit(io::gruss_report_to_json(rep), out_path);
    } else {
        std::string text;
        text += "defect   = " + io::format_real(rep.defect) + "\n";
        text += "radius_a = " + io::format_real(rep.radius_a.radius) + "\n";
        text += "radius_b = " + io::format_real(rep.radius_b.radius) + "\n";
        text += "bound    = " + io::format_real(rep.bound) + "\n";
        text += "margin   = " + io::format_real(rep.margin) + "\n";
        text += std::string("verdict: ") + (rep.holds ? "HOLDS" : "VIOLATED") + "\n";
        emit(text, out_path);
    }
    return kExitOk;
}

int cmd_radius(const std::string& a_file, std::optional<double> tol, bool machine,
               const std::string& out_path) {
    const Matrix a = io::load_matrix(a_file);
    Tolerance t;
    if (tol) t.solve_tol = *tol;
    t.validate();
    const Disk d = chebyshev_radius(a, t);
    if (machine) {
        emit(io::disk_to_json(d) + "\n", out_path);
    } else {
        emit("center = " + io::format_real(d.center.real()) + " + " +
                 io::format_real(d.center.imag()) + "i\nradius = " +
                 io::format_real(d.radius) + "\n",
             out_path);
    }
    return kExitOk;
}

int cmd_decompose(const std::string& a_file, bool machine,
                  const std::string& out_path) {
    const Matrix a = io::load_matrix(a_file);
    const UnitaryDecomposition d = russo_dye_decompose(a);
    if (machine) {
        emit(io::decomposition_to_json(d), out_path);
    } else {
        std::string text = "scale = " + io::format_real(d.scale) + "\n";
        for (std::size_t i = 0; i < d.unitaries.size(); ++i)
            text += "weight " + io::format_real(d.weights[i]) + " unitary " +
                    io::matrix_to_json(d.unitaries[i]);
        emit(text, out_path);
    }
    return kExitOk;
}

int cmd_dilate(const std::string& map_file, bool machine,
               const std::string& out_path) {
    const MapRep phi = io::load_map(map_file);
    const StinespringDilation d = stinespring(phi);
    if (machine) {
        emit(io::dilation_to_json(d), out_path);
    } else {
        emit("environment dimension = " + std::to_string(d.env_dim) +
                 "\nisometry v = " + io::matrix_to_json(d.v),
             out_path);
    }
    return kExitOk;
}

int cmd_falsify(const std::string& map_file, std::size_t k, std::uint64_t seed,
                std::size_t restarts, std::size_t iters, bool machine,
                const std::string& out_path) {
    const MapRep phi = io::load_map(map_file);
    const auto w = k_positivity_falsify(phi, k, restarts, iters, seed);
    if (machine) {
        emit(w ? io::witness_to_json(*w) : std::string("{\"witness\": null}\n"),
             out_path);
    } else if (w) {
        emit("witness found: Schmidt rank " + std::to_string(w->k) +
                 ", value = " + io::format_real(w->value) + "\n",
             out_path);
    } else {
        emit("no witness found (evidence of " + std::to_string(k) +
                 "-positivity, not a proof)\n",
             out_path);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"grusskit: numerical checks of Gruss-type multiplicativity "
                 "bounds for positive maps on matrix algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::optional<double> tol;
    bool machine = false;
    std::string out_path;
    app.add_option("--seed", seed, "PRNG seed (default 42)");
    app.add_option("--trials", trials, "trial budget for suites (default 1000)");
    app.add_option("--tol", tol, "override the radius-solver tolerance");
    app.add_flag("--machine", machine, "machine-readable (JSON) output");
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* paper = app.add_subcommand(
        "paper-example", "reproduce the transpose-map counterexample exactly");
    auto* suite = app.add_subcommand("suite", "run every verification suite");

    std::string map_file, a_file, b_file;
    auto* defect_cmd =
        app.add_subcommand("defect", "defect and Gruss bound for a map and a pair");
    defect_cmd->add_option("map", map_file, "map file")->required();
    defect_cmd->add_option("a", a_file, "matrix file")->required();
    defect_cmd->add_option("b", b_file, "matrix file")->required();

    auto* radius_cmd =
        app.add_subcommand("radius", "Chebyshev radius (distance to scalars)");
    radius_cmd->add_option("a", a_file, "matrix file")->required();

    auto* decompose_cmd = app.add_subcommand(
        "decompose", "two-unitary convex decomposition of a matrix");
    decompose_cmd->add_option("a", a_file, "matrix file")->required();

    auto* dilate_cmd =
        app.add_subcommand("dilate", "Stinespring dilation of a unital CP map");
    dilate_cmd->add_option("map", map_file, "map file")->required();

    std::size_t k = 2, restarts = 32, iters = 200;
    auto* falsify_cmd = app.add_subcommand(
        "falsify", "search for a Schmidt-rank-k positivity violation");
    falsify_cmd->add_option("map", map_file, "map file")->required();
    falsify_cmd->add_option("k", k, "Schmidt rank bound")->required();
    falsify_cmd->add_option("--restarts", restarts, "random restarts (default 32)");
    falsify_cmd->add_option("--iters", iters, "iterations per restart (default 200)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (paper->parsed()) return cmd_paper_example(machine, out_path);
        if (suite->parsed()) return cmd_suite(seed, trials, tol, machine, out_path);
        if (defect_cmd->parsed())
            return cmd_defect(map_file, a_file, b_file, machine, out_path);
        if (radius_cmd->parsed()) return cmd_radius(a_file, tol, machine, out_path);
        if (decompose_cmd->parsed()) return cmd_decompose(a_file, machine, out_path);
        if (dilate_cmd->parsed()) return cmd_dilate(map_file, machine, out_path);
        if (falsify_cmd->parsed())
            return cmd_falsify(map_file, k, seed, restarts, iters, machine, out_path);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParse;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPrecondition;
    }
    return kExitOk;
}

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

#include <doctest.h>

#include <json.hpp>

#include "grusskit/counterexample.hpp"
#include "grusskit/dilation.hpp"
#include "grusskit/gruss.hpp"
#include "grusskit/io.hpp"
#include "grusskit/rng.hpp"
#include "grusskit/schmidt_falsifier.hpp"
#include "test_helpers.hpp"

using namespace grusskit;

TEST_SUITE("io") {

TEST_CASE("matrix round-trips are entrywise identical") {
    Rng rng(1);
    for (int t = 0; t < 10; ++t) {
        const Matrix m = random_matrix(1 + t % 4, 1 + (t / 2) % 4, rng);
        const Matrix back = io::matrix_from_json(io::matrix_to_json(m));
        CHECK(back.rows() == m.rows());
        CHECK(back.cols() == m.cols());
        CHECK(max_abs_diff(back, m) == 0.0);
    }
}

TEST_CASE("map round-trips preserve the Choi matrix exactly") {
    for (const MapRep& phi :
         {transpose_map(2), reduction_map(3), random_unital_cp(2, 2, 4)}) {
        const MapRep back = io::map_from_json(io::map_to_json(phi));
        CHECK(back.dim_in() == phi.dim_in());
        CHECK(back.dim_out() == phi.dim_out());
        CHECK(max_abs_diff(back.choi(), phi.choi()) == 0.0);
        CHECK_FALSE(back.has_kraus()); // kraus is derived data, never serialized
    }
}

TEST_CASE("writers emit 17 significant digits") {
    CHECK(io::format_real(1.0 / 3.0) == "0.33333333333333331");
    CHECK(io::format_real(6.0) == "6");
    const Matrix m{{cx(1.0 / 3.0)}};
    CHECK(io::matrix_to_json(m).find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("parse errors are typed and descriptive") {
    CHECK_THROWS_AS(io::matrix_from_json("not json"), ParseError);
    CHECK_THROWS_AS(io::matrix_from_json("{\"rows\": 2, \"cols\": 2}"), ParseError);
    CHECK_THROWS_AS(
        io::matrix_from_json(
            "{\"rows\": 2, \"cols\": 2, \"data\": [[1, 0], [2, 0], [3, 0]]}"),
        ParseError);
    CHECK_THROWS_AS(
        io::matrix_from_json("{\"rows\": 1, \"cols\": 1, \"data\": [[1]]}"),
        ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(
                        "{\"rows\": 1, \"cols\": 1, \"data\": [[1e999, 0]]}"),
                    ParseError);
    CHECK_THROWS_AS(io::map_from_json("{\"dim_in\": 2, \"dim_out\": 2}"), ParseError);
    CHECK_THROWS_AS(io::load_matrix("/nonexistent/file.json"), ParseError);
    // choi shape mismatch
    const std::string bad_map = "{\"dim_in\": 2, \"dim_out\": 2, \"choi\": " +
                                io::matrix_to_json(Matrix::identity(3)) + "}";
    CHECK_THROWS_AS(io::map_from_json(bad_map), ParseError);
}

TEST_CASE("report serializations are valid JSON and deterministic") {
    const CounterexampleReport rep = transpose_counterexample();
    const std::string j1 = counterexample_json(rep);
    const std::string j2 = counterexample_json(transpose_counterexample());
    CHECK(j1 == j2);
    const auto parsed = nlohmann::json::parse(j1);
    CHECK(parsed["ok"].get<bool>());
    CHECK(parsed["gruss"]["holds"].get<bool>() == false);

    Matrix a3(3, 3);
    a3.set_submatrix(0, 0, Matrix{{cx(1), cx(3)}, {cx(3), cx(3)}});
    const GrussReport g =
        gruss_check(transpose_map(3), a3, Matrix::diag({cx(1), cx(3), cx(0)}));
    const auto gj = nlohmann::json::parse(io::gruss_report_to_json(g));
    CHECK(gj["defect"].get<double>() == doctest::Approx(6.0));
    CHECK(gj["radius_b"]["radius"].get<double>() == doctest::Approx(1.5));

    const auto w = k_positivity_falsify(transpose_map(2), 2, 8, 100, 0);
    REQUIRE(w.has_value());
    const auto wj = nlohmann::json::parse(io::witness_to_json(*w));
    CHECK(wj["k"].get<int>() == 2);
    CHECK(wj["value"].get<double>() == doctest::Approx(-1.0));
}

TEST_CASE("chain trace serialization") {
    Rng rng(13);
    const Matrix a = random_matrix(2, 2, rng), b = random_matrix(2, 2, rng);
    const DefectChainTrace tr = defect_chain_trace(transpose_map(2), a, b);
    const auto tj = nlohmann::json::parse(io::chain_trace_to_json(tr));
    CHECK(tj["links"].size() == tr.links.size());
    CHECK(tj["all_pass"].get<bool>() == tr.all_pass);
    CHECK(tj["links"][0]["lhs"].get<double>() == doctest::Approx(tr.links[0].lhs));
}

TEST_CASE("file save and load") {
    Rng rng(8);
    const Matrix m = random_matrix(3, 2, rng);
    const std::string path = "test_io_tmp_matrix.json";
    io::save_matrix(path, m);
    CHECK(max_abs_diff(io::load_matrix(path), m) == 0.0);
    std::remove(path.c_str());

    const MapRep phi = random_unital_cp(2, 2, 9);
    const std::string mpath = "test_io_tmp_map.json";
    io::save_map(mpath, phi);
    CHECK(max_abs_diff(io::load_map(mpath).choi(), phi.choi()) == 0.0);
    std::remove(mpath.c_str());
}

} // TEST_SUITE

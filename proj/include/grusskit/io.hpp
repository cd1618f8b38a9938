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

#include "grusskit/dilation.hpp"
#include "grusskit/enclosing_disk.hpp"
#include "grusskit/gruss.hpp"
#include "grusskit/map_rep.hpp"
#include "grusskit/matrix.hpp"
#include "grusskit/schmidt_falsifier.hpp"

namespace grusskit::io {

// Matrix documents: {"rows": R, "cols": C, "data": [[re, im], ...]} with
// data row-major. Map documents: {"dim_in": n, "dim_out": m, "choi":
// <matrix>}; Kraus families are derived data and never serialized.
// Writers emit 17 significant digits; readers reject non-finite entries
// and shape mismatches with ParseError.

std::string format_real(double v);

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);
Matrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const Matrix& m);

std::string map_to_json(const MapRep& phi);
MapRep map_from_json(const std::string& text);
MapRep load_map(const std::string& path);
void save_map(const std::string& path, const MapRep& phi);

std::string disk_to_json(const Disk& d);
std::string gruss_report_to_json(const GrussReport& rep);
std::string witness_to_json(const SchmidtWitness& w);
std::string decomposition_to_json(const UnitaryDecomposition& d);
std::string dilation_to_json(const StinespringDilation& d);
std::string chain_trace_to_json(const DefectChainTrace& t);

} // namespace grusskit::io

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

#include "grusskit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace grusskit::io {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
    }
}

std::size_t get_count(const json& j, const char* field, const char* what) {
    if (!j.contains(field) || !j[field].is_number_unsigned())
        throw ParseError(std::string(what) + ": missing or invalid '" + field + "'");
    return j[field].get<std::size_t>();
}

Matrix matrix_from(const json& j, const char* what) {
    const std::size_t rows = get_count(j, "rows", what);
    const std::size_t cols = get_count(j, "cols", what);
    if (rows == 0 || cols == 0)
        throw ParseError(std::string(what) + ": zero dimension");
    if (!j.contains("data") || !j["data"].is_array())
        throw ParseError(std::string(what) + ": missing 'data' array");
    const json& data = j["data"];
    if (data.size() != rows * cols)
        throw ParseError(std::string(what) + ": data length " +
                         std::to_string(data.size()) + " != rows*cols " +
                         std::to_string(rows * cols));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const json& pair = data[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number())
            throw ParseError(std::string(what) + ": data entry " + std::to_string(i) +
                             " is not a [re, im] pair");
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ParseError(std::string(what) + ": non-finite entry at index " +
                             std::to_string(i));
        m.data()[i] = cx(re, im);
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

void append_matrix(std::string& out, const Matrix& m) {
    out += "{\"rows\": " + std::to_string(m.rows()) +
           ", \"cols\": " + std::to_string(m.cols()) + ", \"data\": [";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ", ";
        out += "[" + format_real(m.data()[i].real()) + ", " +
               format_real(m.data()[i].imag()) + "]";
    }
    out += "]}";
}

} // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string matrix_to_json(const Matrix& m) {
    std::string out;
    append_matrix(out, m);
    out += "\n";
    return out;
}

Matrix matrix_from_json(const std::string& text) {
    return matrix_from(parse(text, "matrix"), "matrix");
}

Matrix load_matrix(const std::string& path) {
    return matrix_from_json(read_file(path));
}

void save_matrix(const std::string& path, const Matrix& m) {
    write_file(path, matrix_to_json(m));
}

std::string map_to_json(const MapRep& phi) {
    std::string out = "{\"dim_in\": " + std::to_string(phi.dim_in()) +
                      ", \"dim_out\": " + std::to_string(phi.dim_out()) +
                      ", \"choi\": ";
    append_matrix(out, phi.choi());
    out += "}\n";
    return out;
}

MapRep map_from_json(const std::string& text) {
    const json j = parse(text, "map");
    const std::size_t n = get_count(j, "dim_in", "map");
    const std::size_t m = get_count(j, "dim_out", "map");
    if (!j.contains("choi"))
        throw ParseError("map: missing 'choi'");
    Matrix choi = matrix_from(j["choi"], "map choi");
    if (choi.rows() != n * m || choi.cols() != n * m)
        throw ParseError("map: choi must be " + std::to_string(n * m) + "x" +
                         std::to_string(n * m));
    return MapRep(n, m, std::move(choi));
}

MapRep load_map(const std::string& path) { return map_from_json(read_file(path)); }

void save_map(const std::string& path, const MapRep& phi) {
    write_file(path, map_to_json(phi));
}

std::string disk_to_json(const Disk& d) {
    return "{\"center_re\": " + format_real(d.center.real()) +
           ", \"center_im\": " + format_real(d.center.imag()) +
           ", \"radius\": " + format_real(d.radius) + "}";
}

std::string gruss_report_to_json(const GrussReport& rep) {
    return "{\"defect\": " + format_real(rep.defect) +
           ", \"bound\": " + format_real(rep.bound) +
           ", \"radius_a\": " + disk_to_json(rep.radius_a) +
           ", \"radius_b\": " + disk_to_json(rep.radius_b) +
           std::string(", \"holds\": ") + (rep.holds ? "true" : "false") +
           ", \"margin\": " + format_real(rep.margin) + "}\n";
}

std::string witness_to_json(const SchmidtWitness& w) {
    std::string out = "{\"k\": " + std::to_string(w.k) +
                      ", \"value\": " + format_real(w.value) + ", \"left\": [";
    for (std::size_t t = 0; t < w.left.size(); ++t) {
        if (t) out += ", ";
        out += "[";
        for (std::size_t i = 0; i < w.left[t].size(); ++i) {
            if (i) out += ", ";
            out += "[" + format_real(w.left[t][i].real()) + ", " +
                   format_real(w.left[t][i].imag()) + "]";
        }
        out += "]";
    }
    out += "], \"right\": [";
    for (std::size_t t = 0; t < w.right.size(); ++t) {
        if (t) out += ", ";
        out += "[";
        for (std::size_t i = 0; i < w.right[t].size(); ++i) {
            if (i) out += ", ";
            out += "[" + format_real(w.right[t][i].real()) + ", " +
                   format_real(w.right[t][i].imag()) + "]";
        }
        out += "]";
    }
    out += "]}\n";
    return out;
}

std::string decomposition_to_json(const UnitaryDecomposition& d) {
    std::string out = "{\"scale\": " + format_real(d.scale) + ", \"weights\": [";
    for (std::size_t i = 0; i < d.weights.size(); ++i) {
        if (i) out += ", ";
        out += format_real(d.weights[i]);
    }
    out += "], \"unitaries\": [";
    for (std::size_t i = 0; i < d.unitaries.size(); ++i) {
        if (i) out += ", ";
        append_matrix(out, d.unitaries[i]);
    }
    out += "]}\n";
    return out;
}

std::string dilation_to_json(const StinespringDilation& d) {
    std::string out = "{\"env_dim\": " + std::to_string(d.env_dim) + ", \"v\": ";
    append_matrix(out, d.v);
    out += "}\n";
    return out;
}

std::string chain_trace_to_json(const DefectChainTrace& t) {
    std::string out = "{\"defect\": " + format_real(t.defect) +
                      ", \"norm_a\": " + format_real(t.norm_a) +
                      ", \"norm_b\": " + format_real(t.norm_b) +
                      std::string(", \"all_pass\": ") + (t.all_pass ? "true" : "false") +
                      ", \"links\": [";
    for (std::size_t i = 0; i < t.links.size(); ++i) {
        if (i) out += ", ";
        out += "{\"name\": \"" + t.links[i].name +
               "\", \"lhs\": " + format_real(t.links[i].lhs) +
               ", \"rhs\": " + format_real(t.links[i].rhs) +
               std::string(", \"pass\": ") + (t.links[i].pass ? "true" : "false") + "}";
    }
    out += "]}\n";
    return out;
}

} // namespace grusskit::io

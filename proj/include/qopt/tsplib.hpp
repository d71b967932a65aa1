// Copyright 2025 qopt-kit developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#ifndef QOPT_TSPLIB_HPP
#define QOPT_TSPLIB_HPP

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qopt/instances.hpp"

namespace qopt {

struct TsplibError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& what) {
    throw TsplibError("TSPLIB parse error at line " + std::to_string(line_no) + ": " + what);
}

} // namespace detail

// Parses a TSPLIB-format TSP instance. Supported weight encodings:
// EUC_2D (rounded Euclidean, nearest integer) and EXPLICIT with
// EDGE_WEIGHT_FORMAT FULL_MATRIX. Any other EDGE_WEIGHT_TYPE raises a
// format error naming the offending keyword.
inline TspInstance parse_tsplib(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    int dimension = -1;
    std::string weight_type;
    std::string weight_format;
    std::vector<std::pair<double, double>> coords;
    std::vector<double> matrix_values;

    enum class Section { None, NodeCoords, EdgeWeights };
    Section section = Section::None;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = detail::trim(line);
        if (t.empty()) continue;
        if (t == "EOF") break;

        // header keys use "KEY : value" or "KEY: value"
        const auto colon = t.find(':');
        std::string key = detail::trim(colon == std::string::npos ? t : t.substr(0, colon));
        std::string value = colon == std::string::npos ? "" : detail::trim(t.substr(colon + 1));

        if (key == "NODE_COORD_SECTION") {
            section = Section::NodeCoords;
            continue;
        }
        if (key == "EDGE_WEIGHT_SECTION") {
            section = Section::EdgeWeights;
            continue;
        }
        if (key == "DISPLAY_DATA_SECTION") {
            section = Section::None;
            continue;
        }

        if (section == Section::NodeCoords) {
            std::istringstream row(t);
            long long id;
            double x, y;
            if (!(row >> id >> x >> y)) detail::parse_fail(line_no, "expected 'id x y'");
            coords.push_back({x, y});
            continue;
        }
        if (section == Section::EdgeWeights) {
            std::istringstream row(t);
            double v;
            while (row >> v) matrix_values.push_back(v);
            if (!row.eof()) detail::parse_fail(line_no, "non-numeric matrix entry");
            continue;
        }

        if (key == "DIMENSION") {
            try {
                dimension = std::stoi(value);
            } catch (const std::exception&) {
                detail::parse_fail(line_no, "bad DIMENSION value '" + value + "'");
            }
        } else if (key == "EDGE_WEIGHT_TYPE") {
            weight_type = value;
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            weight_format = value;
        }
        // NAME, TYPE, COMMENT and other headers are ignored.
    }

    if (dimension < 3) throw TsplibError("TSPLIB: missing or invalid DIMENSION");
    const std::size_t n = static_cast<std::size_t>(dimension);

    if (weight_type == "EUC_2D") {
        if (coords.size() != n)
            throw TsplibError("TSPLIB: NODE_COORD_SECTION has " + std::to_string(coords.size()) +
                              " rows, DIMENSION is " + std::to_string(n));
        std::vector<double> dist(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dx = coords[i].first - coords[j].first;
                const double dy = coords[i].second - coords[j].second;
                // TSPLIB nint convention
                const double d = std::floor(std::sqrt(dx * dx + dy * dy) + 0.5);
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        return TspInstance(dimension, std::move(dist));
    }

    if (weight_type == "EXPLICIT") {
        if (weight_format != "FULL_MATRIX")
            throw TsplibError("TSPLIB: unsupported EDGE_WEIGHT_FORMAT '" + weight_format + "'");
        if (matrix_values.size() != n * n)
            throw TsplibError("TSPLIB: EDGE_WEIGHT_SECTION has " +
                              std::to_string(matrix_values.size()) + " values, expected " +
                              std::to_string(n * n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (matrix_values[i * n + j] != matrix_values[j * n + i])
                    throw TsplibError("TSPLIB: FULL_MATRIX is asymmetric at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        std::vector<double> dist = matrix_values;
        for (std::size_t i = 0; i < n; ++i) dist[i * n + i] = 0.0;
        return TspInstance(dimension, std::move(dist));
    }

    throw TsplibError("TSPLIB: unsupported EDGE_WEIGHT_TYPE '" + weight_type + "'");
}

} // namespace qopt

#endif // QOPT_TSPLIB_HPP

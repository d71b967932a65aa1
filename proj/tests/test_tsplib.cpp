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

#include <string>

#include "catch2/catch_amalgamated.hpp"
#include "qopt/instances.hpp"
#include "qopt/tsplib.hpp"

using namespace qopt;

static const std::string kEuc5 =
    "NAME: toy5\n"
    "TYPE: TSP\n"
    "DIMENSION: 5\n"
    "EDGE_WEIGHT_TYPE: EUC_2D\n"
    "NODE_COORD_SECTION\n"
    "1 0 0\n"
    "2 3 4\n"
    "3 6 0\n"
    "4 3 -4\n"
    "5 10 10\n"
    "EOF\n";

TEST_CASE("EUC_2D distances use nearest-integer rounding") {
    const auto t = parse_tsplib(
        "DIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n"
        "1 0 0\n2 3 4\n3 1 1\nEOF\n");
    CHECK(t.at(0, 1) == 5.0);          // 3-4-5 triangle
    CHECK(t.at(0, 2) == 1.0);          // sqrt(2) rounds to 1
    CHECK(t.at(1, 2) == 4.0);          // sqrt(13) = 3.606 rounds to 4
    CHECK(t.at(1, 0) == t.at(0, 1));
}

TEST_CASE("FULL_MATRIX parses and must be symmetric") {
    const auto t = parse_tsplib(
        "DIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
        "EDGE_WEIGHT_SECTION\n0 2 7\n2 0 5\n7 5 0\nEOF\n");
    CHECK(t.at(0, 2) == 7.0);

    CHECK_THROWS_WITH(
        parse_tsplib("DIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
                     "EDGE_WEIGHT_SECTION\n0 2 7\n3 0 5\n7 5 0\nEOF\n"),
        Catch::Matchers::ContainsSubstring("asymmetric"));
}

TEST_CASE("unsupported weight types are rejected by name") {
    CHECK_THROWS_WITH(parse_tsplib("DIMENSION: 3\nEDGE_WEIGHT_TYPE: GEO\nNODE_COORD_SECTION\n"
                                   "1 0 0\n2 1 1\n3 2 2\nEOF\n"),
                      Catch::Matchers::ContainsSubstring("GEO"));
    CHECK_THROWS_WITH(
        parse_tsplib("DIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: UPPER_ROW\n"
                     "EDGE_WEIGHT_SECTION\n1 2 3\nEOF\n"),
        Catch::Matchers::ContainsSubstring("UPPER_ROW"));
}

TEST_CASE("malformed rows report the line number") {
    CHECK_THROWS_WITH(parse_tsplib("DIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n"
                                   "1 0 0\n2 oops 4\n3 1 1\nEOF\n"),
                      Catch::Matchers::ContainsSubstring("line 5"));
}

TEST_CASE("a parsed file round-trips through subsampling") {
    const auto base = parse_tsplib(kEuc5);
    REQUIRE(base.node_count() == 5);
    const auto sub = subsample_tsp(base, 5, 77);
    // same multiset of the 10 off-diagonal distances
    std::multiset<double> a, b;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            a.insert(base.at(i, j));
            b.insert(sub.at(i, j));
        }
    CHECK(a == b);
}

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

#include <cmath>

#include "catch2/catch_amalgamated.hpp"
#include "qopt/metrics.hpp"
#include "qopt/rng.hpp"

using namespace qopt;

TEST_CASE("relative deviations reproduce hand-computed values") {
    CHECK(rel_deviations(10.0, 10.0, 1.0, 1.0).r_f == 0.0);
    CHECK(std::abs(rel_deviations(11.0, 10.0, 1.0, 1.0).r_f - 0.1) < 1e-15);
    CHECK(rel_deviations(1.0, 1.0, 0.5, 1.0).r_t == -0.5);
    CHECK_THROWS_WITH(rel_deviations(1.0, 0.0, 1.0, 1.0),
                      Catch::Matchers::ContainsSubstring("f_c"));
    CHECK_THROWS_WITH(rel_deviations(1.0, 1.0, 1.0, -2.0),
                      Catch::Matchers::ContainsSubstring("t_c"));
}

TEST_CASE("bucket thresholds follow the published convention") {
    // R_f = -0.07 on a maximization class: within 25% and 10%, not 5%,
    // and worse than the baseline
    std::vector<BaselinedRun> runs;
    runs.push_back({"maxcut", "sa", 9.3, 10.0});
    runs.push_back({"maxcut", "sa", 10.0, 10.0});
    const auto rows = bucket_summary(runs);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].total == 2);
    CHECK(rows[0].within_25 == 2);
    CHECK(rows[0].within_10 == 2);
    CHECK(rows[0].within_5 == 1);
    CHECK(rows[0].no_worse == 1);
}

TEST_CASE("no-worse flips direction for tsp") {
    std::vector<BaselinedRun> runs;
    runs.push_back({"tsp", "sa", 95.0, 100.0});  // shorter tour: no worse
    runs.push_back({"tsp", "sa", 104.0, 100.0}); // longer: worse
    const auto rows = bucket_summary(runs);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].no_worse == 1);
}

TEST_CASE("single-run rows render dashes, counted rows render shares") {
    std::vector<BaselinedRun> runs;
    runs.push_back({"udmis", "qaoa", 5.0, 5.0});
    const auto rows = bucket_summary(runs);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].total == 1);
    CHECK(rows[0].share(rows[0].within_25) == "--");

    runs.push_back({"udmis", "qaoa", 5.0, 5.0});
    const auto rows2 = bucket_summary(runs);
    CHECK(rows2[0].share(rows2[0].within_25) == "100.0%");
}

TEST_CASE("missing baselines are excluded and reported") {
    std::vector<BaselinedRun> runs;
    runs.push_back({"maxcut", "sa", 9.0, std::nullopt});
    runs.push_back({"maxcut", "sa", 9.0, 9.0});
    const auto rows = bucket_summary(runs);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].total == 1);
    CHECK(rows[0].excluded_missing_baseline == 1);
}

TEST_CASE("bucket counts are monotone on random runs") {
    Rng rng(17);
    std::vector<BaselinedRun> runs;
    for (int i = 0; i < 300; ++i) {
        BaselinedRun r;
        r.problem_class = (i % 3 == 0) ? "udmis" : (i % 3 == 1 ? "maxcut" : "tsp");
        r.approach = (i % 2) ? "sa" : "qaoa";
        r.f_c = 10.0;
        r.f_q = 10.0 * (0.6 + 0.8 * rng.unit());
        runs.push_back(r);
    }
    for (const auto& row : bucket_summary(runs)) {
        CHECK(row.within_5 <= row.within_10);
        CHECK(row.within_10 <= row.within_25);
        CHECK(row.within_25 <= row.total);
        CHECK(row.no_worse <= row.total);
    }
}

TEST_CASE("noiseless planted power law is recovered exactly") {
    std::vector<std::pair<double, double>> pairs;
    for (double n : {8.0, 16.0, 32.0, 64.0, 128.0})
        pairs.push_back({n, 7.0 * std::pow(n, 1.8)});
    const auto fit = fit_embedding_regression(pairs);
    CHECK(std::abs(fit.beta - 1.8) < 1e-9);
    CHECK(std::abs(fit.beta0 - std::log(7.0)) < 1e-9);
    CHECK(std::abs(fit.r_squared - 1.0) < 1e-9);
    CHECK(fit.n_points == 5);
}

TEST_CASE("two distinct N values with an exact law still fit perfectly") {
    std::vector<std::pair<double, double>> pairs = {
        {10.0, 100.0}, {10.0, 100.0}, {20.0, 400.0}};
    const auto fit = fit_embedding_regression(pairs);
    CHECK(std::abs(fit.beta - 2.0) < 1e-9);
    CHECK(std::abs(fit.r_squared - 1.0) < 1e-9);
}

TEST_CASE("regression rejects degenerate inputs") {
    CHECK_THROWS_AS(fit_embedding_regression({{10.0, 20.0}, {10.0, 30.0}}),
                    std::invalid_argument);
    CHECK_THROWS_WITH(fit_embedding_regression({{5.0, 2.0}, {5.0, 3.0}, {5.0, 4.0}}),
                      Catch::Matchers::ContainsSubstring("degenerate"));
    CHECK_THROWS_AS(fit_embedding_regression({{5.0, 2.0}, {6.0, 0.0}, {7.0, 4.0}}),
                    std::invalid_argument);
}

TEST_CASE("ols minimizes the squared residuals locally") {
    Rng rng(31);
    std::vector<std::pair<double, double>> pairs;
    for (int i = 0; i < 40; ++i) {
        const double n = 8.0 + 120.0 * rng.unit();
        const double noise = 0.9 + 0.2 * rng.unit();
        pairs.push_back({n, 5.0 * std::pow(n, 1.5) * noise});
    }
    const auto fit = fit_embedding_regression(pairs);
    const auto ssr = [&pairs](double b0, double b1) {
        double s = 0.0;
        for (const auto& [n, ne] : pairs) {
            const double r = std::log(ne) - (b0 + b1 * std::log(n));
            s += r * r;
        }
        return s;
    };
    const double at_fit = ssr(fit.beta0, fit.beta);
    for (const double d0 : {-1e-3, 0.0, 1e-3})
        for (const double d1 : {-1e-3, 0.0, 1e-3})
            CHECK(ssr(fit.beta0 + d0, fit.beta + d1) >= at_fit - 1e-12);
}

TEST_CASE("time split shares") {
    TimeSplitRow a{"i1", 9.0, 1.0};
    CHECK(a.share() == 0.9);
    TimeSplitRow b{"i2", 0.0, 2.0};
    CHECK(b.share() == 0.0);
    TimeSplitRow c{"i3", 0.0, 0.0};
    CHECK(c.share() >= 0.0);
    CHECK(c.share() <= 1.0);
}

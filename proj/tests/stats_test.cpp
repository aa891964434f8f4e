// Copyright 2026 The Tricrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "test_support.hpp"
#include "tricrit/stats.hpp"

using namespace tricrit;
using namespace tricrit::testing;

TEST_CASE("single witness bound") {
    CHECK(single_witness_bound(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(single_witness_bound(10) == doctest::Approx(0.09324895115362061).epsilon(1e-12));
    double prev = single_witness_bound(0);
    for (int k = 1; k <= 50; ++k) {
        double cur = single_witness_bound(k);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(single_witness_bound(-1), ValidationError);
}

TEST_CASE("criterion union bound") {
    CHECK(criterion_union_bound(1, 0) == doctest::Approx(1.0));
    double expect = std::min(1.0, 720.0 * single_witness_bound(100));
    CHECK(criterion_union_bound(2, 100) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(criterion_union_bound(2, 100) >= 0.0);
    CHECK(criterion_union_bound(2, 100) <= 1.0);

    // log witness count grows at most quadratically: fit a n^2 + b over n=1..8
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int n = 1; n <= 8; ++n) {
        double xv = double(n) * n;
        double yv = std::log(double(oriented_witness_count(n)));
        sx += xv;
        sy += yv;
        sxx += xv * xv;
        sxy += xv * yv;
    }
    double a = (8 * sxy - sx * sy) / (8 * sxx - sx * sx);
    double b = (sy - a * sx) / 8;
    for (int n = 1; n <= 8; ++n) {
        double resid = std::log(double(oriented_witness_count(n))) - (a * n * n + b);
        CHECK(std::abs(resid) < 1.5);
    }
    CHECK(a > 0);
}

TEST_CASE("linear method bound") {
    CHECK(linear_method_bound(1, 1000, 4) ==
          doctest::Approx(0.0018869031323372235).epsilon(1e-12));
    CHECK(linear_method_bound(2, 100, 4) > linear_method_bound(1, 100, 4));
    CHECK(linear_method_bound(1, 200, 4) < linear_method_bound(1, 100, 4));
    CHECK_THROWS_AS(linear_method_bound(0, 1, 4), ValidationError);
}

TEST_CASE("binomial intervals") {
    ConfidenceInterval ci = binomial_interval(50, 100);
    CHECK(ci.low < 0.5);
    CHECK(ci.high > 0.5);
    CHECK(ci.low > 0.38);
    CHECK(ci.high < 0.62);

    // zero cells report the one-sided exact upper bound
    ci = binomial_interval(0, 1000);
    CHECK(ci.low == 0.0);
    CHECK(ci.high == doctest::Approx(1.0 - std::pow(0.05, 1.0 / 1000)).epsilon(1e-12));
    ci = binomial_interval(1000, 1000);
    CHECK(ci.high == 1.0);
    CHECK(ci.low == doctest::Approx(std::pow(0.05, 1.0 / 1000)).epsilon(1e-12));
}

TEST_CASE("monte-carlo detection experiments") {
    DetectionExperiment ex = monte_carlo_detection(2, 1, 10000, 99, DetectionMode::single_witness);
    CHECK(ex.estimate <= ex.bound);
    CHECK(ex.ci.low <= ex.estimate);
    CHECK(ex.ci.high >= ex.estimate);

    // decay in k at 3 sigma
    DetectionExperiment k2 = monte_carlo_detection(2, 2, 10000, 7, DetectionMode::single_witness);
    DetectionExperiment k8 = monte_carlo_detection(2, 8, 10000, 7, DetectionMode::single_witness);
    double se = [](const DetectionExperiment &e) {
        return std::sqrt(std::max(e.estimate * (1 - e.estimate), 1e-9) / double(e.trials));
    }(k2);
    double se8 = std::sqrt(std::max(k8.estimate * (1 - k8.estimate), 1e-9) / double(k8.trials));
    CHECK(k8.estimate < k2.estimate - 3.0 * std::sqrt(se * se + se8 * se8));

    // n-independence within joint confidence intervals
    DetectionExperiment n2 = monte_carlo_detection(2, 4, 10000, 13, DetectionMode::single_witness);
    DetectionExperiment n3 = monte_carlo_detection(3, 4, 10000, 13, DetectionMode::single_witness);
    CHECK(n2.ci.low <= n3.ci.high);
    CHECK(n3.ci.low <= n2.ci.high);

    // bit-identical reruns
    DetectionExperiment again =
        monte_carlo_detection(2, 1, 10000, 99, DetectionMode::single_witness);
    CHECK(again.detected == ex.detected);
}

TEST_CASE("fixed-witness choice does not bias the estimate") {
    const StabilizerCatalog &cat = StabilizerCatalog::shared(2);
    int32_t zero = index_of_vector(cat, product_amp({"0", "0"}));
    int32_t minus = index_of_vector(cat, product_amp({"-", "0"}));
    int32_t minusi = index_of_vector(cat, product_amp({"-i", "0"}));
    TriangleWitness other = find_witness(cat, minus, minusi, zero);

    DetectionExperiment canonical =
        monte_carlo_detection(2, 2, 20000, 555, DetectionMode::single_witness);
    DetectionExperiment alt = monte_carlo_detection_with_witness(2, 2, 20000, 556, other);
    CHECK(canonical.ci.low <= alt.ci.high);
    CHECK(alt.ci.low <= canonical.ci.high);
}

TEST_CASE("full-criterion mode stays below the union bound") {
    DetectionExperiment ex = monte_carlo_detection(1, 2, 2000, 3, DetectionMode::full_criterion);
    CHECK(ex.bound == doctest::Approx(criterion_union_bound(1, 2)).epsilon(1e-12));
    CHECK(ex.estimate <= std::min(1.0, ex.bound) + 1e-12);
    CHECK_THROWS_AS(monte_carlo_detection(4, 2, 10, 3, DetectionMode::full_criterion),
                    CapacityError);
}

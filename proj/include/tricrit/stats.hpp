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

#pragma once

#include <cstdint>
#include <string>

#include "tricrit/criterion.hpp"

namespace tricrit {

/// Concentration bound for one triangle witness on states drawn by tracing a
/// k-dimensional environment out of a Haar-random pure state:
/// 2 exp(-(sqrt(1 + 1/sqrt2) - 1) k), using Tr(W)/sqrt(Tr(W^2)) = 1/sqrt2.
double single_witness_bound(double k);

/// Union bound over all oriented witnesses: min(1, N_w(n) * single bound).
double criterion_union_bound(int n, double k);

/// Detection-probability cap for any linear scheme reading M observables:
/// 2 exp(M ln(4 sqrt(M) d) - (sqrt(1/2 + 1/sqrt2) - 1)^2 k).
double linear_method_bound(int m_observables, double k, int d);

struct ConfidenceInterval {
    double low = 0.0;
    double high = 1.0;
};

/// Wilson score interval; zero-count cells fall back to the one-sided exact
/// upper bound 1 - (1 - confidence)^{1/trials} (and symmetrically for full
/// counts), since detection probabilities get tiny at large k.
ConfidenceInterval binomial_interval(uint64_t hits, uint64_t trials, double confidence = 0.95);

enum class DetectionMode { single_witness, full_criterion };

const char *to_string(DetectionMode m);
DetectionMode detection_mode_from_string(const std::string &s);

struct DetectionExperiment {
    int n = 0;
    int k = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    DetectionMode mode = DetectionMode::single_witness;
    uint64_t detected = 0;
    double estimate = 0.0;
    ConfidenceInterval ci;
    double bound = 1.0;
};

/// Samples rho by tracing out a k-dimensional environment and counts
/// detections. single_witness mode evaluates the fixed canonical witness
/// (|+>, |+i>; |0>) ⊗ |0^{n-1}>; full_criterion runs the complete scan
/// (n <= 3). Identical (seed, parameters) reruns are bit-identical.
DetectionExperiment monte_carlo_detection(int n, int k, uint64_t trials, uint64_t seed,
                                          DetectionMode mode,
                                          double tolerance = kDetectionTolerance);

/// Same Monte-Carlo loop against a caller-chosen witness (used to check that
/// the fixed-witness choice does not bias the estimate).
DetectionExperiment monte_carlo_detection_with_witness(int n, int k, uint64_t trials,
                                                       uint64_t seed, const TriangleWitness &w,
                                                       double tolerance = kDetectionTolerance);

}  // namespace tricrit

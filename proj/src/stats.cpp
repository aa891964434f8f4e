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

#include "tricrit/stats.hpp"

#include <cmath>

namespace tricrit {

namespace {
// sqrt(1 + 1/sqrt2) - 1 and (sqrt(1/2 + 1/sqrt2) - 1)^2
const double kSingleWitnessRate = std::sqrt(1.0 + 1.0 / std::sqrt(2.0)) - 1.0;
const double kLinearRate = std::pow(std::sqrt(0.5 + 1.0 / std::sqrt(2.0)) - 1.0, 2);
const double kZ95 = 1.959963984540054;
}  // namespace

double single_witness_bound(double k) {
    if (k < 0) throw ValidationError("single_witness_bound needs k >= 0");
    return 2.0 * std::exp(-kSingleWitnessRate * k);
}

double criterion_union_bound(int n, double k) {
    double nw = double(oriented_witness_count(n));
    return std::min(1.0, nw * single_witness_bound(k));
}

double linear_method_bound(int m_observables, double k, int d) {
    if (m_observables < 1 || d < 2 || k < 0) {
        throw ValidationError("linear_method_bound needs M >= 1, d >= 2, k >= 0");
    }
    double m = double(m_observables);
    return 2.0 * std::exp(m * std::log(4.0 * std::sqrt(m) * d) - kLinearRate * k);
}

ConfidenceInterval binomial_interval(uint64_t hits, uint64_t trials, double confidence) {
    if (trials == 0) return {0.0, 1.0};
    double nn = double(trials);
    if (hits == 0) {
        return {0.0, 1.0 - std::pow(1.0 - confidence, 1.0 / nn)};
    }
    if (hits == trials) {
        return {std::pow(1.0 - confidence, 1.0 / nn), 1.0};
    }
    double z = kZ95;
    if (std::abs(confidence - 0.95) > 1e-12) {
        // inverse normal via Newton on the error function; good enough for
        // the handful of confidence levels used in reports
        double target = 0.5 * (1.0 + confidence);
        double x = 1.0;
        for (int i = 0; i < 60; ++i) {
            double cdf = 0.5 * (1.0 + std::erf(x / std::sqrt(2.0)));
            double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
            x -= (cdf - target) / pdf;
        }
        z = x;
    }
    double p = double(hits) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double centre = (p + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

const char *to_string(DetectionMode m) {
    return m == DetectionMode::single_witness ? "single-witness" : "full-criterion";
}

DetectionMode detection_mode_from_string(const std::string &s) {
    if (s == "single-witness") return DetectionMode::single_witness;
    if (s == "full-criterion") return DetectionMode::full_criterion;
    throw ValidationError("unknown detection mode: " + s);
}

namespace {

// <v| rho |v> for rho = G G^dagger / tr as |G^dagger v|^2 / tr
double fidelity_via_factor(const Eigen::MatrixXcd &g, double tr, const Eigen::VectorXcd &v) {
    return (g.adjoint() * v).squaredNorm() / tr;
}

DetectionExperiment run_experiment(int n, int k, uint64_t trials, uint64_t seed,
                                   DetectionMode mode, double tolerance,
                                   const Eigen::VectorXcd *w1, const Eigen::VectorXcd *w2,
                                   const Eigen::VectorXcd *w3) {
    if (n < 1 || k < 1) throw ValidationError("monte_carlo_detection needs n, k >= 1");
    if (mode == DetectionMode::full_criterion && n > 3) {
        throw CapacityError("full-criterion sampling supports n <= 3");
    }
    if (n > kMaxEnumQubits) throw CapacityError("single-witness sampling supports n <= 4");

    int d = 1 << n;
    DetectionExperiment ex;
    ex.n = n;
    ex.k = k;
    ex.trials = trials;
    ex.seed = seed;
    ex.mode = mode;
    ex.bound = mode == DetectionMode::single_witness ? single_witness_bound(double(k))
                                                     : criterion_union_bound(n, double(k));

    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, t);
        if (mode == DetectionMode::single_witness) {
            Eigen::MatrixXcd g(d, k);
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < k; ++j) g(i, j) = rng.cnormal();
            }
            double tr = g.squaredNorm();
            double value = fidelity_via_factor(g, tr, *w1) + fidelity_via_factor(g, tr, *w2) -
                           fidelity_via_factor(g, tr, *w3);
            if (value < -tolerance) ++ex.detected;
        } else {
            DensityMatrix rho = sample_induced(d, k, rng);
            if (detect(rho, tolerance).detected) ++ex.detected;
        }
    }
    ex.estimate = trials ? double(ex.detected) / double(trials) : 0.0;
    ex.ci = binomial_interval(ex.detected, trials);
    return ex;
}

Eigen::VectorXcd state_vector(const StabilizerCatalog &cat, int32_t index) {
    Eigen::Map<const Eigen::VectorXcd> v(cat.dense_amps(index), cat.dim());
    return v;
}

}  // namespace

DetectionExperiment monte_carlo_detection(int n, int k, uint64_t trials, uint64_t seed,
                                          DetectionMode mode, double tolerance) {
    if (mode == DetectionMode::full_criterion) {
        return run_experiment(n, k, trials, seed, mode, tolerance, nullptr, nullptr, nullptr);
    }
    // canonical witness (|+>, |+i>; |0>) ⊗ |0^{n-1}>
    int d = 1 << n;
    Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(d);
    Eigen::VectorXcd plusi = Eigen::VectorXcd::Zero(d);
    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(d);
    double r = 1.0 / std::sqrt(2.0);
    uint32_t hi = qubit_bit(n, 0);
    plus(0) = r;
    plus(hi) = r;
    plusi(0) = r;
    plusi(hi) = std::complex<double>(0, r);
    zero(0) = 1.0;
    return run_experiment(n, k, trials, seed, mode, tolerance, &plus, &plusi, &zero);
}

DetectionExperiment monte_carlo_detection_with_witness(int n, int k, uint64_t trials,
                                                       uint64_t seed, const TriangleWitness &w,
                                                       double tolerance) {
    const StabilizerCatalog &cat = StabilizerCatalog::shared(n);
    int slots[3] = {0, 1, 2};
    Eigen::VectorXcd kept[2];
    int nk = 0;
    Eigen::VectorXcd sub;
    for (int slot : slots) {
        Eigen::VectorXcd v = state_vector(cat, w.triple.member(slot));
        if (slot == w.subtracted) sub = v;
        else kept[nk++] = v;
    }
    return run_experiment(n, k, trials, seed, DetectionMode::single_witness, tolerance,
                          &kept[0], &kept[1], &sub);
}

}  // namespace tricrit

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
#include "tricrit/distill.hpp"

using namespace tricrit;
using namespace tricrit::testing;

TEST_CASE("purity basics") {
    CHECK(purity(maximally_mixed(4)) == doctest::Approx(0.25).epsilon(1e-12));
    Rng rng(1);
    DensityMatrix pure = pure_state(haar_state(8, rng));
    CHECK(purity(pure) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(purity(minimal_purity_state(2)) == doctest::Approx(2.0 / 7).epsilon(1e-12));
}

TEST_CASE("tensor and partial trace") {
    DensityMatrix i2 = maximally_mixed(2);
    DensityMatrix i4 = tensor(i2, i2);
    CHECK((i4.mat - Eigen::MatrixXcd::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() < 1e-14);

    // Bell pair reduces to I/2
    Eigen::VectorXcd bell(4);
    bell << 1, 0, 0, 1;
    DensityMatrix bellrho = pure_state(bell);
    DensityMatrix red = partial_trace(bellrho, {0});
    CHECK((red.mat - Eigen::MatrixXcd::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-12);

    Rng rng(2);
    for (int trial = 0; trial < 25; ++trial) {
        DensityMatrix a = random_state(2, rng);
        DensityMatrix b = random_state(4, rng);
        DensityMatrix ab = tensor(a, b);
        CHECK(purity(ab) == doctest::Approx(purity(a) * purity(b)).epsilon(1e-12));
        DensityMatrix back = partial_trace(ab, {0});
        CHECK((back.mat - a.mat).cwiseAbs().maxCoeff() < 1e-12);
        DensityMatrix back_b = partial_trace(ab, {1, 2});
        CHECK((back_b.mat - b.mat).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("postselect") {
    // |00><00|, measure qubit 1 -> 0
    Eigen::VectorXcd v00(4);
    v00 << 1, 0, 0, 0;
    Postselection p = postselect(pure_state(v00), {1}, {0});
    REQUIRE(p.state.has_value());
    CHECK(p.probability == doctest::Approx(1.0));
    CHECK((p.state->mat - (Eigen::MatrixXcd(2, 2) << 1, 0, 0, 0).finished())
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    // |+>|+>, measure qubit 1 -> 0 gives |+> with probability 1/2
    Eigen::VectorXcd plus(2);
    plus << 1, 1;
    DensityMatrix pp = tensor(pure_state(plus), pure_state(plus));
    p = postselect(pp, {1}, {0});
    REQUIRE(p.state.has_value());
    CHECK(p.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK((p.state->mat - pure_state(plus).mat).cwiseAbs().maxCoeff() < 1e-12);

    // impossible outcome -> empty, probability 0
    Eigen::VectorXcd v01(4);
    v01 << 0, 1, 0, 0;
    p = postselect(pure_state(v01), {1}, {0});
    CHECK(!p.state.has_value());
    CHECK(p.probability == doctest::Approx(0.0));

    // probabilities over a complete outcome set sum to 1
    Rng rng(3);
    DensityMatrix rho = random_state(8, rng);
    double total = 0;
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b2 = 0; b2 < 2; ++b2) {
            total += postselect(rho, {0, 2}, {b0, b2}).probability;
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("apply_circuit on density matrices") {
    Eigen::VectorXcd v0(2), plus(2);
    v0 << 1, 0;
    plus << 1, 1;
    CliffordCircuit h(1);
    h.h(0);
    CHECK((apply_circuit(pure_state(v0), h).mat - pure_state(plus).mat).cwiseAbs().maxCoeff() <
          1e-12);

    CliffordCircuit bellc(2);
    bellc.h(0).cnot(0, 1);
    Eigen::VectorXcd v00(4), bell(4);
    v00 << 1, 0, 0, 0;
    bell << 1, 0, 0, 1;
    CHECK((apply_circuit(pure_state(v00), bellc).mat - pure_state(bell).mat)
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        DensityMatrix rho = random_state(8, rng);
        CliffordCircuit c = sample_clifford(3, rng);
        DensityMatrix out = apply_circuit(rho, c);
        CHECK(purity(out) == doctest::Approx(purity(rho)).epsilon(1e-12));
    }
}

TEST_CASE("dense circuit action agrees with the exact amplitude action") {
    Rng rng(5);
    for (int n = 1; n <= 3; ++n) {
        const StabilizerCatalog &cat = StabilizerCatalog::shared(n);
        for (int trial = 0; trial < 10; ++trial) {
            const auto &st = cat.states()[rng.below(uint32_t(cat.states().size()))];
            CliffordCircuit c = sample_clifford(n, rng);
            AmpVec exact = apply_circuit(c, st.amps);
            Eigen::Map<const Eigen::VectorXcd> v0(cat.dense_amps(st.index), cat.dim());
            DensityMatrix rho = make_density_unchecked(v0 * v0.adjoint());
            DensityMatrix moved = apply_circuit(rho, c);
            auto dense = exact.dense();
            Eigen::Map<Eigen::VectorXcd> ve(dense.data(), cat.dim());
            CHECK((moved.mat - ve * ve.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("induced-measure sampling") {
    Rng rng(6);
    // k = 1 draws are pure
    for (int i = 0; i < 20; ++i) {
        CHECK(purity(sample_induced(4, 1, rng)) == doctest::Approx(1.0).epsilon(1e-10));
    }
    // samples satisfy the state invariants
    for (int i = 0; i < 50; ++i) {
        DensityMatrix rho = sample_induced(8, 3, rng);
        CHECK_NOTHROW(make_density(rho.mat));
    }

    // mean purity at d = k = 2 is seed-stable within 3 combined standard errors
    auto mean_se = [](uint64_t seed, int trials) {
        double sum = 0, sum2 = 0;
        for (int t = 0; t < trials; ++t) {
            Rng r = Rng::stream(seed, uint64_t(t));
            double p = purity(sample_induced(2, 2, r));
            sum += p;
            sum2 += p * p;
        }
        double mean = sum / trials;
        double var = sum2 / trials - mean * mean;
        return std::pair<double, double>(mean, std::sqrt(var / trials));
    };
    auto [m1, se1] = mean_se(11, 100000);
    auto [m2, se2] = mean_se(77, 100000);
    CHECK(std::abs(m1 - m2) < 3.0 * std::sqrt(se1 * se1 + se2 * se2));

    // mean purity decreases monotonically in the traced-out dimension
    double last = 2.0;
    for (int k : {1, 2, 4, 8}) {
        double sum = 0;
        for (int t = 0; t < 10000; ++t) {
            Rng r = Rng::stream(uint64_t(100 + k), uint64_t(t));
            sum += purity(sample_induced(4, k, r));
        }
        double mean = sum / 10000;
        CHECK(mean < last);
        last = mean;
    }
}

TEST_CASE("eigen_max") {
    CHECK(eigen_max(maximally_mixed(8)) == doctest::Approx(0.125).epsilon(1e-10));
    Rng rng(7);
    CHECK(eigen_max(pure_state(haar_state(4, rng))) == doctest::Approx(1.0).epsilon(1e-10));
    DensityMatrix xplus = from_bloch(1.0, 0.0, 0.0);
    CHECK(eigen_max(xplus) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Haar states are isotropic") {
    Rng rng(8);
    double bx = 0, by = 0, bz = 0;
    int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        auto [x, y, z] = bloch_vector(pure_state(haar_state(2, rng)));
        bx += x;
        by += y;
        bz += z;
    }
    bx /= trials;
    by /= trials;
    bz /= trials;
    CHECK(std::sqrt(bx * bx + by * by + bz * bz) < 0.05);
}

TEST_CASE("pauli decomposition") {
    PauliDecomposition dec = pauli_decompose(maximally_mixed(2));
    CHECK(dec.t_identity == doctest::Approx(1.0));
    for (const auto &[p, t] : dec.terms) CHECK(std::abs(t) < 1e-14);

    DensityMatrix xp = from_bloch(1, 0, 0);
    dec = pauli_decompose(xp);
    for (const auto &[p, t] : dec.terms) {
        if (p.label() == "X") CHECK(t == doctest::Approx(1.0).epsilon(1e-12));
        else CHECK(std::abs(t) < 1e-12);
    }

    dec = pauli_decompose(bound_magic_state());
    bool found = false;
    for (const auto &[p, t] : dec.terms) {
        if (p.label() == "IX") {
            CHECK(t == doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-12));
            found = true;
        }
    }
    CHECK(found);

    // reconstruction reproduces the state
    Rng rng(9);
    DensityMatrix rho = random_state(4, rng);
    PauliDecomposition d2 = pauli_decompose(rho);
    DensityMatrix back = density_from_pauli(2, d2.terms);
    CHECK((back.mat - rho.mat).cwiseAbs().maxCoeff() < 1e-12);

    Eigen::MatrixXcd bad(2, 2);
    bad << 0.5, std::complex<double>(0.1, 0.2), std::complex<double>(0.1, -0.1), 0.5;
    CHECK_THROWS_AS(pauli_decompose(make_density_unchecked(bad)), ValidationError);
}

TEST_CASE("validation rejects broken inputs with a named reason") {
    Eigen::MatrixXcd notpsd(2, 2);
    notpsd << 1.5, 0, 0, -0.5;
    CHECK_THROWS_WITH_AS(make_density(notpsd),
                         doctest::Contains("positive semidefinite"), ValidationError);
    Eigen::MatrixXcd badtrace = Eigen::MatrixXcd::Identity(2, 2);
    CHECK_THROWS_WITH_AS(make_density(badtrace), doctest::Contains("trace"), ValidationError);
}

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
#include "tricrit/dense.hpp"

using namespace tricrit;

namespace {

PauliString random_pauli(int n, Rng &rng) {
    uint32_t d = uint32_t(1) << n;
    return PauliString{n, rng.below(d), rng.below(d), int(rng.below(4))};
}

}  // namespace

TEST_CASE("pauli product phases") {
    PauliString x = pauli_from_label("X");
    PauliString z = pauli_from_label("Z");
    PauliString y = pauli_from_label("Y");

    // X Z = -i Y
    PauliString xz = pauli_mul(x, z);
    CHECK(xz.x == y.x);
    CHECK(xz.z == y.z);
    CHECK(xz.hermitian_phase() == 3);

    // identity is neutral, X X = I
    PauliString id = PauliString::identity(1);
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        PauliString p = random_pauli(1, rng);
        CHECK(pauli_mul(id, p) == p);
        CHECK(pauli_mul(p, id) == p);
    }
    PauliString xx = pauli_mul(x, x);
    CHECK(xx.x == 0);
    CHECK(xx.z == 0);
    CHECK(xx.phase == 0);
}

TEST_CASE("pauli product is associative and matches dense matrices") {
    Rng rng(11);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            PauliString a = random_pauli(n, rng);
            PauliString b = random_pauli(n, rng);
            PauliString c = random_pauli(n, rng);
            CHECK(pauli_mul(pauli_mul(a, b), c) == pauli_mul(a, pauli_mul(b, c)));
            Eigen::MatrixXcd lhs = pauli_matrix(pauli_mul(a, b));
            Eigen::MatrixXcd rhs = pauli_matrix(a) * pauli_matrix(b);
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
            bool comm = pauli_commute(a, b);
            Eigen::MatrixXcd ab = pauli_matrix(a) * pauli_matrix(b);
            Eigen::MatrixXcd ba = pauli_matrix(b) * pauli_matrix(a);
            CHECK(comm == ((ab - ba).cwiseAbs().maxCoeff() < 1e-14));
        }
    }
}

TEST_CASE("mismatched qubit counts are rejected") {
    CHECK_THROWS_AS(pauli_mul(pauli_from_label("X"), pauli_from_label("XX")), ValidationError);
}

TEST_CASE("labels round trip") {
    for (const char *lbl : {"X", "ZZ", "IXYZ", "YI"}) {
        CHECK(pauli_from_label(lbl).label() == lbl);
    }
    CHECK(pauli_from_label("IXYZ").is_hermitian());
    CHECK_THROWS_AS(pauli_from_label("Q"), ValidationError);
}

TEST_CASE("circuit conjugation matches dense conjugation") {
    Rng rng(5);
    int n = 2;
    std::vector<Gate> gates = {{GateKind::H, 0},       {GateKind::H, 1},    {GateKind::S, 0},
                               {GateKind::S, 1},       {GateKind::X, 0},    {GateKind::Y, 1},
                               {GateKind::Z, 0},       {GateKind::CNOT, 0, 1},
                               {GateKind::CNOT, 1, 0}};
    for (const auto &g : gates) {
        CliffordCircuit c(n);
        c.gates.push_back(g);
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(4, 4);
        apply_gate_inplace(u, g, n);
        // conjugate every Hermitian Pauli and compare to U P U^dagger... the
        // density path applies U . U^dagger, so feed it the Pauli directly.
        for (uint32_t x = 0; x < 4; ++x) {
            for (uint32_t z = 0; z < 4; ++z) {
                for (int sign = 0; sign < 2; ++sign) {
                    PauliString p = PauliString::hermitian(n, x, z, sign);
                    Eigen::MatrixXcd dense = pauli_matrix(p);
                    apply_gate_inplace(dense, g, n);
                    PauliString q = conjugate_pauli(c, p);
                    CHECK((dense - pauli_matrix(q)).cwiseAbs().maxCoeff() < 1e-12);
                }
            }
        }
    }
    // longer random words
    for (int trial = 0; trial < 20; ++trial) {
        CliffordCircuit c = sample_clifford(2, rng);
        PauliString p = PauliString::hermitian(2, rng.below(4), rng.below(4), int(rng.below(2)));
        Eigen::MatrixXcd dense = pauli_matrix(p);
        for (const auto &g : c.gates) apply_gate_inplace(dense, g, 2);
        CHECK((dense - pauli_matrix(conjugate_pauli(c, p))).cwiseAbs().maxCoeff() < 1e-10);
    }
}

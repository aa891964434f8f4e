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

#include <map>

#include "test_support.hpp"
#include "tricrit/distill.hpp"

using namespace tricrit;
using namespace tricrit::testing;

TEST_CASE("bound magic state is a valid two-qubit state with the right coefficients") {
    DensityMatrix rho = bound_magic_state();
    CHECK(rho.dim == 4);
    CHECK(rho.mat.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eigenvalues(rho).minCoeff() > -1e-9);

    double s = 1.0 / std::sqrt(12.0);
    std::map<std::string, double> want = {{"IX", s}, {"XY", -s * std::sqrt(5.0) / 2}};
    PauliDecomposition dec = pauli_decompose(rho);
    for (const auto &[p, t] : dec.terms) {
        auto it = want.find(p.label());
        if (it != want.end()) CHECK(t == doctest::Approx(it->second).epsilon(1e-12));
    }
}

TEST_CASE("reconstructed circuit has the advertised gate inventory") {
    const DistillationCircuit &dc = two_copy_distillation_circuit();
    std::map<GateKind, int> counts;
    for (const auto &g : dc.circuit.gates) ++counts[g.kind];
    CHECK(counts[GateKind::CNOT] == 2);
    CHECK(counts[GateKind::H] == 1);
    CHECK(counts[GateKind::Y] == 1);
    CHECK(dc.circuit.gates.size() == 4);
    CHECK(dc.match_count >= 1);

    // Clifford circuits keep stabilizer states stabilizer
    const StabilizerCatalog &cat4 = StabilizerCatalog::shared(4);
    Rng rng(50);
    for (int trial = 0; trial < 10; ++trial) {
        const auto &st = cat4.states()[rng.below(uint32_t(cat4.states().size()))];
        CHECK(cat4.index_of(apply_circuit(dc.circuit, st.amps)) >= 0);
    }
}

TEST_CASE("two-copy distillation reproduces the reference numbers") {
    DistillationOutcome out = run_two_copy_distill(bound_magic_state());
    REQUIRE(out.output.has_value());
    CHECK(std::abs(out.success_probability - 0.129) < 0.002);
    CHECK(std::abs(out.bloch[0] - 0.1844) < 0.002);
    CHECK(std::abs(out.bloch[1] - 0.3334) < 0.002);
    CHECK(std::abs(out.bloch[2] - 0.6544) < 0.002);
    CHECK(std::abs(out.l1_norm - 1.172) < 0.004);
    CHECK(out.l1_norm > kHDistillThreshold);

    auto [ok, margin] = h_distillable(*out.output);
    CHECK(ok);
    CHECK(std::abs(margin - 0.038) < 0.005);
}

TEST_CASE("h_distillable thresholds") {
    auto [ok0, m0] = h_distillable(maximally_mixed(2));
    CHECK(!ok0);
    CHECK(m0 == doctest::Approx(-kHDistillThreshold).epsilon(1e-12));

    double r = 1.0 / std::sqrt(3.0);
    auto [ok1, m1] = h_distillable(from_bloch(r, r, r));
    CHECK(ok1);
    CHECK(m1 == doctest::Approx(std::sqrt(3.0) - kHDistillThreshold).epsilon(1e-12));
}

TEST_CASE("postselection patterns conserve probability and purity") {
    DensityMatrix rho = bound_magic_state();
    const DistillationCircuit &dc = two_copy_distillation_circuit();
    DensityMatrix two = tensor(rho, rho);
    DensityMatrix rotated = apply_circuit(two, dc.circuit);
    CHECK(purity(rotated) == doctest::Approx(purity(two)).epsilon(1e-12));

    std::vector<int> qubits(dc.measured.begin(), dc.measured.end());
    double total = 0;
    for (int bits = 0; bits < 8; ++bits) {
        std::vector<int> outcome = {(bits >> 0) & 1, (bits >> 1) & 1, (bits >> 2) & 1};
        total += postselect(rotated, qubits, outcome).probability;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("theorem-3 pipeline: bound at one copy, activated at two") {
    DensityMatrix rho = bound_magic_state();
    DetectionReport one = detect(rho);
    CHECK(!one.detected);
    CHECK(one.witness_count == 720);
    CHECK(one.min_value >= -1e-9);

    DetectionReport two = detect_two_copies(rho);
    CHECK(two.detected);

    DistillationOutcome out = run_two_copy_distill(rho);
    REQUIRE(out.output.has_value());
    CHECK(h_distillable(*out.output).first);
}

TEST_CASE("activation search is reproducible and monotone from the reference state") {
    ActivationSearchConfig cfg;
    cfg.iterations = 12;

    Rng r1(7), r2(7);
    ActivationSearchResult a = search_activation_state(r1, cfg);
    ActivationSearchResult b = search_activation_state(r2, cfg);
    CHECK((a.candidate.mat - b.candidate.mat).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.two_copy_min == b.two_copy_min);

    double reference_violation = detect_two_copies(bound_magic_state()).min_value;
    CHECK(a.two_copy_min <= reference_violation + 1e-9);

    // reported margins match an independent evaluation
    CHECK(detect(a.candidate).min_value == doctest::Approx(a.single_copy_min).epsilon(1e-12));
    CHECK(detect_two_copies(a.candidate).min_value ==
          doctest::Approx(a.two_copy_min).epsilon(1e-12));
    if (a.success) {
        CHECK(!detect(a.candidate).detected);
        CHECK(detect_two_copies(a.candidate).detected);
    }
}

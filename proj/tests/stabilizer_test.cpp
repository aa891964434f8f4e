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
#include <set>

#include "test_support.hpp"

using namespace tricrit;
using namespace tricrit::testing;

TEST_CASE("state counts match the closed form") {
    CHECK(stabilizer_state_count(1) == 6);
    CHECK(stabilizer_state_count(2) == 60);
    CHECK(stabilizer_state_count(3) == 1080);
    CHECK(stabilizer_state_count(4) == 36720);
    CHECK(triple_count(1) == 8);
    CHECK(triple_count(2) == 240);
    CHECK(triple_count(3) == 10080);
    CHECK(triple_count(4) == 734400);
    for (int n = 1; n <= 3; ++n) {
        const StabilizerCatalog &cat = StabilizerCatalog::shared(n);
        CHECK(cat.states().size() == stabilizer_state_count(n));
        CHECK(cat.triples().size() == triple_count(n));
        CHECK(cat.witness_count() == oriented_witness_count(n));
    }
    CHECK_THROWS_AS(enumerate_stabilizer_states(5), CapacityError);
}

TEST_CASE("single-qubit states are the six Pauli eigenstates") {
    const StabilizerCatalog &cat = StabilizerCatalog::shared(1);
    std::set<std::string> keys;
    for (const auto &st : cat.states()) keys.insert(st.amps.key());
    for (const char *w : {"0", "1", "+", "-", "+i", "-i"}) {
        CHECK(keys.count(single_qubit_amp(w).key()) == 1);
    }
    CHECK(keys.size() == 6);
}

TEST_CASE("exact overlaps are dyadic and classify neighbours") {
    const StabilizerCatalog &cat1 = StabilizerCatalog::shared(1);

    auto frac = [&](const std::string &a, const std::string &b) {
        return overlap2(single_qubit_amp(a), single_qubit_amp(b));
    };
    CHECK(frac("0", "+") == DyadicFraction{1, 1});
    CHECK(frac("0", "1") == DyadicFraction{0, 0});

    AmpVec bell = AmpVec::basis_state(2, 0);
    CliffordCircuit bc(2);
    bc.h(0).cnot(0, 1);
    bell = apply_circuit(bc, bell);
    CHECK(overlap2(AmpVec::basis_state(2, 0), bell) == DyadicFraction{1, 1});

    // every pairwise overlap is 0 or 2^-j; each state has 4(2^n - 1)
    // neighbours at exactly 1/2
    for (int n = 1; n <= 2; ++n) {
        const StabilizerCatalog &cat = StabilizerCatalog::shared(n);
        for (const auto &a : cat.states()) {
            int neighbours = 0;
            for (const auto &b : cat.states()) {
                if (a.index == b.index) continue;
                DyadicFraction f = stab_overlap2(a, b);
                CHECK((f.num == 0 || f.num == 1));
                if (f.num == 1 && f.log2_den == 1) ++neighbours;
            }
            CHECK(neighbours == 4 * ((1 << n) - 1));
        }
    }
    CHECK(cat1.states().size() == 6);
}

TEST_CASE("triples match brute force and have pairwise overlap 1/2") {
    for (int n = 1; n <= 2; ++n) {
        const StabilizerCatalog &cat = StabilizerCatalog::shared(n);
        const auto &states = cat.states();
        std::set<std::array<int32_t, 3>> brute;
        auto half = [&](int32_t i, int32_t j) {
            return stab_overlap2(states[size_t(i)], states[size_t(j)]) == DyadicFraction{1, 1};
        };
        int32_t count = int32_t(states.size());
        for (int32_t i = 0; i < count; ++i) {
            for (int32_t j = i + 1; j < count; ++j) {
                if (!half(i, j)) continue;
                for (int32_t k = j + 1; k < count; ++k) {
                    if (half(i, k) && half(j, k)) brute.insert({i, j, k});
                }
            }
        }
        std::set<std::array<int32_t, 3>> mine;
        for (const auto &t : cat.triples()) {
            std::array<int32_t, 3> key = {t.a, t.b, t.c};
            std::sort(key.begin(), key.end());
            mine.insert(key);
        }
        CHECK(mine == brute);
    }
    // spot check n = 3 triples
    const StabilizerCatalog &cat3 = StabilizerCatalog::shared(3);
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto &t = cat3.triples()[rng.below(uint32_t(cat3.triples().size()))];
        const auto &s = cat3.states();
        CHECK(stab_overlap2(s[size_t(t.a)], s[size_t(t.b)]) == DyadicFraction{1, 1});
        CHECK(stab_overlap2(s[size_t(t.a)], s[size_t(t.c)]) == DyadicFraction{1, 1});
        CHECK(stab_overlap2(s[size_t(t.b)], s[size_t(t.c)]) == DyadicFraction{1, 1});
        CHECK(((t.phase_c - t.phase_b) % 2 + 2) % 2 == 1);
    }
}

TEST_CASE("every overlap-1/2 pair has the excitation form (exhaustive n <= 2)") {
    // in the frame of either state the partner reads (|0^n> + alpha |x>)/sqrt2
    for (int n = 1; n <= 2; ++n) {
        const StabilizerCatalog &cat = StabilizerCatalog::shared(n);
        for (const auto &a : cat.states()) {
            CliffordCircuit to_zero = circuit_to_zero(a.amps);
            for (const auto &b : cat.states()) {
                if (stab_overlap2(a, b) != DyadicFraction{1, 1}) continue;
                AmpVec img = apply_circuit(to_zero, b.amps);
                auto sup = img.support();
                REQUIRE(sup.size() == 2);
                CHECK(sup[0] == 0);
                CHECK(img.scale == 1);
            }
        }
    }
}

TEST_CASE("canonicalize_triple satisfies the image contract") {
    // all triples at n = 1 and n = 2, every apex orientation
    for (int n = 1; n <= 2; ++n) {
        const StabilizerCatalog &cat = StabilizerCatalog::shared(n);
        for (const auto &t : cat.triples()) {
            for (int apex = 0; apex < 3; ++apex) {
                CHECK_NOTHROW(canonicalize_triple(cat, t, apex));
            }
        }
    }
    // random sample at n = 3
    const StabilizerCatalog &cat3 = StabilizerCatalog::shared(3);
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto &t = cat3.triples()[rng.below(uint32_t(cat3.triples().size()))];
        CHECK_NOTHROW(canonicalize_triple(cat3, t, int(rng.below(3))));
    }
}

TEST_CASE("canonicalization of the canonical triple acts trivially on it") {
    const StabilizerCatalog &cat = StabilizerCatalog::shared(2);
    int32_t zero = index_of_vector(cat, product_amp({"0", "0"}));
    int32_t plus = index_of_vector(cat, product_amp({"+", "0"}));
    int32_t plusi = index_of_vector(cat, product_amp({"+i", "0"}));
    TriangleWitness w = find_witness(cat, plus, plusi, zero);
    CliffordCircuit c = canonicalize_triple(cat, w.triple, w.subtracted);
    // images coincide with the inputs as projectors
    CHECK(cat.index_of(apply_circuit(c, product_amp({"0", "0"}))) == zero);
    std::set<int32_t> img = {cat.index_of(apply_circuit(c, product_amp({"+", "0"}))),
                             cat.index_of(apply_circuit(c, product_amp({"+i", "0"})))};
    CHECK(img == std::set<int32_t>{plus, plusi});
}

TEST_CASE("single-qubit triple (|0>, |->, |-i>) canonicalizes by image check") {
    const StabilizerCatalog &cat = StabilizerCatalog::shared(1);
    int32_t zero = index_of_vector(cat, single_qubit_amp("0"));
    int32_t minus = index_of_vector(cat, single_qubit_amp("-"));
    int32_t minusi = index_of_vector(cat, single_qubit_amp("-i"));
    TriangleWitness w = find_witness(cat, minus, minusi, zero);
    CliffordCircuit c = canonicalize_triple(cat, w.triple, w.subtracted);
    CHECK(cat.index_of(apply_circuit(c, single_qubit_amp("0"))) == zero);
    std::set<int32_t> img = {cat.index_of(apply_circuit(c, single_qubit_amp("-"))),
                             cat.index_of(apply_circuit(c, single_qubit_amp("-i")))};
    std::set<int32_t> want = {index_of_vector(cat, single_qubit_amp("+")),
                              index_of_vector(cat, single_qubit_amp("+i"))};
    CHECK(img == want);
}

TEST_CASE("sampled Cliffords are reproducible and permute the state set") {
    Rng a(99), b(99);
    CliffordCircuit ca = sample_clifford(2, a);
    CliffordCircuit cb = sample_clifford(2, b);
    REQUIRE(ca.size() == cb.size());
    for (size_t i = 0; i < ca.size(); ++i) {
        CHECK(ca.gates[i].kind == cb.gates[i].kind);
        CHECK(ca.gates[i].q0 == cb.gates[i].q0);
        CHECK(ca.gates[i].q1 == cb.gates[i].q1);
    }

    Rng rng(123);
    for (int n = 1; n <= 2; ++n) {
        const StabilizerCatalog &cat = StabilizerCatalog::shared(n);
        for (int trial = 0; trial < 5; ++trial) {
            CliffordCircuit c = sample_clifford(n, rng);
            std::set<int32_t> images;
            for (const auto &st : cat.states()) {
                int32_t img = cat.index_of(apply_circuit(c, st.amps));
                REQUIRE(img >= 0);
                images.insert(img);
            }
            CHECK(images.size() == cat.states().size());
        }
    }
}

TEST_CASE("sampled single-qubit Cliffords reach all six states") {
    const StabilizerCatalog &cat = StabilizerCatalog::shared(1);
    Rng rng(2024);
    std::map<int32_t, int> freq;
    for (int i = 0; i < 10000; ++i) {
        CliffordCircuit c = sample_clifford(1, rng);
        int32_t img = cat.index_of(apply_circuit(c, AmpVec::basis_state(1, 0)));
        REQUIRE(img >= 0);
        ++freq[img];
    }
    CHECK(freq.size() == 6);
    for (const auto &[idx, count] : freq) CHECK(count > 1000);
}

TEST_CASE("states rebuild exactly from their tableaux") {
    for (int n = 1; n <= 2; ++n) {
        const StabilizerCatalog &cat = StabilizerCatalog::shared(n);
        for (const auto &st : cat.states()) {
            StabilizerState rebuilt = state_from_tableau(n, st.gens);
            CHECK(rebuilt.amps.key() == st.amps.key());
        }
    }
}

TEST_CASE("tableau generators commute and stabilize the amplitudes") {
    const StabilizerCatalog &cat = StabilizerCatalog::shared(2);
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto &st = cat.states()[rng.below(uint32_t(cat.states().size()))];
        for (const auto &g : st.gens) {
            PauliString p = PauliString::hermitian(2, g.x, g.z, g.sign);
            AmpVec moved = apply_pauli(p, st.amps);
            CHECK(moved.key() == st.amps.key());
            GaussInt ip = inner_raw(st.amps, moved);
            CHECK(ip.re == (1 << st.amps.scale));  // eigenvalue +1
            CHECK(ip.im == 0);
        }
        for (size_t i = 0; i < st.gens.size(); ++i) {
            for (size_t j = i + 1; j < st.gens.size(); ++j) {
                PauliString a = PauliString::hermitian(2, st.gens[i].x, st.gens[i].z);
                PauliString b = PauliString::hermitian(2, st.gens[j].x, st.gens[j].z);
                CHECK(pauli_commute(a, b));
            }
        }
    }
}

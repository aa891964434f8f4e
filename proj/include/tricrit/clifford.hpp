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

#include <string>
#include <vector>

#include "tricrit/amplitudes.hpp"
#include "tricrit/rng.hpp"

namespace tricrit {

enum class GateKind { H, S, CNOT, X, Y, Z };

struct Gate {
    GateKind kind;
    int q0;       // target qubit (control for CNOT)
    int q1 = -1;  // CNOT target, unused otherwise

    std::string name() const;
};

/// Ordered gate list over {H, S, CNOT, X, Y, Z}; gates apply left to right.
struct CliffordCircuit {
    int n = 0;
    std::vector<Gate> gates;

    explicit CliffordCircuit(int n = 0) : n(n) {}

    CliffordCircuit &h(int q) { return push({GateKind::H, q}); }
    CliffordCircuit &s(int q) { return push({GateKind::S, q}); }
    CliffordCircuit &x(int q) { return push({GateKind::X, q}); }
    CliffordCircuit &y(int q) { return push({GateKind::Y, q}); }
    CliffordCircuit &z(int q) { return push({GateKind::Z, q}); }
    CliffordCircuit &cnot(int c, int t) { return push({GateKind::CNOT, c, t}); }
    CliffordCircuit &append(const CliffordCircuit &other);

    size_t size() const { return gates.size(); }

  private:
    CliffordCircuit &push(Gate g);
};

/// Exact gate action on amplitude vectors; H grows the scale and reduces it
/// back when possible, so stabilizer inputs keep unit entries.
AmpVec apply_gate(const Gate &g, const AmpVec &v);
AmpVec apply_circuit(const CliffordCircuit &c, AmpVec v);

/// Heisenberg picture: returns U P U^dagger for a Hermitian Pauli string.
PauliString conjugate_pauli(const CliffordCircuit &c, PauliString p);

/// Random Clifford as a long uniform gate word. The induced distribution is
/// approximately (not exactly) uniform over the Clifford group; seeded runs
/// repeat exactly.
CliffordCircuit sample_clifford(int n, Rng &rng);

}  // namespace tricrit

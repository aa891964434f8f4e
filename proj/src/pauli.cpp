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

#include "tricrit/pauli.hpp"

namespace tricrit {

std::string PauliString::label() const {
    std::string out(static_cast<size_t>(n), 'I');
    for (int q = 0; q < n; ++q) {
        bool xb = x_on_qubit(q);
        bool zb = z_on_qubit(q);
        out[static_cast<size_t>(q)] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

PauliString pauli_mul(const PauliString &a, const PauliString &b) {
    if (a.n != b.n) {
        throw ValidationError("pauli_mul: mismatched qubit counts");
    }
    // (i^p X^a Z^b)(i^q X^c Z^d) = i^{p+q} (-1)^{b.c} X^{a^c} Z^{b^d}
    int phase = (a.phase + b.phase + 2 * popcount32(a.z & b.x)) % 4;
    return PauliString{a.n, a.x ^ b.x, a.z ^ b.z, phase};
}

bool pauli_commute(const PauliString &a, const PauliString &b) {
    if (a.n != b.n) {
        throw ValidationError("pauli_commute: mismatched qubit counts");
    }
    return ((popcount32(a.x & b.z) + popcount32(a.z & b.x)) & 1) == 0;
}

PauliString pauli_from_label(const std::string &label) {
    int n = static_cast<int>(label.size());
    if (n == 0 || n > 16) {
        throw ValidationError("pauli label must have 1..16 letters: " + label);
    }
    uint32_t x = 0, z = 0;
    for (int q = 0; q < n; ++q) {
        uint32_t bit = qubit_bit(n, q);
        switch (label[static_cast<size_t>(q)]) {
            case 'I': break;
            case 'X': x |= bit; break;
            case 'Y': x |= bit; z |= bit; break;
            case 'Z': z |= bit; break;
            default:
                throw ValidationError("pauli label has letters outside {I,X,Y,Z}: " + label);
        }
    }
    return PauliString::hermitian(n, x, z);
}

}  // namespace tricrit

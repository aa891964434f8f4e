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

#include <complex>
#include <cstdint>
#include <string>

#include "tricrit/errors.hpp"

namespace tricrit {

/// Basis-state indices are big-endian: qubit 0 is the most significant bit,
/// so |q0 q1 ... q_{n-1}> has index sum q_j * 2^{n-1-j}. Bit masks below live
/// in index space; `qubit_bit` converts a qubit label to its index bit.
inline uint32_t qubit_bit(int n, int q) { return 1u << (n - 1 - q); }

inline int popcount32(uint32_t v) { return __builtin_popcount(v); }

/// n-qubit Pauli operator  i^phase * X^x * Z^z  with
/// X^a Z^b |v> = (-1)^{popcount(b & v)} |v ^ a>.
///
/// The operator is Hermitian iff phase == popcount(x & z) (mod 2); Hermitian
/// strings are i^{popcount(x&z)} X^x Z^z times a real sign.
struct PauliString {
    int n = 0;
    uint32_t x = 0;
    uint32_t z = 0;
    int phase = 0;  // power of i, mod 4

    static PauliString identity(int n) { return PauliString{n, 0, 0, 0}; }

    /// Hermitian Pauli with the given sign (0 -> +1, 1 -> -1).
    static PauliString hermitian(int n, uint32_t x, uint32_t z, int sign = 0) {
        return PauliString{n, x, z, (popcount32(x & z) + 2 * (sign & 1)) % 4};
    }

    bool x_on_qubit(int q) const { return (x >> (n - 1 - q)) & 1u; }
    bool z_on_qubit(int q) const { return (z >> (n - 1 - q)) & 1u; }

    /// Power of i relative to the sign-free Hermitian string with equal bits.
    int hermitian_phase() const { return ((phase - popcount32(x & z)) % 4 + 4) % 4; }

    bool is_hermitian() const { return hermitian_phase() % 2 == 0; }

    /// -1 or +1 for Hermitian strings.
    int sign() const { return hermitian_phase() == 0 ? 1 : -1; }

    /// Letters over {I,X,Y,Z}, qubit 0 first, ignoring phase: e.g. "IXZ".
    std::string label() const;

    bool operator==(const PauliString &o) const {
        return n == o.n && x == o.x && z == o.z && phase == o.phase;
    }
};

/// Exact product with the accumulated power-of-i phase.
PauliString pauli_mul(const PauliString &a, const PauliString &b);

/// True iff the operators commute (symplectic inner product vanishes).
bool pauli_commute(const PauliString &a, const PauliString &b);

/// Parse a label such as "XY" or "IZZI" into a +1 Hermitian string.
PauliString pauli_from_label(const std::string &label);

}  // namespace tricrit

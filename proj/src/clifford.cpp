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

#include "tricrit/clifford.hpp"

namespace tricrit {

std::string Gate::name() const {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::CNOT: return "CNOT";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
    }
    return "?";
}

CliffordCircuit &CliffordCircuit::push(Gate g) {
    if (g.q0 < 0 || g.q0 >= n || (g.kind == GateKind::CNOT && (g.q1 < 0 || g.q1 >= n || g.q1 == g.q0))) {
        throw ValidationError("gate qubit out of range");
    }
    gates.push_back(g);
    return *this;
}

CliffordCircuit &CliffordCircuit::append(const CliffordCircuit &other) {
    if (other.n != n) throw ValidationError("circuit append: qubit count mismatch");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    return *this;
}

AmpVec apply_gate(const Gate &g, const AmpVec &v) {
    AmpVec out = v;
    int n = v.n;
    uint32_t d = uint32_t(1) << n;
    switch (g.kind) {
        case GateKind::X: {
            uint32_t b = qubit_bit(n, g.q0);
            for (uint32_t i = 0; i < d; ++i) out.a[i] = v.a[i ^ b];
            break;
        }
        case GateKind::Y: {
            uint32_t b = qubit_bit(n, g.q0);
            for (uint32_t i = 0; i < d; ++i) {
                // Y|0> = i|1>, Y|1> = -i|0>
                out.a[i] = v.a[i ^ b].times_i((i & b) ? 1 : 3);
            }
            break;
        }
        case GateKind::Z: {
            uint32_t b = qubit_bit(n, g.q0);
            for (uint32_t i = 0; i < d; ++i) {
                if (i & b) out.a[i] = v.a[i].times_i(2);
            }
            break;
        }
        case GateKind::S: {
            uint32_t b = qubit_bit(n, g.q0);
            for (uint32_t i = 0; i < d; ++i) {
                if (i & b) out.a[i] = v.a[i].times_i(1);
            }
            break;
        }
        case GateKind::H: {
            uint32_t b = qubit_bit(n, g.q0);
            for (uint32_t i = 0; i < d; ++i) {
                if (i & b) continue;
                GaussInt a0 = v.a[i], a1 = v.a[i | b];
                out.a[i] = a0 + a1;
                out.a[i | b] = a0 - a1;
            }
            out.scale = v.scale + 1;
            out.reduce_scale();
            break;
        }
        case GateKind::CNOT: {
            uint32_t bc = qubit_bit(n, g.q0), bt = qubit_bit(n, g.q1);
            for (uint32_t i = 0; i < d; ++i) {
                uint32_t j = (i & bc) ? (i ^ bt) : i;
                out.a[j] = v.a[i];
            }
            break;
        }
    }
    return out;
}

AmpVec apply_circuit(const CliffordCircuit &c, AmpVec v) {
    if (c.n != v.n) throw ValidationError("apply_circuit: dimension mismatch");
    for (const auto &g : c.gates) v = apply_gate(g, v);
    return v;
}

namespace {
// Conjugation rules on the (x, z, sign) Hermitian representation.
void conj_gate(const Gate &g, int n, uint32_t &x, uint32_t &z, int &sign) {
    uint32_t b = qubit_bit(n, g.q0);
    bool xb = x & b, zb = z & b;
    switch (g.kind) {
        case GateKind::H:
            if (xb && zb) sign ^= 1;  // Y -> -Y
            if (xb != zb) { x ^= b; z ^= b; }
            break;
        case GateKind::S:
            if (xb && zb) sign ^= 1;  // Y -> -X
            if (xb) z ^= b;           // X -> Y
            break;
        case GateKind::X:
            if (zb) sign ^= 1;
            break;
        case GateKind::Y:
            if (xb != zb) sign ^= 1;
            break;
        case GateKind::Z:
            if (xb) sign ^= 1;
            break;
        case GateKind::CNOT: {
            uint32_t bt = qubit_bit(n, g.q1);
            bool xc = x & b, zc = z & b, xt = x & bt, zt = z & bt;
            if (xc && zt && (xt == zc)) sign ^= 1;
            if (xc) x ^= bt;
            if (zt) z ^= b;
            break;
        }
    }
}
}  // namespace

PauliString conjugate_pauli(const CliffordCircuit &c, PauliString p) {
    if (c.n != p.n) throw ValidationError("conjugate_pauli: dimension mismatch");
    if (!p.is_hermitian()) throw ValidationError("conjugate_pauli expects a Hermitian string");
    uint32_t x = p.x, z = p.z;
    int sign = p.hermitian_phase() == 0 ? 0 : 1;
    for (const auto &g : c.gates) conj_gate(g, c.n, x, z, sign);
    return PauliString::hermitian(c.n, x, z, sign);
}

CliffordCircuit sample_clifford(int n, Rng &rng) {
    CliffordCircuit c(n);
    int len = 24 * n * n + 16;
    for (int i = 0; i < len; ++i) {
        uint32_t pick = rng.below(n > 1 ? 3 : 2);
        switch (pick) {
            case 0: c.h(int(rng.below(uint32_t(n)))); break;
            case 1: c.s(int(rng.below(uint32_t(n)))); break;
            default: {
                int a = int(rng.below(uint32_t(n)));
                int b = int(rng.below(uint32_t(n - 1)));
                if (b >= a) ++b;
                c.cnot(a, b);
                break;
            }
        }
    }
    return c;
}

}  // namespace tricrit

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

#include "tricrit/stabilizer.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace tricrit {

uint64_t stabilizer_state_count(int n) {
    if (n < 1 || n > 8) throw CapacityError("state count supported for 1 <= n <= 8");
    uint64_t c = uint64_t(1) << n;
    for (int l = 1; l <= n; ++l) c *= (uint64_t(1) << l) + 1;
    return c;
}

uint64_t triple_count(int n) {
    return 4 * ((uint64_t(1) << n) - 1) * stabilizer_state_count(n) / 3;
}

uint64_t oriented_witness_count(int n) { return 3 * triple_count(n); }

DyadicFraction stab_overlap2(const StabilizerState &a, const StabilizerState &b) {
    DyadicFraction f = overlap2(a.amps, b.amps);
    if (f.num > 1) {
        throw ValidationError("squared overlap of stabilizer states must be 0 or 2^-j");
    }
    return f;
}

namespace {

constexpr int kXZBits = 2;  // symplectic row layout: x bits 0..n-1, z bits n..2n-1

int symplectic_product(uint32_t u, uint32_t v, int n) {
    uint32_t mask = (uint32_t(1) << n) - 1;
    uint32_t ux = u & mask, uz = u >> n;
    uint32_t vx = v & mask, vz = v >> n;
    return (popcount32(ux & vz) ^ popcount32(uz & vx)) & 1;
}

// All maximal isotropic subspaces of F_2^{2n} as reduced-row-echelon
// generator matrices, in lexicographic order of (pivot set, free bits).
std::vector<std::array<uint32_t, 4>> enumerate_isotropic(int n) {
    static_cast<void>(kXZBits);
    int cols = 2 * n;
    std::vector<std::array<uint32_t, 4>> out;
    std::vector<int> pivots(n);
    for (int i = 0; i < n; ++i) pivots[i] = i;
    while (true) {
        std::vector<std::pair<int, int>> freepos;  // (row, col)
        for (int r = 0; r < n; ++r) {
            for (int c = pivots[r] + 1; c < cols; ++c) {
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
                    freepos.emplace_back(r, c);
                }
            }
        }
        uint64_t combos = uint64_t(1) << freepos.size();
        for (uint64_t bits = 0; bits < combos; ++bits) {
            std::array<uint32_t, 4> rows{};
            for (int r = 0; r < n; ++r) rows[size_t(r)] = uint32_t(1) << pivots[r];
            for (size_t i = 0; i < freepos.size(); ++i) {
                if ((bits >> i) & 1) {
                    rows[size_t(freepos[i].first)] |= uint32_t(1) << freepos[i].second;
                }
            }
            bool iso = true;
            for (int i = 0; i < n && iso; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (symplectic_product(rows[size_t(i)], rows[size_t(j)], n)) {
                        iso = false;
                        break;
                    }
                }
            }
            if (iso) out.push_back(rows);
        }
        // next pivot combination (lexicographic)
        int i = n - 1;
        while (i >= 0 && pivots[i] == cols - n + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < n; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

struct RawGen {
    uint32_t x, z;
    int phase;  // operator = i^phase X^x Z^z
};

RawGen mul(const RawGen &a, const RawGen &b) {
    return {a.x ^ b.x, a.z ^ b.z, (a.phase + b.phase + 2 * popcount32(a.z & b.x)) % 4};
}

// Exact amplitudes of the state stabilized by the given generators.
AmpVec amplitudes_from_tableau(int n, const std::vector<TableauRow> &gens) {
    std::vector<RawGen> xg, zg;
    std::vector<uint32_t> xpiv;
    for (const auto &row : gens) {
        RawGen cur{row.x, row.z, (popcount32(row.x & row.z) + 2 * row.sign) % 4};
        for (size_t i = 0; i < xg.size(); ++i) {
            if (cur.x & xpiv[i]) cur = mul(cur, xg[i]);
        }
        if (cur.x != 0) {
            xg.push_back(cur);
            xpiv.push_back(cur.x & (~cur.x + 1));  // lowest set bit
        } else {
            if (cur.phase % 2 != 0) throw ValidationError("tableau is not a stabilizer group");
            zg.push_back(cur);
        }
    }
    int k = int(xg.size());

    // Solve (-1)^{z . v} = (-1)^{phase/2} for a support point v.
    std::vector<std::pair<uint32_t, int>> reduced;  // (z-mask, rhs) with distinct pivots
    for (const auto &g : zg) {
        uint32_t zm = g.z;
        int rhs = (g.phase / 2) & 1;
        for (const auto &[pz, pr] : reduced) {
            uint32_t pb = pz & (~pz + 1);
            if (zm & pb) {
                zm ^= pz;
                rhs ^= pr;
            }
        }
        if (zm == 0) {
            if (rhs != 0) throw ValidationError("inconsistent stabilizer constraints");
            continue;
        }
        reduced.emplace_back(zm, rhs);
    }
    uint32_t s0 = 0;
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
        uint32_t pb = it->first & (~it->first + 1);
        if ((popcount32(it->first & s0) & 1) != it->second) s0 ^= pb;
    }

    AmpVec v;
    v.n = n;
    v.scale = k;
    v.a.assign(size_t(1) << n, GaussInt{});
    std::vector<uint32_t> pos(size_t(1) << k);
    v.a[s0] = GaussInt{1, 0};
    pos[0] = s0;
    for (uint32_t y = 1; y < (uint32_t(1) << k); ++y) {
        int j = __builtin_ctz(y);
        uint32_t xprev = pos[y ^ (uint32_t(1) << j)];
        const RawGen &g = xg[size_t(j)];
        int ph = (g.phase + 2 * popcount32(g.z & xprev)) % 4;
        pos[y] = xprev ^ g.x;
        v.a[pos[y]] = v.a[xprev].times_i(ph);
    }
    v.normalize_phase();
    return v;
}

}  // namespace

StabilizerState state_from_tableau(int n, std::vector<TableauRow> gens) {
    if (int(gens.size()) != n) throw ValidationError("tableau must have n generators");
    StabilizerState st;
    st.n = n;
    st.gens = std::move(gens);
    st.amps = amplitudes_from_tableau(n, st.gens);
    return st;
}

std::vector<StabilizerState> enumerate_stabilizer_states(int n) {
    if (n < 1 || n > kMaxEnumQubits) {
        throw CapacityError("stabilizer enumeration supports 1 <= n <= 4");
    }
    uint32_t xmask = (uint32_t(1) << n) - 1;
    std::vector<StabilizerState> out;
    out.reserve(stabilizer_state_count(n));
    for (const auto &rows : enumerate_isotropic(n)) {
        for (uint32_t signs = 0; signs < (uint32_t(1) << n); ++signs) {
            StabilizerState st;
            st.n = n;
            st.gens.resize(size_t(n));
            for (int i = 0; i < n; ++i) {
                st.gens[size_t(i)] = TableauRow{rows[size_t(i)] & xmask, rows[size_t(i)] >> n,
                                                uint8_t((signs >> i) & 1)};
            }
            st.amps = amplitudes_from_tableau(n, st.gens);
            st.index = int32_t(out.size());
            out.push_back(std::move(st));
        }
    }
    if (out.size() != stabilizer_state_count(n)) {
        throw ValidationError("enumeration produced an unexpected state count");
    }
    return out;
}

StabilizerCatalog::StabilizerCatalog(int n) : StabilizerCatalog(n, enumerate_stabilizer_states(n)) {}

StabilizerCatalog::StabilizerCatalog(int n, std::vector<StabilizerState> states)
    : n_(n), states_(std::move(states)) {
    build_index();
    build_triples();
}

void StabilizerCatalog::build_index() {
    key_to_index_.reserve(states_.size() * 2);
    dense_.resize(states_.size() * size_t(dim()));
    for (const auto &st : states_) {
        key_to_index_.emplace(st.amps.key(), st.index);
        auto d = st.amps.dense();
        std::copy(d.begin(), d.end(), dense_.begin() + size_t(st.index) * size_t(dim()));
    }
    if (key_to_index_.size() != states_.size()) {
        throw ValidationError("duplicate states in enumeration");
    }
}

int32_t StabilizerCatalog::index_of(const AmpVec &amps) const {
    auto it = key_to_index_.find(amps.key());
    return it == key_to_index_.end() ? -1 : it->second;
}

void StabilizerCatalog::build_triples() {
    triples_.reserve(triple_count(n_));
    int cols = 2 * n_;
    for (const auto &st : states_) {
        // pivot columns of the binary stabilizer subspace
        std::vector<uint32_t> work;
        uint32_t pivmask = 0;
        for (const auto &g : st.gens) {
            uint32_t row = g.x | (g.z << n_);
            for (uint32_t w : work) {
                uint32_t pb = w & (~w + 1);
                if (row & pb) row ^= w;
            }
            work.push_back(row);
            pivmask |= row & (~row + 1);
        }
        std::vector<int> nonpiv;
        for (int c = 0; c < cols; ++c) {
            if (!((pivmask >> c) & 1)) nonpiv.push_back(c);
        }

        for (uint32_t t = 1; t < (uint32_t(1) << n_); ++t) {
            uint32_t rep = 0;
            for (int j = 0; j < n_; ++j) {
                if ((t >> j) & 1) rep |= uint32_t(1) << nonpiv[size_t(j)];
            }
            uint32_t rx = rep & ((uint32_t(1) << n_) - 1);
            uint32_t rz = rep >> n_;
            PauliString p = PauliString::hermitian(n_, rx, rz);
            AmpVec pa = apply_pauli(p, st.amps);

            std::array<int32_t, 4> nb{};
            for (int m = 0; m < 4; ++m) {
                AmpVec cand;
                cand.n = n_;
                cand.scale = st.amps.scale + 1;
                cand.a.resize(st.amps.a.size());
                for (size_t i = 0; i < cand.a.size(); ++i) {
                    cand.a[i] = st.amps.a[i] + pa.a[i].times_i(m);
                }
                cand.reduce_scale();
                nb[size_t(m)] = index_of(cand);
                if (nb[size_t(m)] < 0) throw ValidationError("neighbour lookup failed");
            }
            static constexpr int kPairs[4][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
            for (const auto &pr : kPairs) {
                int32_t b = nb[size_t(pr[0])], c = nb[size_t(pr[1])];
                if (st.index < b && st.index < c) {
                    triples_.push_back(StabilizerTriple{st.index, b, c, rx, rz,
                                                        int8_t(pr[0]), int8_t(pr[1])});
                }
            }
        }
    }
    if (triples_.size() != triple_count(n_)) {
        throw ValidationError("triple enumeration produced an unexpected count");
    }
}

namespace {
std::mutex g_shared_mutex;
std::unique_ptr<StabilizerCatalog> g_shared[kMaxEnumQubits + 1];
}  // namespace

const StabilizerCatalog &StabilizerCatalog::shared(int n) {
    if (n < 1 || n > kMaxEnumQubits) {
        throw CapacityError("shared catalog supports 1 <= n <= 4");
    }
    std::lock_guard<std::mutex> lock(g_shared_mutex);
    if (!g_shared[n]) g_shared[n] = std::make_unique<StabilizerCatalog>(n);
    return *g_shared[n];
}

void StabilizerCatalog::install_shared(std::unique_ptr<StabilizerCatalog> catalog) {
    int n = catalog->n();
    std::lock_guard<std::mutex> lock(g_shared_mutex);
    if (!g_shared[n]) g_shared[n] = std::move(catalog);
}

const std::vector<StabilizerTriple> &enumerate_triples(int n) {
    return StabilizerCatalog::shared(n).triples();
}

namespace {

// exponent k with u = i^k, for unit Gaussian integers
int unit_exponent(GaussInt u) {
    if (u.re == 1 && u.im == 0) return 0;
    if (u.re == 0 && u.im == 1) return 1;
    if (u.re == -1 && u.im == 0) return 2;
    if (u.re == 0 && u.im == -1) return 3;
    throw ValidationError("expected a Gaussian unit");
}

int qubit_of_bit(int n, int bit) { return n - 1 - bit; }

}  // namespace

CliffordCircuit circuit_to_zero(const AmpVec &amps) {
    int n = amps.n;
    CliffordCircuit circ(n);
    AmpVec v = amps;

    auto sup = v.support();
    if (sup.empty()) throw ValidationError("empty amplitude vector");
    uint32_t shift = sup.front();
    for (int q = 0; q < n; ++q) {
        if (shift & qubit_bit(n, q)) circ.x(q);
    }
    v = apply_circuit(circ, amps);

    // basis of the support subspace, fully reduced, highest pivot first
    sup = v.support();
    std::vector<uint32_t> basis;
    for (uint32_t p : sup) {
        uint32_t cur = p;
        for (uint32_t b : basis) {
            uint32_t hb = uint32_t(1) << (31 - __builtin_clz(b));
            if (cur & hb) cur ^= b;
        }
        if (cur) basis.push_back(cur);
    }
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            uint32_t hb = uint32_t(1) << (31 - __builtin_clz(basis[i]));
            if (basis[j] & hb) basis[j] ^= basis[i];
        }
    }
    std::sort(basis.begin(), basis.end(), std::greater<uint32_t>());
    int k = int(basis.size());

    CliffordCircuit compress(n);
    for (uint32_t b : basis) {
        int pb = 31 - __builtin_clz(b);
        for (int bit = 0; bit < 2 * n; ++bit) {
            if (bit != pb && ((b >> bit) & 1)) {
                compress.cnot(qubit_of_bit(n, pb), qubit_of_bit(n, bit));
            }
        }
    }
    v = apply_circuit(compress, v);
    circ.append(compress);

    // route pivot qubits onto qubits 0..k-1
    std::vector<int> cur;
    for (uint32_t b : basis) cur.push_back(qubit_of_bit(n, 31 - __builtin_clz(b)));
    std::sort(cur.begin(), cur.end());
    CliffordCircuit route(n);
    for (int i = 0; i < k; ++i) {
        if (cur[size_t(i)] == i) continue;
        int a = cur[size_t(i)];
        route.cnot(a, i).cnot(i, a).cnot(a, i);
        for (int j = i + 1; j < k; ++j) {
            if (cur[size_t(j)] == i) cur[size_t(j)] = a;
        }
        cur[size_t(i)] = i;
    }
    v = apply_circuit(route, v);
    circ.append(route);

    // strip quadratic then linear phases, then Hadamards
    GaussInt a0 = v.a[0];
    CliffordCircuit phases(n);
    for (int qa = 0; qa < k; ++qa) {
        for (int qb = qa + 1; qb < k; ++qb) {
            uint32_t ia = qubit_bit(n, qa), ib = qubit_bit(n, qb);
            GaussInt r = (v.a[ia | ib] * a0) * (v.a[ia] * v.a[ib]).conj();
            int e = unit_exponent(r);
            if (e == 2) {
                phases.h(qb).cnot(qa, qb).h(qb);  // controlled-Z
            } else if (e != 0) {
                throw ValidationError("amplitude vector is not a stabilizer state");
            }
        }
    }
    for (int q = 0; q < k; ++q) {
        int c = unit_exponent(v.a[qubit_bit(n, q)] * a0.conj());
        for (int rep = 0; rep < (4 - c) % 4; ++rep) phases.s(q);
    }
    for (int q = 0; q < k; ++q) phases.h(q);
    v = apply_circuit(phases, v);
    circ.append(phases);

    if (v.support() != std::vector<uint32_t>{0}) {
        throw ValidationError("canonicalization failed to reach |0^n>");
    }
    return circ;
}

CliffordCircuit canonicalize_triple(const StabilizerCatalog &catalog,
                                    const StabilizerTriple &triple, int apex_slot) {
    if (apex_slot < 0 || apex_slot > 2) throw ValidationError("apex slot must be 0, 1 or 2");
    int n = catalog.n();
    const auto &states = catalog.states();
    int32_t apex = triple.member(apex_slot);
    int32_t other1 = triple.member(apex_slot == 0 ? 1 : 0);
    int32_t other2 = triple.member(apex_slot == 2 ? 1 : 2);

    CliffordCircuit circ = circuit_to_zero(states[size_t(apex)].amps);
    AmpVec vb = apply_circuit(circ, states[size_t(other1)].amps);
    AmpVec vc = apply_circuit(circ, states[size_t(other2)].amps);

    auto x_alpha = [&](const AmpVec &v) -> std::pair<uint32_t, GaussInt> {
        auto sup = v.support();
        if (sup.size() != 2 || sup[0] != 0) {
            throw ValidationError("triple member does not have the neighbour form");
        }
        return {sup[1], v.a[sup[1]] * v.a[0].conj()};
    };
    auto [xb, ab] = x_alpha(vb);
    auto [xc, ac] = x_alpha(vc);
    if (xb != xc) throw ValidationError("triple members disagree on the excitation string");

    CliffordCircuit shift(n);
    uint32_t b0 = qubit_bit(n, 0);
    uint32_t x = xb;
    if (!(x & b0)) {
        for (int q = 1; q < n; ++q) {
            if (x & qubit_bit(n, q)) {
                shift.cnot(q, 0);
                x |= b0;
                break;
            }
        }
    }
    for (int q = 1; q < n; ++q) {
        if (x & qubit_bit(n, q)) shift.cnot(0, q);
    }
    vb = apply_circuit(shift, vb);
    vc = apply_circuit(shift, vc);
    circ.append(shift);

    int eb = unit_exponent(vb.a[b0] * vb.a[0].conj());
    int ec = unit_exponent(vc.a[b0] * vc.a[0].conj());
    int m = -1;
    for (int cand = 0; cand < 4; ++cand) {
        int rb = (eb + cand) % 4, rc = (ec + cand) % 4;
        if ((rb == 0 && rc == 1) || (rb == 1 && rc == 0)) {
            m = cand;
            break;
        }
    }
    if (m < 0) throw ValidationError("triple phases are not an i-pair");
    for (int rep = 0; rep < m; ++rep) circ.s(0);

    // verify the image contract on exact amplitudes
    AmpVec ia = apply_circuit(circ, states[size_t(apex)].amps);
    if (ia.support() != std::vector<uint32_t>{0}) {
        throw ValidationError("canonicalized apex is not |0^n>");
    }
    AmpVec ib = apply_circuit(circ, states[size_t(other1)].amps);
    AmpVec ic = apply_circuit(circ, states[size_t(other2)].amps);
    int fb = unit_exponent(ib.a[b0] * ib.a[0].conj());
    int fc = unit_exponent(ic.a[b0] * ic.a[0].conj());
    bool pair_ok = (fb == 0 && fc == 1) || (fb == 1 && fc == 0);
    if (!pair_ok || ib.support() != std::vector<uint32_t>({0, b0}) ||
        ic.support() != std::vector<uint32_t>({0, b0})) {
        throw ValidationError("canonicalized pair is not {|+>, |+i>} x |0...0>");
    }
    return circ;
}

}  // namespace tricrit

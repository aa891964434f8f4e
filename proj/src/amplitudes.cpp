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

#include "tricrit/amplitudes.hpp"

#include <cmath>

namespace tricrit {

AmpVec AmpVec::basis_state(int n, uint32_t v) {
    AmpVec out;
    out.n = n;
    out.scale = 0;
    out.a.assign(size_t(1) << n, GaussInt{});
    out.a[v] = GaussInt{1, 0};
    return out;
}

std::complex<double> AmpVec::amplitude(uint32_t v) const {
    double f = std::pow(2.0, -0.5 * scale);
    return {a[v].re * f, a[v].im * f};
}

std::vector<std::complex<double>> AmpVec::dense() const {
    std::vector<std::complex<double>> out(a.size());
    double f = std::pow(2.0, -0.5 * scale);
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = {a[i].re * f, a[i].im * f};
    }
    return out;
}

std::vector<uint32_t> AmpVec::support() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero()) out.push_back(i);
    }
    return out;
}

uint64_t AmpVec::norm2_numerator() const {
    uint64_t s = 0;
    for (const auto &g : a) s += uint64_t(g.norm2());
    return s;
}

void AmpVec::reduce_scale() {
    while (scale > 0) {
        bool all = true;
        for (const auto &g : a) {
            if (!g.divisible_by_one_plus_i()) {
                all = false;
                break;
            }
        }
        if (!all) break;
        for (auto &g : a) g = g.div_one_plus_i();
        --scale;
    }
}

void AmpVec::normalize_phase() {
    for (const auto &g : a) {
        if (g.is_zero()) continue;
        // entries of stabilizer vectors are units; rotate the first one to +1
        int k;
        if (g.re == 1 && g.im == 0) k = 0;
        else if (g.re == 0 && g.im == 1) k = 3;   // i * i^3 = 1
        else if (g.re == -1 && g.im == 0) k = 2;
        else if (g.re == 0 && g.im == -1) k = 1;
        else throw ValidationError("amplitude vector entries are not units");
        if (k != 0) {
            for (auto &h : a) h = h.times_i(k);
        }
        return;
    }
    throw ValidationError("amplitude vector is zero");
}

std::string AmpVec::key() const {
    AmpVec c = *this;
    c.normalize_phase();
    std::string out;
    out.reserve(c.a.size() + 1);
    out.push_back(static_cast<char>(c.scale));
    for (const auto &g : c.a) {
        char code;
        if (g.is_zero()) code = 0;
        else if (g.re == 1) code = 1;
        else if (g.im == 1) code = 2;
        else if (g.re == -1) code = 3;
        else code = 4;
        out.push_back(code);
    }
    return out;
}

AmpVec apply_pauli(const PauliString &p, const AmpVec &v) {
    if (p.n != v.n) throw ValidationError("apply_pauli: dimension mismatch");
    AmpVec out;
    out.n = v.n;
    out.scale = v.scale;
    out.a.assign(v.a.size(), GaussInt{});
    for (uint32_t i = 0; i < v.a.size(); ++i) {
        if (v.a[i].is_zero()) continue;
        int ph = (p.phase + 2 * popcount32(p.z & i)) % 4;
        out.a[i ^ p.x] = v.a[i].times_i(ph);
    }
    return out;
}

GaussInt inner_raw(const AmpVec &a, const AmpVec &b) {
    GaussInt s{};
    for (size_t i = 0; i < a.a.size(); ++i) {
        s = s + a.a[i].conj() * b.a[i];
    }
    return s;
}

DyadicFraction overlap2(const AmpVec &a, const AmpVec &b) {
    if (a.n != b.n) throw ValidationError("overlap2: dimension mismatch");
    GaussInt s = inner_raw(a, b);
    DyadicFraction f{uint64_t(s.norm2()), a.scale + b.scale};
    while (f.num != 0 && (f.num & 1) == 0 && f.log2_den > 0) {
        f.num >>= 1;
        --f.log2_den;
    }
    if (f.num == 0) f.log2_den = 0;
    return f;
}

}  // namespace tricrit

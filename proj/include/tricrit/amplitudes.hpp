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
#include <vector>

#include "tricrit/pauli.hpp"

namespace tricrit {

/// Gaussian integer a + b*i.
struct GaussInt {
    int32_t re = 0;
    int32_t im = 0;

    bool is_zero() const { return re == 0 && im == 0; }
    GaussInt conj() const { return {re, -im}; }
    GaussInt operator+(GaussInt o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(GaussInt o) const { return {re - o.re, im - o.im}; }
    GaussInt operator*(GaussInt o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(GaussInt o) const { return re == o.re && im == o.im; }

    /// Multiply by i^k.
    GaussInt times_i(int k) const {
        switch (((k % 4) + 4) % 4) {
            case 0: return *this;
            case 1: return {-im, re};
            case 2: return {-re, -im};
            default: return {im, -re};
        }
    }

    /// (1+i) divides a+bi iff a+b is even.
    bool divisible_by_one_plus_i() const { return ((re + im) & 1) == 0; }

    /// Exact quotient by (1+i); caller checks divisibility.
    GaussInt div_one_plus_i() const { return {(re + im) / 2, (im - re) / 2}; }

    int64_t norm2() const {
        return int64_t(re) * re + int64_t(im) * im;
    }
};

/// Exact stabilizer-state amplitude vector: entry v -> a[v] * 2^{-scale/2}.
/// For a valid stabilizer state the nonzero entries are units {±1, ±i} on an
/// affine support of size 2^scale, so sum |a[v]|^2 == 2^scale exactly.
struct AmpVec {
    int n = 0;
    int scale = 0;
    std::vector<GaussInt> a;

    int dim() const { return 1 << n; }

    static AmpVec basis_state(int n, uint32_t v);

    std::complex<double> amplitude(uint32_t v) const;
    std::vector<std::complex<double>> dense() const;

    /// Indices with nonzero entries, ascending.
    std::vector<uint32_t> support() const;

    uint64_t norm2_numerator() const;

    /// Pull out (1+i) factors until entries are primitive.
    void reduce_scale();

    /// Multiply by the unit making the lowest-index nonzero entry equal +1.
    void normalize_phase();

    /// Canonical byte key (phase-normalized copy); equal keys <=> equal states.
    std::string key() const;
};

AmpVec apply_pauli(const PauliString &p, const AmpVec &v);

/// Gaussian-integer inner product sum_v conj(a_v) b_v (scales not applied).
GaussInt inner_raw(const AmpVec &a, const AmpVec &b);

/// Dyadic rational num / 2^{log2_den}, kept reduced.
struct DyadicFraction {
    uint64_t num = 0;
    int log2_den = 0;

    double value() const { return static_cast<double>(num) / double(1ULL << log2_den); }
    bool is_zero() const { return num == 0; }
    bool operator==(const DyadicFraction &o) const {
        return num == o.num && log2_den == o.log2_den;
    }
};

/// Exact squared overlap |<a|b>|^2; for stabilizer states the reduced value
/// is always 0 or 2^{-j}.
DyadicFraction overlap2(const AmpVec &a, const AmpVec &b);

}  // namespace tricrit

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

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "tricrit/clifford.hpp"

namespace tricrit {

/// Largest supported qubit count for enumeration; 4 covers two copies of a
/// two-qubit state (36720 states, 734400 neighbouring triples).
inline constexpr int kMaxEnumQubits = 4;

/// Number of pure stabilizer states: 2^n prod_{l=1..n} (2^l + 1).
uint64_t stabilizer_state_count(int n);

/// Number of unordered neighbouring triples: (4/3) (2^n - 1) * state count.
uint64_t triple_count(int n);

/// Number of oriented triangle witnesses: 3 * triple_count.
uint64_t oriented_witness_count(int n);

/// Stabilizer generator: Hermitian Pauli sign * i^{|x&z|} X^x Z^z.
struct TableauRow {
    uint32_t x = 0;
    uint32_t z = 0;
    uint8_t sign = 0;  // 0 -> +1, 1 -> -1
};

/// Pure stabilizer state: generator tableau plus the exact amplitude vector.
struct StabilizerState {
    int n = 0;
    std::vector<TableauRow> gens;
    AmpVec amps;
    int32_t index = -1;
};

/// Unordered neighbouring triple {a, b, c} with all pairwise squared overlaps
/// exactly 1/2. In the frame where state `a` is |0^n>, states b and c read
/// (|0^n> + alpha |x>)/sqrt2 and (|0^n> + alpha' |x>)/sqrt2 with alpha'/alpha
/// = ±i. The generating Pauli P (rep_x, rep_z) and unit exponents satisfy
/// b = (1 + i^{phase_b} P) a / sqrt2 and likewise for c; phase_c - phase_b is
/// odd, which encodes the ±i relation exactly.
struct StabilizerTriple {
    int32_t a = 0;
    int32_t b = 0;
    int32_t c = 0;
    uint32_t rep_x = 0;
    uint32_t rep_z = 0;
    int8_t phase_b = 0;
    int8_t phase_c = 0;

    int32_t member(int slot) const { return slot == 0 ? a : (slot == 1 ? b : c); }
};

/// Exact squared overlap of two enumerated states; 0 or 2^{-j}.
DyadicFraction stab_overlap2(const StabilizerState &a, const StabilizerState &b);

/// Rebuild a state (exact amplitudes included) from its generator tableau.
StabilizerState state_from_tableau(int n, std::vector<TableauRow> gens);

/// All n-qubit pure stabilizer states in a deterministic canonical order:
/// maximal isotropic subspaces of F_2^{2n} by reduced-row-echelon generator
/// matrix (lexicographic), then the 2^n sign assignments in binary order.
std::vector<StabilizerState> enumerate_stabilizer_states(int n);

/// Enumerated states plus neighbouring-triple structure for one qubit count.
/// Immutable after construction; safe to share across threads.
class StabilizerCatalog {
  public:
    explicit StabilizerCatalog(int n);
    StabilizerCatalog(int n, std::vector<StabilizerState> states);

    /// Process-wide lazily built instance (states + triples).
    static const StabilizerCatalog &shared(int n);

    /// Install a cache-loaded catalog as the shared instance for n if none
    /// has been built yet.
    static void install_shared(std::unique_ptr<StabilizerCatalog> catalog);

    int n() const { return n_; }
    int dim() const { return 1 << n_; }
    const std::vector<StabilizerState> &states() const { return states_; }
    const std::vector<StabilizerTriple> &triples() const { return triples_; }
    uint64_t witness_count() const { return 3 * uint64_t(triples_.size()); }

    /// Index of the state with the same amplitude key, or -1.
    int32_t index_of(const AmpVec &amps) const;

    /// Dense complex amplitudes of state s (length 2^n), scale applied.
    const std::complex<double> *dense_amps(int32_t s) const {
        return dense_.data() + size_t(s) * size_t(dim());
    }

  private:
    void build_index();
    void build_triples();

    int n_;
    std::vector<StabilizerState> states_;
    std::vector<StabilizerTriple> triples_;
    std::unordered_map<std::string, int32_t> key_to_index_;
    std::vector<std::complex<double>> dense_;
};

/// All neighbouring triples for n qubits (delegates to the shared catalog).
const std::vector<StabilizerTriple> &enumerate_triples(int n);

/// Clifford circuit mapping the apex state of the triple (slot 0 = a) to
/// |0^n> and the remaining pair onto {|+>, |+i>} ⊗ |0^{n-1}> as a set.
/// The images are verified on the exact amplitudes before returning.
CliffordCircuit canonicalize_triple(const StabilizerCatalog &catalog,
                                    const StabilizerTriple &triple, int apex_slot = 0);

/// Circuit mapping an arbitrary stabilizer amplitude vector to |0^n>.
CliffordCircuit circuit_to_zero(const AmpVec &amps);

}  // namespace tricrit

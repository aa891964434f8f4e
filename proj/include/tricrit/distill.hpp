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

#include <array>

#include "tricrit/criterion.hpp"

namespace tricrit {

/// Two-qubit bound magic state: no triangle witness is negative on a single
/// copy, so no stabilizer protocol distils one copy to a single-qubit magic
/// state, yet two copies are detected and distillable.
DensityMatrix bound_magic_state();

/// Distillability threshold for the H state, |<X>| + |<Y>| + |<Z>| > 3/sqrt7.
inline constexpr double kHDistillThreshold = 1.1338934190276817;  // 3/sqrt(7)

/// Reference outputs of the two-copy distillation of bound_magic_state();
/// the circuit reconstruction accepts a wiring only if it reproduces these
/// within kCircuitMatchTol.
inline constexpr double kReferenceSuccessProbability = 0.129;
inline constexpr std::array<double, 3> kReferenceBloch = {0.1844, 0.3334, 0.6544};
inline constexpr double kCircuitMatchTol = 0.002;

/// Four-qubit distillation circuit: two CNOTs, one H and one Y in some order,
/// followed by a computational-basis measurement of three qubits postselected
/// on `outcome`; the unmeasured qubit carries the distilled state.
struct DistillationCircuit {
    CliffordCircuit circuit;
    std::array<int, 3> measured{};
    std::array<int, 3> outcome{};
    int output_qubit = 0;
    int match_count = 0;  // wirings matching the reference numbers
};

/// Reconstructs the wiring by exhaustive search over gate orders, CNOT
/// orientations, H/Y placements and postselection patterns, keeping the first
/// configuration (deterministic order) that reproduces the reference success
/// probability and Bloch vector on bound_magic_state()^{⊗2}. Memoized.
/// Throws ValidationError if no configuration matches.
const DistillationCircuit &two_copy_distillation_circuit();

struct DistillationOutcome {
    std::optional<DensityMatrix> output;
    double success_probability = 0.0;
    std::array<double, 3> bloch{};
    double l1_norm = 0.0;
};

/// Applies the reconstructed circuit to rho ⊗ rho and postselects.
DistillationOutcome run_two_copy_distill(const DensityMatrix &rho);

/// margin = |<X>| + |<Y>| + |<Z>| - 3/sqrt7; positive margins admit H-state
/// distillation by the standard iterative protocol.
std::pair<bool, double> h_distillable(const DensityMatrix &rho);

struct ActivationSearchConfig {
    int iterations = 200;
    double initial_step = 0.2;
    double penalty = 50.0;
    std::optional<DensityMatrix> init;  // default: bound_magic_state()
};

struct ActivationSearchResult {
    DensityMatrix candidate;
    double single_copy_min = 0.0;  // detect(rho).min_value
    double two_copy_min = 0.0;     // detect_two_copies(rho).min_value
    bool success = false;          // undetected at one copy, detected at two
    int iterations = 0;
};

/// Simulated-annealing style search over rho = A A^dagger / Tr maximizing the
/// two-copy violation under a single-copy non-detection penalty. Best-so-far
/// bookkeeping is monotone; the returned margins are re-verified with the
/// detection scans.
ActivationSearchResult search_activation_state(Rng &rng,
                                               const ActivationSearchConfig &config = {});

}  // namespace tricrit

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

#include "tricrit/dense.hpp"
#include "tricrit/stabilizer.hpp"

namespace tricrit {

/// Values in [-tolerance, 0] are reported as boundary rather than detected;
/// the minimal-purity construction sits exactly on a facet.
inline constexpr double kDetectionTolerance = 1e-9;

/// Oriented triangle witness W = psi_i + psi_j - psi_k over a neighbouring
/// triple; `subtracted` selects psi_k by slot (0 = a, 1 = b, 2 = c).
struct TriangleWitness {
    StabilizerTriple triple;
    int subtracted = 0;
};

struct DetectionReport {
    int n = 0;
    uint64_t witness_count = 0;
    double min_value = 0.0;
    bool detected = false;      // min_value < -tolerance
    bool boundary = false;      // min_value in [-tolerance, tolerance]
    double tolerance = kDetectionTolerance;
    TriangleWitness argmin;
    double abs_sum = 0.0;       // sum over oriented witnesses of |Tr(W rho)|
    double negativity = 0.0;    // log2(abs_sum / (4 (2^n - 1) prod (2^l + 1)))
    int log_base = 2;
};

/// Fidelities Tr(rho psi_s) over all enumerated states, in catalog order.
std::vector<double> stabilizer_fidelities(const DensityMatrix &rho,
                                          const StabilizerCatalog &catalog);

/// Tr(W rho) = F_i + F_j - F_k; negative values certify magic.
double witness_value(const DensityMatrix &rho, const TriangleWitness &w,
                     const StabilizerCatalog &catalog);

/// Full scan over all oriented witnesses (3 per triple, deterministic order).
DetectionReport detect(const DensityMatrix &rho, const StabilizerCatalog &catalog,
                       double tolerance = kDetectionTolerance);

/// Convenience overload using the shared catalog for rho's qubit count.
DetectionReport detect(const DensityMatrix &rho, double tolerance = kDetectionTolerance);

/// Closed-form single-qubit test: margin = |x|+|y|+|z| - 1 over the Bloch
/// vector; detection at margin > 2*tolerance matches the witness scan, whose
/// minimum equals (1 - l1)/2.
std::pair<bool, double> detect_single_qubit(const DensityMatrix &rho,
                                            double tolerance = kDetectionTolerance);

double triangle_negativity(const DensityMatrix &rho, const StabilizerCatalog &catalog);
double triangle_negativity(const DensityMatrix &rho);

/// Rotate by the canonicalizing circuit of w (subtracted state to |0^n>),
/// then project qubits 1..n-1 onto |0...0>. The sign of witness_value(rho, w)
/// equals the sign of the output's canonical octahedron-facet margin.
struct Reduction {
    std::optional<DensityMatrix> state;
    double probability = 0.0;
    CliffordCircuit circuit;
};
Reduction reduce_to_single_qubit(const DensityMatrix &rho, const TriangleWitness &w,
                                 const StabilizerCatalog &catalog);

/// Runs detect on rho ⊗ rho for a two-qubit rho (2,203,200 witnesses).
DetectionReport detect_two_copies(const DensityMatrix &rho,
                                  double tolerance = kDetectionTolerance);

}  // namespace tricrit

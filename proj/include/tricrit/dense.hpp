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

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "tricrit/clifford.hpp"
#include "tricrit/pauli.hpp"
#include "tricrit/rng.hpp"

namespace tricrit {

inline constexpr double kHermTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

/// Dense Hermitian unit-trace matrix. `qubits` is set when the dimension is a
/// power of two; qubit-indexed operations require it.
struct DensityMatrix {
    Eigen::MatrixXcd mat;
    int dim = 0;
    int qubits = -1;
};

/// Validates Hermiticity (1e-10), trace (1e-10) and the minimum eigenvalue
/// (>= -1e-9); rejects bad inputs with a diagnostic naming the failed check.
DensityMatrix make_density(Eigen::MatrixXcd m);

/// Construct without validation (for matrices known valid by construction).
DensityMatrix make_density_unchecked(Eigen::MatrixXcd m);

DensityMatrix maximally_mixed(int d);
DensityMatrix pure_state(const Eigen::VectorXcd &psi);

double purity(const DensityMatrix &rho);

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// Trace out every qubit not in `keep` (ascending qubit indices retained).
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep);

/// Born-rule projection of `qubits` onto computational `bits`; probability 0
/// yields an empty state rather than an error.
struct Postselection {
    std::optional<DensityMatrix> state;
    double probability = 0.0;
};
Postselection postselect(const DensityMatrix &rho, const std::vector<int> &qubits,
                         const std::vector<int> &bits);

DensityMatrix apply_circuit(const DensityMatrix &rho, const CliffordCircuit &c);

/// Apply a gate to a raw matrix in place (used by hot loops that manage
/// validation themselves).
void apply_gate_inplace(Eigen::MatrixXcd &m, const Gate &g, int n);

/// Random mixed state: trace a k-dimensional environment out of a Haar-random
/// pure state on d*k, realized as GG^dagger / Tr with G a d x k standard
/// complex Gaussian matrix.
DensityMatrix sample_induced(int d, int k, Rng &rng);

Eigen::VectorXcd haar_state(int d, Rng &rng);
Eigen::MatrixXcd haar_unitary(int d, Rng &rng);

double eigen_max(const DensityMatrix &rho);
Eigen::VectorXd eigenvalues(const DensityMatrix &rho);

/// Bloch vector (x, y, z) of a single-qubit state.
std::array<double, 3> bloch_vector(const DensityMatrix &rho);
DensityMatrix from_bloch(double x, double y, double z);

Eigen::MatrixXcd pauli_matrix(const PauliString &p);

/// Coefficients in rho = I/d + (1/d) sum_i t_i P_i over non-identity
/// Hermitian Pauli strings; t_identity == 1 is reported separately.
struct PauliDecomposition {
    int n = 0;
    double t_identity = 1.0;
    std::vector<std::pair<PauliString, double>> terms;  // all d^2 - 1 strings
};
PauliDecomposition pauli_decompose(const DensityMatrix &rho);

/// Inverse of pauli_decompose for labelled coefficients (identity implied).
DensityMatrix density_from_pauli(int n, const std::vector<std::pair<PauliString, double>> &terms);

}  // namespace tricrit

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

#include "tricrit/criterion.hpp"

namespace tricrit {

/// Strictly positive magic state with purity exactly 1/(d - 1/2), sitting on
/// a facet of the stabilizer polytope. Blowing it outward by any small delta
/// keeps it a state and makes it detected.
DensityMatrix minimal_purity_state(int n);

/// max_sigma Tr(rho sigma) over the enumerated pure stabilizer states, with
/// every maximizer within 1e-10 of the maximum.
struct BoundaryCheck {
    double max_overlap = 0.0;
    std::vector<int32_t> maximizers;
};
BoundaryCheck boundary_check(const DensityMatrix &rho, const StabilizerCatalog &catalog);

/// Embeds an n-qubit boundary state into m qubits keeping it on the boundary;
/// the purity follows r_m = r_n / ((2^m - 2^n) r_n + 1), so 2^m - 1/r_m is
/// constant along the chain.
struct LiftResult {
    DensityMatrix state;
    double predicted_purity = 0.0;
    bool boundary_input = true;  // false flags inputs failing the boundary test
};
LiftResult lift_boundary_state(const DensityMatrix &rho_n, int m);

/// Purity below 1/(d - 1/d) forces a stabilizer mixture (Pauli l1 argument).
double purity_lower_threshold(int d);

/// Explicit mixture over I/d and (I ± P)/d proving rho is a stabilizer
/// mixture whenever sum |t_i| <= 1 in the Pauli decomposition.
struct MixtureComponent {
    double weight = 0.0;
    bool is_identity = false;
    PauliString pauli;  // valid when !is_identity
    int sign = 1;
};
struct StabilizerMixtureCertificate {
    std::vector<MixtureComponent> components;
    double residual = 0.0;  // max-abs reconstruction error
};
std::optional<StabilizerMixtureCertificate> pauli_l1_certificate(const DensityMatrix &rho);

enum class MembershipStatus { inside, outside, boundary, inconclusive };

const char *to_string(MembershipStatus s);

/// Convex-membership verdict for the stabilizer polytope. Outside verdicts
/// carry a separating direction re-verified against every vertex; inside and
/// boundary verdicts carry convex weights reconstructing rho within eps.
struct MembershipVerdict {
    MembershipStatus status = MembershipStatus::inconclusive;
    double distance = 0.0;    // Hilbert-Schmidt residual ||rho - reconstruction||
    double separation = 0.0;  // Tr(g rho) - max_s Tr(g psi_s), > eps when outside
    Eigen::MatrixXcd witness;
    std::vector<std::pair<int32_t, double>> weights;
    int iterations = 0;
};

/// Frank-Wolfe projection with away steps over the enumerated vertex set.
MembershipVerdict polytope_membership(const DensityMatrix &rho, const StabilizerCatalog &catalog,
                                      double eps = 1e-6, int max_iters = 50000);

enum class ScanMode { membership, criterion };

/// Samples states on the purity shell 1/(d - 1/2) (induced-measure draws
/// rescaled radially toward I/d) and hunts for states outside the polytope.
struct ConjectureScanReport {
    int n = 0;
    int trials = 0;
    ScanMode mode = ScanMode::criterion;
    double shell_purity = 0.0;
    int counterexamples = 0;
    int inconclusive = 0;
    double min_witness_value = 0.0;  // criterion mode: most negative scan value
};
ConjectureScanReport conjecture_scan(int n, int trials, Rng &rng,
                                     ScanMode mode = ScanMode::criterion);

/// One random unitary + rank-1 post-selection trial on subsystem B.
struct ReductionRecord {
    double q = 0.0;               // post-selection probability Tr(rho_S)
    double p_s = 0.0;             // Tr(rho_S^2)
    double p_r = 0.0;             // Tr(rho_R^2)
    double reduced_purity = 0.0;  // p_s / q^2
};

/// Purity stability under measurement: for input purity 1/(d-c) the reduced
/// purity on A never exceeds 1/(d_A - c); also evaluates the saturating
/// construction at q = (d_A - c)/(d - c).
struct AbsoluteBallReport {
    int d = 0;
    int d_a = 0;
    double c = 0.0;  // inferred as d - 1/purity
    double bound = 0.0;
    double max_observed = 0.0;
    double saturating_purity = 0.0;
    std::vector<ReductionRecord> records;
};
AbsoluteBallReport absolute_ball_reduction(const DensityMatrix &rho_ab, int d_a, int trials,
                                           Rng &rng);

/// Fidelity-witness offset floor: alpha >= 3/(d+2) for any valid witness
/// alpha I - |psi><psi|.
double fidelity_alpha_bound(int d);

/// Exact maximum of |<psi|phi_s>|^2 over the enumerated stabilizer states.
double max_stab_fidelity(const Eigen::VectorXcd &psi, const StabilizerCatalog &catalog);

/// First three moments of |<psi|phi_s>|^2 over the full ensemble; the
/// stabilizer states form a 3-design, so these equal 1/d, 2/(d(d+1)),
/// 6/(d(d+1)(d+2)) for every normalized psi.
std::array<double, 3> stab_design_moments(const Eigen::VectorXcd &psi,
                                          const StabilizerCatalog &catalog);

/// rho is unfaithful when its top eigenvalue stays below the fidelity cap
/// 1/d + (1/2) sqrt(1/(d(d-1/2))) and that cap is below 3/(d+2): no witness
/// alpha I - |psi><psi| can then detect it.
struct UnfaithfulCheck {
    bool unfaithful = false;
    double slack = 0.0;  // 3/(d+2) - eigen_max
    double eigen_max = 0.0;
    double fidelity_cap = 0.0;
};
UnfaithfulCheck unfaithful_check(const DensityMatrix &rho);

}  // namespace tricrit

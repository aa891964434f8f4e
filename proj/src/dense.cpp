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

#include "tricrit/dense.hpp"

#include <cmath>

namespace tricrit {

namespace {
const std::complex<double> kI{0.0, 1.0};

int qubits_of_dim(int d) {
    int n = 0;
    while ((1 << n) < d) ++n;
    return (1 << n) == d ? n : -1;
}
}  // namespace

DensityMatrix make_density_unchecked(Eigen::MatrixXcd m) {
    DensityMatrix rho;
    rho.dim = int(m.rows());
    rho.qubits = qubits_of_dim(rho.dim);
    rho.mat = std::move(m);
    return rho;
}

DensityMatrix make_density(Eigen::MatrixXcd m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw ValidationError("density matrix must be square and non-empty");
    }
    double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermTol) {
        throw ValidationError("matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw ValidationError("matrix trace is not 1 (trace " + std::to_string(tr) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    double minev = es.eigenvalues().minCoeff();
    if (minev < -kPsdTol) {
        throw ValidationError("matrix is not positive semidefinite (min eigenvalue " +
                              std::to_string(minev) + ")");
    }
    return make_density_unchecked(std::move(m));
}

DensityMatrix maximally_mixed(int d) {
    return make_density_unchecked(Eigen::MatrixXcd::Identity(d, d) / double(d));
}

DensityMatrix pure_state(const Eigen::VectorXcd &psi) {
    Eigen::VectorXcd v = psi / psi.norm();
    return make_density_unchecked(v * v.adjoint());
}

double purity(const DensityMatrix &rho) {
    return (rho.mat * rho.mat).trace().real();
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    int d = a.dim * b.dim;
    Eigen::MatrixXcd out(d, d);
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
            out.block(i * b.dim, j * b.dim, b.dim, b.dim) = a.mat(i, j) * b.mat;
        }
    }
    return make_density_unchecked(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep) {
    int n = rho.qubits;
    if (n < 1) throw ValidationError("partial_trace needs a qubit-shaped state");
    if (keep.empty()) throw ValidationError("partial_trace must keep at least one qubit");
    for (int q : keep) {
        if (q < 0 || q >= n) throw ValidationError("partial_trace: qubit index out of range");
    }
    int nk = int(keep.size());
    std::vector<int> drop;
    for (int q = 0; q < n; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) drop.push_back(q);
    }
    int dk = 1 << nk, dd = 1 << int(drop.size());
    auto expand = [&](int packed, const std::vector<int> &qs) {
        uint32_t out = 0;
        for (size_t j = 0; j < qs.size(); ++j) {
            if ((packed >> (qs.size() - 1 - j)) & 1) out |= qubit_bit(n, qs[j]);
        }
        return out;
    };
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
    for (int r = 0; r < dk; ++r) {
        for (int c = 0; c < dk; ++c) {
            uint32_t rbase = expand(r, keep), cbase = expand(c, keep);
            std::complex<double> s = 0;
            for (int e = 0; e < dd; ++e) {
                uint32_t env = expand(e, drop);
                s += rho.mat(rbase | env, cbase | env);
            }
            out(r, c) = s;
        }
    }
    return make_density_unchecked(std::move(out));
}

Postselection postselect(const DensityMatrix &rho, const std::vector<int> &qubits,
                         const std::vector<int> &bits) {
    int n = rho.qubits;
    if (n < 1) throw ValidationError("postselect needs a qubit-shaped state");
    if (qubits.size() != bits.size()) {
        throw ValidationError("postselect: qubit and outcome lists differ in length");
    }
    uint32_t mask = 0, want = 0;
    for (size_t i = 0; i < qubits.size(); ++i) {
        int q = qubits[i];
        if (q < 0 || q >= n) throw ValidationError("postselect: qubit index out of range");
        uint32_t b = qubit_bit(n, q);
        if (mask & b) throw ValidationError("postselect: repeated qubit");
        mask |= b;
        if (bits[i]) want |= b;
    }
    std::vector<int> keep;
    for (int q = 0; q < n; ++q) {
        if (!(mask & qubit_bit(n, q))) keep.push_back(q);
    }
    if (keep.empty()) {
        // all qubits measured: probability of the outcome, no residual state
        double p = rho.mat(want, want).real();
        Postselection out;
        out.probability = std::max(p, 0.0);
        return out;
    }
    int dk = 1 << int(keep.size());
    auto expand = [&](int packed) {
        uint32_t out = 0;
        for (size_t j = 0; j < keep.size(); ++j) {
            if ((packed >> (keep.size() - 1 - j)) & 1) out |= qubit_bit(n, keep[j]);
        }
        return out;
    };
    Eigen::MatrixXcd blk(dk, dk);
    for (int r = 0; r < dk; ++r) {
        for (int c = 0; c < dk; ++c) {
            blk(r, c) = rho.mat(expand(r) | want, expand(c) | want);
        }
    }
    double p = blk.trace().real();
    Postselection out;
    out.probability = std::max(p, 0.0);
    if (p <= 1e-14) return out;
    out.state = make_density_unchecked(blk / p);
    return out;
}

void apply_gate_inplace(Eigen::MatrixXcd &m, const Gate &g, int n) {
    int d = 1 << n;
    uint32_t b = qubit_bit(n, g.q0);
    auto for_pairs = [&](auto &&fn) {
        for (int i = 0; i < d; ++i) {
            if (i & b) continue;
            fn(i, int(i | b));
        }
    };
    switch (g.kind) {
        case GateKind::X:
            for_pairs([&](int i0, int i1) { m.row(i0).swap(m.row(i1)); });
            for_pairs([&](int i0, int i1) { m.col(i0).swap(m.col(i1)); });
            break;
        case GateKind::Y:
            for_pairs([&](int i0, int i1) {
                Eigen::RowVectorXcd r0 = m.row(i0);
                m.row(i0) = -kI * m.row(i1);
                m.row(i1) = kI * r0;
            });
            for_pairs([&](int i0, int i1) {
                Eigen::VectorXcd c0 = m.col(i0);
                m.col(i0) = kI * m.col(i1);
                m.col(i1) = -kI * c0;
            });
            break;
        case GateKind::Z:
            for_pairs([&](int, int i1) { m.row(i1) *= -1.0; });
            for_pairs([&](int, int i1) { m.col(i1) *= -1.0; });
            break;
        case GateKind::S:
            for_pairs([&](int, int i1) { m.row(i1) *= kI; });
            for_pairs([&](int, int i1) { m.col(i1) *= -kI; });
            break;
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for_pairs([&](int i0, int i1) {
                Eigen::RowVectorXcd r0 = m.row(i0), r1 = m.row(i1);
                m.row(i0) = r * (r0 + r1);
                m.row(i1) = r * (r0 - r1);
            });
            for_pairs([&](int i0, int i1) {
                Eigen::VectorXcd c0 = m.col(i0), c1 = m.col(i1);
                m.col(i0) = r * (c0 + c1);
                m.col(i1) = r * (c0 - c1);
            });
            break;
        }
        case GateKind::CNOT: {
            uint32_t bt = qubit_bit(n, g.q1);
            for (int i = 0; i < d; ++i) {
                if ((uint32_t(i) & b) && !(uint32_t(i) & bt)) m.row(i).swap(m.row(int(uint32_t(i) ^ bt)));
            }
            for (int i = 0; i < d; ++i) {
                if ((uint32_t(i) & b) && !(uint32_t(i) & bt)) m.col(i).swap(m.col(int(uint32_t(i) ^ bt)));
            }
            break;
        }
    }
}

DensityMatrix apply_circuit(const DensityMatrix &rho, const CliffordCircuit &c) {
    if (rho.qubits != c.n) throw ValidationError("apply_circuit: dimension mismatch");
    Eigen::MatrixXcd m = rho.mat;
    for (const auto &g : c.gates) apply_gate_inplace(m, g, c.n);
    return make_density_unchecked(std::move(m));
}

DensityMatrix sample_induced(int d, int k, Rng &rng) {
    if (d < 1 || k < 1) throw ValidationError("sample_induced needs d, k >= 1");
    Eigen::MatrixXcd g(d, k);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) g(i, j) = rng.cnormal();
    }
    Eigen::MatrixXcd m = g * g.adjoint();
    m /= m.trace().real();
    return make_density_unchecked(std::move(m));
}

Eigen::VectorXcd haar_state(int d, Rng &rng) {
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) v(i) = rng.cnormal();
    return v / v.norm();
}

Eigen::MatrixXcd haar_unitary(int d, Rng &rng) {
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) g(i, j) = rng.cnormal();
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        std::complex<double> ph = r(j, j) / std::abs(r(j, j));
        q.col(j) *= ph;
    }
    return q;
}

double eigen_max(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

Eigen::VectorXd eigenvalues(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

std::array<double, 3> bloch_vector(const DensityMatrix &rho) {
    if (rho.dim != 2) throw ValidationError("bloch_vector requires a single-qubit state");
    double x = 2.0 * rho.mat(0, 1).real();
    double y = -2.0 * rho.mat(0, 1).imag();
    double z = (rho.mat(0, 0) - rho.mat(1, 1)).real();
    return {x, y, z};
}

DensityMatrix from_bloch(double x, double y, double z) {
    Eigen::MatrixXcd m(2, 2);
    m(0, 0) = 0.5 * (1.0 + z);
    m(1, 1) = 0.5 * (1.0 - z);
    m(0, 1) = 0.5 * std::complex<double>(x, -y);
    m(1, 0) = 0.5 * std::complex<double>(x, y);
    return make_density(std::move(m));
}

Eigen::MatrixXcd pauli_matrix(const PauliString &p) {
    int d = 1 << p.n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    std::complex<double> phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (uint32_t v = 0; v < uint32_t(d); ++v) {
        int ph = (p.phase + 2 * popcount32(p.z & v)) % 4;
        m(v ^ p.x, v) = phases[ph];
    }
    return m;
}

PauliDecomposition pauli_decompose(const DensityMatrix &rho) {
    int n = rho.qubits;
    if (n < 1) throw ValidationError("pauli_decompose needs a qubit-shaped state");
    double herm = (rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermTol) throw ValidationError("pauli_decompose: input is not Hermitian");
    PauliDecomposition out;
    out.n = n;
    out.t_identity = rho.mat.trace().real();
    uint32_t d = uint32_t(1) << n;
    out.terms.reserve(size_t(d) * d - 1);
    for (uint32_t x = 0; x < d; ++x) {
        for (uint32_t z = 0; z < d; ++z) {
            if (x == 0 && z == 0) continue;
            PauliString p = PauliString::hermitian(n, x, z);
            double t = (rho.mat * pauli_matrix(p)).trace().real();
            out.terms.emplace_back(p, t);
        }
    }
    return out;
}

DensityMatrix density_from_pauli(int n, const std::vector<std::pair<PauliString, double>> &terms) {
    int d = 1 << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
    for (const auto &[p, t] : terms) {
        if (p.n != n) throw ValidationError("density_from_pauli: term dimension mismatch");
        m += t * pauli_matrix(p);
    }
    return make_density(m / double(d));
}

}  // namespace tricrit

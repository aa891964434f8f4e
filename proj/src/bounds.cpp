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

#include "tricrit/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace tricrit {

DensityMatrix minimal_purity_state(int n) {
    if (n < 1 || n > kMaxEnumQubits) {
        throw CapacityError("minimal_purity_state supports 1 <= n <= 4");
    }
    int d = 1 << n;
    Eigen::Matrix2cd k0, kp, kpi;
    k0 << 1, 0, 0, 0;
    kp << 0.5, 0.5, 0.5, 0.5;
    kpi << 0.5, std::complex<double>(0, -0.5), std::complex<double>(0, 0.5), 0.5;
    Eigen::Matrix2cd head = k0 + kp + kpi - 2.0 * Eigen::Matrix2cd::Identity();
    Eigen::MatrixXcd block = head;
    for (int q = 1; q < n; ++q) {
        Eigen::MatrixXcd grown = Eigen::MatrixXcd::Zero(block.rows() * 2, block.cols() * 2);
        grown.block(0, 0, block.rows(), block.cols()) = block;  // tensor with |0><0|
        block = grown;
    }
    double w = 1.0 / (d - 0.5);
    Eigen::MatrixXcd m = w * Eigen::MatrixXcd::Identity(d, d) + 0.5 * w * block;
    return make_density(std::move(m));
}

BoundaryCheck boundary_check(const DensityMatrix &rho, const StabilizerCatalog &catalog) {
    std::vector<double> f = stabilizer_fidelities(rho, catalog);
    BoundaryCheck out;
    out.max_overlap = *std::max_element(f.begin(), f.end());
    for (size_t s = 0; s < f.size(); ++s) {
        if (f[s] >= out.max_overlap - 1e-10) out.maximizers.push_back(int32_t(s));
    }
    return out;
}

LiftResult lift_boundary_state(const DensityMatrix &rho_n, int m) {
    int n = rho_n.qubits;
    if (n < 1) throw ValidationError("lift_boundary_state needs a qubit-shaped state");
    if (m <= n || m > kMaxEnumQubits) {
        throw CapacityError("lift target must satisfy n < m <= 4");
    }
    double rn = purity(rho_n);
    int dn = 1 << n, dm = 1 << m;
    double denom = (dm - dn) * rn + 1.0;

    LiftResult out;
    out.predicted_purity = rn / denom;
    if (n <= kMaxEnumQubits) {
        BoundaryCheck bc = boundary_check(rho_n, StabilizerCatalog::shared(n));
        out.boundary_input = std::abs(bc.max_overlap - rn) <= 1e-9;
    }

    // rho_m = (rho_n ⊗ |0^t><0^t| + r_n (I_m - I_n ⊗ |0^t><0^t|)) / denom
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(dm, dm);
    int tail = dm / dn;
    for (int i = 0; i < dn; ++i) {
        for (int j = 0; j < dn; ++j) {
            big(i * tail, j * tail) = rho_n.mat(i, j);
        }
    }
    Eigen::MatrixXcd eye_tail = Eigen::MatrixXcd::Identity(dm, dm);
    for (int i = 0; i < dn; ++i) eye_tail(i * tail, i * tail) = 0.0;
    out.state = make_density((big + rn * eye_tail) / denom);
    return out;
}

double purity_lower_threshold(int d) {
    if (d < 2) throw ValidationError("purity_lower_threshold needs d >= 2");
    return 1.0 / (d - 1.0 / d);
}

std::optional<StabilizerMixtureCertificate> pauli_l1_certificate(const DensityMatrix &rho) {
    PauliDecomposition dec = pauli_decompose(rho);
    double l1 = 0.0;
    for (const auto &[p, t] : dec.terms) l1 += std::abs(t);
    if (l1 > 1.0) return std::nullopt;

    StabilizerMixtureCertificate cert;
    int d = rho.dim;
    double id_weight = 1.0 - l1;
    Eigen::MatrixXcd recon = id_weight * Eigen::MatrixXcd::Identity(d, d) / double(d);
    if (id_weight > 1e-15) {
        MixtureComponent mixed;
        mixed.weight = id_weight;
        mixed.is_identity = true;
        cert.components.push_back(mixed);
    }
    for (const auto &[p, t] : dec.terms) {
        if (t == 0.0) continue;
        MixtureComponent comp;
        comp.weight = std::abs(t);
        comp.pauli = p;
        comp.sign = t > 0 ? 1 : -1;
        cert.components.push_back(comp);
        recon += comp.weight *
                 (Eigen::MatrixXcd::Identity(d, d) + double(comp.sign) * pauli_matrix(p)) /
                 double(d);
    }
    cert.residual = (recon - rho.mat).cwiseAbs().maxCoeff();
    return cert;
}

const char *to_string(MembershipStatus s) {
    switch (s) {
        case MembershipStatus::inside: return "inside";
        case MembershipStatus::outside: return "outside";
        case MembershipStatus::boundary: return "boundary";
        case MembershipStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

double hs_inner(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return (a.adjoint() * b).trace().real();
}

}  // namespace

MembershipVerdict polytope_membership(const DensityMatrix &rho, const StabilizerCatalog &catalog,
                                      double eps, int max_iters) {
    if (catalog.n() > 3) throw CapacityError("polytope_membership supports n <= 3");
    if (rho.dim != catalog.dim()) throw ValidationError("polytope_membership: dimension mismatch");
    int d = catalog.dim();
    size_t nv = catalog.states().size();

    std::vector<Eigen::MatrixXcd> verts(nv);
    for (size_t s = 0; s < nv; ++s) {
        Eigen::Map<const Eigen::VectorXcd> v(catalog.dense_amps(int32_t(s)), d);
        verts[s] = v * v.adjoint();
    }

    MembershipVerdict out;
    std::vector<double> w(nv, 0.0);
    w[0] = 1.0;
    Eigen::MatrixXcd y = verts[0];

    auto finish_inside = [&](int it, double resid) {
        out.distance = resid;
        out.iterations = it;
        for (size_t s = 0; s < nv; ++s) {
            if (w[s] > 1e-12) out.weights.emplace_back(int32_t(s), w[s]);
        }
        // A supporting hyperplane through rho along a candidate normal marks
        // the point as (numerically) on the polytope surface.
        out.status = MembershipStatus::inside;
        Eigen::MatrixXcd radial =
            rho.mat - Eigen::MatrixXcd::Identity(d, d) / double(d);
        double nr = std::sqrt(hs_inner(radial, radial));
        if (nr > 1e-9) {
            radial /= nr;
            double mx = -1e300;
            for (size_t s = 0; s < nv; ++s) mx = std::max(mx, hs_inner(radial, verts[s]));
            if (mx - hs_inner(radial, rho.mat) <= eps) out.status = MembershipStatus::boundary;
        }
    };

    for (int it = 0; it < max_iters; ++it) {
        Eigen::MatrixXcd g = rho.mat - y;
        double resid = std::sqrt(hs_inner(g, g));
        if (resid <= eps) {
            finish_inside(it, resid);
            return out;
        }
        double best_score = -1e300;
        size_t best_v = 0;
        for (size_t s = 0; s < nv; ++s) {
            double sc = hs_inner(g, verts[s]);
            if (sc > best_score) {
                best_score = sc;
                best_v = s;
            }
        }
        double sep = hs_inner(g, rho.mat) - best_score;
        if (sep > eps * resid) {
            // separating hyperplane certificate; exact re-verification
            double mx = -1e300;
            for (size_t s = 0; s < nv; ++s) mx = std::max(mx, hs_inner(g, verts[s]));
            out.status = MembershipStatus::outside;
            out.witness = g / resid;
            out.separation = (hs_inner(g, rho.mat) - mx) / resid;
            out.distance = resid;
            out.iterations = it;
            return out;
        }

        size_t away = best_v;
        double away_score = 1e300;
        for (size_t s = 0; s < nv; ++s) {
            if (w[s] > 1e-12 && hs_inner(g, verts[s]) < away_score) {
                away_score = hs_inner(g, verts[s]);
                away = s;
            }
        }
        Eigen::MatrixXcd d_fw = verts[best_v] - y;
        Eigen::MatrixXcd d_aw = y - verts[away];
        bool use_fw = hs_inner(g, d_fw) >= hs_inner(g, d_aw);
        const Eigen::MatrixXcd &dir = use_fw ? d_fw : d_aw;
        double gamma_max = use_fw ? 1.0 : (w[away] < 1.0 ? w[away] / (1.0 - w[away]) : 1e9);
        double denom = hs_inner(dir, dir);
        if (denom < 1e-28) break;
        double gamma = std::clamp(hs_inner(g, dir) / denom, 0.0, gamma_max);
        if (gamma <= 0.0) break;
        y += gamma * dir;
        if (use_fw) {
            for (auto &x : w) x *= (1.0 - gamma);
            w[best_v] += gamma;
        } else {
            for (auto &x : w) x *= (1.0 + gamma);
            w[away] = std::max(w[away] - gamma, 0.0);
        }
    }
    Eigen::MatrixXcd g = rho.mat - y;
    double resid = std::sqrt(hs_inner(g, g));
    if (resid <= eps) {
        finish_inside(max_iters, resid);
        return out;
    }
    out.status = MembershipStatus::inconclusive;
    out.distance = resid;
    out.iterations = max_iters;
    return out;
}

ConjectureScanReport conjecture_scan(int n, int trials, Rng &rng, ScanMode mode) {
    if (mode == ScanMode::membership && n > 3) {
        throw CapacityError("membership scans support n <= 3");
    }
    if (n < 1 || n > kMaxEnumQubits) throw CapacityError("conjecture_scan supports 1 <= n <= 4");
    int d = 1 << n;
    const StabilizerCatalog &catalog = StabilizerCatalog::shared(n);

    ConjectureScanReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.mode = mode;
    rep.shell_purity = 1.0 / (d - 0.5);
    rep.min_witness_value = std::numeric_limits<double>::infinity();

    for (int t = 0; t < trials; ++t) {
        DensityMatrix sample = sample_induced(d, d, rng);
        double pur = purity(sample);
        if (pur - 1.0 / d < 1e-14) {
            --t;  // degenerate draw at the centre, resample
            continue;
        }
        // rescale radially to the conjectured shell; the shell lies inside
        // the insphere of the state space, so positivity is automatic
        double lambda = std::sqrt((rep.shell_purity - 1.0 / d) / (pur - 1.0 / d));
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d) / double(d) +
                             lambda * (sample.mat - Eigen::MatrixXcd::Identity(d, d) / double(d));
        DensityMatrix shell = make_density(std::move(m));

        if (mode == ScanMode::criterion) {
            DetectionReport det = detect(shell, catalog);
            rep.min_witness_value = std::min(rep.min_witness_value, det.min_value);
            if (det.detected) ++rep.counterexamples;
        } else {
            MembershipVerdict v = polytope_membership(shell, catalog);
            if (v.status == MembershipStatus::outside) ++rep.counterexamples;
            if (v.status == MembershipStatus::inconclusive) ++rep.inconclusive;
        }
    }
    return rep;
}

AbsoluteBallReport absolute_ball_reduction(const DensityMatrix &rho_ab, int d_a, int trials,
                                           Rng &rng) {
    int d = rho_ab.dim;
    if (d % d_a != 0) throw ValidationError("absolute_ball_reduction: d_A must divide d");
    int d_b = d / d_a;

    AbsoluteBallReport rep;
    rep.d = d;
    rep.d_a = d_a;
    rep.c = d - 1.0 / purity(rho_ab);
    if (rep.c < -1e-9 || rep.c > d_a - 1 + 1e-9) {
        throw ValidationError("inferred c = d - 1/purity outside [0, d_A - 1]");
    }
    rep.bound = 1.0 / (d_a - rep.c);

    rep.records.reserve(size_t(trials));
    for (int t = 0; t < trials; ++t) {
        Eigen::MatrixXcd u = haar_unitary(d, rng);
        Eigen::MatrixXcd rot = u * rho_ab.mat * u.adjoint();
        Eigen::VectorXcd psi_b = haar_state(d_b, rng);
        // rho_S = (I_A ⊗ <psi_B|) rot (I_A ⊗ |psi_B>)
        Eigen::MatrixXcd rho_s = Eigen::MatrixXcd::Zero(d_a, d_a);
        for (int i = 0; i < d_a; ++i) {
            for (int j = 0; j < d_a; ++j) {
                std::complex<double> acc = 0;
                for (int bi = 0; bi < d_b; ++bi) {
                    for (int bj = 0; bj < d_b; ++bj) {
                        acc += std::conj(psi_b(bi)) * rot(i * d_b + bi, j * d_b + bj) * psi_b(bj);
                    }
                }
                rho_s(i, j) = acc;
            }
        }
        ReductionRecord rec;
        rec.q = rho_s.trace().real();
        rec.p_s = (rho_s * rho_s).trace().real();
        // complement block rho_R = P rot P with P = I_A ⊗ (I_B - |psi_B><psi_B|)
        Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(d_b, d_b) - psi_b * psi_b.adjoint();
        Eigen::MatrixXcd pr_full = Eigen::MatrixXcd::Zero(d, d);
        for (int i = 0; i < d_a; ++i) {
            pr_full.block(i * d_b, i * d_b, d_b, d_b) = proj;
        }
        Eigen::MatrixXcd rho_r = pr_full * rot * pr_full;
        rec.p_r = (rho_r * rho_r).trace().real();
        rec.reduced_purity = rec.q > 1e-14 ? rec.p_s / (rec.q * rec.q) : 0.0;
        rep.max_observed = std::max(rep.max_observed, rec.reduced_purity);
        rep.records.push_back(rec);
    }

    // saturating construction: rho = q sigma_A ⊗ |0><0|_B + (1-q)(I - I_A ⊗ |0><0|_B)/(d - d_A)
    // with q = (d_A - c)/(d - c) and sigma_A of purity 1/(d_A - c)
    double q = (d_a - rep.c) / (d - rep.c);
    double target = 1.0 / (d_a - rep.c);
    // sigma_A = mu |0><0| + (1 - mu) I/d_A with mu chosen to hit the target
    // purity (monotone in mu; bisect)
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double top = mid + (1 - mid) / d_a;
        double rest = (1 - mid) / d_a;
        double pur = top * top + (d_a - 1) * rest * rest;
        if (pur < target) lo = mid;
        else hi = mid;
    }
    Eigen::MatrixXcd sigma_a = Eigen::MatrixXcd::Identity(d_a, d_a) * ((1 - lo) / d_a);
    sigma_a(0, 0) += lo;
    Eigen::MatrixXcd sat = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d_a; ++i) {
        for (int j = 0; j < d_a; ++j) {
            sat(i * d_b, j * d_b) = q * sigma_a(i, j);
        }
    }
    for (int i = 0; i < d_a; ++i) {
        for (int bi = 1; bi < d_b; ++bi) {
            sat(i * d_b + bi, i * d_b + bi) = (1.0 - q) / (d - d_a);
        }
    }
    DensityMatrix sat_state = make_density(std::move(sat));
    // post-select B on |0...0>: the reduced block sits at stride d_b
    Eigen::MatrixXcd blk = Eigen::MatrixXcd::Zero(d_a, d_a);
    for (int i = 0; i < d_a; ++i) {
        for (int j = 0; j < d_a; ++j) blk(i, j) = sat_state.mat(i * d_b, j * d_b);
    }
    double qq = blk.trace().real();
    rep.saturating_purity = (blk * blk).trace().real() / (qq * qq);
    return rep;
}

double fidelity_alpha_bound(int d) { return 3.0 / (d + 2); }

double max_stab_fidelity(const Eigen::VectorXcd &psi, const StabilizerCatalog &catalog) {
    Eigen::VectorXcd v = psi / psi.norm();
    double best = 0.0;
    int d = catalog.dim();
    for (size_t s = 0; s < catalog.states().size(); ++s) {
        Eigen::Map<const Eigen::VectorXcd> phi(catalog.dense_amps(int32_t(s)), d);
        best = std::max(best, std::norm(phi.dot(v)));
    }
    return best;
}

std::array<double, 3> stab_design_moments(const Eigen::VectorXcd &psi,
                                          const StabilizerCatalog &catalog) {
    Eigen::VectorXcd v = psi / psi.norm();
    int d = catalog.dim();
    double m1 = 0, m2 = 0, m3 = 0;
    for (size_t s = 0; s < catalog.states().size(); ++s) {
        Eigen::Map<const Eigen::VectorXcd> phi(catalog.dense_amps(int32_t(s)), d);
        double x = std::norm(phi.dot(v));
        m1 += x;
        m2 += x * x;
        m3 += x * x * x;
    }
    double count = double(catalog.states().size());
    return {m1 / count, m2 / count, m3 / count};
}

UnfaithfulCheck unfaithful_check(const DensityMatrix &rho) {
    int d = rho.dim;
    UnfaithfulCheck out;
    out.eigen_max = eigen_max(rho);
    out.fidelity_cap = 1.0 / d + 0.5 * std::sqrt(1.0 / (d * (d - 0.5)));
    out.slack = fidelity_alpha_bound(d) - out.eigen_max;
    out.unfaithful = out.eigen_max <= out.fidelity_cap &&
                     out.fidelity_cap < fidelity_alpha_bound(d);
    return out;
}

}  // namespace tricrit

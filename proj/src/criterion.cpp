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

#include "tricrit/criterion.hpp"

#include <cmath>

namespace tricrit {

std::vector<double> stabilizer_fidelities(const DensityMatrix &rho,
                                          const StabilizerCatalog &catalog) {
    if (rho.dim != catalog.dim()) {
        throw ValidationError("stabilizer_fidelities: dimension mismatch");
    }
    int d = catalog.dim();
    std::vector<double> out(catalog.states().size());
    for (size_t s = 0; s < out.size(); ++s) {
        Eigen::Map<const Eigen::VectorXcd> v(catalog.dense_amps(int32_t(s)), d);
        out[s] = (v.adjoint() * rho.mat * v).value().real();
    }
    return out;
}

double witness_value(const DensityMatrix &rho, const TriangleWitness &w,
                     const StabilizerCatalog &catalog) {
    if (rho.dim != catalog.dim()) throw ValidationError("witness_value: dimension mismatch");
    int d = catalog.dim();
    auto fid = [&](int32_t s) {
        Eigen::Map<const Eigen::VectorXcd> v(catalog.dense_amps(s), d);
        return (v.adjoint() * rho.mat * v).value().real();
    };
    double fa = fid(w.triple.a), fb = fid(w.triple.b), fc = fid(w.triple.c);
    double sum = fa + fb + fc;
    double sub = w.subtracted == 0 ? fa : (w.subtracted == 1 ? fb : fc);
    return sum - 2.0 * sub;
}

DetectionReport detect(const DensityMatrix &rho, const StabilizerCatalog &catalog,
                       double tolerance) {
    if (tolerance <= 0) throw ValidationError("detection tolerance must be positive");
    std::vector<double> f = stabilizer_fidelities(rho, catalog);

    DetectionReport rep;
    rep.n = catalog.n();
    rep.witness_count = catalog.witness_count();
    rep.tolerance = tolerance;
    rep.min_value = std::numeric_limits<double>::infinity();

    for (const auto &t : catalog.triples()) {
        double fa = f[size_t(t.a)], fb = f[size_t(t.b)], fc = f[size_t(t.c)];
        double sum = fa + fb + fc;
        double vals[3] = {sum - 2 * fa, sum - 2 * fb, sum - 2 * fc};
        for (int slot = 0; slot < 3; ++slot) {
            rep.abs_sum += std::abs(vals[slot]);
            if (vals[slot] < rep.min_value) {
                rep.min_value = vals[slot];
                rep.argmin = TriangleWitness{t, slot};
            }
        }
    }
    rep.detected = rep.min_value < -tolerance;
    rep.boundary = !rep.detected && rep.min_value <= tolerance;
    double denom = double(oriented_witness_count(rep.n) >> rep.n);
    rep.negativity = std::log2(rep.abs_sum / denom);
    return rep;
}

DetectionReport detect(const DensityMatrix &rho, double tolerance) {
    if (rho.qubits < 1) throw ValidationError("detect needs a qubit-shaped state");
    if (rho.qubits > kMaxEnumQubits) throw CapacityError("detect supports at most 4 qubits");
    return detect(rho, StabilizerCatalog::shared(rho.qubits), tolerance);
}

std::pair<bool, double> detect_single_qubit(const DensityMatrix &rho, double tolerance) {
    if (rho.dim != 2) throw ValidationError("detect_single_qubit requires d = 2");
    auto [x, y, z] = bloch_vector(rho);
    double margin = std::abs(x) + std::abs(y) + std::abs(z) - 1.0;
    return {margin > 2.0 * tolerance, margin};
}

double triangle_negativity(const DensityMatrix &rho, const StabilizerCatalog &catalog) {
    return detect(rho, catalog).negativity;
}

double triangle_negativity(const DensityMatrix &rho) {
    return detect(rho).negativity;
}

Reduction reduce_to_single_qubit(const DensityMatrix &rho, const TriangleWitness &w,
                                 const StabilizerCatalog &catalog) {
    if (rho.dim != catalog.dim()) {
        throw ValidationError("reduce_to_single_qubit: dimension mismatch");
    }
    Reduction out;
    out.circuit = canonicalize_triple(catalog, w.triple, w.subtracted);
    DensityMatrix rotated = apply_circuit(rho, out.circuit);
    if (catalog.n() == 1) {
        out.state = std::move(rotated);
        out.probability = 1.0;
        return out;
    }
    std::vector<int> qubits, bits;
    for (int q = 1; q < catalog.n(); ++q) {
        qubits.push_back(q);
        bits.push_back(0);
    }
    Postselection post = postselect(rotated, qubits, bits);
    out.state = std::move(post.state);
    out.probability = post.probability;
    return out;
}

DetectionReport detect_two_copies(const DensityMatrix &rho, double tolerance) {
    if (rho.qubits != 2) throw ValidationError("detect_two_copies requires a two-qubit state");
    DensityMatrix two = tensor(rho, rho);
    return detect(two, StabilizerCatalog::shared(4), tolerance);
}

}  // namespace tricrit

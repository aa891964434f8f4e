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

#include "tricrit/io.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace tricrit {

namespace fs = std::filesystem;

DensityMatrix parse_state_json(const Json &j) {
    if (j.contains("pauli")) {
        int n = j.at("qubits").get<int>();
        if (n < 1 || n > 8) throw ValidationError("state file: qubits must be in 1..8");
        std::vector<std::pair<PauliString, double>> terms;
        for (const auto &[key, val] : j.at("pauli").items()) {
            PauliString p = pauli_from_label(key);
            if (p.n != n) {
                throw ValidationError("state file: pauli key '" + key +
                                      "' does not match the qubit count");
            }
            if (p.x == 0 && p.z == 0) {
                if (std::abs(val.get<double>() - 1.0) > 1e-12) {
                    throw ValidationError("state file: identity coefficient must be 1");
                }
                continue;
            }
            terms.emplace_back(p, val.get<double>());
        }
        return density_from_pauli(n, terms);
    }
    if (j.contains("matrix")) {
        int d = j.at("dims").get<int>();
        const Json &m = j.at("matrix");
        if (int(m.size()) != d) throw ValidationError("state file: matrix row count != dims");
        Eigen::MatrixXcd out(d, d);
        for (int r = 0; r < d; ++r) {
            const Json &row = m.at(size_t(r));
            if (int(row.size()) != d) {
                throw ValidationError("state file: matrix column count != dims");
            }
            for (int c = 0; c < d; ++c) {
                const Json &e = row.at(size_t(c));
                out(r, c) = std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>());
            }
        }
        return make_density(std::move(out));
    }
    throw ValidationError("state file: expected a 'pauli' or 'matrix' form");
}

DensityMatrix parse_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open state file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception &e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return parse_state_json(j);
}

Json state_to_json(const DensityMatrix &rho, bool pauli_form) {
    Json j;
    if (pauli_form && rho.qubits >= 1) {
        j["qubits"] = rho.qubits;
        Json coeffs;
        PauliDecomposition dec = pauli_decompose(rho);
        coeffs[std::string(size_t(rho.qubits), 'I')] = 1.0;
        for (const auto &[p, t] : dec.terms) {
            if (std::abs(t) > 1e-14) coeffs[p.label()] = t;
        }
        j["pauli"] = coeffs;
        return j;
    }
    j["dims"] = rho.dim;
    Json m = Json::array();
    for (int r = 0; r < rho.dim; ++r) {
        Json row = Json::array();
        for (int c = 0; c < rho.dim; ++c) {
            row.push_back({rho.mat(r, c).real(), rho.mat(r, c).imag()});
        }
        m.push_back(row);
    }
    j["matrix"] = m;
    return j;
}

Json circuit_to_json(const CliffordCircuit &c) {
    Json gates = Json::array();
    for (const auto &g : c.gates) {
        Json item;
        item["gate"] = g.name();
        if (g.kind == GateKind::CNOT) {
            item["control"] = g.q0;
            item["target"] = g.q1;
        } else {
            item["qubit"] = g.q0;
        }
        gates.push_back(item);
    }
    return Json{{"qubits", c.n}, {"gates", gates}};
}

Json detection_report_to_json(const DetectionReport &rep) {
    Json j;
    j["n"] = rep.n;
    j["witness_count"] = rep.witness_count;
    j["min_value"] = rep.min_value;
    j["detected"] = rep.detected;
    j["boundary"] = rep.boundary;
    j["tolerance"] = rep.tolerance;
    j["argmin"] = Json{{"state_indices", {rep.argmin.triple.a, rep.argmin.triple.b,
                                          rep.argmin.triple.c}},
                       {"orientation", std::string(1, "abc"[rep.argmin.subtracted])}};
    j["negativity"] = rep.negativity;
    j["log_base"] = rep.log_base;
    j["orientation_convention"] = "value = F_i + F_j - F_k; detection at value < -tolerance";
    return j;
}

Json membership_to_json(const MembershipVerdict &v) {
    Json j;
    j["status"] = to_string(v.status);
    j["distance"] = v.distance;
    j["iterations"] = v.iterations;
    if (v.status == MembershipStatus::outside) {
        j["separation"] = v.separation;
    }
    if (!v.weights.empty()) {
        Json w = Json::array();
        for (const auto &[idx, weight] : v.weights) {
            w.push_back({{"state", idx}, {"weight", weight}});
        }
        j["weights"] = w;
    }
    return j;
}

Json distillation_to_json(const DistillationOutcome &out) {
    Json j;
    j["success_probability"] = out.success_probability;
    j["bloch"] = {out.bloch[0], out.bloch[1], out.bloch[2]};
    j["l1_norm"] = out.l1_norm;
    j["h_distill_threshold"] = kHDistillThreshold;
    j["empty_outcome"] = !out.output.has_value();
    if (out.output) j["output"] = state_to_json(*out.output);
    return j;
}

Json experiment_to_json(const DetectionExperiment &ex) {
    Json j;
    j["n"] = ex.n;
    j["k"] = ex.k;
    j["trials"] = ex.trials;
    j["seed"] = ex.seed;
    j["mode"] = to_string(ex.mode);
    j["detected"] = ex.detected;
    j["estimate"] = ex.estimate;
    j["ci_low"] = ex.ci.low;
    j["ci_high"] = ex.ci.high;
    j["bound"] = ex.bound;
    return j;
}

std::string experiment_csv_header() {
    return "n,k,trials,seed,mode,detected,estimate,ci_low,ci_high,bound";
}

std::string experiment_csv_row(const DetectionExperiment &ex) {
    std::ostringstream os;
    os.precision(12);
    os << ex.n << ',' << ex.k << ',' << ex.trials << ',' << ex.seed << ','
       << to_string(ex.mode) << ',' << ex.detected << ',' << ex.estimate << ','
       << ex.ci.low << ',' << ex.ci.high << ',' << ex.bound;
    return os.str();
}

// ---- cache ------------------------------------------------------------------

namespace {

uint64_t fnv1a(const std::string &data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void put_u32(std::string &s, uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back(char((v >> (8 * i)) & 0xff));
}
void put_u64(std::string &s, uint64_t v) {
    for (int i = 0; i < 8; ++i) s.push_back(char((v >> (8 * i)) & 0xff));
}
uint32_t get_u32(const std::string &s, size_t &pos) {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t(uint8_t(s[pos++])) << (8 * i);
    return v;
}
uint64_t get_u64(const std::string &s, size_t &pos) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(uint8_t(s[pos++])) << (8 * i);
    return v;
}

/// Advisory single-writer lock; the lock file exists only while a writer is
/// active.
class CacheLock {
  public:
    explicit CacheLock(const fs::path &dir) : path_(dir / "lock") {
        for (int attempt = 0; attempt < 2000; ++attempt) {
            fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
            if (fd_ >= 0) return;
            std::this_thread::sleep_for(std::chrono::milliseconds(5));
        }
        throw ValidationError("cache lock is held: " + path_.string());
    }
    ~CacheLock() {
        if (fd_ >= 0) {
            ::close(fd_);
            std::error_code ec;
            fs::remove(path_, ec);
        }
    }

  private:
    fs::path path_;
    int fd_ = -1;
};

}  // namespace

std::string cache_file_path(const std::string &dir, int n) {
    return (fs::path(dir) / ("stabilizer_states_n" + std::to_string(n) + ".bin")).string();
}

void save_catalog(const StabilizerCatalog &catalog, const std::string &dir) {
    fs::create_directories(dir);
    CacheLock lock{fs::path(dir)};
    int n = catalog.n();

    std::string payload;
    for (const auto &st : catalog.states()) {
        for (const auto &g : st.gens) {
            // row packed as x | z << n | sign << 2n (n <= 4 fits in 16 bits)
            uint16_t row = uint16_t(g.x | (g.z << n) | (uint32_t(g.sign) << (2 * n)));
            payload.push_back(char(row & 0xff));
            payload.push_back(char(row >> 8));
        }
    }

    std::string blob = kCacheMagic;
    put_u32(blob, uint32_t(n));
    put_u64(blob, catalog.states().size());
    blob += payload;
    put_u64(blob, fnv1a(payload));

    std::ofstream out(cache_file_path(dir, n), std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write cache file in " + dir);
    out.write(blob.data(), std::streamsize(blob.size()));
}

std::unique_ptr<StabilizerCatalog> load_catalog(const std::string &dir, int n) {
    std::ifstream in(cache_file_path(dir, n), std::ios::binary);
    if (!in) throw ValidationError("cache file missing for n=" + std::to_string(n));
    std::stringstream ss;
    ss << in.rdbuf();
    std::string blob = ss.str();

    size_t pos = 0;
    if (blob.size() < 28 || blob.compare(0, 8, kCacheMagic) != 0) {
        throw ValidationError("cache file has a bad header");
    }
    pos = 8;
    uint32_t file_n = get_u32(blob, pos);
    uint64_t count = get_u64(blob, pos);
    if (int(file_n) != n) throw ValidationError("cache file qubit count mismatch");
    size_t payload_len = size_t(count) * size_t(file_n) * 2;
    if (blob.size() != pos + payload_len + 8) {
        throw ValidationError("cache file is truncated");
    }
    std::string payload = blob.substr(pos, payload_len);
    size_t cpos = pos + payload_len;
    uint64_t checksum = get_u64(blob, cpos);
    if (checksum != fnv1a(payload)) throw ValidationError("cache checksum mismatch");

    std::vector<StabilizerState> states;
    states.reserve(count);
    size_t p = 0;
    uint32_t xmask = (uint32_t(1) << n) - 1;
    for (uint64_t s = 0; s < count; ++s) {
        std::vector<TableauRow> gens;
        gens.resize(size_t(n));
        for (int g = 0; g < n; ++g) {
            uint16_t row = uint16_t(uint8_t(payload[p])) | (uint16_t(uint8_t(payload[p + 1])) << 8);
            p += 2;
            gens[size_t(g)] = TableauRow{row & xmask, (uint32_t(row) >> n) & xmask,
                                         uint8_t((row >> (2 * n)) & 1)};
        }
        StabilizerState st = state_from_tableau(n, std::move(gens));
        st.index = int32_t(s);
        states.push_back(std::move(st));
    }
    return std::make_unique<StabilizerCatalog>(n, std::move(states));
}

std::unique_ptr<StabilizerCatalog> load_or_build_catalog(int n, const std::string &dir) {
    try {
        return load_catalog(dir, n);
    } catch (const ValidationError &) {
        auto cat = std::make_unique<StabilizerCatalog>(n);
        save_catalog(*cat, dir);
        return cat;
    }
}

CacheStatus manage_cache(const std::string &dir, const std::string &action, int n) {
    CacheStatus st;
    if (action == "build") {
        StabilizerCatalog cat(n);
        save_catalog(cat, dir);
        st.ok = true;
        st.message = "built " + cache_file_path(dir, n);
    } else if (action == "verify") {
        try {
            auto cat = load_catalog(dir, n);
            st.ok = true;
            st.message = "ok: " + std::to_string(cat->states().size()) + " states";
        } catch (const ValidationError &e) {
            st.ok = false;
            st.message = std::string("mismatch: ") + e.what() + "; rebuild with --action build";
        }
    } else if (action == "purge") {
        std::error_code ec;
        fs::remove(cache_file_path(dir, n), ec);
        st.ok = true;
        st.message = "purged " + cache_file_path(dir, n);
    } else {
        throw ValidationError("cache action must be build, verify or purge");
    }
    return st;
}

}  // namespace tricrit

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

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "tricrit/io.hpp"
#include "tricrit/version.hpp"

namespace {

using namespace tricrit;
namespace fs = std::filesystem;

struct CommonOpts {
    std::string in_path;
    std::string out_path;
    std::string format = "json";
    std::string cache_dir;
    double tolerance = kDetectionTolerance;
    uint64_t seed = 1;
    int trials = 1000;
    int qubits = 2;
    bool two_copies = false;
    std::string mode = "single-witness";
};

std::string resolved_cache_dir(const CommonOpts &o) {
    if (!o.cache_dir.empty()) return o.cache_dir;
    const char *env = std::getenv("TRICRIT_CACHE_DIR");
    return env ? std::string(env) : std::string();
}

/// Warm the shared catalog from disk when a cache directory is configured.
void prime_catalog(const CommonOpts &o, int n) {
    std::string dir = resolved_cache_dir(o);
    if (dir.empty()) return;
    StabilizerCatalog::install_shared(load_or_build_catalog(n, dir));
}

void validate_common(const CommonOpts &o, bool needs_input) {
    if (o.tolerance <= 0) throw ValidationError("--tolerance must be positive");
    if (o.format != "json" && o.format != "csv") {
        throw ValidationError("--format must be json or csv");
    }
    if (needs_input) {
        if (o.in_path.empty()) throw ValidationError("an --in state file is required");
        if (!fs::exists(o.in_path)) throw ValidationError("input file not found: " + o.in_path);
    }
    if (!o.out_path.empty()) {
        fs::path parent = fs::path(o.out_path).parent_path();
        if (!parent.empty() && !fs::exists(parent)) {
            throw ValidationError("output directory does not exist: " + parent.string());
        }
    }
}

Json config_echo(const CommonOpts &o, const std::string &command) {
    Json j;
    j["command"] = command;
    j["tolerance"] = o.tolerance;
    j["seed"] = o.seed;
    j["trials"] = o.trials;
    j["qubits"] = o.qubits;
    j["format"] = o.format;
    if (!o.in_path.empty()) j["in"] = o.in_path;
    if (!o.out_path.empty()) j["out"] = o.out_path;
    std::string dir = resolved_cache_dir(o);
    if (!dir.empty()) j["cache_dir"] = dir;
    if (o.two_copies) j["two_copies"] = true;
    j["mode"] = o.mode;
    return j;
}

void emit(const CommonOpts &o, const std::string &text) {
    if (o.out_path.empty()) {
        std::cout << text << std::endl;
        return;
    }
    std::ofstream out(o.out_path, std::ios::trunc);
    if (!out) throw ValidationError("cannot write output file: " + o.out_path);
    out << text << std::endl;
}

void emit_report(const CommonOpts &o, const std::string &command, Json body) {
    body["tool"] = "tricrit";
    body["version"] = kVersion;
    body["config"] = config_echo(o, command);
    emit(o, body.dump(2));
}

int run_enumerate(const CommonOpts &o) {
    validate_common(o, false);
    std::string dir = resolved_cache_dir(o);
    Json j;
    if (!dir.empty()) {
        auto cat = load_or_build_catalog(o.qubits, dir);
        j["state_count"] = cat->states().size();
        j["triple_count"] = cat->triples().size();
        j["cache_file"] = cache_file_path(dir, o.qubits);
    } else {
        const StabilizerCatalog &cat = StabilizerCatalog::shared(o.qubits);
        j["state_count"] = cat.states().size();
        j["triple_count"] = cat.triples().size();
    }
    j["expected_state_count"] = stabilizer_state_count(o.qubits);
    j["expected_triple_count"] = triple_count(o.qubits);
    emit_report(o, "enumerate", j);
    return 0;
}

int run_detect(const CommonOpts &o, bool negativity_only) {
    validate_common(o, true);
    DensityMatrix rho = parse_state_file(o.in_path);
    DetectionReport rep;
    if (o.two_copies) {
        if (rho.qubits != 2) throw ValidationError("--two-copies requires a two-qubit state");
        prime_catalog(o, 4);
        rep = detect_two_copies(rho, o.tolerance);
    } else {
        if (rho.qubits < 1 || rho.qubits > kMaxEnumQubits) {
            throw CapacityError("detect supports 1..4 qubits");
        }
        prime_catalog(o, rho.qubits);
        rep = detect(rho, o.tolerance);
    }
    Json j = detection_report_to_json(rep);
    emit_report(o, negativity_only ? "negativity" : "detect", j);
    return 0;
}

int run_reduce(const CommonOpts &o) {
    validate_common(o, true);
    DensityMatrix rho = parse_state_file(o.in_path);
    if (rho.qubits < 1 || rho.qubits > kMaxEnumQubits) {
        throw CapacityError("reduce supports 1..4 qubits");
    }
    prime_catalog(o, rho.qubits);
    const StabilizerCatalog &cat = StabilizerCatalog::shared(rho.qubits);
    DetectionReport rep = detect(rho, cat, o.tolerance);
    Reduction red = reduce_to_single_qubit(rho, rep.argmin, cat);

    Json j;
    j["detection"] = detection_report_to_json(rep);
    j["probability"] = red.probability;
    j["circuit"] = circuit_to_json(red.circuit);
    if (red.state) {
        auto [x, y, z] = bloch_vector(*red.state);
        auto [det1, margin] = detect_single_qubit(*red.state, o.tolerance);
        j["output"] = state_to_json(*red.state, true);
        j["bloch"] = {x, y, z};
        j["octahedron_margin"] = margin;
        j["output_detected"] = det1;
    } else {
        j["empty_outcome"] = true;
    }
    emit_report(o, "reduce", j);
    return 0;
}

int run_distill(const CommonOpts &o) {
    validate_common(o, true);
    DensityMatrix rho = parse_state_file(o.in_path);
    if (rho.qubits != 2) throw ValidationError("distill requires a two-qubit state");
    const DistillationCircuit &dc = two_copy_distillation_circuit();
    DistillationOutcome out = run_two_copy_distill(rho);

    Json j = distillation_to_json(out);
    j["circuit"] = circuit_to_json(dc.circuit);
    j["measured_qubits"] = {dc.measured[0], dc.measured[1], dc.measured[2]};
    j["postselect_outcome"] = {dc.outcome[0], dc.outcome[1], dc.outcome[2]};
    j["output_qubit"] = dc.output_qubit;
    j["wiring_matches"] = dc.match_count;
    if (out.output) {
        auto [ok, margin] = h_distillable(*out.output);
        j["h_distillable"] = ok;
        j["h_margin"] = margin;
    }
    emit_report(o, "distill", j);
    return 0;
}

int run_search(const CommonOpts &o, int iterations) {
    validate_common(o, false);
    prime_catalog(o, 2);
    prime_catalog(o, 4);
    ActivationSearchConfig cfg;
    cfg.iterations = iterations;
    if (!o.in_path.empty()) cfg.init = parse_state_file(o.in_path);
    Rng rng(o.seed);
    ActivationSearchResult res = search_activation_state(rng, cfg);

    Json j;
    j["candidate"] = state_to_json(res.candidate, true);
    j["single_copy_min"] = res.single_copy_min;
    j["two_copy_min"] = res.two_copy_min;
    j["success"] = res.success;
    j["iterations"] = res.iterations;
    emit_report(o, "search", j);
    return 0;
}

int run_purity(const CommonOpts &o, int construct_n, const std::string &check_path,
               const std::string &lift_spec) {
    validate_common(o, false);
    Json j;
    if (construct_n > 0) {
        DensityMatrix rho = minimal_purity_state(construct_n);
        prime_catalog(o, construct_n);
        BoundaryCheck bc = boundary_check(rho, StabilizerCatalog::shared(construct_n));
        j["state"] = state_to_json(rho, true);
        j["purity"] = purity(rho);
        j["target_purity"] = 1.0 / ((1 << construct_n) - 0.5);
        j["boundary_max_overlap"] = bc.max_overlap;
        j["boundary_maximizers"] = bc.maximizers;
        j["min_eigenvalue"] = eigenvalues(rho).minCoeff();
    } else if (!check_path.empty()) {
        if (!fs::exists(check_path)) {
            throw ValidationError("input file not found: " + check_path);
        }
        DensityMatrix rho = parse_state_file(check_path);
        j["purity"] = purity(rho);
        j["dims"] = rho.dim;
        j["shell_threshold"] = 1.0 / (rho.dim - 0.5);
        j["stabilizer_threshold"] = purity_lower_threshold(rho.dim);
        auto cert = pauli_l1_certificate(rho);
        j["l1_certificate"] = cert.has_value();
        if (cert) {
            j["l1_residual"] = cert->residual;
            j["l1_components"] = cert->components.size();
        }
        if (rho.qubits >= 1 && rho.qubits <= kMaxEnumQubits) {
            prime_catalog(o, rho.qubits);
            BoundaryCheck bc = boundary_check(rho, StabilizerCatalog::shared(rho.qubits));
            j["boundary_max_overlap"] = bc.max_overlap;
        }
        UnfaithfulCheck uf = unfaithful_check(rho);
        j["unfaithful"] = uf.unfaithful;
        j["eigen_max"] = uf.eigen_max;
        j["fidelity_cap"] = uf.fidelity_cap;
    } else if (!lift_spec.empty()) {
        auto colon = lift_spec.find(':');
        if (colon == std::string::npos) throw ValidationError("--lift expects n:m");
        int n = std::stoi(lift_spec.substr(0, colon));
        int m = std::stoi(lift_spec.substr(colon + 1));
        DensityMatrix base = minimal_purity_state(n);
        LiftResult lift = lift_boundary_state(base, m);
        j["base_purity"] = purity(base);
        j["lift_purity"] = purity(lift.state);
        j["predicted_purity"] = lift.predicted_purity;
        j["boundary_input"] = lift.boundary_input;
        j["state"] = state_to_json(lift.state, true);
    } else {
        throw ValidationError("purity needs one of --construct, --check, --lift");
    }
    emit_report(o, "purity", j);
    return 0;
}

int run_conjecture(const CommonOpts &o, const std::string &scan_mode) {
    validate_common(o, false);
    prime_catalog(o, o.qubits);
    if (scan_mode != "membership" && scan_mode != "criterion") {
        throw ValidationError("conjecture-scan --mode must be membership or criterion");
    }
    ScanMode mode = scan_mode == "membership" ? ScanMode::membership : ScanMode::criterion;
    Rng rng(o.seed);
    ConjectureScanReport rep = conjecture_scan(o.qubits, o.trials, rng, mode);
    Json j;
    j["n"] = rep.n;
    j["trials"] = rep.trials;
    j["scan_mode"] = mode == ScanMode::membership ? "membership" : "criterion";
    j["shell_purity"] = rep.shell_purity;
    j["counterexamples"] = rep.counterexamples;
    j["inconclusive"] = rep.inconclusive;
    if (mode == ScanMode::criterion) j["min_witness_value"] = rep.min_witness_value;
    emit_report(o, "conjecture-scan", j);
    return 0;
}

int run_ball(const CommonOpts &o, int d_a) {
    validate_common(o, true);
    DensityMatrix rho = parse_state_file(o.in_path);
    Rng rng(o.seed);
    AbsoluteBallReport rep = absolute_ball_reduction(rho, d_a, o.trials, rng);
    Json j;
    j["d"] = rep.d;
    j["d_a"] = rep.d_a;
    j["c"] = rep.c;
    j["bound"] = rep.bound;
    j["max_observed_reduced_purity"] = rep.max_observed;
    j["saturating_purity"] = rep.saturating_purity;
    j["trials"] = rep.records.size();
    emit_report(o, "ball", j);
    return 0;
}

int run_witness_bounds(const CommonOpts &o, double k, int m_obs, int dim) {
    validate_common(o, false);
    Json j;
    j["k"] = k;
    j["single_witness_bound"] = single_witness_bound(k);
    j["criterion_union_bound"] = criterion_union_bound(o.qubits, k);
    j["oriented_witness_count"] = oriented_witness_count(o.qubits);
    j["linear_method_bound"] = linear_method_bound(m_obs, k, dim);
    j["linear_m"] = m_obs;
    j["linear_dim"] = dim;
    emit_report(o, "witness-bounds", j);
    return 0;
}

int run_sample_detect(const CommonOpts &o, const std::string &k_list) {
    validate_common(o, false);
    DetectionMode mode = detection_mode_from_string(o.mode);
    if (mode == DetectionMode::full_criterion) prime_catalog(o, o.qubits);
    std::vector<int> ks;
    std::stringstream ss(k_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) ks.push_back(std::stoi(tok));
    if (ks.empty()) throw ValidationError("--k must list at least one value");

    std::vector<DetectionExperiment> cells;
    for (int k : ks) {
        cells.push_back(
            monte_carlo_detection(o.qubits, k, uint64_t(o.trials), o.seed, mode, o.tolerance));
    }
    if (o.format == "csv") {
        std::ostringstream out;
        out << experiment_csv_header() << '\n';
        for (const auto &ex : cells) out << experiment_csv_row(ex) << '\n';
        std::string text = out.str();
        text.pop_back();
        emit(o, text);
    } else {
        Json arr = Json::array();
        for (const auto &ex : cells) arr.push_back(experiment_to_json(ex));
        emit_report(o, "sample-detect", Json{{"cells", arr}});
    }
    return 0;
}

int run_cache(const CommonOpts &o, const std::string &action) {
    std::string dir = resolved_cache_dir(o);
    if (dir.empty()) throw ValidationError("cache needs --cache-dir or TRICRIT_CACHE_DIR");
    CacheStatus st = manage_cache(dir, action, o.qubits);
    Json j;
    j["action"] = action;
    j["ok"] = st.ok;
    j["message"] = st.message;
    emit_report(o, "cache", j);
    return st.ok ? 0 : 2;
}

void add_common(CLI::App *cmd, CommonOpts &o, bool with_input) {
    if (with_input) cmd->add_option("--in", o.in_path, "input state file (JSON)");
    cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
    cmd->add_option("--format", o.format, "json or csv");
    cmd->add_option("--tolerance", o.tolerance, "detection tolerance (default 1e-9)");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--trials", o.trials, "Monte-Carlo trials");
    cmd->add_option("--cache-dir", o.cache_dir,
                    "stabilizer cache directory (default: TRICRIT_CACHE_DIR)");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Triangle-criterion toolkit for mixed-state magic"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tricrit::kVersion);

    CommonOpts o;
    int iterations = 200;
    int construct_n = 0;
    std::string check_path, lift_spec, k_list = "1,2,4,8,16", cache_action = "build";
    int d_a = 2, m_obs = 1, bound_dim = 4;
    double bound_k = 10.0;
    std::string scan_mode = "criterion";

    auto *enumerate = app.add_subcommand("enumerate", "enumerate stabilizer states and triples");
    enumerate->add_option("--qubits", o.qubits)->required();
    add_common(enumerate, o, false);

    auto *detect_cmd = app.add_subcommand("detect", "scan all triangle witnesses");
    detect_cmd->add_flag("--two-copies", o.two_copies, "scan rho ⊗ rho (two-qubit input)");
    add_common(detect_cmd, o, true);

    auto *neg = app.add_subcommand("negativity", "triangle negativity of a state");
    add_common(neg, o, true);

    auto *reduce_cmd = app.add_subcommand("reduce", "reduce to a single qubit via the argmin witness");
    add_common(reduce_cmd, o, true);

    auto *distill_cmd = app.add_subcommand("distill", "two-copy distillation circuit outcome");
    add_common(distill_cmd, o, true);

    auto *search_cmd = app.add_subcommand("search", "search for two-copy activated states");
    search_cmd->add_option("--iterations", iterations);
    add_common(search_cmd, o, true);

    auto *purity_cmd = app.add_subcommand("purity", "minimal-purity constructions and checks");
    purity_cmd->add_option("--construct", construct_n, "build the minimal-purity state on n qubits");
    purity_cmd->add_option("--check", check_path, "analyze a state file");
    purity_cmd->add_option("--lift", lift_spec, "lift the n-qubit boundary state to m qubits (n:m)");
    add_common(purity_cmd, o, false);

    auto *conj = app.add_subcommand("conjecture-scan", "sample the purity shell for counterexamples");
    conj->add_option("--qubits", o.qubits)->required();
    conj->add_option("--mode", scan_mode, "membership or criterion")->capture_default_str();
    add_common(conj, o, false);

    auto *ball = app.add_subcommand("ball", "reduced-purity stability under post-selection");
    ball->add_option("--da", d_a, "subsystem dimension d_A")->capture_default_str();
    add_common(ball, o, true);

    auto *wb = app.add_subcommand("witness-bounds", "closed-form detection-probability bounds");
    wb->add_option("--qubits", o.qubits)->required();
    wb->add_option("--k", bound_k, "traced-out dimension")->capture_default_str();
    wb->add_option("--m", m_obs, "observable count for the linear bound")->capture_default_str();
    wb->add_option("--dim", bound_dim, "state dimension for the linear bound")->capture_default_str();
    add_common(wb, o, false);

    auto *sd = app.add_subcommand("sample-detect", "Monte-Carlo detection probability sweep");
    sd->add_option("--qubits", o.qubits)->required();
    sd->add_option("--k", k_list, "comma-separated traced-out dimensions")->capture_default_str();
    sd->add_option("--mode", o.mode, "single-witness or full-criterion")->capture_default_str();
    add_common(sd, o, false);

    auto *cache_cmd = app.add_subcommand("cache", "build, verify or purge the state cache");
    cache_cmd->add_option("--action", cache_action, "build | verify | purge")->required();
    cache_cmd->add_option("--qubits", o.qubits)->required();
    add_common(cache_cmd, o, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return run_enumerate(o);
        if (detect_cmd->parsed()) return run_detect(o, false);
        if (neg->parsed()) return run_detect(o, true);
        if (reduce_cmd->parsed()) return run_reduce(o);
        if (distill_cmd->parsed()) return run_distill(o);
        if (search_cmd->parsed()) return run_search(o, iterations);
        if (purity_cmd->parsed()) return run_purity(o, construct_n, check_path, lift_spec);
        if (conj->parsed()) return run_conjecture(o, scan_mode);
        if (ball->parsed()) return run_ball(o, d_a);
        if (wb->parsed()) return run_witness_bounds(o, bound_k, m_obs, bound_dim);
        if (sd->parsed()) return run_sample_detect(o, k_list);
        if (cache_cmd->parsed()) return run_cache(o, cache_action);
    } catch (const tricrit::CapacityError &e) {
        std::cerr << "capacity error: " << e.what() << std::endl;
        return 3;
    } catch (const tricrit::ValidationError &e) {
        std::cerr << "validation error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 0;
}

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

#include <json.hpp>
#include <memory>
#include <string>

#include "tricrit/bounds.hpp"
#include "tricrit/criterion.hpp"
#include "tricrit/distill.hpp"
#include "tricrit/stats.hpp"

namespace tricrit {

using Json = nlohmann::json;

/// Accepts either a dense matrix {"dims": d, "matrix": [[[re, im], ...]]} or
/// Pauli coefficients {"qubits": n, "pauli": {"IX": c, ...}} with the
/// convention rho = (1/d) sum_P c_P P and the identity coefficient fixed to 1.
/// Invariant failures name the violated check.
DensityMatrix parse_state_json(const Json &j);
DensityMatrix parse_state_file(const std::string &path);

Json state_to_json(const DensityMatrix &rho, bool pauli_form = false);

Json circuit_to_json(const CliffordCircuit &c);
Json detection_report_to_json(const DetectionReport &rep);
Json membership_to_json(const MembershipVerdict &v);
Json distillation_to_json(const DistillationOutcome &out);
Json experiment_to_json(const DetectionExperiment &ex);
std::string experiment_csv_header();
std::string experiment_csv_row(const DetectionExperiment &ex);

// ---- stabilizer state cache -------------------------------------------------
//
// One binary file per qubit count: magic "TRICRIT1", u32 n, u64 state count,
// bit-packed sign-decorated tableaux, FNV-1a checksum of the payload. Loads
// failing any check report a mismatch so callers can rebuild.

inline constexpr const char *kCacheMagic = "TRICRIT1";

std::string cache_file_path(const std::string &dir, int n);

/// Writes the catalog's tableaux under an advisory lock file.
void save_catalog(const StabilizerCatalog &catalog, const std::string &dir);

/// Loads and fully validates a cache file; throws ValidationError on any
/// mismatch (bad magic, truncated payload, checksum failure).
std::unique_ptr<StabilizerCatalog> load_catalog(const std::string &dir, int n);

/// Load, rebuilding (and saving) transparently when missing or corrupt.
std::unique_ptr<StabilizerCatalog> load_or_build_catalog(int n, const std::string &dir);

struct CacheStatus {
    bool ok = false;
    std::string message;
};

/// action in {build, verify, purge}; idempotent.
CacheStatus manage_cache(const std::string &dir, const std::string &action, int n);

}  // namespace tricrit

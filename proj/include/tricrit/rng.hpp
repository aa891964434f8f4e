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

#include <complex>
#include <cstdint>

namespace tricrit {

/// Deterministic splitmix64-based generator. Unlike the standard library
/// distributions, every draw is bit-reproducible across platforms, and
/// `stream(seed, task)` yields independent substreams so Monte-Carlo loops
/// can be sharded by task index without changing results.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    /// Substream for (seed, task); task indices give decorrelated streams.
    static Rng stream(uint64_t seed, uint64_t task);

    uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform();

    /// Uniform integer in [0, bound).
    uint32_t below(uint32_t bound);

    /// Standard normal via the Marsaglia polar method.
    double normal();

    /// Complex standard normal (independent N(0,1) real and imaginary parts).
    std::complex<double> cnormal();

  private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace tricrit

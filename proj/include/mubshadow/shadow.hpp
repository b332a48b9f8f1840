// Copyright 2026 The MUB Shadow Authors
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

#ifndef MUBSHADOW_SHADOW_HPP
#define MUBSHADOW_SHADOW_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mubshadow/bits.hpp"
#include "mubshadow/ensemble.hpp"
#include "mubshadow/observable.hpp"
#include "mubshadow/simulator.hpp"

namespace mubshadow {

/// One randomized measurement: which rotation was applied and what was seen.
/// Dense snapshot matrices are never stored.
struct SnapshotRecord {
    EnsembleTag ensemble = EnsembleTag::mub;
    std::uint64_t rotation = 0;  // MUB: basis id j; Clifford: element seed
    BitVector outcome;
    bool operator==(const SnapshotRecord&) const = default;
};

struct ShadowMeta {
    unsigned n = 0;
    EnsembleTag ensemble = EnsembleTag::mub;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    std::string state;
    bool operator==(const ShadowMeta&) const = default;
};

struct ShadowSet {
    ShadowMeta meta;
    std::vector<SnapshotRecord> records;
    bool operator==(const ShadowSet&) const = default;
};

struct EstimatorConfig {
    std::uint64_t groups = 1;  // K
};

/// N independent shots. Shot i draws its rotation, branch and outcome from
/// streams keyed by (seed, i), so the result does not depend on `threads`.
ShadowSet acquire(const StateModel& model, const Ensemble& ensemble, std::uint64_t shots, std::uint64_t seed,
                  unsigned threads = 1);

/// tr(O M^{-1}(V|b><b|V^dag)) = (2^n + 1) <b|V^dag O V|b> - tr(O).
double snapshot_expectation(const SnapshotRecord& rec, const Observable& o, const Ensemble& ensemble);

/// Median over K contiguous groups of L = floor(N/K) values each; the tail
/// beyond K*L is discarded. Even K averages the two central group means.
double median_of_means(std::span<const double> values, std::uint64_t groups);

/// One median-of-means estimate per observable.
std::vector<double> estimate(const ShadowSet& shadow, const std::vector<Observable>& observables,
                             const EstimatorConfig& cfg, const Ensemble& ensemble, unsigned threads = 1);

struct EmpiricalMoments {
    double mean = 0.0;
    double variance = 0.0;           // unbiased sample variance
    double variance_std_error = 0.0; // standard error of `variance`
    std::uint64_t samples = 0;
};

/// Sample moments of single-shot snapshot_expectation values.
EmpiricalMoments empirical_single_shot_moments(const StateModel& model, const Ensemble& ensemble,
                                               const Observable& o, std::uint64_t samples, std::uint64_t seed,
                                               unsigned threads = 1);

}  // namespace mubshadow

#endif

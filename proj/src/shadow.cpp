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

#include "mubshadow/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "mubshadow/parallel.hpp"

namespace mubshadow {

namespace {

constexpr std::uint64_t kProbabilityCacheLimit = std::uint64_t{1} << 24;

// Born distributions per (branch, rotation) for ensembles with few rotations.
class DistributionTable {
   public:
    DistributionTable(const StateModel& model, const Ensemble& ensemble, unsigned threads)
        : rotations_(ensemble.rotation_count()) {
        const std::uint64_t slots = model.branch_count() * rotations_;
        table_.resize(slots);
        parallel_for(slots, threads, [&](std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t s = begin; s < end; ++s) {
                table_[s] = ensemble.outcome_probabilities(s % rotations_, model.branch(s / rotations_));
            }
        });
    }

    const std::vector<double>& get(std::size_t branch, std::uint64_t rotation) const {
        return table_[branch * rotations_ + rotation];
    }

    static bool fits(const StateModel& model, const Ensemble& ensemble) {
        const std::uint64_t rot = ensemble.rotation_count();
        if (rot == 0) {
            return false;
        }
        const std::uint64_t dim = std::uint64_t{1} << ensemble.qubits();
        return model.branch_count() * rot <= kProbabilityCacheLimit / dim;
    }

   private:
    std::uint64_t rotations_;
    std::vector<std::vector<double>> table_;
};

}  // namespace

ShadowSet acquire(const StateModel& model, const Ensemble& ensemble, std::uint64_t shots, std::uint64_t seed,
                  unsigned threads) {
    if (shots < 1) {
        throw std::invalid_argument("acquire: shot count must be at least 1");
    }
    if (model.qubits() != ensemble.qubits()) {
        throw std::invalid_argument("acquire: state and ensemble qubit counts differ");
    }
    const unsigned n = ensemble.qubits();
    ShadowSet shadow;
    shadow.meta = {n, ensemble.tag(), seed, shots, model.describe()};
    shadow.records.resize(shots);

    std::optional<DistributionTable> table;
    if (DistributionTable::fits(model, ensemble)) {
        table.emplace(model, ensemble, threads);
    }

    parallel_for(shots, threads, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            auto rot_rng = shot_stream(seed, i, ShotLane::rotation);
            auto branch_rng = shot_stream(seed, i, ShotLane::branch);
            auto out_rng = shot_stream(seed, i, ShotLane::outcome);
            const std::uint64_t rotation = ensemble.sample_rotation(rot_rng);
            const std::size_t branch = model.sample_branch_index(branch_rng);
            std::uint64_t b = 0;
            if (table) {
                b = sample_index(table->get(branch, rotation), out_rng);
            } else {
                const auto probs = ensemble.outcome_probabilities(rotation, model.branch(branch));
                b = sample_index(probs, out_rng);
            }
            shadow.records[i] = {ensemble.tag(), rotation, BitVector(n, b)};
        }
    });
    return shadow;
}

double snapshot_expectation(const SnapshotRecord& rec, const Observable& o, const Ensemble& ensemble) {
    const unsigned n = ensemble.qubits();
    if (rec.outcome.size() != n || o.qubits() != n) {
        throw std::invalid_argument("snapshot_expectation: qubit counts of record, observable and ensemble differ");
    }
    if (rec.ensemble != ensemble.tag()) {
        throw std::invalid_argument("snapshot_expectation: record was taken with a different ensemble");
    }
    const double d_plus_1 = std::ldexp(1.0, static_cast<int>(n)) + 1.0;
    return d_plus_1 * ensemble.snapshot_overlap(rec.rotation, rec.outcome.value(), o) - o.trace();
}

double median_of_means(std::span<const double> values, std::uint64_t groups) {
    if (values.empty()) {
        throw std::invalid_argument("median_of_means: no values");
    }
    if (groups < 1 || groups > values.size()) {
        throw std::invalid_argument("median_of_means: group count K must satisfy 1 <= K <= N");
    }
    const std::uint64_t per_group = values.size() / groups;
    std::vector<double> means(groups);
    for (std::uint64_t g = 0; g < groups; ++g) {
        double sum = 0.0;
        for (std::uint64_t i = g * per_group; i < (g + 1) * per_group; ++i) {
            sum += values[i];
        }
        means[g] = sum / static_cast<double>(per_group);
    }
    std::sort(means.begin(), means.end());
    if (groups % 2 == 1) {
        return means[groups / 2];
    }
    return 0.5 * (means[groups / 2 - 1] + means[groups / 2]);
}

std::vector<double> estimate(const ShadowSet& shadow, const std::vector<Observable>& observables,
                             const EstimatorConfig& cfg, const Ensemble& ensemble, unsigned threads) {
    const std::uint64_t n_records = shadow.records.size();
    if (n_records == 0) {
        throw std::invalid_argument("estimate: empty shadow set");
    }
    if (cfg.groups < 1 || cfg.groups > n_records) {
        throw std::invalid_argument("estimate: group count K=" + std::to_string(cfg.groups) +
                                    " must satisfy 1 <= K <= N=" + std::to_string(n_records));
    }
    const std::uint64_t used = (n_records / cfg.groups) * cfg.groups;
    std::vector<double> results;
    results.reserve(observables.size());
    std::vector<double> values(used);
    for (const auto& o : observables) {
        parallel_for(used, threads, [&](std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t i = begin; i < end; ++i) {
                values[i] = snapshot_expectation(shadow.records[i], o, ensemble);
            }
        });
        results.push_back(median_of_means(values, cfg.groups));
    }
    return results;
}

EmpiricalMoments empirical_single_shot_moments(const StateModel& model, const Ensemble& ensemble,
                                               const Observable& o, std::uint64_t samples, std::uint64_t seed,
                                               unsigned threads) {
    if (samples < 2) {
        throw std::invalid_argument("empirical_single_shot_moments: need at least two samples");
    }
    const ShadowSet shadow = acquire(model, ensemble, samples, seed, threads);
    std::vector<double> x(samples);
    parallel_for(samples, threads, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            x[i] = snapshot_expectation(shadow.records[i], o, ensemble);
        }
    });
    const double count = static_cast<double>(samples);
    double mean = 0.0;
    for (double v : x) {
        mean += v;
    }
    mean /= count;
    double m2 = 0.0;
    double m4 = 0.0;
    for (double v : x) {
        const double d2 = (v - mean) * (v - mean);
        m2 += d2;
        m4 += d2 * d2;
    }
    EmpiricalMoments out;
    out.samples = samples;
    out.mean = mean;
    out.variance = m2 / (count - 1.0);
    const double pop_var = m2 / count;
    out.variance_std_error = std::sqrt(std::max(0.0, m4 / count - pop_var * pop_var) / count);
    return out;
}

}  // namespace mubshadow

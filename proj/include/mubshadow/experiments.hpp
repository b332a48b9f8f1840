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

#ifndef MUBSHADOW_EXPERIMENTS_HPP
#define MUBSHADOW_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace mubshadow {

struct ExperimentResult {
    std::string label;
    unsigned n = 0;
    std::uint64_t shots = 0;
    std::uint64_t groups = 1;
    double p = 0.0;
    std::string ensemble = "mub";
    std::uint64_t seed = 0;
    std::vector<double> runs;  // one estimate per independent run
    double mean = 0.0;
    double std = 0.0;          // sample standard deviation over runs (0 for one run)
    double truth = 0.0;        // exact value being estimated
};

nlohmann::json to_json(const ExperimentResult& r);

/// Seed of run `run` of the experiment point `point`, derived from the master seed.
std::uint64_t run_seed(std::uint64_t master, std::uint64_t point, std::uint64_t run);

/// GHZ(n) measured with random MUBs, fidelity with |GHZ> estimated per run.
std::vector<ExperimentResult> run_ghz_fidelity(const std::vector<unsigned>& qubits, std::uint64_t shots,
                                               std::uint64_t runs, std::uint64_t groups, std::uint64_t seed,
                                               unsigned threads);

/// Phase-flipped GHZ with probability p for every p in the grid; truth is 1 - p.
std::vector<ExperimentResult> run_noisy_ghz(unsigned n, const std::vector<double>& p_grid, std::uint64_t shots,
                                            std::uint64_t runs, std::uint64_t groups, std::uint64_t seed,
                                            unsigned threads);

struct VarianceComparison {
    std::string observable;
    unsigned n = 0;
    double var_mub = 0.0;             // exact, by enumeration
    double var_clifford = 0.0;        // empirical
    double var_clifford_std_error = 0.0;
    std::uint64_t clifford_samples = 0;
    double bound_mub = 0.0;           // 2 tr(O_0^2)
    double bound_clifford = 0.0;      // 3 tr(O_0^2)
};

/// GHZ projector on the GHZ state for each n.
std::vector<VarianceComparison> run_variance_compare(const std::vector<unsigned>& qubits,
                                                     std::uint64_t clifford_samples, std::uint64_t seed,
                                                     unsigned threads);

void write_ghz_fidelity_csv(std::ostream& out, const std::vector<ExperimentResult>& results);
void write_noisy_ghz_csv(std::ostream& out, const std::vector<ExperimentResult>& results);
void write_variance_csv(std::ostream& out, const std::vector<VarianceComparison>& rows);

}  // namespace mubshadow

#endif

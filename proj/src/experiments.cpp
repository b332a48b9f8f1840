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

#include "mubshadow/experiments.hpp"

#include <cmath>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "mubshadow/channel.hpp"
#include "mubshadow/ensemble.hpp"
#include "mubshadow/rng.hpp"
#include "mubshadow/shadow.hpp"

namespace mubshadow {

namespace {

void summarize(ExperimentResult& r) {
    double sum = 0.0;
    for (double v : r.runs) {
        sum += v;
    }
    r.mean = sum / static_cast<double>(r.runs.size());
    if (r.runs.size() > 1) {
        double ss = 0.0;
        for (double v : r.runs) {
            ss += (v - r.mean) * (v - r.mean);
        }
        r.std = std::sqrt(ss / static_cast<double>(r.runs.size() - 1));
    }
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

}  // namespace

nlohmann::json to_json(const ExperimentResult& r) {
    return {{"label", r.label},
            {"parameters",
             {{"n", r.n}, {"N", r.shots}, {"K", r.groups}, {"p", r.p}, {"ensemble", r.ensemble}, {"seed", r.seed}}},
            {"runs", r.runs},
            {"run_count", r.runs.size()},
            {"mean", r.mean},
            {"std", r.std},
            {"true", r.truth}};
}

std::uint64_t run_seed(std::uint64_t master, std::uint64_t point, std::uint64_t run) {
    return SplitMix64::stream(master, point, run + 1000)();
}

std::vector<ExperimentResult> run_ghz_fidelity(const std::vector<unsigned>& qubits, std::uint64_t shots,
                                               std::uint64_t runs, std::uint64_t groups, std::uint64_t seed,
                                               unsigned threads) {
    std::vector<ExperimentResult> results;
    for (unsigned n : qubits) {
        const MubEnsemble ensemble(n);
        const StateModel model = StateModel::ghz(n);
        const std::vector<Observable> target = {Observable::ghz_fidelity(n)};
        ExperimentResult r;
        r.label = "ghz-fidelity";
        r.n = n;
        r.shots = shots;
        r.groups = groups;
        r.seed = seed;
        r.truth = 1.0;
        for (std::uint64_t run = 0; run < runs; ++run) {
            const auto shadow = acquire(model, ensemble, shots, run_seed(seed, n, run), threads);
            r.runs.push_back(estimate(shadow, target, {groups}, ensemble, threads).front());
        }
        summarize(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::vector<ExperimentResult> run_noisy_ghz(unsigned n, const std::vector<double>& p_grid, std::uint64_t shots,
                                            std::uint64_t runs, std::uint64_t groups, std::uint64_t seed,
                                            unsigned threads) {
    const MubEnsemble ensemble(n);
    const std::vector<Observable> target = {Observable::ghz_fidelity(n)};
    std::vector<ExperimentResult> results;
    for (std::size_t point = 0; point < p_grid.size(); ++point) {
        const double p = p_grid[point];
        const StateModel model = StateModel::noisy_ghz(n, p);
        ExperimentResult r;
        r.label = "noisy-ghz";
        r.n = n;
        r.shots = shots;
        r.groups = groups;
        r.p = p;
        r.seed = seed;
        r.truth = 1.0 - p;
        for (std::uint64_t run = 0; run < runs; ++run) {
            const auto shadow = acquire(model, ensemble, shots, run_seed(seed, point, run), threads);
            r.runs.push_back(estimate(shadow, target, {groups}, ensemble, threads).front());
        }
        summarize(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::vector<VarianceComparison> run_variance_compare(const std::vector<unsigned>& qubits,
                                                     std::uint64_t clifford_samples, std::uint64_t seed,
                                                     unsigned threads) {
    std::vector<VarianceComparison> rows;
    for (unsigned n : qubits) {
        const auto family = std::make_shared<const MubFamily>(MubFamily::build(n));
        const StateModel model = StateModel::ghz(n);
        const Observable o = Observable::ghz_fidelity(n);
        const Eigen::MatrixXcd dense = o.matrix();

        VarianceComparison row;
        row.observable = "ghz_projector_n" + std::to_string(n);
        row.n = n;
        row.var_mub = exact_single_shot_variance(*family, model.density(), o);
        const CliffordEnsemble clifford(n);
        const auto moments = empirical_single_shot_moments(model, clifford, o, clifford_samples, seed + n, threads);
        row.var_clifford = moments.variance;
        row.var_clifford_std_error = moments.variance_std_error;
        row.clifford_samples = clifford_samples;
        row.bound_mub = shadow_norm_sq(*family, dense).bound;
        row.bound_clifford = clifford_variance_bound(dense);
        rows.push_back(row);
    }
    return rows;
}

void write_ghz_fidelity_csv(std::ostream& out, const std::vector<ExperimentResult>& results) {
    out << "n,run,estimate\n";
    for (const auto& r : results) {
        for (std::size_t run = 0; run < r.runs.size(); ++run) {
            out << r.n << ',' << run << ',' << fmt(r.runs[run]) << '\n';
        }
    }
}

void write_noisy_ghz_csv(std::ostream& out, const std::vector<ExperimentResult>& results) {
    out << "p,estimate,std,true\n";
    for (const auto& r : results) {
        out << fmt(r.p) << ',' << fmt(r.mean) << ',' << fmt(r.std) << ',' << fmt(r.truth) << '\n';
    }
}

void write_variance_csv(std::ostream& out, const std::vector<VarianceComparison>& rows) {
    out << "observable,var_mub,var_clifford,bound_mub,bound_clifford\n";
    for (const auto& r : rows) {
        out << r.observable << ',' << fmt(r.var_mub) << ',' << fmt(r.var_clifford) << ',' << fmt(r.bound_mub) << ','
            << fmt(r.bound_clifford) << '\n';
    }
}

}  // namespace mubshadow

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

#include <gtest/gtest.h>

#include <random>

#include "mubshadow/channel.hpp"
#include "mubshadow/shadow.hpp"
#include "oracles.hpp"

using namespace mubshadow;

TEST(Acquire, RecordsAreInRange) {
    const MubEnsemble ensemble(2);
    const ShadowSet s = acquire(StateModel::ghz(2), ensemble, 4, 1);
    ASSERT_EQ(s.records.size(), 4u);
    EXPECT_EQ(s.meta.n, 2u);
    EXPECT_EQ(s.meta.shots, 4u);
    EXPECT_EQ(s.meta.seed, 1u);
    for (const auto& r : s.records) {
        EXPECT_EQ(r.ensemble, EnsembleTag::mub);
        EXPECT_LE(r.rotation, 4u);
        EXPECT_EQ(r.outcome.size(), 2u);
        EXPECT_LT(r.outcome.value(), 4u);
    }
    EXPECT_THROW(acquire(StateModel::ghz(2), ensemble, 0, 1), std::invalid_argument);
    EXPECT_THROW(acquire(StateModel::ghz(3), ensemble, 5, 1), std::invalid_argument);
}

TEST(Acquire, MaximallyMixedIsUniform) {
    const unsigned n = 3;
    const MubEnsemble ensemble(n);
    constexpr std::uint64_t kShots = 100000;
    const ShadowSet s = acquire(StateModel::maximally_mixed(n), ensemble, kShots, 5);
    std::vector<std::uint64_t> by_basis(9, 0);
    std::vector<std::uint64_t> by_outcome(8, 0);
    for (const auto& r : s.records) {
        ++by_basis[r.rotation];
        ++by_outcome[r.outcome.value()];
    }
    for (auto c : by_basis) {
        EXPECT_TRUE(oracle::within_binomial(c, kShots, 1.0 / 9.0));
    }
    for (auto c : by_outcome) {
        EXPECT_TRUE(oracle::within_binomial(c, kShots, 1.0 / 8.0));
    }
}

TEST(Acquire, GhzComputationalRecordsAreAllEqualBits) {
    const MubEnsemble ensemble(4);
    const ShadowSet s = acquire(StateModel::ghz(4), ensemble, 5000, 9);
    std::uint64_t seen = 0;
    for (const auto& r : s.records) {
        if (r.rotation == 0) {
            ++seen;
            EXPECT_TRUE(r.outcome.value() == 0 || r.outcome.value() == 15);
        }
    }
    EXPECT_GT(seen, 0u);
}

TEST(Acquire, DeterministicAcrossThreadCounts) {
    for (EnsembleTag tag : {EnsembleTag::mub, EnsembleTag::clifford}) {
        const auto ensemble = make_ensemble(tag, 3);
        const StateModel model = StateModel::noisy_ghz(3, 0.25);
        const ShadowSet a = acquire(model, *ensemble, 2000, 77, 1);
        const ShadowSet b = acquire(model, *ensemble, 2000, 77, 8);
        const ShadowSet c = acquire(model, *ensemble, 2000, 77, 3);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a, c);
    }
}

TEST(MedianOfMeans, Examples) {
    const std::vector<double> v = {1, 2, 3, 4, 5, 6};
    EXPECT_DOUBLE_EQ(median_of_means(v, 3), 3.5);
    EXPECT_DOUBLE_EQ(median_of_means(v, 1), 3.5);
    EXPECT_DOUBLE_EQ(median_of_means(std::vector<double>{1, 2, 3, 10}, 1), 4.0);
    // Even K: group means 1.5, 3.5 average to 2.5.
    EXPECT_DOUBLE_EQ(median_of_means(std::vector<double>{1, 2, 3, 4}, 2), 2.5);
    // Tail beyond K * floor(N/K) is discarded: groups {1,2},{3,4},{5,6}; 7 dropped.
    EXPECT_DOUBLE_EQ(median_of_means(std::vector<double>{1, 2, 3, 4, 5, 6, 7}, 3), 3.5);
    // An outlier group does not move the median.
    EXPECT_DOUBLE_EQ(median_of_means(std::vector<double>{1, 1, 1, 1000, 1, 1}, 3), 1.0);
}

TEST(MedianOfMeans, ConstantValuesForEveryK) {
    const std::vector<double> v(60, -0.375);
    for (std::uint64_t k = 1; k <= 60; ++k) {
        EXPECT_DOUBLE_EQ(median_of_means(v, k), -0.375);
    }
}

TEST(MedianOfMeans, Preconditions) {
    EXPECT_THROW(median_of_means(std::vector<double>{}, 1), std::invalid_argument);
    EXPECT_THROW(median_of_means(std::vector<double>{1, 2}, 3), std::invalid_argument);
    EXPECT_THROW(median_of_means(std::vector<double>{1, 2}, 0), std::invalid_argument);
}

TEST(Estimate, GhzFidelity) {
    const MubEnsemble ensemble(3);
    const ShadowSet s = acquire(StateModel::ghz(3), ensemble, 10000, 2024);
    const auto est = estimate(s, {Observable::ghz_fidelity(3)}, {1}, ensemble);
    EXPECT_NEAR(est[0], 1.0, 0.05);
}

TEST(Estimate, IdentityIsConstant) {
    for (unsigned n = 1; n <= 4; ++n) {
        const MubEnsemble ensemble(n);
        const auto dim = Eigen::Index{1} << n;
        const ShadowSet s = acquire(StateModel::ghz(n), ensemble, 500, n);
        const Observable id = Observable::dense(n, Eigen::MatrixXcd::Identity(dim, dim));
        const Observable mixed =
            Observable::dense(n, Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
        for (std::uint64_t k : {1, 7}) {
            const auto est = estimate(s, {id, mixed}, {k}, ensemble);
            EXPECT_NEAR(est[0], 1.0, 1e-12);
            EXPECT_NEAR(est[1], 1.0 / static_cast<double>(dim), 1e-12);
        }
    }
}

TEST(Estimate, Preconditions) {
    const MubEnsemble ensemble(2);
    const ShadowSet s = acquire(StateModel::ghz(2), ensemble, 10, 1);
    EXPECT_THROW(estimate(s, {Observable::ghz_fidelity(2)}, {11}, ensemble), std::invalid_argument);
    ShadowSet empty = s;
    empty.records.clear();
    EXPECT_THROW(estimate(empty, {Observable::ghz_fidelity(2)}, {1}, ensemble), std::invalid_argument);
    EXPECT_THROW(estimate(s, {Observable::ghz_fidelity(3)}, {1}, ensemble), std::invalid_argument);
}

TEST(Estimate, ThreadCountDoesNotChangeEstimates) {
    const MubEnsemble ensemble(4);
    const ShadowSet s = acquire(StateModel::noisy_ghz(4, 0.2), ensemble, 3000, 3);
    const std::vector<Observable> obs = {Observable::ghz_fidelity(4)};
    const auto a = estimate(s, obs, {5}, ensemble, 1);
    const auto b = estimate(s, obs, {5}, ensemble, 6);
    EXPECT_EQ(a, b);
}

TEST(Estimate, ProjectorFastPathMatchesDense) {
    std::mt19937_64 rng(23);
    for (unsigned n = 1; n <= 4; ++n) {
        const MubEnsemble ensemble(n);
        const auto dim = Eigen::Index{1} << n;
        const Observable proj = Observable::projector(StateVector(n, oracle::random_state(rng, dim)));
        const Observable dense = Observable::dense(n, proj.matrix());
        const ShadowSet s = acquire(StateModel::ghz(n), ensemble, 300, 10 + n);
        for (const auto& r : s.records) {
            ASSERT_NEAR(snapshot_expectation(r, proj, ensemble), snapshot_expectation(r, dense, ensemble), 1e-10);
        }
    }
}

TEST(Estimate, CliffordShadowPredictsFidelity) {
    const CliffordEnsemble ensemble(3);
    const ShadowSet s = acquire(StateModel::ghz(3), ensemble, 10000, 6);
    const auto est = estimate(s, {Observable::ghz_fidelity(3)}, {1}, ensemble);
    EXPECT_NEAR(est[0], 1.0, 0.1);
    const MubEnsemble wrong(3);
    EXPECT_THROW(snapshot_expectation(s.records[0], Observable::ghz_fidelity(3), wrong), std::invalid_argument);
}

TEST(Estimate, SpreadMatchesSingleShotVariance) {
    std::mt19937_64 rng(31);
    struct Case {
        unsigned n;
        StateModel model;
        Observable o;
    };
    const std::vector<Case> cases = {
        {2, StateModel::noisy_ghz(2, 0.3), Observable::ghz_fidelity(2)},
        {3, StateModel::ghz(3), Observable::ghz_fidelity(3)},
        {3, StateModel::pure(StateVector(3, oracle::random_state(rng, 8))),
         Observable::projector(StateVector(3, oracle::random_state(rng, 8)))},
    };
    constexpr std::uint64_t kShots = 1000;
    constexpr int kReps = 200;
    for (const auto& c : cases) {
        const MubEnsemble ensemble(c.n);
        const double var = exact_single_shot_variance(ensemble.family(), c.model.density(), c.o);
        std::vector<double> est;
        for (int r = 0; r < kReps; ++r) {
            const ShadowSet s = acquire(c.model, ensemble, kShots, 9000 + static_cast<std::uint64_t>(r));
            est.push_back(estimate(s, {c.o}, {1}, ensemble).front());
        }
        double mean = 0.0;
        for (double e : est) {
            mean += e;
        }
        mean /= kReps;
        double ss = 0.0;
        for (double e : est) {
            ss += (e - mean) * (e - mean);
        }
        const double spread = std::sqrt(ss / (kReps - 1));
        const double predicted = std::sqrt(var / static_cast<double>(kShots));
        EXPECT_GT(spread, predicted / 1.5) << c.n;
        EXPECT_LT(spread, predicted * 1.5) << c.n;
        EXPECT_NEAR(mean, c.o.expectation(c.model.density()), 5 * predicted / std::sqrt(double(kReps)));
    }
}

TEST(EmpiricalMoments, AgreeWithExactMubMoments) {
    const unsigned n = 2;
    const MubEnsemble ensemble(n);
    const StateModel model = StateModel::noisy_ghz(n, 0.1);
    const Observable o = Observable::ghz_fidelity(n);
    const auto m = empirical_single_shot_moments(model, ensemble, o, 200000, 4, 2);
    const double var = exact_single_shot_variance(ensemble.family(), model.density(), o);
    EXPECT_NEAR(m.mean, 0.9, 5 * std::sqrt(var / 200000.0));
    EXPECT_NEAR(m.variance, var, 5 * m.variance_std_error);
    EXPECT_EQ(m.samples, 200000u);
}

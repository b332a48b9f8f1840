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

#include <Eigen/Eigenvalues>
#include <random>

#include "mubshadow/channel.hpp"
#include "mubshadow/ensemble.hpp"
#include "mubshadow/observable.hpp"
#include "mubshadow/shadow.hpp"
#include "oracles.hpp"

using namespace mubshadow;
using Eigen::MatrixXcd;

namespace {

MatrixXcd diag2(double a, double b) {
    MatrixXcd m = MatrixXcd::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

MatrixXcd random_matrix(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> g;
    MatrixXcd m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = {g(rng), g(rng)};
        }
    }
    return m;
}

// Sum over every basis state of Pr(j,b) * f(tr(O M^{-1}(|e><e|))), built from the
// term-by-term amplitudes and the dense inverse channel.
double enumerate_moment(const MubFamily& fam, const MatrixXcd& rho, const MatrixXcd& o, int power) {
    double acc = 0.0;
    for (BasisId j = 0; j < fam.basis_count(); ++j) {
        for (std::uint64_t b = 0; b < fam.dimension(); ++b) {
            const Eigen::VectorXcd e = oracle::mub_vector(fam, j, b);
            const double pr = e.dot(rho * e).real() / static_cast<double>(fam.basis_count());
            const double x = (o * inverse_channel(e * e.adjoint())).trace().real();
            acc += pr * std::pow(x, power);
        }
    }
    return acc;
}

}  // namespace

TEST(InverseChannel, Examples) {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto dim = Eigen::Index{1} << n;
        const MatrixXcd mixed = MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
        EXPECT_LT((inverse_channel(mixed) - mixed).norm(), 1e-15);
        EXPECT_LT((forward_channel(mixed) - mixed).norm(), 1e-15);
    }
    EXPECT_LT((inverse_channel(diag2(1, 0)) - diag2(2, -1)).norm(), 1e-15);
    EXPECT_LT((forward_channel(diag2(1, 0)) - diag2(2.0 / 3, 1.0 / 3)).norm(), 1e-15);
    EXPECT_THROW(inverse_channel(MatrixXcd::Identity(3, 3)), std::invalid_argument);
}

TEST(InverseChannel, InvertsForwardOnArbitraryMatrices) {
    std::mt19937_64 rng(2);
    for (unsigned n = 1; n <= 5; ++n) {
        const auto dim = Eigen::Index{1} << n;
        for (int t = 0; t < 10; ++t) {
            const MatrixXcd a = random_matrix(rng, dim);
            EXPECT_LT((inverse_channel(forward_channel(a)) - a).cwiseAbs().maxCoeff(), 1e-12);
            EXPECT_LT((forward_channel(inverse_channel(a)) - a).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(ExactChannel, SingleQubitSixProjectors) {
    const MubFamily fam = MubFamily::build(1);
    EXPECT_LT((exact_channel_enum(fam, diag2(1, 0)) - diag2(2.0 / 3, 1.0 / 3)).norm(), 1e-14);
    EXPECT_LT((exact_channel_enum(fam, diag2(0.5, 0.5)) - diag2(0.5, 0.5)).norm(), 1e-14);
}

TEST(ExactChannel, MatchesForwardChannel) {
    std::mt19937_64 rng(10);
    for (unsigned n = 1; n <= 4; ++n) {
        const MubFamily fam = MubFamily::build(n);
        const auto dim = Eigen::Index{1} << n;
        for (int t = 0; t < 50; ++t) {
            const MatrixXcd rho = oracle::random_density(rng, dim);
            ASSERT_LT((exact_channel_enum(fam, rho) - forward_channel(rho)).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(SnapshotExpectation, SingleQubitExamples) {
    const MubEnsemble ensemble(1);
    const Observable zero = Observable::projector(StateVector::basis(1, 0));
    EXPECT_NEAR(snapshot_expectation({EnsembleTag::mub, 0, BitVector(1, 0)}, zero, ensemble), 2.0, 1e-15);
    EXPECT_NEAR(snapshot_expectation({EnsembleTag::mub, 1, BitVector(1, 0)}, zero, ensemble), 0.5, 1e-15);
    const Observable dense = Observable::dense(1, diag2(1, 0));
    EXPECT_NEAR(snapshot_expectation({EnsembleTag::mub, 0, BitVector(1, 0)}, dense, ensemble), 2.0, 1e-15);
    EXPECT_NEAR(snapshot_expectation({EnsembleTag::mub, 1, BitVector(1, 0)}, dense, ensemble), 0.5, 1e-15);
}

TEST(SnapshotExpectation, AgreesWithDenseInverseChannel) {
    std::mt19937_64 rng(13);
    for (unsigned n = 1; n <= 4; ++n) {
        const auto fam = std::make_shared<const MubFamily>(MubFamily::build(n));
        const MubEnsemble ensemble(fam);
        const auto dim = Eigen::Index{1} << n;
        const Observable proj = Observable::projector(StateVector(n, oracle::random_state(rng, dim)));
        const Observable herm = Observable::dense(n, oracle::random_hermitian(rng, dim));
        for (int t = 0; t < 50; ++t) {
            const auto j = static_cast<BasisId>(rng() % fam->basis_count());
            const std::uint64_t b = rng() % fam->dimension();
            const Eigen::VectorXcd e = oracle::mub_vector(*fam, j, b);
            const MatrixXcd snap = inverse_channel(e * e.adjoint());
            const SnapshotRecord rec{EnsembleTag::mub, j, BitVector(n, b)};
            ASSERT_NEAR(snapshot_expectation(rec, proj, ensemble), (proj.matrix() * snap).trace().real(), 1e-10);
            ASSERT_NEAR(snapshot_expectation(rec, herm, ensemble), (herm.matrix() * snap).trace().real(), 1e-10);
        }
    }
}

TEST(SnapshotMoments, MeanIsExactlyTheExpectation) {
    std::mt19937_64 rng(14);
    for (unsigned n = 1; n <= 3; ++n) {
        const MubFamily fam = MubFamily::build(n);
        const auto dim = Eigen::Index{1} << n;
        for (int t = 0; t < 20; ++t) {
            const MatrixXcd rho = oracle::random_density(rng, dim);
            const Observable proj = Observable::projector(StateVector(n, oracle::random_state(rng, dim)));
            const Observable herm = Observable::dense(n, oracle::random_hermitian(rng, dim));
            for (const Observable* o : {&proj, &herm}) {
                const double truth = (o->matrix() * rho).trace().real();
                ASSERT_NEAR(exact_snapshot_mean(fam, rho, *o), truth, 1e-10);
                ASSERT_NEAR(enumerate_moment(fam, rho, o->matrix(), 1), truth, 1e-10);
                const double var = enumerate_moment(fam, rho, o->matrix(), 2) - truth * truth;
                ASSERT_NEAR(exact_single_shot_variance(fam, rho, *o), var, 1e-9);
            }
        }
    }
}

TEST(SnapshotMoments, SingleQubitZeroState) {
    const MubFamily fam = MubFamily::build(1);
    const Observable zero = Observable::projector(StateVector::basis(1, 0));
    EXPECT_NEAR(exact_snapshot_mean(fam, diag2(1, 0), zero), 1.0, 1e-14);
    EXPECT_NEAR(exact_single_shot_variance(fam, diag2(1, 0), zero), 0.5, 1e-14);
    EXPECT_NEAR(enumerate_moment(fam, diag2(1, 0), zero.matrix(), 2), 1.5, 1e-14);
}

TEST(SnapshotMoments, MultipleOfIdentityHasNoVariance) {
    std::mt19937_64 rng(15);
    for (unsigned n = 1; n <= 3; ++n) {
        const MubFamily fam = MubFamily::build(n);
        const auto dim = Eigen::Index{1} << n;
        const MatrixXcd rho = oracle::random_density(rng, dim);
        const Observable c = Observable::dense(n, 2.5 * MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
        EXPECT_NEAR(exact_single_shot_variance(fam, rho, c), 0.0, 1e-12);
        EXPECT_NEAR(exact_snapshot_mean(fam, rho, c), 2.5 / static_cast<double>(dim), 1e-12);
    }
}

TEST(ShadowNorm, SingleQubitZeroProjector) {
    const ShadowNorm s = shadow_norm_sq(MubFamily::build(1), Observable::projector(StateVector::basis(1, 0)));
    EXPECT_NEAR(s.value, 0.75, 1e-14);
    EXPECT_NEAR(s.bound, 1.0, 1e-14);
}

TEST(ShadowNorm, IdentityHasZeroNorm) {
    for (unsigned n = 1; n <= 3; ++n) {
        const auto dim = Eigen::Index{1} << n;
        const ShadowNorm s = shadow_norm_sq(MubFamily::build(n), MatrixXcd::Identity(dim, dim) * 3.0);
        EXPECT_NEAR(s.value, 0.0, 1e-12);
        EXPECT_NEAR(s.bound, 0.0, 1e-12);
    }
}

TEST(ShadowNorm, DominatesVarianceAndDesignBound) {
    std::mt19937_64 rng(16);
    for (unsigned n = 1; n <= 4; ++n) {
        const MubFamily fam = MubFamily::build(n);
        const auto dim = Eigen::Index{1} << n;
        for (int t = 0; t < 100; ++t) {
            const MatrixXcd o = oracle::random_hermitian(rng, dim);
            const ShadowNorm s = shadow_norm_sq(fam, o);
            const MatrixXcd o0 = o - o.trace() / static_cast<double>(dim) * MatrixXcd::Identity(dim, dim);
            const double hs = (o0 * o0).trace().real();
            ASSERT_NEAR(s.bound, 2.0 * hs, 1e-9);
            ASSERT_NEAR(clifford_variance_bound(o), 3.0 * hs, 1e-9);
            // Frame sum over a complete set of MUBs gives sum tr(O_0 P)^2 = tr(O_0^2).
            ASSERT_LE(s.value, static_cast<double>(dim + 1) * hs + 1e-9);
            if (n <= 3) {
                const MatrixXcd rho = oracle::random_density(rng, dim);
                ASSERT_LE(exact_single_shot_variance(fam, rho, Observable::dense(n, o)), s.value + 1e-10);
            }
        }
    }
}

TEST(ShadowNorm, MaximumOverStatesIsAttained) {
    std::mt19937_64 rng(18);
    for (unsigned n = 1; n <= 3; ++n) {
        const MubFamily fam = MubFamily::build(n);
        const auto dim = Eigen::Index{1} << n;
        const MatrixXcd o = oracle::random_hermitian(rng, dim);
        const MatrixXcd o0 = traceless_part(o);
        const ShadowNorm s = shadow_norm_sq(fam, o);
        // Second moment of the snapshot of O_0 in the maximizing pure state.
        MatrixXcd m = MatrixXcd::Zero(dim, dim);
        for (BasisId j = 0; j < fam.basis_count(); ++j) {
            for (std::uint64_t b = 0; b < fam.dimension(); ++b) {
                const Eigen::VectorXcd e = oracle::mub_vector(fam, j, b);
                const double t = e.dot(o0 * e).real();
                m += static_cast<double>(dim + 1) * t * t * (e * e.adjoint());
            }
        }
        Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(0.5 * (m + m.adjoint()));
        const Eigen::VectorXcd top = solver.eigenvectors().col(dim - 1);
        const MatrixXcd sigma = top * top.adjoint();
        EXPECT_NEAR(enumerate_moment(fam, sigma, o0, 2), s.value, 1e-9);
        for (int t = 0; t < 20; ++t) {
            EXPECT_LE(enumerate_moment(fam, oracle::random_density(rng, dim), o0, 2), s.value + 1e-10);
        }
    }
}

// For O = |e><e| with |e> outside the computational basis, the norm is
// (d+1)(1-1/d)^2, which exceeds 2 tr(O_0^2) = 2(1-1/d) once n >= 2.
TEST(ShadowNorm, BasisProjectorValue) {
    for (unsigned n = 1; n <= 4; ++n) {
        const MubFamily fam = MubFamily::build(n);
        const double d = static_cast<double>(fam.dimension());
        const ShadowNorm s = shadow_norm_sq(fam, Observable::projector(fam.state(2 % fam.basis_count(), 0)));
        EXPECT_NEAR(s.value, (d + 1) * (1 - 1 / d) * (1 - 1 / d), 1e-10);
        EXPECT_NEAR(s.bound, 2 * (1 - 1 / d), 1e-12);
        if (n >= 2) {
            EXPECT_GT(s.value, s.bound);
        }
    }
}

TEST(Observable, Basics) {
    const Observable g = Observable::ghz_fidelity(3);
    EXPECT_TRUE(g.is_projector());
    EXPECT_NEAR(g.trace(), 1.0, 1e-15);
    EXPECT_NEAR(g.quadratic_form(ghz_state(3)), 1.0, 1e-14);
    EXPECT_NEAR(g.quadratic_form(ghz_state(3, -1)), 0.0, 1e-14);
    EXPECT_EQ(g.as_projector().nonzeros.size(), 2u);
    EXPECT_NEAR(g.expectation(ghz_state(3).projector()), 1.0, 1e-14);
    MatrixXcd bad = MatrixXcd::Zero(2, 2);
    bad(0, 1) = 1.0;
    EXPECT_THROW(Observable::dense(1, bad), std::invalid_argument);
    EXPECT_THROW(Observable::dense(2, MatrixXcd::Identity(2, 2)), std::invalid_argument);
    const Observable d = Observable::dense(1, diag2(3, -1));
    EXPECT_FALSE(d.is_projector());
    EXPECT_NEAR(d.trace(), 2.0, 1e-15);
    const MatrixXcd o0 = traceless_part(diag2(3, -1));
    EXPECT_LT((o0 - diag2(2, -2)).norm(), 1e-15);
}

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

#include <cstdlib>
#include <random>

#include "mubshadow/mub.hpp"
#include "mubshadow/shadow.hpp"
#include "mubshadow/simulator.hpp"
#include "oracles.hpp"

using namespace mubshadow;

TEST(StateVector, RejectsBadInput) {
    EXPECT_THROW(StateVector(2, Eigen::VectorXcd::Ones(3)), std::invalid_argument);
    EXPECT_THROW(StateVector(1, Eigen::Vector2cd(1.0, 1.0)), std::invalid_argument);
    EXPECT_THROW(StateVector::normalized(1, Eigen::Vector2cd::Zero()), std::invalid_argument);
    EXPECT_NEAR(StateVector::normalized(1, Eigen::Vector2cd(3.0, 4.0))[1].real(), 0.8, 1e-15);
}

TEST(StateVector, QubitLimitFromEnvironment) {
    EXPECT_EQ(max_statevector_qubits(), 20u);
    ::setenv("SHADOW_MAX_QUBITS", "12", 1);
    EXPECT_EQ(max_statevector_qubits(), 12u);
    EXPECT_THROW(check_statevector_qubits(13), std::out_of_range);
    ::setenv("SHADOW_MAX_QUBITS", "zero", 1);
    EXPECT_THROW(max_statevector_qubits(), std::invalid_argument);
    ::unsetenv("SHADOW_MAX_QUBITS");
    EXPECT_NO_THROW(check_statevector_qubits(20));
    EXPECT_THROW(check_statevector_qubits(0), std::out_of_range);
}

TEST(Ghz, Examples) {
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_TRUE(equal_up_to_phase(ghz_state(1), StateVector(1, Eigen::Vector2cd(r, r)), 1e-15));
    const StateVector g2 = ghz_state(2);
    EXPECT_NEAR(g2[0].real(), r, 1e-15);
    EXPECT_NEAR(std::abs(g2[1]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g2[2]), 0.0, 1e-15);
    EXPECT_NEAR(g2[3].real(), r, 1e-15);
    EXPECT_NEAR(ghz_state(3, -1)[7].real(), -r, 1e-15);
    for (unsigned n = 1; n <= 12; ++n) {
        EXPECT_NEAR(ghz_state(n).amplitudes().norm(), 1.0, 1e-14);
    }
}

TEST(NoisyGhz, BranchSelection) {
    const StateModel clean = StateModel::noisy_ghz(3, 0.0);
    const StateModel flipped = StateModel::noisy_ghz(3, 1.0);
    for (std::uint64_t s = 0; s < 200; ++s) {
        SplitMix64 a(s);
        SplitMix64 b(s);
        EXPECT_TRUE(equal_up_to_phase(sample_branch(clean, a), ghz_state(3, +1), 1e-15));
        EXPECT_TRUE(equal_up_to_phase(sample_branch(flipped, b), ghz_state(3, -1), 1e-15));
    }
    EXPECT_THROW(StateModel::noisy_ghz(2, 1.5), std::invalid_argument);
    EXPECT_THROW(StateModel::noisy_ghz(2, -0.1), std::invalid_argument);
}

TEST(NoisyGhz, BranchFrequencyIsBinomial) {
    const StateModel model = StateModel::noisy_ghz(2, 0.5);
    SplitMix64 rng(77);
    std::uint64_t minus = 0;
    constexpr std::uint64_t kDraws = 100000;
    for (std::uint64_t i = 0; i < kDraws; ++i) {
        minus += model.sample_branch_index(rng) == 1 ? 1 : 0;
    }
    EXPECT_TRUE(oracle::within_binomial(minus, kDraws, 0.5));
}

TEST(NoisyGhz, AverageBranchProjectorConvergesToDensity) {
    for (unsigned n = 1; n <= 3; ++n) {
        for (double p : {0.1, 0.35, 0.8}) {
            const StateModel model = StateModel::noisy_ghz(n, p);
            const auto dim = Eigen::Index{1} << n;
            const Eigen::VectorXcd plus = ghz_state(n, +1).amplitudes();
            const Eigen::VectorXcd minus = ghz_state(n, -1).amplitudes();
            const Eigen::MatrixXcd rho_p = (1 - p) * plus * plus.adjoint() + p * minus * minus.adjoint();
            ASSERT_LT((model.density() - rho_p).norm(), 1e-14);

            SplitMix64 rng(1000 + n);
            Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(dim, dim);
            constexpr int kDraws = 100000;
            for (int i = 0; i < kDraws; ++i) {
                avg += sample_branch(model, rng).projector();
            }
            avg /= static_cast<double>(kDraws);
            EXPECT_LT(frobenius_distance(avg, rho_p), 0.02) << n << ' ' << p;
        }
    }
}

TEST(StateModel, Describe) {
    EXPECT_EQ(StateModel::ghz(3).describe(), "ghz");
    EXPECT_EQ(StateModel::maximally_mixed(2).describe(), "mixed");
    EXPECT_EQ(StateModel::pure(StateVector::basis(2, 1)).describe(), "pure");
    EXPECT_EQ(StateModel::noisy_ghz(2, 0.25).describe().rfind("noisy-ghz:", 0), 0u);
    const Eigen::MatrixXcd mixed = StateModel::maximally_mixed(3).density();
    EXPECT_LT((mixed - Eigen::MatrixXcd::Identity(8, 8) / 8.0).norm(), 1e-15);
}

TEST(Born, GhzInComputationalBasis) {
    const MubFamily fam = MubFamily::build(3);
    const auto probs = fam.probabilities(0, ghz_state(3));
    for (std::uint64_t b = 0; b < 8; ++b) {
        EXPECT_NEAR(probs[b], (b == 0 || b == 7) ? 0.5 : 0.0, 1e-15);
    }
    const MubFamily one = MubFamily::build(1);
    const auto zero_x = one.probabilities(1, StateVector::basis(1, 0));
    EXPECT_NEAR(zero_x[0], 0.5, 1e-15);
    EXPECT_NEAR(zero_x[1], 0.5, 1e-15);
}

TEST(Born, DenseProbabilitiesMatchMubFastPath) {
    std::mt19937_64 rng(4);
    const MubFamily fam = MubFamily::build(4);
    const StateVector psi(4, oracle::random_state(rng, 16));
    for (BasisId j = 0; j < fam.basis_count(); ++j) {
        const auto dense = born_probabilities(psi, [&](std::uint64_t b) { return fam.state(j, b); });
        const auto fast = fam.probabilities(j, psi);
        for (std::size_t b = 0; b < dense.size(); ++b) {
            ASSERT_NEAR(dense[b], fast[b], 1e-12);
        }
    }
}

TEST(Born, SampledFrequenciesWithinFiveSigma) {
    std::mt19937_64 rng(8);
    const MubFamily fam = MubFamily::build(3);
    const StateVector psi(3, oracle::random_state(rng, 8));
    for (BasisId j : {BasisId{0}, BasisId{3}, BasisId{8}}) {
        Eigen::MatrixXcd cols(8, 8);
        for (Eigen::Index b = 0; b < 8; ++b) {
            cols.col(b) = oracle::mub_vector(fam, j, static_cast<std::uint64_t>(b));
        }
        std::vector<double> exact(8);
        for (Eigen::Index b = 0; b < 8; ++b) {
            exact[static_cast<std::size_t>(b)] = std::norm(cols.col(b).dot(psi.amplitudes()));
        }
        std::vector<std::uint64_t> counts(8, 0);
        SplitMix64 sampler(j + 100);
        constexpr std::uint64_t kDraws = 100000;
        for (std::uint64_t i = 0; i < kDraws; ++i) {
            ++counts[born_sample(psi, cols, sampler).value()];
        }
        for (std::size_t b = 0; b < 8; ++b) {
            EXPECT_TRUE(oracle::within_binomial(counts[b], kDraws, exact[b])) << j << ' ' << b;
        }
    }
}

TEST(Born, SampleIndexNormalization) {
    SplitMix64 rng(1);
    const std::vector<double> almost = {0.25, 0.25, 0.5 + 5e-7};
    EXPECT_NO_THROW(sample_index(almost, rng));
    const std::vector<double> broken = {0.25, 0.25, 0.6};
    EXPECT_THROW(sample_index(broken, rng), std::runtime_error);
    const std::vector<double> certain = {0.0, 1.0, 0.0};
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(sample_index(certain, rng), 1u);
    }
}

TEST(Circuit, HadamardLayerMakesUniformSuperposition) {
    for (unsigned n = 1; n <= 6; ++n) {
        DiagonalCliffordCircuit c;
        c.n = n;
        c.p_powers.assign(n, 0);
        const StateVector out = apply_circuit(c, StateVector::basis(n, 0));
        for (std::uint64_t l = 0; l < out.dimension(); ++l) {
            ASSERT_NEAR(out[l].real(), std::pow(2.0, -0.5 * n), 1e-14);
            ASSERT_NEAR(out[l].imag(), 0.0, 1e-14);
        }
    }
}

TEST(Circuit, ApplyGatesMatchesDenseProductAndKeepsNorm) {
    std::mt19937_64 rng(21);
    for (unsigned n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Gate> gates;
            for (int g = 0; g < 12; ++g) {
                const unsigned kind = static_cast<unsigned>(rng() % 3);
                const unsigned a = static_cast<unsigned>(rng() % n);
                if (kind == 2 && n > 1) {
                    unsigned b = static_cast<unsigned>(rng() % n);
                    if (b == a) {
                        b = (a + 1) % n;
                    }
                    gates.push_back({GateKind::cz, std::min(a, b), std::max(a, b), 1});
                } else if (kind == 1) {
                    gates.push_back({GateKind::p, a, 0, static_cast<unsigned>(rng() % 4)});
                } else {
                    gates.push_back({GateKind::h, a, 0, 1});
                }
            }
            const auto dim = Eigen::Index{1} << n;
            const StateVector psi(n, oracle::random_state(rng, dim));
            const StateVector out = apply_gates(gates, psi);
            const Eigen::VectorXcd expect = oracle::circuit_unitary(n, gates) * psi.amplitudes();
            ASSERT_LT((out.amplitudes() - expect).norm(), 1e-12);
            ASSERT_NEAR(out.amplitudes().norm(), 1.0, 1e-12);
        }
    }
}

TEST(Acquire, ThreadCountDoesNotChangeRecords) {
    const MubEnsemble ensemble(4);
    const StateModel model = StateModel::noisy_ghz(4, 0.3);
    const ShadowSet one = acquire(model, ensemble, 3000, 42, 1);
    const ShadowSet eight = acquire(model, ensemble, 3000, 42, 8);
    EXPECT_EQ(one, eight);
    const ShadowSet other = acquire(model, ensemble, 3000, 43, 1);
    EXPECT_NE(one.records, other.records);
}

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

#include "mubshadow/simulator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mubshadow {

namespace {

constexpr cdouble kIPowers[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

StateVector apply_gates(std::span<const Gate> gates, const StateVector& s) {
    const unsigned n = s.qubits();
    Eigen::VectorXcd v = s.amplitudes();
    const auto dim = v.size();
    for (const auto& g : gates) {
        if (g.q0 >= n || (g.kind == GateKind::cz && (g.q1 >= n || g.q1 == g.q0))) {
            throw std::invalid_argument("apply_gates: qubit index out of range");
        }
        const Eigen::Index m0 = Eigen::Index{1} << (n - 1 - g.q0);
        switch (g.kind) {
            case GateKind::h:
                for (Eigen::Index l = 0; l < dim; ++l) {
                    if ((l & m0) == 0) {
                        const cdouble a = v[l];
                        const cdouble b = v[l | m0];
                        v[l] = (a + b) * M_SQRT1_2;
                        v[l | m0] = (a - b) * M_SQRT1_2;
                    }
                }
                break;
            case GateKind::p: {
                const cdouble phase = kIPowers[g.power % 4];
                for (Eigen::Index l = 0; l < dim; ++l) {
                    if ((l & m0) != 0) {
                        v[l] *= phase;
                    }
                }
                break;
            }
            case GateKind::cz: {
                const Eigen::Index both = m0 | (Eigen::Index{1} << (n - 1 - g.q1));
                for (Eigen::Index l = 0; l < dim; ++l) {
                    if ((l & both) == both) {
                        v[l] = -v[l];
                    }
                }
                break;
            }
        }
    }
    return {n, std::move(v)};
}

StateVector apply_circuit(const DiagonalCliffordCircuit& c, const StateVector& s) {
    if (c.n != s.qubits()) {
        throw std::invalid_argument("apply_circuit: circuit and state qubit counts differ");
    }
    const auto gates = c.preparation_gates();
    return apply_gates(gates, s);
}

StateModel StateModel::pure(StateVector s) {
    StateModel m;
    m.branches_ = {s};
    m.variant_ = Pure{std::move(s)};
    return m;
}

StateModel StateModel::ghz(unsigned n) {
    StateModel m;
    m.branches_ = {ghz_state(n, +1)};
    m.variant_ = Ghz{n};
    return m;
}

StateModel StateModel::noisy_ghz(unsigned n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("noisy_ghz: p must lie in [0, 1]");
    }
    StateModel m;
    m.branches_ = {ghz_state(n, +1), ghz_state(n, -1)};
    m.variant_ = NoisyGhz{n, p};
    return m;
}

StateModel StateModel::maximally_mixed(unsigned n) {
    check_statevector_qubits(n);
    if (n > 16) {
        throw std::out_of_range("maximally_mixed: branch table limited to 16 qubits");
    }
    StateModel m;
    m.branches_.reserve(std::size_t{1} << n);
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
        m.branches_.push_back(StateVector::basis(n, k));
    }
    m.variant_ = MaximallyMixed{n};
    return m;
}

unsigned StateModel::qubits() const { return branches_.front().qubits(); }

std::size_t StateModel::branch_count() const { return branches_.size(); }

const StateVector& StateModel::branch(std::size_t index) const { return branches_.at(index); }

double StateModel::branch_probability(std::size_t index) const {
    if (index >= branches_.size()) {
        throw std::out_of_range("branch index");
    }
    return std::visit(overloaded{[](const Pure&) { return 1.0; }, [](const Ghz&) { return 1.0; },
                                 [index](const NoisyGhz& g) { return index == 0 ? 1.0 - g.p : g.p; },
                                 [this](const MaximallyMixed&) {
                                     return 1.0 / static_cast<double>(branches_.size());
                                 }},
                      variant_);
}

std::size_t StateModel::sample_branch_index(SplitMix64& rng) const {
    return std::visit(overloaded{[](const Pure&) -> std::size_t { return 0; },
                                 [](const Ghz&) -> std::size_t { return 0; },
                                 [&rng](const NoisyGhz& g) -> std::size_t {
                                     // Strict comparison keeps p = 0 and p = 1 deterministic.
                                     return rng.uniform01() < g.p ? 1 : 0;
                                 },
                                 [&](const MaximallyMixed&) -> std::size_t {
                                     return static_cast<std::size_t>(rng.uniform_below(branches_.size()));
                                 }},
                      variant_);
}

DensityOp StateModel::density() const {
    const auto dim = static_cast<Eigen::Index>(branches_.front().dimension());
    DensityOp rho = DensityOp::Zero(dim, dim);
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        const double w = branch_probability(i);
        if (w != 0.0) {
            rho += w * branches_[i].projector();
        }
    }
    return rho;
}

std::string StateModel::describe() const {
    return std::visit(overloaded{[](const Pure&) -> std::string { return "pure"; },
                                 [](const Ghz&) -> std::string { return "ghz"; },
                                 [](const NoisyGhz& g) -> std::string {
                                     std::ostringstream out;
                                     out << "noisy-ghz:" << g.p;
                                     return out.str();
                                 },
                                 [](const MaximallyMixed&) -> std::string { return "mixed"; }},
                      variant_);
}

StateVector sample_branch(const StateModel& model, SplitMix64& rng) {
    return model.branch(model.sample_branch_index(rng));
}

std::vector<double> born_probabilities(const StateVector& psi, const BasisFn& basis) {
    std::vector<double> probs(psi.dimension());
    for (std::uint64_t b = 0; b < psi.dimension(); ++b) {
        probs[b] = std::norm(basis(b).inner(psi));
    }
    return probs;
}

std::vector<double> born_probabilities(const StateVector& psi, const Eigen::MatrixXcd& basis_columns) {
    if (basis_columns.rows() != static_cast<Eigen::Index>(psi.dimension()) ||
        basis_columns.cols() != basis_columns.rows()) {
        throw std::invalid_argument("born_probabilities: basis matrix has wrong shape");
    }
    const Eigen::VectorXcd c = basis_columns.adjoint() * psi.amplitudes();
    std::vector<double> probs(psi.dimension());
    for (std::uint64_t b = 0; b < psi.dimension(); ++b) {
        probs[b] = std::norm(c[static_cast<Eigen::Index>(b)]);
    }
    return probs;
}

std::uint64_t sample_index(std::span<const double> probabilities, SplitMix64& rng) {
    double total = 0.0;
    for (double p : probabilities) {
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-6) {
        throw std::runtime_error("born sampling: probability mass " + std::to_string(total) +
                                 " deviates from 1; basis is not orthonormal");
    }
    const double u = rng.uniform01() * total;
    double cumulative = 0.0;
    std::uint64_t last_nonzero = 0;
    for (std::uint64_t b = 0; b < probabilities.size(); ++b) {
        if (probabilities[b] > 0.0) {
            last_nonzero = b;
        }
        cumulative += probabilities[b];
        if (u < cumulative) {
            return b;
        }
    }
    // Rounding left u just above the final cumulative sum.
    return last_nonzero;
}

BitVector born_sample(const StateVector& psi, const BasisFn& basis, SplitMix64& rng) {
    const auto probs = born_probabilities(psi, basis);
    return {psi.qubits(), sample_index(probs, rng)};
}

BitVector born_sample(const StateVector& psi, const Eigen::MatrixXcd& basis_columns, SplitMix64& rng) {
    const auto probs = born_probabilities(psi, basis_columns);
    return {psi.qubits(), sample_index(probs, rng)};
}

}  // namespace mubshadow

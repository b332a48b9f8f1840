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

#ifndef MUBSHADOW_SIMULATOR_HPP
#define MUBSHADOW_SIMULATOR_HPP

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mubshadow/bits.hpp"
#include "mubshadow/mub.hpp"
#include "mubshadow/rng.hpp"
#include "mubshadow/statevector.hpp"

namespace mubshadow {

/// Applies time-ordered H / P^s / CZ gates.
StateVector apply_gates(std::span<const Gate> gates, const StateVector& s);

/// Applies V_j = CZ-layer * P-layer * H-layer, i.e. H first in time.
/// On |k> this yields the k-th state of the basis the circuit was emitted for.
StateVector apply_circuit(const DiagonalCliffordCircuit& c, const StateVector& s);

/// Source of the unknown state for an acquisition.
///
/// Mixed states are realized by drawing one pure branch per shot; the
/// average branch projector equals the modelled density operator.
class StateModel {
   public:
    struct Pure {
        StateVector state;
    };
    struct Ghz {
        unsigned n;
    };
    /// (1-p)|GHZ+><GHZ+| + p|GHZ-><GHZ-|
    struct NoisyGhz {
        unsigned n;
        double p;
    };
    /// I / 2^n, drawn as a uniformly random computational ket.
    struct MaximallyMixed {
        unsigned n;
    };

    static StateModel pure(StateVector s);
    static StateModel ghz(unsigned n);
    static StateModel noisy_ghz(unsigned n, double p);
    static StateModel maximally_mixed(unsigned n);

    unsigned qubits() const;
    std::size_t branch_count() const;
    const StateVector& branch(std::size_t index) const;
    double branch_probability(std::size_t index) const;
    std::size_t sample_branch_index(SplitMix64& rng) const;

    /// Exact density operator. Small n only.
    DensityOp density() const;

    /// Canonical text form, e.g. "ghz", "noisy-ghz:0.3", "mixed", "pure".
    std::string describe() const;

   private:
    std::variant<Pure, Ghz, NoisyGhz, MaximallyMixed> variant_;
    std::vector<StateVector> branches_;
};

StateVector sample_branch(const StateModel& model, SplitMix64& rng);

/// Orthonormal basis supplied as a map from outcome label b to |e_b>.
using BasisFn = std::function<StateVector(std::uint64_t)>;

/// |<e_b|psi>|^2 for every b, from dense inner products.
std::vector<double> born_probabilities(const StateVector& psi, const BasisFn& basis);
/// Same, with the basis states as the columns of a unitary.
std::vector<double> born_probabilities(const StateVector& psi, const Eigen::MatrixXcd& basis_columns);

/// Inverse-CDF draw over b = 0, 1, ... in lexicographic order. The
/// probabilities are rescaled by their sum if it is within 1e-6 of 1;
/// a larger deviation throws std::runtime_error.
std::uint64_t sample_index(std::span<const double> probabilities, SplitMix64& rng);

BitVector born_sample(const StateVector& psi, const BasisFn& basis, SplitMix64& rng);
BitVector born_sample(const StateVector& psi, const Eigen::MatrixXcd& basis_columns, SplitMix64& rng);

}  // namespace mubshadow

#endif

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

#include "mubshadow/ensemble.hpp"

#include <stdexcept>

namespace mubshadow {

std::string to_string(EnsembleTag tag) { return tag == EnsembleTag::mub ? "mub" : "clifford"; }

EnsembleTag parse_ensemble_tag(const std::string& s) {
    if (s == "mub") {
        return EnsembleTag::mub;
    }
    if (s == "clifford") {
        return EnsembleTag::clifford;
    }
    throw std::invalid_argument("unknown ensemble '" + s + "' (expected mub or clifford)");
}

double Ensemble::snapshot_overlap(std::uint64_t rotation, std::uint64_t b, const Observable& o) const {
    return o.quadratic_form(rotated_basis_state(rotation, b));
}

std::vector<double> MubEnsemble::outcome_probabilities(std::uint64_t rotation, const StateVector& psi) const {
    return family_->probabilities(static_cast<BasisId>(rotation), psi);
}

StateVector MubEnsemble::rotated_basis_state(std::uint64_t rotation, std::uint64_t b) const {
    return family_->state(static_cast<BasisId>(rotation), b);
}

double MubEnsemble::snapshot_overlap(std::uint64_t rotation, std::uint64_t b, const Observable& o) const {
    if (o.qubits() != qubits()) {
        throw std::invalid_argument("snapshot_overlap: observable and ensemble qubit counts differ");
    }
    if (rotation >= rotation_count()) {
        throw std::out_of_range("snapshot_overlap: basis id out of range");
    }
    if (!o.is_projector()) {
        return Ensemble::snapshot_overlap(rotation, b, o);
    }
    const auto j = static_cast<BasisId>(rotation);
    cdouble overlap{0.0, 0.0};
    for (const auto& [l, a] : o.as_projector().nonzeros) {
        overlap += std::conj(a) * family_->amplitude(j, b, l);
    }
    return std::norm(overlap);
}

CliffordEnsemble::CliffordEnsemble(unsigned n) : n_(n) {
    if (n < 1 || n > kMaxDenseCliffordQubits) {
        throw std::out_of_range("Clifford ensemble supports 1.." + std::to_string(kMaxDenseCliffordQubits) +
                                " qubits");
    }
}

CliffordElement CliffordEnsemble::element(std::uint64_t rotation) const {
    SplitMix64 rng(rotation);
    return sample_clifford(n_, rng);
}

std::vector<double> CliffordEnsemble::outcome_probabilities(std::uint64_t rotation, const StateVector& psi) const {
    return element(rotation).probabilities(psi);
}

StateVector CliffordEnsemble::rotated_basis_state(std::uint64_t rotation, std::uint64_t b) const {
    return element(rotation).rotated_basis_state(b);
}

std::unique_ptr<Ensemble> make_ensemble(EnsembleTag tag, unsigned n) {
    if (tag == EnsembleTag::mub) {
        return std::make_unique<MubEnsemble>(n);
    }
    return std::make_unique<CliffordEnsemble>(n);
}

}  // namespace mubshadow

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

#ifndef MUBSHADOW_ENSEMBLE_HPP
#define MUBSHADOW_ENSEMBLE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mubshadow/clifford.hpp"
#include "mubshadow/mub.hpp"
#include "mubshadow/observable.hpp"
#include "mubshadow/rng.hpp"

namespace mubshadow {

enum class EnsembleTag { mub, clifford };

std::string to_string(EnsembleTag tag);
EnsembleTag parse_ensemble_tag(const std::string& s);

/// Random-unitary ensemble used for the rotation before a computational
/// measurement. A rotation id identifies V (with U = V^dag the applied
/// rotation); basis state b of the rotation is V|b>.
class Ensemble {
   public:
    virtual ~Ensemble() = default;

    virtual EnsembleTag tag() const = 0;
    virtual unsigned qubits() const = 0;

    /// Draws a rotation id. Ids are self-contained: the same id always names
    /// the same unitary.
    virtual std::uint64_t sample_rotation(SplitMix64& rng) const = 0;
    /// Number of distinct ids, or 0 when ids are not a small enumerable set.
    virtual std::uint64_t rotation_count() const = 0;

    /// |<b|U|psi>|^2 for every b.
    virtual std::vector<double> outcome_probabilities(std::uint64_t rotation, const StateVector& psi) const = 0;
    /// V|b> = U^dag|b>.
    virtual StateVector rotated_basis_state(std::uint64_t rotation, std::uint64_t b) const = 0;
    /// <b|U O U^dag|b>, the only quantity a snapshot prediction needs.
    virtual double snapshot_overlap(std::uint64_t rotation, std::uint64_t b, const Observable& o) const;
};

/// Uniform choice among the 2^n + 1 bases of a MubFamily; the id is the basis id.
class MubEnsemble final : public Ensemble {
   public:
    explicit MubEnsemble(std::shared_ptr<const MubFamily> family) : family_(std::move(family)) {}
    explicit MubEnsemble(unsigned n) : family_(std::make_shared<const MubFamily>(MubFamily::build(n))) {}

    const MubFamily& family() const { return *family_; }

    EnsembleTag tag() const override { return EnsembleTag::mub; }
    unsigned qubits() const override { return family_->qubits(); }
    std::uint64_t sample_rotation(SplitMix64& rng) const override { return rng.uniform_below(rotation_count()); }
    std::uint64_t rotation_count() const override { return family_->basis_count(); }
    std::vector<double> outcome_probabilities(std::uint64_t rotation, const StateVector& psi) const override;
    StateVector rotated_basis_state(std::uint64_t rotation, std::uint64_t b) const override;
    /// Projectors use single-amplitude queries: O(nnz * n) with no 2^n buffer.
    double snapshot_overlap(std::uint64_t rotation, std::uint64_t b, const Observable& o) const override;

   private:
    std::shared_ptr<const MubFamily> family_;
};

/// Uniform random Cliffords. The id is the 64-bit seed from which the
/// element is regenerated, so records stay meaningful outside the run.
class CliffordEnsemble final : public Ensemble {
   public:
    explicit CliffordEnsemble(unsigned n);

    CliffordElement element(std::uint64_t rotation) const;

    EnsembleTag tag() const override { return EnsembleTag::clifford; }
    unsigned qubits() const override { return n_; }
    std::uint64_t sample_rotation(SplitMix64& rng) const override { return rng(); }
    std::uint64_t rotation_count() const override { return 0; }
    std::vector<double> outcome_probabilities(std::uint64_t rotation, const StateVector& psi) const override;
    StateVector rotated_basis_state(std::uint64_t rotation, std::uint64_t b) const override;

   private:
    unsigned n_;
};

std::unique_ptr<Ensemble> make_ensemble(EnsembleTag tag, unsigned n);

}  // namespace mubshadow

#endif

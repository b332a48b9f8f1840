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

#ifndef MUBSHADOW_OBSERVABLE_HPP
#define MUBSHADOW_OBSERVABLE_HPP

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "mubshadow/statevector.hpp"

namespace mubshadow {

/// Target observable: a rank-1 projector |phi><phi| or a small dense Hermitian matrix.
///
/// Projectors keep the list of nonzero amplitudes of phi so that overlaps
/// with computable basis states cost O(nnz) amplitude evaluations.
class Observable {
   public:
    struct Projector {
        StateVector phi;
        std::vector<std::pair<std::uint64_t, cdouble>> nonzeros;
    };
    struct Dense {
        Eigen::MatrixXcd matrix;
    };

    static Observable projector(StateVector phi);
    /// Throws std::invalid_argument unless Hermitian within 1e-9.
    static Observable dense(unsigned n, Eigen::MatrixXcd matrix);
    /// |GHZ><GHZ|, whose expectation is the fidelity with the GHZ state.
    static Observable ghz_fidelity(unsigned n);

    unsigned qubits() const { return n_; }
    double trace() const { return trace_; }
    bool is_projector() const { return std::holds_alternative<Projector>(variant_); }
    const Projector& as_projector() const { return std::get<Projector>(variant_); }

    /// Dense matrix form. Allocates 4^n entries.
    Eigen::MatrixXcd matrix() const;
    /// <v|O|v>
    double quadratic_form(const StateVector& v) const;
    /// tr(O rho)
    double expectation(const DensityOp& rho) const;

   private:
    unsigned n_ = 0;
    double trace_ = 0.0;
    std::variant<Projector, Dense> variant_;
};

/// O - tr(O)/2^n I
Eigen::MatrixXcd traceless_part(const Eigen::MatrixXcd& o);

}  // namespace mubshadow

#endif

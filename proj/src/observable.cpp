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

#include "mubshadow/observable.hpp"

#include <stdexcept>
#include <string>

namespace mubshadow {

Observable Observable::projector(StateVector phi) {
    Observable o;
    o.n_ = phi.qubits();
    o.trace_ = 1.0;
    Projector p;
    for (std::uint64_t l = 0; l < phi.dimension(); ++l) {
        if (phi[l] != cdouble{0.0, 0.0}) {
            p.nonzeros.emplace_back(l, phi[l]);
        }
    }
    p.phi = std::move(phi);
    o.variant_ = std::move(p);
    return o;
}

Observable Observable::dense(unsigned n, Eigen::MatrixXcd matrix) {
    const auto dim = Eigen::Index{1} << n;
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw std::invalid_argument("Observable::dense: expected a " + std::to_string(dim) + " x " +
                                    std::to_string(dim) + " matrix");
    }
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("Observable::dense: matrix is not Hermitian");
    }
    Observable o;
    o.n_ = n;
    o.trace_ = matrix.trace().real();
    o.variant_ = Dense{std::move(matrix)};
    return o;
}

Observable Observable::ghz_fidelity(unsigned n) { return projector(ghz_state(n)); }

Eigen::MatrixXcd Observable::matrix() const {
    if (const auto* p = std::get_if<Projector>(&variant_)) {
        return p->phi.projector();
    }
    return std::get<Dense>(variant_).matrix;
}

double Observable::quadratic_form(const StateVector& v) const {
    if (v.qubits() != n_) {
        throw std::invalid_argument("Observable: state has " + std::to_string(v.qubits()) +
                                    " qubits, observable has " + std::to_string(n_));
    }
    if (const auto* p = std::get_if<Projector>(&variant_)) {
        cdouble overlap{0.0, 0.0};
        for (const auto& [l, a] : p->nonzeros) {
            overlap += std::conj(a) * v[l];
        }
        return std::norm(overlap);
    }
    const auto& m = std::get<Dense>(variant_).matrix;
    return v.amplitudes().dot(m * v.amplitudes()).real();
}

double Observable::expectation(const DensityOp& rho) const {
    if (rho.rows() != (Eigen::Index{1} << n_)) {
        throw std::invalid_argument("Observable::expectation: dimension mismatch");
    }
    if (const auto* p = std::get_if<Projector>(&variant_)) {
        return p->phi.amplitudes().dot(rho * p->phi.amplitudes()).real();
    }
    return (std::get<Dense>(variant_).matrix * rho).trace().real();
}

Eigen::MatrixXcd traceless_part(const Eigen::MatrixXcd& o) {
    const auto dim = o.rows();
    return o - (o.trace() / static_cast<double>(dim)) * Eigen::MatrixXcd::Identity(dim, dim);
}

}  // namespace mubshadow

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

#include "mubshadow/channel.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>
#include <string>

#include "mubshadow/ensemble.hpp"
#include "mubshadow/shadow.hpp"

namespace mubshadow {

namespace {

constexpr unsigned kMaxEnumerationQubits = 6;

void check_square(const Eigen::MatrixXcd& a) {
    const auto dim = a.rows();
    if (a.cols() != dim || dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("channel: operand must be a square 2^n x 2^n matrix");
    }
}

void check_family(const MubFamily& fam, const Eigen::MatrixXcd& a) {
    if (fam.qubits() > kMaxEnumerationQubits) {
        throw std::out_of_range("exact enumeration limited to " + std::to_string(kMaxEnumerationQubits) + " qubits");
    }
    if (a.rows() != static_cast<Eigen::Index>(fam.dimension()) || a.cols() != a.rows()) {
        throw std::invalid_argument("operand dimension does not match the family");
    }
}

// Visits (j, b, |e_j^b>) for every basis state of the family.
template <class Visit>
void for_each_basis_state(const MubFamily& fam, Visit visit) {
    for (BasisId j = 0; j < fam.basis_count(); ++j) {
        for (std::uint64_t b = 0; b < fam.dimension(); ++b) {
            visit(j, b, fam.state(j, b));
        }
    }
}

}  // namespace

DensityOp inverse_channel(const DensityOp& a) {
    check_square(a);
    const auto dim = a.rows();
    return static_cast<double>(dim + 1) * a - a.trace() * DensityOp::Identity(dim, dim);
}

DensityOp forward_channel(const DensityOp& a) {
    check_square(a);
    const auto dim = a.rows();
    return (a + a.trace() * DensityOp::Identity(dim, dim)) / static_cast<double>(dim + 1);
}

DensityOp exact_channel_enum(const MubFamily& fam, const DensityOp& rho) {
    check_family(fam, rho);
    const auto dim = rho.rows();
    DensityOp out = DensityOp::Zero(dim, dim);
    for_each_basis_state(fam, [&](BasisId, std::uint64_t, const StateVector& e) {
        const Eigen::VectorXcd& v = e.amplitudes();
        const cdouble weight = v.dot(rho * v);  // tr(rho |e><e|)
        out += weight * (v * v.adjoint());
    });
    return out / static_cast<double>(dim + 1);
}

namespace {

struct Moments {
    double first = 0.0;
    double second = 0.0;
};

Moments exact_moments(const MubFamily& fam, const DensityOp& rho, const Observable& o) {
    check_family(fam, rho);
    const MubEnsemble ensemble(std::make_shared<const MubFamily>(fam));
    const double weight_scale = 1.0 / static_cast<double>(fam.basis_count());
    Moments m;
    for_each_basis_state(fam, [&](BasisId j, std::uint64_t b, const StateVector& e) {
        const double pr = e.amplitudes().dot(rho * e.amplitudes()).real() * weight_scale;
        const SnapshotRecord rec{EnsembleTag::mub, j, BitVector(fam.qubits(), b)};
        const double x = snapshot_expectation(rec, o, ensemble);
        m.first += pr * x;
        m.second += pr * x * x;
    });
    return m;
}

}  // namespace

double exact_snapshot_mean(const MubFamily& fam, const DensityOp& rho, const Observable& o) {
    return exact_moments(fam, rho, o).first;
}

double exact_single_shot_variance(const MubFamily& fam, const DensityOp& rho, const Observable& o) {
    const Moments m = exact_moments(fam, rho, o);
    return m.second - m.first * m.first;
}

ShadowNorm shadow_norm_sq(const MubFamily& fam, const Eigen::MatrixXcd& o) {
    check_family(fam, o);
    const auto dim = o.rows();
    const Eigen::MatrixXcd o0 = traceless_part(o);
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
    for_each_basis_state(fam, [&](BasisId, std::uint64_t, const StateVector& e) {
        const Eigen::VectorXcd& v = e.amplitudes();
        const double t = v.dot(o0 * v).real();
        s += (t * t) * (v * v.adjoint());
    });
    s *= static_cast<double>(dim + 1);
    // S is Hermitian PSD up to rounding; symmetrize before the solver.
    const Eigen::MatrixXcd herm = 0.5 * (s + s.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    ShadowNorm out;
    out.value = solver.eigenvalues().maxCoeff();
    out.bound = 2.0 * (o0 * o0).trace().real();
    return out;
}

double clifford_variance_bound(const Eigen::MatrixXcd& o) {
    const Eigen::MatrixXcd o0 = traceless_part(o);
    return 3.0 * (o0 * o0).trace().real();
}

}  // namespace mubshadow

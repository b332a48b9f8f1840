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

#include "mubshadow/statevector.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mubshadow {

unsigned max_statevector_qubits() {
    constexpr unsigned kDefault = 20;
    const char* env = std::getenv("SHADOW_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return kDefault;
    }
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 30) {
        throw std::invalid_argument("SHADOW_MAX_QUBITS must be an integer in [1, 30]");
    }
    return static_cast<unsigned>(v);
}

void check_statevector_qubits(unsigned n) {
    const unsigned limit = max_statevector_qubits();
    if (n < 1 || n > limit) {
        throw std::out_of_range("qubit count " + std::to_string(n) + " outside [1, " + std::to_string(limit) +
                                "]");
    }
}

StateVector::StateVector(unsigned n, Eigen::VectorXcd amps) : n_(n), amps_(std::move(amps)) {
    if (n > 30 || amps_.size() != (Eigen::Index{1} << n)) {
        throw std::invalid_argument("StateVector: expected 2^" + std::to_string(n) + " amplitudes");
    }
    const double norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-9) {
        throw std::invalid_argument("StateVector: squared norm " + std::to_string(norm2) + " is not 1");
    }
}

StateVector StateVector::normalized(unsigned n, Eigen::VectorXcd amps) {
    const double norm = amps.norm();
    if (!(norm > 0.0)) {
        throw std::invalid_argument("StateVector: zero vector cannot be normalized");
    }
    amps /= norm;
    return {n, std::move(amps)};
}

StateVector StateVector::basis(unsigned n, std::uint64_t k) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    if (k >= static_cast<std::uint64_t>(amps.size())) {
        throw std::out_of_range("StateVector::basis: index out of range");
    }
    amps[static_cast<Eigen::Index>(k)] = 1.0;
    return {n, std::move(amps)};
}

StateVector ghz_state(unsigned n, int sign) {
    check_statevector_qubits(n);
    const auto dim = Eigen::Index{1} << n;
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    amps[0] = M_SQRT1_2;
    amps[dim - 1] += (sign >= 0 ? 1.0 : -1.0) * M_SQRT1_2;
    return {n, std::move(amps)};
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.dimension() != b.dimension()) {
        return false;
    }
    const cdouble overlap = b.inner(a);
    if (std::abs(overlap) < 1e-12) {
        return false;
    }
    const cdouble phase = overlap / std::abs(overlap);
    return ((a.amplitudes() - phase * b.amplitudes()).cwiseAbs().maxCoeff()) <= tol;
}

double frobenius_distance(const DensityOp& a, const DensityOp& b) { return (a - b).norm(); }

}  // namespace mubshadow

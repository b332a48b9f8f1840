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

#ifndef MUBSHADOW_STATEVECTOR_HPP
#define MUBSHADOW_STATEVECTOR_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace mubshadow {

using cdouble = std::complex<double>;
/// Dense 2^n x 2^n operator. Only used by oracles and small-n paths.
using DensityOp = Eigen::MatrixXcd;

/// Largest n for which 2^n amplitudes may be allocated. Defaults to 20 and
/// can be overridden with the SHADOW_MAX_QUBITS environment variable.
unsigned max_statevector_qubits();
/// Throws std::out_of_range unless 1 <= n <= max_statevector_qubits().
void check_statevector_qubits(unsigned n);

/// Unit-norm vector of 2^n complex amplitudes, index = ket label.
class StateVector {
   public:
    StateVector() = default;
    /// Throws if the length is not 2^n or the norm deviates from 1 by more than 1e-9.
    StateVector(unsigned n, Eigen::VectorXcd amps);

    /// Rescales to unit norm; throws on a zero vector.
    static StateVector normalized(unsigned n, Eigen::VectorXcd amps);
    static StateVector basis(unsigned n, std::uint64_t k);

    unsigned qubits() const { return n_; }
    std::uint64_t dimension() const { return static_cast<std::uint64_t>(amps_.size()); }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    cdouble operator[](std::uint64_t l) const { return amps_[static_cast<Eigen::Index>(l)]; }

    /// <this|other>
    cdouble inner(const StateVector& other) const { return amps_.dot(other.amps_); }
    DensityOp projector() const { return amps_ * amps_.adjoint(); }

   private:
    unsigned n_ = 0;
    Eigen::VectorXcd amps_;
};

/// (|0...0> + sign |1...1>)/sqrt(2).
StateVector ghz_state(unsigned n, int sign = +1);

/// True if a = e^{i theta} b for some theta, entrywise within tol.
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol);

double frobenius_distance(const DensityOp& a, const DensityOp& b);

}  // namespace mubshadow

#endif

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

#ifndef MUBSHADOW_CLIFFORD_HPP
#define MUBSHADOW_CLIFFORD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mubshadow/bits.hpp"
#include "mubshadow/rng.hpp"
#include "mubshadow/statevector.hpp"

namespace mubshadow {

inline constexpr unsigned kMaxDenseCliffordQubits = 6;

/// Hermitian Pauli operator (-1)^sign * prod_q i^{x_q z_q} X_q^{x_q} Z_q^{z_q}.
/// Qubit q sits at bit n - 1 - q of `x` and `z`, matching ket labels.
struct PauliRow {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    bool sign = false;
    bool operator==(const PauliRow&) const = default;
};

/// Binary symplectic form <a, b> = x_a . z_b + z_a . x_b (mod 2).
inline unsigned symplectic_product(const PauliRow& a, const PauliRow& b) {
    return parity((a.x & b.z) ^ (a.z & b.x));
}

/// Dense matrix of the (unsigned) Pauli with the given x/z masks.
Eigen::MatrixXcd pauli_matrix(unsigned n, std::uint64_t x, std::uint64_t z);

/// An n-qubit Clifford unitary modulo global phase.
///
/// The tableau stores the images U X_q U^dag (rows 0..n-1) and U Z_q U^dag
/// (rows n..2n-1) with their sign bits. Elements with n <= 6 also carry the
/// dense unitary.
class CliffordElement {
   public:
    CliffordElement(unsigned n, std::vector<PauliRow> tableau, std::optional<Eigen::MatrixXcd> dense);

    static CliffordElement identity(unsigned n);
    /// Reads the tableau off a dense Clifford unitary. Throws if U is not Clifford.
    static CliffordElement from_unitary(unsigned n, const Eigen::MatrixXcd& u);

    unsigned qubits() const { return n_; }
    const std::vector<PauliRow>& tableau() const { return rows_; }
    /// 2n x 2n symplectic part; row r is the x|z image of generator r.
    BitMatrix symplectic_matrix() const;
    /// Preserves the symplectic form.
    bool is_symplectic() const;

    bool has_dense() const { return dense_.has_value(); }
    /// Throws std::out_of_range if the dense path is unavailable.
    const Eigen::MatrixXcd& unitary() const;

    /// U^dag |b>, the snapshot state for outcome b.
    StateVector rotated_basis_state(const BitVector& b) const;
    StateVector rotated_basis_state(std::uint64_t b) const;
    /// |<b| U |psi>|^2 for every b.
    std::vector<double> probabilities(const StateVector& psi) const;

    /// Equality modulo global phase.
    bool operator==(const CliffordElement& other) const { return n_ == other.n_ && rows_ == other.rows_; }

   private:
    unsigned n_;
    std::vector<PauliRow> rows_;
    std::optional<Eigen::MatrixXcd> dense_;
};

/// Exactly uniform random Clifford modulo phase.
///
/// Draws a uniform symplectic basis pair by pair, realizes it as a product of
/// symplectic transvections (each the Clifford (I + iP)/sqrt(2)), and
/// multiplies by a uniform random Pauli to randomize the signs.
CliffordElement sample_clifford(unsigned n, SplitMix64& rng);

/// All 24 single-qubit Cliffords modulo phase, generated from H and S.
std::vector<CliffordElement> enumerate_single_qubit_cliffords();

/// |C_n / U(1)| = 2^{n^2 + 2n} prod_{j=1}^n (4^j - 1), as a double.
double clifford_group_order(unsigned n);

}  // namespace mubshadow

#endif

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

#ifndef MUBSHADOW_MUB_HPP
#define MUBSHADOW_MUB_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mubshadow/bits.hpp"
#include "mubshadow/galois.hpp"
#include "mubshadow/statevector.hpp"

namespace mubshadow {

/// Identifier of one of the 2^n + 1 bases. 0 is the computational basis;
/// id j >= 1 uses matrix mats[j - 1].
using BasisId = std::uint32_t;

enum class GateKind { h, p, cz };

/// One gate of a diagonal-Clifford circuit. For `p`, `power` is the exponent
/// of the phase gate P = diag(1, i).
struct Gate {
    GateKind kind;
    unsigned q0 = 0;
    unsigned q1 = 0;
    unsigned power = 1;
    bool operator==(const Gate&) const = default;
};

/// Circuit for a non-computational basis: V_j = CZ-layer * P-layer * H-layer.
///
/// V_j|k> is the k-th state of basis j. The measurement rotation U_j = V_j^dag
/// is, in time order, CZ then P^(4-s) then H, the -CZ-P-H- shape.
struct DiagonalCliffordCircuit {
    unsigned n = 0;
    std::vector<std::pair<unsigned, unsigned>> cz_pairs;  // a < b
    std::vector<unsigned> p_powers;                       // per qubit, mod 4
    bool followed_by_hadamard_layer = true;

    std::size_t cz_count() const { return cz_pairs.size(); }

    /// Time-ordered gates preparing V_j|k> from |k>: H, P^s, CZ.
    std::vector<Gate> preparation_gates() const;
    /// Time-ordered gates of U_j = V_j^dag applied before a computational
    /// measurement: CZ, P^(4-s), H.
    std::vector<Gate> measurement_gates() const;
};

/// Plain-text gate list: one `CZ a b`, `P a s` or `H a` per line.
std::string to_gate_list(const std::vector<Gate>& gates);
/// OpenQASM 2.0 program with a final measurement of every qubit.
std::string to_qasm(unsigned n, const std::vector<Gate>& gates);

/// Complete set of 2^n + 1 mutually unbiased bases for n qubits.
///
/// Basis j >= 1 holds the states
///   |e_j^k> = 2^{-n/2} sum_l (-1)^{k.l} i^{q(l)} |l>,
///   q(l) = sum_a A_aa l_a + 2 sum_{a<b} A_ab l_a l_b  (mod 4),
/// with A = mats[j - 1] the multiplication matrix of field element j - 1 in
/// a self-dual basis. Differences of distinct matrices are invertible, which
/// is what makes the bases mutually unbiased.
class MubFamily {
   public:
    static MubFamily build(unsigned n);

    unsigned qubits() const { return n_; }
    std::uint64_t dimension() const { return std::uint64_t{1} << n_; }
    BasisId basis_count() const { return static_cast<BasisId>(dimension() + 1); }

    IrreduciblePoly modulus() const { return poly_; }
    const std::vector<FieldElement>& field_basis() const { return field_basis_; }
    const std::vector<BitMatrix>& matrices() const { return mats_; }
    /// Matrix of basis j >= 1.
    const BitMatrix& matrix(BasisId j) const;

    /// q(l) mod 4 for basis j >= 1. O(n) word operations.
    unsigned phase_exponent(BasisId j, std::uint64_t l) const;

    /// <l | e_j^k>. O(n) word operations and no allocation.
    std::complex<double> amplitude(BasisId j, std::uint64_t k, std::uint64_t l) const;
    std::complex<double> amplitude(BasisId j, const BitVector& k, const BitVector& l) const {
        return amplitude(j, k.value(), l.value());
    }

    StateVector state(BasisId j, std::uint64_t k) const;
    StateVector state(BasisId j, const BitVector& k) const { return state(j, k.value()); }

    /// Amplitudes <e_j^b|psi> for every b, in O(2^n n) via a Walsh-Hadamard transform.
    std::vector<std::complex<double>> coefficients(BasisId j, const StateVector& psi) const;
    /// Born probabilities |<e_j^b|psi>|^2 for every b.
    std::vector<double> probabilities(BasisId j, const StateVector& psi) const;

    /// Throws std::invalid_argument for j == 0, which has no circuit.
    DiagonalCliffordCircuit circuit(BasisId j) const;

    /// Replace one matrix. Only for negative-control testing of verify_unbiased.
    MubFamily with_matrix(BasisId j, BitMatrix m) const;

   private:
    unsigned n_ = 0;
    IrreduciblePoly poly_;
    std::vector<FieldElement> field_basis_;
    std::vector<BitMatrix> mats_;

    void check_basis(BasisId j) const;
};

struct UnbiasednessReport {
    double max_cross_deviation = 0.0;   // max | |<e|f>|^2 - 2^-n | over distinct bases
    double max_orthonormality_error = 0.0;
    BasisId worst_j = 0;
    BasisId worst_j2 = 0;
    bool passed = false;
};

/// Dense check of every cross-basis overlap and every within-basis Gram matrix.
UnbiasednessReport verify_unbiased(const MubFamily& fam, double tol);

struct CzStatistics {
    std::vector<std::size_t> per_circuit;  // index j - 1
    std::size_t total = 0;
    std::size_t max = 0;
    double mean = 0.0;
};

CzStatistics cz_statistics(const MubFamily& fam);

}  // namespace mubshadow

#endif

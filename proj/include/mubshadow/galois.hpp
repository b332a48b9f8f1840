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

#ifndef MUBSHADOW_GALOIS_HPP
#define MUBSHADOW_GALOIS_HPP

#include <cstdint>
#include <vector>

#include "mubshadow/bits.hpp"

namespace mubshadow {

inline constexpr unsigned kMaxFieldDegree = 16;

/// Element of GF(2^n) in polynomial representation: bit i is the coefficient of x^i.
struct FieldElement {
    std::uint32_t coeffs = 0;
    bool operator==(const FieldElement&) const = default;
};

/// Polynomial over GF(2); bit i is the coefficient of x^i.
struct IrreduciblePoly {
    std::uint32_t coeffs = 0;
    unsigned degree() const;
    bool operator==(const IrreduciblePoly&) const = default;
};

/// Exhaustive trial division by every polynomial of degree <= deg/2.
bool is_irreducible(IrreduciblePoly p);

/// Built-in irreducible polynomial for degree n in [1, 16].
IrreduciblePoly default_irreducible(unsigned n);

/// Carry-less multiply followed by reduction mod p.
FieldElement gf2_mul(FieldElement a, FieldElement b, IrreduciblePoly p);

/// Absolute trace a + a^2 + a^4 + ... + a^(2^(n-1)), as a bit.
unsigned field_trace(FieldElement a, IrreduciblePoly p);

/// Deterministic self-dual basis: Tr(b_i b_j) = delta_ij.
///
/// Greedy over elements in increasing integer order. A candidate is accepted
/// only if the trace form stays non-alternating on the remaining orthogonal
/// complement, which guarantees the search never dead-ends.
std::vector<FieldElement> self_dual_basis(IrreduciblePoly p);

/// Matrix of x -> a*x in a self-dual basis; entry (i, j) = Tr(b_i a b_j).
BitMatrix multiplication_matrix(FieldElement a, const std::vector<FieldElement>& basis, IrreduciblePoly p);

/// GF(2^n) with a fixed modulus. Immutable after construction.
class GaloisField {
   public:
    explicit GaloisField(IrreduciblePoly p);
    /// Field with the built-in modulus for degree n.
    explicit GaloisField(unsigned n) : GaloisField(default_irreducible(n)) {}

    unsigned degree() const { return n_; }
    IrreduciblePoly modulus() const { return poly_; }
    std::uint32_t order() const { return std::uint32_t{1} << n_; }

    FieldElement mul(FieldElement a, FieldElement b) const { return gf2_mul(a, b, poly_); }
    unsigned trace(FieldElement a) const { return parity(a.coeffs & trace_mask_); }
    FieldElement pow(FieldElement a, std::uint64_t e) const;

   private:
    IrreduciblePoly poly_;
    unsigned n_;
    // Bit i holds Tr(x^i), so trace is a masked parity.
    std::uint32_t trace_mask_ = 0;
};

}  // namespace mubshadow

#endif

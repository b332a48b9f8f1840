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

#ifndef MUBSHADOW_BITS_HPP
#define MUBSHADOW_BITS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mubshadow {

inline constexpr unsigned kMaxBits = 64;

inline constexpr std::uint64_t low_mask(unsigned n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline constexpr unsigned parity(std::uint64_t w) { return static_cast<unsigned>(std::popcount(w) & 1); }

/// An n-bit label. Qubit 0 is the most significant bit, so `value()` equals
/// the computational-basis index of the ket |b_0 b_1 ... b_{n-1}>.
class BitVector {
   public:
    BitVector() = default;
    BitVector(unsigned n, std::uint64_t value);

    static BitVector from_string(std::string_view bits);

    unsigned size() const { return n_; }
    std::uint64_t value() const { return value_; }

    /// Bit of qubit `q` (0 = most significant).
    unsigned operator[](unsigned q) const { return static_cast<unsigned>((value_ >> (n_ - 1 - q)) & 1); }
    void set(unsigned q, bool bit);

    /// GF(2) inner product.
    unsigned dot(const BitVector& other) const { return parity(value_ & other.value_); }

    BitVector operator^(const BitVector& other) const { return {n_, value_ ^ other.value_}; }
    bool operator==(const BitVector&) const = default;

    /// Most-significant qubit first, e.g. "011".
    std::string str() const;

   private:
    unsigned n_ = 0;
    std::uint64_t value_ = 0;
};

/// Square n x n matrix over GF(2), rows packed one per machine word.
///
/// Row `r` stores column `c` at bit position `n - 1 - c`, the same ordering
/// BitVector uses, so `row(r) & v.value()` gives the products for row r.
class BitMatrix {
   public:
    BitMatrix() = default;
    explicit BitMatrix(unsigned n);

    static BitMatrix identity(unsigned n);

    unsigned size() const { return n_; }
    bool get(unsigned r, unsigned c) const { return ((rows_[r] >> (n_ - 1 - c)) & 1) != 0; }
    void set(unsigned r, unsigned c, bool bit);
    std::uint64_t row(unsigned r) const { return rows_[r]; }
    void set_row(unsigned r, std::uint64_t word) { rows_[r] = word & low_mask(n_); }

    BitMatrix operator^(const BitMatrix& other) const;
    BitMatrix& operator^=(const BitMatrix& other);
    BitMatrix operator*(const BitMatrix& other) const;
    BitVector operator*(const BitVector& v) const;
    bool operator==(const BitMatrix&) const = default;

    BitMatrix transposed() const;
    bool is_symmetric() const;
    bool is_zero() const;
    unsigned rank() const;
    bool invertible() const { return rank() == n_; }

    /// Number of ones strictly above the diagonal.
    unsigned upper_popcount() const;

   private:
    unsigned n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Rank of a set of packed GF(2) vectors (any width up to 64 bits).
unsigned gf2_rank(std::vector<std::uint64_t> vectors);

}  // namespace mubshadow

#endif

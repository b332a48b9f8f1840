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

#include "mubshadow/bits.hpp"

#include <stdexcept>

namespace mubshadow {

BitVector::BitVector(unsigned n, std::uint64_t value) : n_(n), value_(value) {
    if (n > kMaxBits) {
        throw std::invalid_argument("BitVector: too many bits");
    }
    if ((value & ~low_mask(n)) != 0) {
        throw std::out_of_range("BitVector: value " + std::to_string(value) + " exceeds " +
                                std::to_string(n) + " bits");
    }
}

BitVector BitVector::from_string(std::string_view bits) {
    if (bits.empty() || bits.size() > kMaxBits) {
        throw std::invalid_argument("BitVector: bitstring must hold 1 to 64 bits");
    }
    std::uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitVector: invalid bitstring '" + std::string(bits) + "'");
        }
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return {static_cast<unsigned>(bits.size()), v};
}

void BitVector::set(unsigned q, bool bit) {
    const std::uint64_t m = std::uint64_t{1} << (n_ - 1 - q);
    value_ = bit ? (value_ | m) : (value_ & ~m);
}

std::string BitVector::str() const {
    std::string s(n_, '0');
    for (unsigned q = 0; q < n_; ++q) {
        s[q] = (*this)[q] ? '1' : '0';
    }
    return s;
}

BitMatrix::BitMatrix(unsigned n) : n_(n), rows_(n, 0) {
    if (n > kMaxBits) {
        throw std::invalid_argument("BitMatrix: dimension exceeds word size");
    }
}

BitMatrix BitMatrix::identity(unsigned n) {
    BitMatrix m(n);
    for (unsigned i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

void BitMatrix::set(unsigned r, unsigned c, bool bit) {
    const std::uint64_t m = std::uint64_t{1} << (n_ - 1 - c);
    rows_[r] = bit ? (rows_[r] | m) : (rows_[r] & ~m);
}

BitMatrix BitMatrix::operator^(const BitMatrix& other) const {
    BitMatrix out = *this;
    out ^= other;
    return out;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("BitMatrix: dimension mismatch");
    }
    for (unsigned r = 0; r < n_; ++r) {
        rows_[r] ^= other.rows_[r];
    }
    return *this;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("BitMatrix: dimension mismatch");
    }
    BitMatrix out(n_);
    for (unsigned r = 0; r < n_; ++r) {
        std::uint64_t acc = 0;
        for (unsigned k = 0; k < n_; ++k) {
            if (get(r, k)) {
                acc ^= other.rows_[k];
            }
        }
        out.rows_[r] = acc;
    }
    return out;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
    if (v.size() != n_) {
        throw std::invalid_argument("BitMatrix: vector length mismatch");
    }
    std::uint64_t out = 0;
    for (unsigned r = 0; r < n_; ++r) {
        out = (out << 1) | parity(rows_[r] & v.value());
    }
    return {n_, out};
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(n_);
    for (unsigned r = 0; r < n_; ++r) {
        for (unsigned c = 0; c < n_; ++c) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

bool BitMatrix::is_symmetric() const { return transposed() == *this; }

bool BitMatrix::is_zero() const {
    for (auto w : rows_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

unsigned BitMatrix::rank() const { return gf2_rank(rows_); }

unsigned BitMatrix::upper_popcount() const {
    unsigned count = 0;
    for (unsigned r = 0; r < n_; ++r) {
        // Columns c > r live in the low n-1-r bits.
        count += static_cast<unsigned>(std::popcount(rows_[r] & low_mask(n_ - 1 - r)));
    }
    return count;
}

unsigned gf2_rank(std::vector<std::uint64_t> vectors) {
    unsigned rank = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const std::uint64_t pivot = vectors[i];
        if (pivot == 0) {
            continue;
        }
        ++rank;
        const std::uint64_t lead = std::uint64_t{1} << (63 - std::countl_zero(pivot));
        for (std::size_t k = i + 1; k < vectors.size(); ++k) {
            if ((vectors[k] & lead) != 0) {
                vectors[k] ^= pivot;
            }
        }
    }
    return rank;
}

}  // namespace mubshadow

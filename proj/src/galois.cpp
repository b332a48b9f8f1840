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

#include "mubshadow/galois.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace mubshadow {

namespace {

// x+1, x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, ..., x^16+x^5+x^3+x+1
constexpr std::array<std::uint32_t, kMaxFieldDegree + 1> kIrreducibleTable = {
    0x0,    0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,    0x11B,
    0x211,  0x409,  0x805,  0x1009, 0x201B, 0x4021, 0x8003, 0x1002B,
};

unsigned poly_degree(std::uint64_t p) { return p == 0 ? 0 : 63u - static_cast<unsigned>(std::countl_zero(p)); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    const unsigned dm = poly_degree(m);
    while (a != 0 && poly_degree(a) >= dm) {
        a ^= m << (poly_degree(a) - dm);
    }
    return a;
}

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
    std::uint64_t out = 0;
    std::uint64_t aa = a;
    while (b != 0) {
        if ((b & 1) != 0) {
            out ^= aa;
        }
        aa <<= 1;
        b >>= 1;
    }
    return out;
}

}  // namespace

unsigned IrreduciblePoly::degree() const { return poly_degree(coeffs); }

bool is_irreducible(IrreduciblePoly p) {
    const unsigned d = p.degree();
    if (p.coeffs == 0 || d == 0) {
        return false;
    }
    for (std::uint64_t q = 2; poly_degree(q) <= d / 2; ++q) {
        if (poly_mod(p.coeffs, q) == 0) {
            return false;
        }
    }
    return true;
}

IrreduciblePoly default_irreducible(unsigned n) {
    if (n < 1 || n > kMaxFieldDegree) {
        throw std::out_of_range("field degree must be in [1, 16], got " + std::to_string(n));
    }
    return {kIrreducibleTable[n]};
}

FieldElement gf2_mul(FieldElement a, FieldElement b, IrreduciblePoly p) {
    return {static_cast<std::uint32_t>(poly_mod(clmul(a.coeffs, b.coeffs), p.coeffs))};
}

unsigned field_trace(FieldElement a, IrreduciblePoly p) {
    const unsigned n = p.degree();
    FieldElement power = a;
    std::uint32_t sum = a.coeffs;
    for (unsigned i = 1; i < n; ++i) {
        power = gf2_mul(power, power, p);
        sum ^= power.coeffs;
    }
    if (sum > 1) {
        throw std::logic_error("field_trace: result outside GF(2); modulus is not irreducible");
    }
    return sum;
}

std::vector<FieldElement> self_dual_basis(IrreduciblePoly p) {
    const unsigned n = p.degree();
    const std::uint32_t order = std::uint32_t{1} << n;

    std::uint32_t trace_mask = 0;
    std::vector<FieldElement> monomials(n);
    for (unsigned i = 0; i < n; ++i) {
        monomials[i] = {static_cast<std::uint32_t>(poly_mod(std::uint64_t{1} << i, p.coeffs))};
        trace_mask |= field_trace(monomials[i], p) << i;
    }
    // Trace-form functional of a: bit i = Tr(a x^i).
    auto functional = [&](FieldElement a) {
        std::uint32_t g = 0;
        for (unsigned i = 0; i < n; ++i) {
            g |= field_trace(gf2_mul(a, monomials[i], p), p) << i;
        }
        return g;
    };
    auto trace_of = [&](std::uint32_t a) { return parity(a & trace_mask); };

    std::vector<FieldElement> basis;
    std::vector<std::uint64_t> functionals;
    for (unsigned k = 0; k < n; ++k) {
        bool found = false;
        for (std::uint32_t a = 1; a < order && !found; ++a) {
            if (trace_of(a) != 1) {
                continue;
            }
            bool orthogonal = true;
            for (auto g : functionals) {
                if (parity(g & a) != 0) {
                    orthogonal = false;
                    break;
                }
            }
            if (!orthogonal) {
                continue;
            }
            const std::uint32_t ga = functional({a});
            auto constraints = functionals;
            constraints.push_back(ga);
            if (k + 1 < n) {
                const unsigned r = gf2_rank(constraints);
                auto with_trace = constraints;
                with_trace.push_back(trace_mask);
                if (gf2_rank(with_trace) == r) {
                    continue;  // complement would be alternating
                }
            }
            basis.push_back({a});
            functionals = std::move(constraints);
            found = true;
        }
        if (!found) {
            throw std::runtime_error("self_dual_basis: search exhausted at step " + std::to_string(k) +
                                     " for modulus " + std::to_string(p.coeffs));
        }
    }
    return basis;
}

BitMatrix multiplication_matrix(FieldElement a, const std::vector<FieldElement>& basis, IrreduciblePoly p) {
    const auto n = static_cast<unsigned>(basis.size());
    BitMatrix m(n);
    for (unsigned i = 0; i < n; ++i) {
        const FieldElement left = gf2_mul(basis[i], a, p);
        for (unsigned j = i; j < n; ++j) {
            const bool bit = field_trace(gf2_mul(left, basis[j], p), p) != 0;
            m.set(i, j, bit);
            m.set(j, i, bit);
        }
    }
    return m;
}

GaloisField::GaloisField(IrreduciblePoly p) : poly_(p), n_(p.degree()) {
    if (n_ < 1 || n_ > kMaxFieldDegree) {
        throw std::out_of_range("GaloisField: degree must be in [1, 16]");
    }
    if (!is_irreducible(p)) {
        throw std::invalid_argument("GaloisField: modulus " + std::to_string(p.coeffs) + " is reducible");
    }
    for (unsigned i = 0; i < n_; ++i) {
        const FieldElement xi{static_cast<std::uint32_t>(poly_mod(std::uint64_t{1} << i, p.coeffs))};
        trace_mask_ |= field_trace(xi, p) << i;
    }
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const {
    FieldElement result{1};
    while (e != 0) {
        if ((e & 1) != 0) {
            result = mul(result, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

}  // namespace mubshadow

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

#include "mubshadow/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace mubshadow {

namespace {

constexpr cdouble kIPowers[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

// Exponent e in P_a P_b = i^e P_{a+b}, summed over qubits, for Hermitian Paulis.
int product_phase(const PauliRow& a, const PauliRow& b, unsigned n) {
    int e = 0;
    for (unsigned p = 0; p < n; ++p) {
        const int x1 = static_cast<int>((a.x >> p) & 1);
        const int z1 = static_cast<int>((a.z >> p) & 1);
        const int x2 = static_cast<int>((b.x >> p) & 1);
        const int z2 = static_cast<int>((b.z >> p) & 1);
        if (x1 == 1 && z1 == 1) {
            e += z2 - x2;
        } else if (x1 == 1) {
            e += z2 * (2 * x2 - 1);
        } else if (z1 == 1) {
            e += x2 * (1 - 2 * z2);
        }
    }
    return e;
}

// Conjugation by (I + i P_h)/sqrt(2): fixes commuting Paulis, sends an
// anticommuting Q to i P_h Q.
PauliRow conjugate_by_transvection(const PauliRow& h, const PauliRow& q, unsigned n) {
    if (symplectic_product(h, q) == 0) {
        return q;
    }
    const int e = (((1 + product_phase(h, q, n) + (q.sign ? 2 : 0)) % 4) + 4) % 4;
    if (e % 2 != 0) {
        throw std::logic_error("transvection produced a non-Hermitian Pauli");
    }
    return {h.x ^ q.x, h.z ^ q.z, e == 2};
}

void apply_transvection(const PauliRow& h, PauliRow& v) {
    if (symplectic_product(h, v) != 0) {
        v.x ^= h.x;
        v.z ^= h.z;
    }
}

struct SingleQubit {
    unsigned x;
    unsigned z;
};

SingleQubit qubit_part(const PauliRow& v, unsigned pos) {
    return {static_cast<unsigned>((v.x >> pos) & 1), static_cast<unsigned>((v.z >> pos) & 1)};
}

unsigned single_product(SingleQubit a, SingleQubit b) { return (a.x & b.z) ^ (a.z & b.x); }

SingleQubit anticommuting_with(SingleQubit a, SingleQubit b) {
    static constexpr SingleQubit kOptions[3] = {{1, 0}, {0, 1}, {1, 1}};
    for (auto s : kOptions) {
        const bool ok_a = (a.x | a.z) == 0 || single_product(a, s) == 1;
        const bool ok_b = (b.x | b.z) == 0 || single_product(b, s) == 1;
        if (ok_a && ok_b) {
            return s;
        }
    }
    throw std::logic_error("no single-qubit Pauli anticommutes with both");
}

// A vector z with <x, z> = <y, z> = 1, for nonzero x, y with <x, y> = 0.
PauliRow bridge_vector(const PauliRow& x, const PauliRow& y, unsigned n) {
    for (unsigned p = 0; p < n; ++p) {
        const auto xp = qubit_part(x, p);
        const auto yp = qubit_part(y, p);
        if ((xp.x | xp.z) != 0 && (yp.x | yp.z) != 0) {
            const auto s = anticommuting_with(xp, yp);
            return {std::uint64_t{s.x} << p, std::uint64_t{s.z} << p, false};
        }
    }
    PauliRow z;
    bool have_x = false;
    bool have_y = false;
    for (unsigned p = 0; p < n; ++p) {
        const auto xp = qubit_part(x, p);
        const auto yp = qubit_part(y, p);
        if (!have_x && (xp.x | xp.z) != 0) {
            const auto s = anticommuting_with(xp, {0, 0});
            z.x |= std::uint64_t{s.x} << p;
            z.z |= std::uint64_t{s.z} << p;
            have_x = true;
        } else if (!have_y && (yp.x | yp.z) != 0) {
            const auto s = anticommuting_with(yp, {0, 0});
            z.x |= std::uint64_t{s.x} << p;
            z.z |= std::uint64_t{s.z} << p;
            have_y = true;
        }
    }
    if (!have_x || !have_y) {
        throw std::logic_error("bridge_vector: zero input");
    }
    return z;
}

// At most two transvections taking nonzero x to nonzero y.
std::vector<PauliRow> transvections_between(const PauliRow& x, const PauliRow& y, unsigned n) {
    if (x.x == y.x && x.z == y.z) {
        return {};
    }
    if (symplectic_product(x, y) == 1) {
        return {{x.x ^ y.x, x.z ^ y.z, false}};
    }
    const PauliRow z = bridge_vector(x, y, n);
    return {{x.x ^ z.x, x.z ^ z.z, false}, {z.x ^ y.x, z.z ^ y.z, false}};
}

PauliRow combine(const std::vector<PauliRow>& basis, std::uint64_t coeffs) {
    PauliRow v;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (((coeffs >> i) & 1) != 0) {
            v.x ^= basis[i].x;
            v.z ^= basis[i].z;
        }
    }
    return v;
}

// Uniform symplectic basis (v_q, w_q), q = 0..n-1, built pair by pair from
// uniformly chosen vectors of the shrinking symplectic complement.
std::vector<PauliRow> sample_symplectic_columns(unsigned n, SplitMix64& rng) {
    std::vector<PauliRow> complement;
    for (unsigned q = 0; q < n; ++q) {
        complement.push_back({std::uint64_t{1} << (n - 1 - q), 0, false});
        complement.push_back({0, std::uint64_t{1} << (n - 1 - q), false});
    }
    std::vector<PauliRow> cols;
    for (unsigned q = 0; q < n; ++q) {
        const std::uint64_t mask = low_mask(static_cast<unsigned>(complement.size()));
        std::uint64_t cv = 0;
        while (cv == 0) {
            cv = rng() & mask;
        }
        const PauliRow v = combine(complement, cv);
        PauliRow w;
        do {
            w = combine(complement, rng() & mask);
        } while (symplectic_product(v, w) != 1);
        cols.push_back(v);
        cols.push_back(w);

        std::vector<PauliRow> next;
        std::vector<std::uint64_t> pivots;
        for (PauliRow x : complement) {
            const bool xw = symplectic_product(x, w) != 0;
            const bool xv = symplectic_product(x, v) != 0;
            if (xw) {
                x.x ^= v.x;
                x.z ^= v.z;
            }
            if (xv) {
                x.x ^= w.x;
                x.z ^= w.z;
            }
            std::uint64_t key = x.x | (x.z << n);
            for (auto p : pivots) {
                const std::uint64_t lead = std::uint64_t{1} << (63 - std::countl_zero(p));
                if ((key & lead) != 0) {
                    key ^= p;
                }
            }
            if (key != 0) {
                // Keep pivots sorted by descending lead bit for the reduction above.
                pivots.push_back(key);
                std::sort(pivots.begin(), pivots.end(), std::greater<>());
                next.push_back(x);
            }
        }
        complement = std::move(next);
    }
    return cols;
}

// Transvections h_1..h_m with S = Z_{h_1} ... Z_{h_m} for the symplectic map
// sending (X_q, Z_q) to (cols[2q], cols[2q+1]).
std::vector<PauliRow> decompose_into_transvections(std::vector<PauliRow> cols, unsigned n) {
    std::vector<PauliRow> hs;
    for (unsigned q = 0; q < n; ++q) {
        const PauliRow ex{std::uint64_t{1} << (n - 1 - q), 0, false};
        const PauliRow ez{0, std::uint64_t{1} << (n - 1 - q), false};
        auto step = [&](const PauliRow& h) {
            hs.push_back(h);
            for (std::size_t r = 2 * q; r < cols.size(); ++r) {
                apply_transvection(h, cols[r]);
            }
        };
        for (const auto& h : transvections_between(cols[2 * q], ex, n)) {
            step(h);
        }
        if (!(cols[2 * q + 1] == ez)) {
            if (symplectic_product(cols[2 * q + 1], ez) == 0) {
                step(ex);
            }
            if (!(cols[2 * q + 1] == ez)) {
                const PauliRow w = cols[2 * q + 1];
                step({w.x ^ ez.x, w.z ^ ez.z, false});
            }
        }
        if (!(cols[2 * q] == ex) || !(cols[2 * q + 1] == ez)) {
            throw std::logic_error("transvection decomposition failed");
        }
    }
    return hs;
}

// W M with W = (I + i P_h)/sqrt(2).
Eigen::MatrixXcd left_multiply_transvection(const PauliRow& h, const Eigen::MatrixXcd& m, unsigned n) {
    const Eigen::MatrixXcd p = pauli_matrix(n, h.x, h.z);
    return (m + cdouble{0.0, 1.0} * (p * m)) * M_SQRT1_2;
}

Eigen::MatrixXcd canonical_phase(Eigen::MatrixXcd u) {
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        const cdouble v = u.data()[i];
        if (std::abs(v) > 1e-6) {
            u *= std::conj(v) / std::abs(v);
            break;
        }
    }
    return u;
}

}  // namespace

Eigen::MatrixXcd pauli_matrix(unsigned n, std::uint64_t x, std::uint64_t z) {
    const auto dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const cdouble base = kIPowers[std::popcount(x & z) & 3];
    for (Eigen::Index l = 0; l < dim; ++l) {
        const auto label = static_cast<std::uint64_t>(l);
        m(static_cast<Eigen::Index>(label ^ x), l) = parity(z & label) != 0 ? -base : base;
    }
    return m;
}

CliffordElement::CliffordElement(unsigned n, std::vector<PauliRow> tableau, std::optional<Eigen::MatrixXcd> dense)
    : n_(n), rows_(std::move(tableau)), dense_(std::move(dense)) {
    if (n < 1 || n > 32 || rows_.size() != 2 * n) {
        throw std::invalid_argument("CliffordElement: tableau must have 2n rows, 1 <= n <= 32");
    }
}

CliffordElement CliffordElement::identity(unsigned n) {
    std::vector<PauliRow> rows;
    for (unsigned q = 0; q < n; ++q) {
        rows.push_back({std::uint64_t{1} << (n - 1 - q), 0, false});
    }
    for (unsigned q = 0; q < n; ++q) {
        rows.push_back({0, std::uint64_t{1} << (n - 1 - q), false});
    }
    std::optional<Eigen::MatrixXcd> dense;
    if (n <= kMaxDenseCliffordQubits) {
        dense = Eigen::MatrixXcd::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    }
    return {n, std::move(rows), std::move(dense)};
}

CliffordElement CliffordElement::from_unitary(unsigned n, const Eigen::MatrixXcd& u) {
    const auto dim = Eigen::Index{1} << n;
    if (u.rows() != dim || u.cols() != dim) {
        throw std::invalid_argument("from_unitary: matrix is not 2^n x 2^n");
    }
    std::vector<PauliRow> rows;
    for (unsigned g = 0; g < 2 * n; ++g) {
        const unsigned q = g % n;
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        const Eigen::MatrixXcd gen = g < n ? pauli_matrix(n, bit, 0) : pauli_matrix(n, 0, bit);
        const Eigen::MatrixXcd m = u * gen * u.adjoint();

        Eigen::Index x = -1;
        for (Eigen::Index r = 0; r < dim; ++r) {
            if (std::abs(m(r, 0)) > 0.5) {
                x = r;
                break;
            }
        }
        if (x < 0) {
            throw std::invalid_argument("from_unitary: matrix is not unitary");
        }
        PauliRow row;
        row.x = static_cast<std::uint64_t>(x);
        for (unsigned p = 0; p < n; ++p) {
            const auto l = Eigen::Index{1} << p;
            const cdouble ratio = m(l ^ x, l) / m(x, 0);
            if (ratio.real() < 0) {
                row.z |= std::uint64_t{1} << p;
            }
        }
        const cdouble s = m(x, 0) / kIPowers[std::popcount(row.x & row.z) & 3];
        row.sign = s.real() < 0;
        const Eigen::MatrixXcd expected = (row.sign ? -1.0 : 1.0) * pauli_matrix(n, row.x, row.z);
        if ((m - expected).cwiseAbs().maxCoeff() > 1e-8) {
            throw std::invalid_argument("from_unitary: matrix is not a Clifford unitary");
        }
        rows.push_back(row);
    }
    return {n, std::move(rows), u};
}

BitMatrix CliffordElement::symplectic_matrix() const {
    BitMatrix m(2 * n_);
    for (unsigned r = 0; r < 2 * n_; ++r) {
        m.set_row(r, (rows_[r].x << n_) | rows_[r].z);
    }
    return m;
}

bool CliffordElement::is_symplectic() const {
    for (unsigned a = 0; a < 2 * n_; ++a) {
        for (unsigned b = 0; b < 2 * n_; ++b) {
            const unsigned expected = (a % n_ == b % n_ && a != b) ? 1u : 0u;
            if (symplectic_product(rows_[a], rows_[b]) != expected) {
                return false;
            }
        }
    }
    return true;
}

const Eigen::MatrixXcd& CliffordElement::unitary() const {
    if (!dense_) {
        throw std::out_of_range("Clifford dense path is limited to " + std::to_string(kMaxDenseCliffordQubits) +
                                " qubits");
    }
    return *dense_;
}

StateVector CliffordElement::rotated_basis_state(std::uint64_t b) const {
    const auto& u = unitary();
    if (b >= static_cast<std::uint64_t>(u.rows())) {
        throw std::out_of_range("rotated_basis_state: outcome outside 2^n");
    }
    return StateVector::normalized(n_, u.row(static_cast<Eigen::Index>(b)).adjoint());
}

StateVector CliffordElement::rotated_basis_state(const BitVector& b) const {
    if (b.size() != n_) {
        throw std::invalid_argument("rotated_basis_state: outcome length differs from qubit count");
    }
    return rotated_basis_state(b.value());
}

std::vector<double> CliffordElement::probabilities(const StateVector& psi) const {
    const Eigen::VectorXcd c = unitary() * psi.amplitudes();
    std::vector<double> p(static_cast<std::size_t>(c.size()));
    for (Eigen::Index b = 0; b < c.size(); ++b) {
        p[static_cast<std::size_t>(b)] = std::norm(c[b]);
    }
    return p;
}

CliffordElement sample_clifford(unsigned n, SplitMix64& rng) {
    if (n < 1 || n > 32) {
        throw std::out_of_range("sample_clifford: n must be in [1, 32]");
    }
    const auto hs = decompose_into_transvections(sample_symplectic_columns(n, rng), n);
    PauliRow frame;
    frame.x = rng() & low_mask(n);
    frame.z = rng() & low_mask(n);

    // U = P_frame * W_{h_1} ... W_{h_m}; conjugation applies W_{h_m} first.
    std::vector<PauliRow> rows = CliffordElement::identity(n).tableau();
    for (auto& row : rows) {
        for (auto it = hs.rbegin(); it != hs.rend(); ++it) {
            row = conjugate_by_transvection(*it, row, n);
        }
        row.sign = row.sign != (symplectic_product(frame, row) != 0);
    }

    std::optional<Eigen::MatrixXcd> dense;
    if (n <= kMaxDenseCliffordQubits) {
        const auto dim = Eigen::Index{1} << n;
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
        for (auto it = hs.rbegin(); it != hs.rend(); ++it) {
            u = left_multiply_transvection(*it, u, n);
        }
        u = pauli_matrix(n, frame.x, frame.z) * u;
        dense = std::move(u);
    }
    return {n, std::move(rows), std::move(dense)};
}

std::vector<CliffordElement> enumerate_single_qubit_cliffords() {
    Eigen::Matrix2cd h;
    h << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2;
    Eigen::Matrix2cd s;
    s << 1.0, 0.0, 0.0, cdouble(0.0, 1.0);
    const Eigen::MatrixXcd generators[2] = {h, s};

    std::vector<Eigen::MatrixXcd> found = {Eigen::MatrixXcd::Identity(2, 2)};
    for (std::size_t frontier = 0; frontier < found.size(); ++frontier) {
        for (const auto& g : generators) {
            const Eigen::MatrixXcd candidate = canonical_phase(g * found[frontier]);
            bool seen = false;
            for (const auto& f : found) {
                if ((f - candidate).cwiseAbs().maxCoeff() < 1e-9) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                found.push_back(candidate);
            }
        }
    }
    std::vector<CliffordElement> out;
    out.reserve(found.size());
    for (const auto& u : found) {
        out.push_back(CliffordElement::from_unitary(1, u));
    }
    return out;
}

double clifford_group_order(unsigned n) {
    double order = std::pow(2.0, static_cast<double>(n * n + 2 * n));
    for (unsigned j = 1; j <= n; ++j) {
        order *= std::pow(4.0, static_cast<double>(j)) - 1.0;
    }
    return order;
}

}  // namespace mubshadow

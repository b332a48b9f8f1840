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

#include "mubshadow/mub.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mubshadow {

namespace {

constexpr cdouble kIPowers[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

void walsh_hadamard_in_place(std::vector<cdouble>& v) {
    const std::size_t dim = v.size();
    for (std::size_t half = 1; half < dim; half <<= 1) {
        for (std::size_t block = 0; block < dim; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                const cdouble x = v[i];
                const cdouble y = v[i + half];
                v[i] = x + y;
                v[i + half] = x - y;
            }
        }
    }
}

}  // namespace

std::vector<Gate> DiagonalCliffordCircuit::preparation_gates() const {
    std::vector<Gate> gates;
    if (followed_by_hadamard_layer) {
        for (unsigned q = 0; q < n; ++q) {
            gates.push_back({GateKind::h, q});
        }
    }
    for (unsigned q = 0; q < n; ++q) {
        if (p_powers[q] % 4 != 0) {
            gates.push_back({GateKind::p, q, 0, p_powers[q] % 4});
        }
    }
    for (auto [a, b] : cz_pairs) {
        gates.push_back({GateKind::cz, a, b});
    }
    return gates;
}

std::vector<Gate> DiagonalCliffordCircuit::measurement_gates() const {
    std::vector<Gate> gates;
    for (auto [a, b] : cz_pairs) {
        gates.push_back({GateKind::cz, a, b});
    }
    for (unsigned q = 0; q < n; ++q) {
        const unsigned inverse = (4 - p_powers[q] % 4) % 4;
        if (inverse != 0) {
            gates.push_back({GateKind::p, q, 0, inverse});
        }
    }
    if (followed_by_hadamard_layer) {
        for (unsigned q = 0; q < n; ++q) {
            gates.push_back({GateKind::h, q});
        }
    }
    return gates;
}

std::string to_gate_list(const std::vector<Gate>& gates) {
    std::ostringstream out;
    for (const auto& g : gates) {
        switch (g.kind) {
            case GateKind::h:
                out << "H " << g.q0 << '\n';
                break;
            case GateKind::p:
                out << "P " << g.q0 << ' ' << g.power << '\n';
                break;
            case GateKind::cz:
                out << "CZ " << g.q0 << ' ' << g.q1 << '\n';
                break;
        }
    }
    return out.str();
}

std::string to_qasm(unsigned n, const std::vector<Gate>& gates) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << n << "];\ncreg c[" << n << "];\n";
    for (const auto& g : gates) {
        switch (g.kind) {
            case GateKind::h:
                out << "h q[" << g.q0 << "];\n";
                break;
            case GateKind::p: {
                static constexpr const char* kNames[4] = {"id", "s", "z", "sdg"};
                out << kNames[g.power % 4] << " q[" << g.q0 << "];\n";
                break;
            }
            case GateKind::cz:
                out << "cz q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
        }
    }
    for (unsigned q = 0; q < n; ++q) {
        out << "measure q[" << q << "] -> c[" << q << "];\n";
    }
    return out.str();
}

MubFamily MubFamily::build(unsigned n) {
    if (n < 1 || n > kMaxFieldDegree) {
        throw std::out_of_range("MubFamily: qubit count must be in [1, 16], got " + std::to_string(n));
    }
    const GaloisField field(n);
    MubFamily fam;
    fam.n_ = n;
    fam.poly_ = field.modulus();
    fam.field_basis_ = self_dual_basis(fam.poly_);

    // a -> M_a is GF(2)-linear, so every matrix is an XOR of the monomial ones.
    std::vector<BitMatrix> monomial;
    monomial.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        monomial.push_back(multiplication_matrix({std::uint32_t{1} << i}, fam.field_basis_, fam.poly_));
    }
    const std::uint32_t order = field.order();
    fam.mats_.assign(order, BitMatrix(n));
    for (std::uint32_t a = 1; a < order; ++a) {
        const unsigned low = static_cast<unsigned>(std::countr_zero(a));
        fam.mats_[a] = fam.mats_[a & (a - 1)] ^ monomial[low];
    }
    return fam;
}

void MubFamily::check_basis(BasisId j) const {
    if (j >= basis_count()) {
        throw std::out_of_range("basis id " + std::to_string(j) + " outside [0, " +
                                std::to_string(basis_count() - 1) + "]");
    }
}

const BitMatrix& MubFamily::matrix(BasisId j) const {
    if (j == 0) {
        throw std::invalid_argument("basis 0 is the computational basis and has no matrix");
    }
    check_basis(j);
    return mats_[j - 1];
}

unsigned MubFamily::phase_exponent(BasisId j, std::uint64_t l) const {
    const BitMatrix& a = mats_[j - 1];
    unsigned q = 0;
    std::uint64_t rest = l;
    while (rest != 0) {
        const unsigned pos = static_cast<unsigned>(std::countr_zero(rest));
        rest &= rest - 1;
        // l^T A l over the integers: diagonal terms once, off-diagonal twice.
        q += static_cast<unsigned>(std::popcount(a.row(n_ - 1 - pos) & l));
    }
    return q & 3u;
}

cdouble MubFamily::amplitude(BasisId j, std::uint64_t k, std::uint64_t l) const {
    check_basis(j);
    if (k >= dimension() || l >= dimension()) {
        throw std::out_of_range("amplitude: label outside 2^n");
    }
    if (j == 0) {
        return k == l ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
    }
    const unsigned e = (phase_exponent(j, l) + 2 * parity(k & l)) & 3u;
    return kIPowers[e] * std::pow(2.0, -0.5 * n_);
}

StateVector MubFamily::state(BasisId j, std::uint64_t k) const {
    check_basis(j);
    check_statevector_qubits(n_);
    if (k >= dimension()) {
        throw std::out_of_range("state: label outside 2^n");
    }
    if (j == 0) {
        return StateVector::basis(n_, k);
    }
    const double scale = std::pow(2.0, -0.5 * n_);
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(dimension()));
    for (std::uint64_t l = 0; l < dimension(); ++l) {
        const unsigned e = (phase_exponent(j, l) + 2 * parity(k & l)) & 3u;
        amps[static_cast<Eigen::Index>(l)] = kIPowers[e] * scale;
    }
    return {n_, std::move(amps)};
}

std::vector<cdouble> MubFamily::coefficients(BasisId j, const StateVector& psi) const {
    check_basis(j);
    if (psi.qubits() != n_) {
        throw std::invalid_argument("coefficients: state has " + std::to_string(psi.qubits()) +
                                    " qubits, family has " + std::to_string(n_));
    }
    std::vector<cdouble> c(psi.amplitudes().data(), psi.amplitudes().data() + psi.dimension());
    if (j == 0) {
        return c;
    }
    for (std::uint64_t l = 0; l < dimension(); ++l) {
        c[l] *= kIPowers[(4 - phase_exponent(j, l)) & 3u];
    }
    walsh_hadamard_in_place(c);
    const double scale = std::pow(2.0, -0.5 * n_);
    for (auto& x : c) {
        x *= scale;
    }
    return c;
}

std::vector<double> MubFamily::probabilities(BasisId j, const StateVector& psi) const {
    const auto c = coefficients(j, psi);
    std::vector<double> p(c.size());
    std::transform(c.begin(), c.end(), p.begin(), [](cdouble x) { return std::norm(x); });
    return p;
}

DiagonalCliffordCircuit MubFamily::circuit(BasisId j) const {
    check_basis(j);
    if (j == 0) {
        throw std::invalid_argument("basis 0 is the identity (computational) basis and has no circuit");
    }
    const BitMatrix& a = mats_[j - 1];
    DiagonalCliffordCircuit c;
    c.n = n_;
    c.p_powers.resize(n_);
    for (unsigned q = 0; q < n_; ++q) {
        c.p_powers[q] = a.get(q, q) ? 1u : 0u;
        for (unsigned r = q + 1; r < n_; ++r) {
            if (a.get(q, r)) {
                c.cz_pairs.emplace_back(q, r);
            }
        }
    }
    return c;
}

MubFamily MubFamily::with_matrix(BasisId j, BitMatrix m) const {
    MubFamily copy = *this;
    if (j == 0 || j >= basis_count() || m.size() != n_) {
        throw std::invalid_argument("with_matrix: bad basis id or matrix size");
    }
    copy.mats_[j - 1] = std::move(m);
    return copy;
}

UnbiasednessReport verify_unbiased(const MubFamily& fam, double tol) {
    check_statevector_qubits(fam.qubits());
    const auto dim = static_cast<Eigen::Index>(fam.dimension());
    const BasisId count = fam.basis_count();

    // Unnormalized columns with entries in {0, +-1, +-i}. Every product below is a
    // sum of small Gaussian integers, so it is exact in double precision and a
    // correct family reports deviation 0.
    std::vector<Eigen::MatrixXcd> bases(count, Eigen::MatrixXcd::Zero(dim, dim));
    std::vector<double> norm_sq(count, static_cast<double>(dim));
    norm_sq[0] = 1.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
        bases[0](k, k) = 1.0;
    }
    for (BasisId j = 1; j < count; ++j) {
        for (Eigen::Index l = 0; l < dim; ++l) {
            const auto lu = static_cast<std::uint64_t>(l);
            const unsigned q = fam.phase_exponent(j, lu);
            for (Eigen::Index k = 0; k < dim; ++k) {
                const unsigned sign = parity(static_cast<std::uint64_t>(k) & lu);
                bases[j](l, k) = kIPowers[(q + 2 * sign) & 3u];
            }
        }
    }

    UnbiasednessReport report;
    report.worst_j2 = 1;
    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);
    for (BasisId j = 0; j < count; ++j) {
        const double err = ((bases[j].adjoint() * bases[j]) / norm_sq[j] - identity).cwiseAbs().maxCoeff();
        report.max_orthonormality_error = std::max(report.max_orthonormality_error, err);
    }
    const double target = 1.0 / static_cast<double>(dim);
    for (BasisId j = 0; j < count; ++j) {
        for (BasisId j2 = j + 1; j2 < count; ++j2) {
            const Eigen::MatrixXcd overlap = bases[j].adjoint() * bases[j2];
            const double scale = norm_sq[j] * norm_sq[j2];
            const double dev = (overlap.cwiseAbs2().array() / scale - target).abs().maxCoeff();
            if (dev > report.max_cross_deviation) {
                report.max_cross_deviation = dev;
                report.worst_j = j;
                report.worst_j2 = j2;
            }
        }
    }
    report.passed = report.max_cross_deviation <= tol && report.max_orthonormality_error <= tol;
    return report;
}

CzStatistics cz_statistics(const MubFamily& fam) {
    CzStatistics stats;
    for (BasisId j = 1; j < fam.basis_count(); ++j) {
        const std::size_t c = fam.matrix(j).upper_popcount();
        stats.per_circuit.push_back(c);
        stats.total += c;
        stats.max = std::max(stats.max, c);
    }
    stats.mean = static_cast<double>(stats.total) / static_cast<double>(stats.per_circuit.size());
    return stats;
}

}  // namespace mubshadow

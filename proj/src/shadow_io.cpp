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

#include "mubshadow/shadow_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace mubshadow {

using nlohmann::json;

void write_shadow(std::ostream& out, const ShadowSet& shadow) {
    const json header = {{"n", shadow.meta.n},
                         {"ensemble", to_string(shadow.meta.ensemble)},
                         {"seed", shadow.meta.seed},
                         {"N", shadow.meta.shots},
                         {"state", shadow.meta.state}};
    out << header.dump() << '\n';
    for (const auto& rec : shadow.records) {
        const json line = {{"j", rec.rotation}, {"b", rec.outcome.str()}};
        out << line.dump() << '\n';
    }
}

ShadowSet read_shadow(std::istream& in) {
    ShadowSet shadow;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("shadow file line " + std::to_string(line_no) + ": " + what);
    };
    if (!std::getline(in, line)) {
        throw std::runtime_error("shadow file is empty");
    }
    ++line_no;
    try {
        const json header = json::parse(line);
        shadow.meta.n = header.at("n").get<unsigned>();
        shadow.meta.ensemble = parse_ensemble_tag(header.at("ensemble").get<std::string>());
        shadow.meta.seed = header.at("seed").get<std::uint64_t>();
        shadow.meta.shots = header.at("N").get<std::uint64_t>();
        shadow.meta.state = header.value("state", std::string{});
    } catch (const std::exception& e) {
        fail(std::string("bad header: ") + e.what());
    }
    if (shadow.meta.n < 1 || shadow.meta.n > kMaxBits) {
        fail("qubit count out of range");
    }
    shadow.records.reserve(shadow.meta.shots);
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            const json rec = json::parse(line);
            const auto bits = BitVector::from_string(rec.at("b").get<std::string>());
            if (bits.size() != shadow.meta.n) {
                fail("bitstring length differs from n");
            }
            shadow.records.push_back({shadow.meta.ensemble, rec.at("j").get<std::uint64_t>(), bits});
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& e) {
            fail(std::string("bad record: ") + e.what());
        }
    }
    if (shadow.records.size() != shadow.meta.shots) {
        throw std::runtime_error("shadow file declares N=" + std::to_string(shadow.meta.shots) + " but holds " +
                                 std::to_string(shadow.records.size()) + " records");
    }
    return shadow;
}

void save_shadow(const std::filesystem::path& path, const ShadowSet& shadow) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    write_shadow(out, shadow);
    if (!out) {
        throw std::runtime_error("write to " + path.string() + " failed");
    }
}

ShadowSet load_shadow(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_shadow(in);
}

namespace {

std::vector<cdouble> read_complex_rows(const std::filesystem::path& path, std::size_t rows, std::size_t per_row) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<cdouble> values;
    values.reserve(rows * per_row);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        std::vector<double> numbers;
        double x = 0.0;
        while (fields >> x) {
            numbers.push_back(x);
        }
        if (numbers.size() != 2 * per_row || !fields.eof()) {
            throw std::runtime_error(path.string() + " line " + std::to_string(row + 1) + ": expected " +
                                     std::to_string(per_row) + " `re im` pairs");
        }
        for (std::size_t i = 0; i < per_row; ++i) {
            values.emplace_back(numbers[2 * i], numbers[2 * i + 1]);
        }
        ++row;
    }
    if (row != rows) {
        throw std::runtime_error(path.string() + ": expected " + std::to_string(rows) + " rows, found " +
                                 std::to_string(row));
    }
    return values;
}

}  // namespace

Observable load_projector_observable(const std::filesystem::path& path, unsigned n) {
    const std::size_t dim = std::size_t{1} << n;
    const auto values = read_complex_rows(path, dim, 1);
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(dim));
    for (std::size_t l = 0; l < dim; ++l) {
        amps[static_cast<Eigen::Index>(l)] = values[l];
    }
    return Observable::projector(StateVector::normalized(n, std::move(amps)));
}

Observable load_dense_observable(const std::filesystem::path& path, unsigned n) {
    const std::size_t dim = std::size_t{1} << n;
    const auto values = read_complex_rows(path, dim, dim);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = values[r * dim + c];
        }
    }
    return Observable::dense(n, std::move(m));
}

}  // namespace mubshadow

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

#include "mubshadow/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "mubshadow/experiments.hpp"
#include "mubshadow/mub.hpp"
#include "mubshadow/shadow.hpp"
#include "mubshadow/shadow_io.hpp"
#include "mubshadow/simulator.hpp"

namespace mubshadow {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr unsigned kMaxVerifyQubits = 7;

struct Options {
    unsigned threads = 0;

    std::string mub_action;
    unsigned mub_n = 0;
    double tol = 1e-10;
    std::string format = "text";
    std::string circuit_dir = "circuits";

    std::string state = "ghz";
    std::string ensemble = "mub";
    unsigned n = 0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string out_path;

    std::string shadow_path;
    std::vector<std::string> observables;
    std::uint64_t groups = 1;

    std::string experiment;
    std::vector<unsigned> qubits;
    unsigned exp_n = 4;
    std::uint64_t exp_shots = 0;
    std::uint64_t runs = 10;
    std::uint64_t exp_groups = 1;
    std::uint64_t exp_seed = 2024;
    double p_step = 0.1;
    std::uint64_t samples = 100000;
    std::string exp_out;
};

unsigned worker_count(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("write to " + path.string() + " failed");
    }
}

int cmd_mub(const Options& o, std::ostream& out, std::ostream& err) {
    const MubFamily fam = MubFamily::build(o.mub_n);
    if (o.mub_action == "verify") {
        if (o.mub_n > kMaxVerifyQubits) {
            throw UsageError("mub verify: dense verification limited to n <= " + std::to_string(kMaxVerifyQubits));
        }
        const UnbiasednessReport r = verify_unbiased(fam, o.tol);
        out << "n=" << o.mub_n << " bases=" << fam.basis_count() << '\n';
        out << "max_cross_deviation=" << fmt(r.max_cross_deviation) << " (bases " << r.worst_j << ", " << r.worst_j2
            << ")\n";
        out << "max_orthonormality_error=" << fmt(r.max_orthonormality_error) << '\n';
        out << "tolerance=" << fmt(o.tol) << '\n';
        out << (r.passed ? "PASS" : "FAIL") << '\n';
        if (!r.passed) {
            err << "mub verify: deviation exceeds tolerance\n";
            return kExitFailure;
        }
        return kExitOk;
    }
    if (o.mub_action == "counts") {
        const CzStatistics s = cz_statistics(fam);
        out << "basis,cz\n";
        for (std::size_t i = 0; i < s.per_circuit.size(); ++i) {
            out << (i + 1) << ',' << s.per_circuit[i] << '\n';
        }
        out << "total=" << s.total << " max=" << s.max << " mean=" << fmt(s.mean) << '\n';
        return kExitOk;
    }
    // circuits
    if (o.format != "text" && o.format != "qasm") {
        throw UsageError("--format must be text or qasm");
    }
    const fs::path dir(o.circuit_dir);
    fs::create_directories(dir);
    const std::string ext = o.format == "qasm" ? ".qasm" : ".txt";
    const int width = static_cast<int>(std::to_string(fam.dimension()).size());
    auto name = [&](BasisId j) {
        std::ostringstream s;
        s << "basis_" << std::setw(width) << std::setfill('0') << j;
        return s.str();
    };
    write_text_file(dir / (name(0) + ".identity"),
                    "basis 0 is the computational basis: no rotation before measurement\n");
    for (BasisId j = 1; j < fam.basis_count(); ++j) {
        const auto gates = fam.circuit(j).measurement_gates();
        const std::string body = o.format == "qasm" ? to_qasm(o.mub_n, gates) : to_gate_list(gates);
        write_text_file(dir / (name(j) + ext), body);
    }
    out << "wrote " << fam.dimension() << " circuits and 1 identity marker to " << dir.string() << '\n';
    return kExitOk;
}

StateModel parse_state(const std::string& spec, unsigned n) {
    if (spec == "ghz") {
        return StateModel::ghz(n);
    }
    if (spec == "zero") {
        return StateModel::pure(StateVector::basis(n, 0));
    }
    if (spec == "mixed") {
        return StateModel::maximally_mixed(n);
    }
    if (spec.rfind("noisy-ghz:", 0) == 0) {
        const std::string tail = spec.substr(10);
        std::size_t used = 0;
        double p = 0.0;
        try {
            p = std::stod(tail, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tail.size() || !(p >= 0.0 && p <= 1.0)) {
            throw UsageError("invalid noise probability in state spec '" + spec + "'");
        }
        return StateModel::noisy_ghz(n, p);
    }
    if (spec.rfind("amps:", 0) == 0) {
        const Observable proj = load_projector_observable(spec.substr(5), n);
        return StateModel::pure(proj.as_projector().phi);
    }
    throw UsageError("unknown state spec '" + spec + "' (ghz | noisy-ghz:p | zero | mixed | amps:path)");
}

int cmd_acquire(const Options& o, std::ostream& out) {
    const EnsembleTag tag = parse_ensemble_tag(o.ensemble);
    if (tag == EnsembleTag::clifford && o.n > kMaxDenseCliffordQubits) {
        throw UsageError("clifford ensemble limited to n <= " + std::to_string(kMaxDenseCliffordQubits));
    }
    check_statevector_qubits(o.n);
    const StateModel model = parse_state(o.state, o.n);
    const auto ensemble = make_ensemble(tag, o.n);
    ShadowSet shadow = acquire(model, *ensemble, o.shots, o.seed, worker_count(o.threads));
    shadow.meta.state = o.state;
    save_shadow(o.out_path, shadow);
    out << "wrote " << shadow.records.size() << " records to " << o.out_path << '\n';
    return kExitOk;
}

Observable parse_observable(const std::string& spec, unsigned n) {
    if (spec == "ghz-fidelity") {
        return Observable::ghz_fidelity(n);
    }
    if (spec.rfind("amps:", 0) == 0) {
        return load_projector_observable(spec.substr(5), n);
    }
    if (spec.rfind("matrix:", 0) == 0) {
        return load_dense_observable(spec.substr(7), n);
    }
    throw UsageError("unknown observable spec '" + spec + "' (ghz-fidelity | amps:path | matrix:path)");
}

int cmd_estimate(const Options& o, std::ostream& out) {
    const ShadowSet shadow = load_shadow(o.shadow_path);
    std::vector<Observable> observables;
    for (const auto& spec : o.observables) {
        observables.push_back(parse_observable(spec, shadow.meta.n));
    }
    const auto ensemble = make_ensemble(shadow.meta.ensemble, shadow.meta.n);
    const auto values = estimate(shadow, observables, {o.groups}, *ensemble, worker_count(o.threads));
    json result = {{"n", shadow.meta.n},
                   {"N", shadow.meta.shots},
                   {"K", o.groups},
                   {"ensemble", to_string(shadow.meta.ensemble)},
                   {"seed", shadow.meta.seed},
                   {"state", shadow.meta.state}};
    json list = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
        list.push_back({{"observable", o.observables[i]}, {"estimate", values[i]}});
    }
    result["estimates"] = list;
    out << result.dump() << '\n';
    return kExitOk;
}

std::vector<double> p_grid(double step) {
    if (!(step > 0.0 && step <= 1.0)) {
        throw UsageError("--p-step must lie in (0, 1]");
    }
    const auto count = static_cast<std::size_t>(std::llround(1.0 / step));
    std::vector<double> grid;
    for (std::size_t i = 0; i <= count; ++i) {
        grid.push_back(std::min(1.0, static_cast<double>(i) / static_cast<double>(count)));
    }
    return grid;
}

void emit(const Options& o, const std::string& csv, const json& summary, std::ostream& out) {
    if (o.exp_out.empty()) {
        out << csv;
        return;
    }
    const fs::path dir(o.exp_out);
    fs::create_directories(dir);
    write_text_file(dir / (o.experiment + ".csv"), csv);
    write_text_file(dir / (o.experiment + ".json"), summary.dump(2) + "\n");
    out << "wrote " << (dir / (o.experiment + ".csv")).string() << " and "
        << (dir / (o.experiment + ".json")).string() << '\n';
}

int cmd_experiment(const Options& o, std::ostream& out, std::ostream& err) {
    const unsigned threads = worker_count(o.threads);
    std::ostringstream csv;
    json summary = json::array();
    if (o.experiment == "ghz-fidelity") {
        const std::vector<unsigned> qubits = o.qubits.empty() ? std::vector<unsigned>{2, 3, 4, 5, 6} : o.qubits;
        const std::uint64_t shots = o.exp_shots == 0 ? 10000 : o.exp_shots;
        const auto results = run_ghz_fidelity(qubits, shots, o.runs, o.exp_groups, o.exp_seed, threads);
        write_ghz_fidelity_csv(csv, results);
        for (const auto& r : results) {
            summary.push_back(to_json(r));
            err << "n=" << r.n << " mean=" << fmt(r.mean) << " std=" << fmt(r.std) << '\n';
        }
    } else if (o.experiment == "noisy-ghz") {
        const std::uint64_t shots = o.exp_shots == 0 ? 5000 : o.exp_shots;
        const auto results = run_noisy_ghz(o.exp_n, p_grid(o.p_step), shots, o.runs, o.exp_groups, o.exp_seed, threads);
        write_noisy_ghz_csv(csv, results);
        for (const auto& r : results) {
            summary.push_back(to_json(r));
        }
    } else {
        const std::vector<unsigned> qubits = o.qubits.empty() ? std::vector<unsigned>{2, 3} : o.qubits;
        for (unsigned n : qubits) {
            if (n > 3) {
                throw UsageError("variance-compare limited to n <= 3");
            }
        }
        const auto rows = run_variance_compare(qubits, o.samples, o.exp_seed, threads);
        write_variance_csv(csv, rows);
        for (const auto& r : rows) {
            summary.push_back({{"observable", r.observable},
                               {"n", r.n},
                               {"var_mub", r.var_mub},
                               {"var_clifford", r.var_clifford},
                               {"var_clifford_std_error", r.var_clifford_std_error},
                               {"clifford_samples", r.clifford_samples},
                               {"bound_mub", r.bound_mub},
                               {"bound_clifford", r.bound_clifford},
                               {"seed", o.exp_seed}});
        }
    }
    emit(o, csv.str(), summary, out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Classical shadow tomography with mutually unbiased bases", "shadow"};
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();

    auto* mub = app.add_subcommand("mub", "Build, verify and export a MUB family");
    mub->add_option("action", o.mub_action, "verify | circuits | counts")
        ->required()
        ->check(CLI::IsMember({"verify", "circuits", "counts"}));
    mub->add_option("--n", o.mub_n, "Number of qubits")->required()->check(CLI::Range(1u, 16u));
    mub->add_option("--tol", o.tol, "Tolerance for verify")->capture_default_str();
    mub->add_option("--format", o.format, "Circuit format: text | qasm")->capture_default_str();
    mub->add_option("--out", o.circuit_dir, "Output directory for circuits")->capture_default_str();

    auto* acq = app.add_subcommand("acquire", "Simulate randomized measurements and save a shadow");
    acq->add_option("--state", o.state, "ghz | noisy-ghz:p | zero | mixed | amps:path")->capture_default_str();
    acq->add_option("--ensemble", o.ensemble, "mub | clifford")
        ->capture_default_str()
        ->check(CLI::IsMember({"mub", "clifford"}));
    acq->add_option("--n", o.n, "Number of qubits")->required()->check(CLI::Range(1u, 30u));
    acq->add_option("--shots", o.shots, "Number of measurements N")->required()->check(CLI::PositiveNumber);
    acq->add_option("--seed", o.seed, "Random seed")->required();
    acq->add_option("--out", o.out_path, "Shadow file (JSON lines)")->required();

    auto* est = app.add_subcommand("estimate", "Predict observables from a saved shadow");
    est->add_option("--shadow", o.shadow_path, "Shadow file")->required();
    est->add_option("--observable", o.observables, "ghz-fidelity | amps:path | matrix:path (repeatable)")
        ->required();
    est->add_option("--groups", o.groups, "Median-of-means groups K")->capture_default_str()->check(
        CLI::PositiveNumber);

    auto* exp = app.add_subcommand("experiment", "Run a fidelity or variance experiment");
    exp->add_option("name", o.experiment, "ghz-fidelity | noisy-ghz | variance-compare")
        ->required()
        ->check(CLI::IsMember({"ghz-fidelity", "noisy-ghz", "variance-compare"}));
    exp->add_option("--qubits", o.qubits, "Qubit counts (ghz-fidelity, variance-compare)")->check(
        CLI::Range(1u, 16u));
    exp->add_option("--n", o.exp_n, "Qubit count (noisy-ghz)")->capture_default_str()->check(CLI::Range(1u, 16u));
    exp->add_option("--shots", o.exp_shots, "Shots per run (default 10000, noisy-ghz 5000)");
    exp->add_option("--runs", o.runs, "Independent runs")->capture_default_str()->check(CLI::PositiveNumber);
    exp->add_option("--groups", o.exp_groups, "Median-of-means groups K")->capture_default_str()->check(
        CLI::PositiveNumber);
    exp->add_option("--seed", o.exp_seed, "Master seed")->capture_default_str();
    exp->add_option("--p-step", o.p_step, "Noise grid step")->capture_default_str();
    exp->add_option("--samples", o.samples, "Clifford samples (variance-compare)")->capture_default_str();
    exp->add_option("--out", o.exp_out, "Output directory for CSV and JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (mub->parsed()) {
            return cmd_mub(o, out, err);
        }
        if (acq->parsed()) {
            return cmd_acquire(o, out);
        }
        if (est->parsed()) {
            return cmd_estimate(o, out);
        }
        return cmd_experiment(o, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace mubshadow

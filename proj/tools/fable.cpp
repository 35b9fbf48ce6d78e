// Copyright 2026 The fable-cc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fable/fable.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kIoError = 2,
    kInvalidMatrix = 3,
    kResourceCap = 4,
    kBoundViolation = 5,
    kBadModel = 6,
};

struct CliConfig {
    std::string input_path;
    std::string qasm_path;
    std::string json_path;
    std::string csv_path;
    std::string output_path;
    std::string model;
    double delta_c = 0.0;
    bool auto_scale = true;
    bool timing = false;
    bool verify_points = false;
    bool periodic = false;
    std::size_t max_qubits = 13;
    std::size_t min_n = 2;
    std::size_t max_n = 4;
    std::size_t sites = 2;
    std::size_t points = 4;
    std::size_t points_x = 2;
    std::size_t points_y = 2;
    double jx = 1.0, jy = 1.0, jz = 1.0, hz = 0.0;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    out << bytes;
    if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool is_zero_matrix(const fable::ComplexMatrix& m)
{
    for (const fable::Complex& v : m.data)
        if (v != fable::Complex{}) return false;
    return true;
}

fable::ReportDocument build_report(const std::string& command, const CliConfig& cfg,
                                   const std::string& input_bytes,
                                   const fable::EncodeResult& enc)
{
    fable::ReportDocument doc;
    doc.command = command;
    doc.input_path = cfg.input_path;
    doc.input_hash = fable::fnv1a64_hex(input_bytes);
    doc.n = enc.angles.n;
    doc.dimension = enc.target.rows;
    doc.delta_c = cfg.delta_c;
    const double dim = static_cast<double>(enc.target.rows);
    doc.error_bound = dim * dim * dim * cfg.delta_c;
    doc.scale = enc.scale;
    doc.alpha = enc.scale * enc.circuit.subnormalization;
    doc.ancillas = enc.circuit.ancilla_count;
    doc.is_complex = enc.angles.is_complex;
    doc.gates = fable::circuit_gate_stats(enc.circuit);
    doc.compression = enc.compression;
    if (is_zero_matrix(enc.target))
        doc.note = "input matrix is zero: the encoding is valid but the success "
                   "amplitude of the encoded block vanishes";
    return doc;
}

void print_encode_summary(const fable::ReportDocument& doc)
{
    std::cout << "input: " << doc.input_path << " (n=" << doc.n << ", N=" << doc.dimension << ", "
              << (doc.is_complex ? "complex" : "real") << ")\n";
    std::cout << "scale: " << fmt(doc.scale) << " (alpha = " << fmt(doc.alpha) << ", ancillas = "
              << doc.ancillas << ")\n";
    std::cout << "delta_c: " << fmt(doc.delta_c) << "\n";
    std::cout << "gates: h=" << doc.gates.hadamard << " ry=" << doc.gates.roty
              << " rz=" << doc.gates.rotz << " cx=" << doc.gates.cnot
              << " swap=" << doc.gates.swap << " total=" << doc.gates.total() << "\n";
    std::cout << "compression: rotations kept " << doc.compression.rotations_kept << ", removed "
              << doc.compression.rotations_removed << "; cnots kept " << doc.compression.cnots_kept
              << ", removed " << doc.compression.cnots_removed << "\n";
    if (doc.note) std::cout << "note: " << *doc.note << "\n";
}

int cmd_encode(const CliConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const std::string bytes = read_file(cfg.input_path);
    const fable::ComplexMatrix a = fable::read_matrix_market(bytes);
    const fable::EncodeResult enc =
        fable::encode_matrix(a, {.delta_c = cfg.delta_c, .auto_scale = cfg.auto_scale});

    fable::ReportDocument doc = build_report("encode", cfg, bytes, enc);
    if (cfg.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        doc.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }

    if (!cfg.qasm_path.empty()) write_file(cfg.qasm_path, fable::write_qasm(enc.circuit));
    if (!cfg.json_path.empty()) write_file(cfg.json_path, fable::to_json(doc).dump(2) + "\n");

    print_encode_summary(doc);
    if (!cfg.qasm_path.empty()) std::cout << "wrote qasm: " << cfg.qasm_path << "\n";
    if (!cfg.json_path.empty()) std::cout << "wrote report: " << cfg.json_path << "\n";
    if (cfg.timing && doc.timing_ms)
        std::cout << "timing_ms: " << *doc.timing_ms << "\n";
    return kOk;
}

int cmd_verify(const CliConfig& cfg)
{
    const std::string bytes = read_file(cfg.input_path);
    const fable::ComplexMatrix a = fable::read_matrix_market(bytes);
    const std::size_t n = a.encoding_qubits();
    if (2 * n + 1 > cfg.max_qubits)
        throw fable::ResourceError("verification needs " + std::to_string(2 * n + 1) +
                                   " qubits; raise --max-qubits (hard cap " +
                                   std::to_string(fable::kMaxSimulatedQubits) + ")");

    const fable::EncodeResult enc =
        fable::encode_matrix(a, {.delta_c = cfg.delta_c, .auto_scale = cfg.auto_scale});
    fable::Circuit circuit = enc.circuit;
    if (!cfg.qasm_path.empty()) {
        circuit = fable::parse_qasm(read_file(cfg.qasm_path));
        std::cout << "replaying circuit: " << cfg.qasm_path << "\n";
    }

    const fable::EncodingReport report = fable::verify_encoding(circuit, enc.target, cfg.delta_c);
    std::cout << "alpha             = " << fmt(enc.scale * report.alpha) << "\n";
    std::cout << "ancillas          = " << report.ancillas << "\n";
    std::cout << "epsilon_spectral  = " << fmt(report.epsilon_spectral) << "\n";
    std::cout << "epsilon_frobenius = " << fmt(report.epsilon_frobenius) << "\n";
    std::cout << "max_entry_error   = " << fmt(report.max_entry_error) << "\n";
    std::cout << "error_bound       = " << fmt(report.error_bound) << "\n";
    std::cout << "result: " << (report.passed ? "PASS" : "FAIL") << "\n";
    return report.passed ? kOk : kBoundViolation;
}

constexpr double kBenchThreshold = 1e-15;

struct BenchPoint {
    std::string model;
    std::size_t n;
    fable::ComplexMatrix matrix;
};

std::vector<BenchPoint> bench_points(const CliConfig& cfg)
{
    std::vector<BenchPoint> points;
    for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
        if (cfg.model == "heisenberg-xxx") {
            points.push_back({cfg.model, n,
                              fable::heisenberg_matrix({.n = n, .jx = 1, .jy = 1, .jz = 1, .hz = 0})});
        } else if (cfg.model == "laplacian-1d") {
            points.push_back(
                {cfg.model, n, fable::laplacian_1d(std::size_t{1} << n, cfg.periodic)});
        } else if (cfg.model == "laplacian-2d") {
            for (std::size_t a = 1; a + 1 <= n; ++a) {
                const std::size_t px = std::size_t{1} << a;
                const std::size_t py = std::size_t{1} << (n - a);
                points.push_back({cfg.model + "-" + std::to_string(px) + "x" + std::to_string(py),
                                  n, fable::laplacian_2d(px, py, cfg.periodic)});
            }
        } else {
            throw std::invalid_argument("unknown model '" + cfg.model + "'");
        }
    }
    return points;
}

int cmd_bench(const CliConfig& cfg)
{
    std::vector<fable::BenchRow> rows;
    bool all_passed = true;
    for (const BenchPoint& point : bench_points(cfg)) {
        const fable::EncodeResult enc =
            fable::encode_matrix(point.matrix, {.delta_c = kBenchThreshold, .auto_scale = true});
        const fable::GateStats stats = fable::circuit_gate_stats(enc.circuit);
        rows.push_back({point.model, point.n, stats.cnot, stats.roty, stats.rotz,
                        stats.cnot_fraction, stats.roty_fraction});
        std::cout << point.model << " n=" << point.n << ": cnot=" << stats.cnot
                  << " ry=" << stats.roty << " rz=" << stats.rotz;
        if (cfg.verify_points && point.n <= 5) {
            const fable::EncodingReport report =
                fable::verify_encoding(enc.circuit, enc.target, kBenchThreshold);
            std::cout << " verify=" << (report.passed ? "PASS" : "FAIL")
                      << " eps=" << fmt(report.epsilon_spectral);
            all_passed = all_passed && report.passed;
        }
        std::cout << "\n";
    }
    if (!cfg.csv_path.empty()) write_file(cfg.csv_path, fable::write_bench_csv(rows));
    if (!cfg.csv_path.empty()) std::cout << "wrote csv: " << cfg.csv_path << "\n";
    return all_passed ? kOk : kBoundViolation;
}

int cmd_model(const CliConfig& cfg)
{
    fable::ComplexMatrix m;
    try {
        if (cfg.model == "heisenberg") {
            m = fable::heisenberg_matrix(
                {.n = cfg.sites, .jx = cfg.jx, .jy = cfg.jy, .jz = cfg.jz, .hz = cfg.hz});
        } else if (cfg.model == "laplacian-1d") {
            m = fable::laplacian_1d(cfg.points, cfg.periodic);
        } else if (cfg.model == "laplacian-2d") {
            m = fable::laplacian_2d(cfg.points_x, cfg.points_y, cfg.periodic);
        } else {
            throw std::invalid_argument("unknown model '" + cfg.model + "'");
        }
    } catch (const fable::EncodingError& e) {
        // A spec the generators reject is a bad model request, not bad input data.
        throw std::invalid_argument(e.what());
    }
    write_file(cfg.output_path, fable::write_matrix_market(m));
    std::cout << "wrote " << m.rows << "x" << m.cols << " matrix: " << cfg.output_path << "\n";
    return kOk;
}

int dispatch(int (*command)(const CliConfig&), const CliConfig& cfg)
{
    try {
        return command(cfg);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kIoError;
    } catch (const fable::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInvalidMatrix;
    } catch (const fable::EncodingError& e) {
        std::cerr << "invalid matrix: " << e.what() << "\n";
        return kInvalidMatrix;
    } catch (const fable::ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadModel;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fable: block-encoding circuit compiler and verifier"};
    app.require_subcommand(1);
    CliConfig cfg;

    CLI::App* encode = app.add_subcommand("encode", "compile a matrix into a block-encoding circuit");
    encode->add_option("--input", cfg.input_path, "input matrix (Matrix Market)")->required();
    encode->add_option("--delta-c", cfg.delta_c, "compression threshold")->check(CLI::NonNegativeNumber);
    encode->add_flag_callback("--no-scale", [&cfg]() { cfg.auto_scale = false; },
                              "reject entries outside the unit disk instead of prescaling");
    encode->add_option("--qasm", cfg.qasm_path, "write the circuit as OpenQASM 2.0");
    encode->add_option("--json", cfg.json_path, "write the run report as JSON");
    encode->add_flag("--timing", cfg.timing, "include wall-clock timing in the report");

    CLI::App* verify = app.add_subcommand("verify", "simulate an encoding and certify its error");
    verify->add_option("--input", cfg.input_path, "input matrix (Matrix Market)")->required();
    verify->add_option("--delta-c", cfg.delta_c, "compression threshold")->check(CLI::NonNegativeNumber);
    verify->add_flag_callback("--no-scale", [&cfg]() { cfg.auto_scale = false; },
                              "reject entries outside the unit disk instead of prescaling");
    verify->add_option("--qasm", cfg.qasm_path, "replay a previously emitted circuit file");
    verify->add_option("--max-qubits", cfg.max_qubits, "simulation cap (default 13, hard cap 21)")
        ->check(CLI::Range(std::size_t{1}, fable::kMaxSimulatedQubits));

    CLI::App* bench = app.add_subcommand("bench", "sweep a model family and record gate counts");
    bench->add_option("--model", cfg.model, "heisenberg-xxx | laplacian-1d | laplacian-2d")
        ->required();
    bench->add_option("--min-n", cfg.min_n, "smallest qubit count")->check(CLI::PositiveNumber);
    bench->add_option("--max-n", cfg.max_n, "largest qubit count")->check(CLI::PositiveNumber);
    bench->add_flag("--periodic", cfg.periodic, "periodic boundary conditions (laplacians)");
    bench->add_option("--csv", cfg.csv_path, "write the sweep table as CSV");
    bench->add_flag("--verify", cfg.verify_points, "simulate and certify points with n <= 5");

    CLI::App* model = app.add_subcommand("model", "generate a benchmark matrix");
    model->add_option("name", cfg.model, "heisenberg | laplacian-1d | laplacian-2d")->required();
    model->add_option("--output", cfg.output_path, "output path (Matrix Market)")->required();
    model->add_option("--n", cfg.sites, "spin chain sites");
    model->add_option("--jx", cfg.jx, "XX coupling");
    model->add_option("--jy", cfg.jy, "YY coupling");
    model->add_option("--jz", cfg.jz, "ZZ coupling");
    model->add_option("--hz", cfg.hz, "longitudinal field");
    model->add_option("--points", cfg.points, "1D grid points (power of two)");
    model->add_option("--px", cfg.points_x, "2D grid points along x");
    model->add_option("--py", cfg.points_y, "2D grid points along y");
    model->add_flag("--periodic", cfg.periodic, "periodic boundary conditions");

    CLI11_PARSE(app, argc, argv);

    if (encode->parsed()) return dispatch(cmd_encode, cfg);
    if (verify->parsed()) return dispatch(cmd_verify, cfg);
    if (bench->parsed()) return dispatch(cmd_bench, cfg);
    return dispatch(cmd_model, cfg);
}

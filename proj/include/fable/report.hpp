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

#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fable/circuit.hpp"
#include "fable/compress.hpp"
#include "fable/simulate.hpp"

namespace fable {

/// FNV-1a over raw bytes; identifies the input file in reports.
inline std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

inline std::string fnv1a64_hex(std::string_view bytes)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

/// Machine-readable record of one pipeline run. Serializes to versioned JSON
/// and parses back losslessly.
struct ReportDocument {
    int schema = 1;
    std::string command;
    std::string input_path;
    std::string input_hash;
    std::size_t n = 0;
    std::size_t dimension = 0;
    double delta_c = 0.0;
    double error_bound = 0.0; // N^3 * delta_c
    double scale = 1.0;
    double alpha = 1.0;
    std::size_t ancillas = 0;
    bool is_complex = false;
    GateStats gates;
    CompressionReport compression;
    std::optional<EncodingReport> encoding;
    std::optional<std::string> note;
    std::optional<std::int64_t> timing_ms;
};

inline nlohmann::json to_json(const ReportDocument& doc)
{
    nlohmann::json j;
    j["schema"] = doc.schema;
    j["command"] = doc.command;
    j["input"] = {{"path", doc.input_path}, {"hash", doc.input_hash}};
    j["n"] = doc.n;
    j["dimension"] = doc.dimension;
    j["delta_c"] = doc.delta_c;
    j["error_bound"] = doc.error_bound;
    j["scale"] = doc.scale;
    j["alpha"] = doc.alpha;
    j["ancillas"] = doc.ancillas;
    j["is_complex"] = doc.is_complex;
    j["gates"] = {{"h", doc.gates.hadamard}, {"ry", doc.gates.roty},   {"rz", doc.gates.rotz},
                  {"cx", doc.gates.cnot},    {"swap", doc.gates.swap}, {"total", doc.gates.total()}};
    j["fractions"] = {{"ry", doc.gates.roty_fraction},
                      {"rz", doc.gates.rotz_fraction},
                      {"cx", doc.gates.cnot_fraction}};
    j["compression"] = {{"threshold", doc.compression.threshold},
                        {"rotations_removed", doc.compression.rotations_removed},
                        {"rotations_kept", doc.compression.rotations_kept},
                        {"cnots_removed", doc.compression.cnots_removed},
                        {"cnots_kept", doc.compression.cnots_kept}};
    if (doc.encoding) {
        j["encoding"] = {{"alpha", doc.encoding->alpha},
                         {"ancillas", doc.encoding->ancillas},
                         {"epsilon_spectral", doc.encoding->epsilon_spectral},
                         {"epsilon_frobenius", doc.encoding->epsilon_frobenius},
                         {"max_entry_error", doc.encoding->max_entry_error},
                         {"error_bound", doc.encoding->error_bound},
                         {"passed", doc.encoding->passed}};
    }
    if (doc.note) j["note"] = *doc.note;
    if (doc.timing_ms) j["timing_ms"] = *doc.timing_ms;
    return j;
}

inline ReportDocument report_from_json(const nlohmann::json& j)
{
    ReportDocument doc;
    doc.schema = j.at("schema").get<int>();
    doc.command = j.at("command").get<std::string>();
    doc.input_path = j.at("input").at("path").get<std::string>();
    doc.input_hash = j.at("input").at("hash").get<std::string>();
    doc.n = j.at("n").get<std::size_t>();
    doc.dimension = j.at("dimension").get<std::size_t>();
    doc.delta_c = j.at("delta_c").get<double>();
    doc.error_bound = j.at("error_bound").get<double>();
    doc.scale = j.at("scale").get<double>();
    doc.alpha = j.at("alpha").get<double>();
    doc.ancillas = j.at("ancillas").get<std::size_t>();
    doc.is_complex = j.at("is_complex").get<bool>();
    doc.gates.hadamard = j.at("gates").at("h").get<std::size_t>();
    doc.gates.roty = j.at("gates").at("ry").get<std::size_t>();
    doc.gates.rotz = j.at("gates").at("rz").get<std::size_t>();
    doc.gates.cnot = j.at("gates").at("cx").get<std::size_t>();
    doc.gates.swap = j.at("gates").at("swap").get<std::size_t>();
    doc.gates.roty_fraction = j.at("fractions").at("ry").get<double>();
    doc.gates.rotz_fraction = j.at("fractions").at("rz").get<double>();
    doc.gates.cnot_fraction = j.at("fractions").at("cx").get<double>();
    doc.compression.threshold = j.at("compression").at("threshold").get<double>();
    doc.compression.rotations_removed = j.at("compression").at("rotations_removed").get<std::size_t>();
    doc.compression.rotations_kept = j.at("compression").at("rotations_kept").get<std::size_t>();
    doc.compression.cnots_removed = j.at("compression").at("cnots_removed").get<std::size_t>();
    doc.compression.cnots_kept = j.at("compression").at("cnots_kept").get<std::size_t>();
    if (j.contains("encoding")) {
        EncodingReport enc;
        enc.alpha = j.at("encoding").at("alpha").get<double>();
        enc.ancillas = j.at("encoding").at("ancillas").get<std::size_t>();
        enc.epsilon_spectral = j.at("encoding").at("epsilon_spectral").get<double>();
        enc.epsilon_frobenius = j.at("encoding").at("epsilon_frobenius").get<double>();
        enc.max_entry_error = j.at("encoding").at("max_entry_error").get<double>();
        enc.error_bound = j.at("encoding").at("error_bound").get<double>();
        enc.passed = j.at("encoding").at("passed").get<bool>();
        doc.encoding = enc;
    }
    if (j.contains("note")) doc.note = j.at("note").get<std::string>();
    if (j.contains("timing_ms")) doc.timing_ms = j.at("timing_ms").get<std::int64_t>();
    return doc;
}

/// One benchmark sweep point.
struct BenchRow {
    std::string model;
    std::size_t n = 0;
    std::size_t cnot = 0;
    std::size_t roty = 0;
    std::size_t rotz = 0;
    double cnot_fraction = 0.0;
    double roty_fraction = 0.0;
};

inline std::string write_bench_csv(const std::vector<BenchRow>& rows)
{
    std::ostringstream out;
    out << "model,n,cnot,roty,rotz,cnot_fraction,roty_fraction\n";
    char buf[32];
    for (const BenchRow& row : rows) {
        out << row.model << "," << row.n << "," << row.cnot << "," << row.roty << "," << row.rotz;
        std::snprintf(buf, sizeof(buf), "%.6f", row.cnot_fraction);
        out << "," << buf;
        std::snprintf(buf, sizeof(buf), "%.6f", row.roty_fraction);
        out << "," << buf << "\n";
    }
    return out.str();
}

} // namespace fable

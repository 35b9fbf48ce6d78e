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

#include <cstdio>
#include <sstream>
#include <string>

#include "fable/circuit.hpp"
#include "fable/errors.hpp"
#include "fable/matrix_market.hpp"

namespace fable {

/// OpenQASM 2.0 text for a circuit. Angles carry 17 significant digits so the
/// gate list round-trips exactly; gate order is preserved verbatim.
inline std::string write_qasm(const Circuit& c)
{
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_qubits << "];\n";
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::Hadamard: out << "h q[" << g.target << "];\n"; break;
            case GateKind::RotY:
                out << "ry(" << detail::format_double(g.angle) << ") q[" << g.target << "];\n";
                break;
            case GateKind::RotZ:
                out << "rz(" << detail::format_double(g.angle) << ") q[" << g.target << "];\n";
                break;
            case GateKind::Cnot:
                out << "cx q[" << g.control << "],q[" << g.target << "];\n";
                break;
            case GateKind::Swap:
                out << "swap q[" << g.target << "],q[" << g.second << "];\n";
                break;
        }
    }
    return out.str();
}

namespace detail {

inline std::string strip_qasm_line(std::string line)
{
    const auto comment = line.find("//");
    if (comment != std::string::npos) line.erase(comment);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

inline std::size_t parse_qubit_operand(const std::string& token)
{
    const auto open = token.find("q[");
    const auto close = token.find(']', open);
    if (open == std::string::npos || close == std::string::npos)
        throw ParseError(ParseError::Kind::BadValue, "bad qubit operand '" + token + "'");
    return static_cast<std::size_t>(std::stoull(token.substr(open + 2, close - open - 2)));
}

} // namespace detail

/// Minimal parser for the gate set this library emits. Used to replay emitted
/// circuits for verification and for round-trip tests.
inline Circuit parse_qasm(const std::string& text)
{
    Circuit c;
    bool saw_version = false;
    bool saw_qreg = false;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        const std::string line = detail::strip_qasm_line(raw);
        if (line.empty()) continue;
        if (line.rfind("OPENQASM", 0) == 0) {
            if (line.find("2.0") == std::string::npos)
                throw ParseError(ParseError::Kind::BadHeader, "only OPENQASM 2.0 is supported");
            saw_version = true;
            continue;
        }
        if (line.rfind("include", 0) == 0) continue;
        if (line.rfind("qreg", 0) == 0) {
            const auto open = line.find('[');
            const auto close = line.find(']');
            if (open == std::string::npos || close == std::string::npos)
                throw ParseError(ParseError::Kind::BadHeader, "bad qreg declaration");
            c.num_qubits =
                static_cast<std::size_t>(std::stoull(line.substr(open + 1, close - open - 1)));
            saw_qreg = true;
            continue;
        }
        if (!saw_version || !saw_qreg)
            throw ParseError(ParseError::Kind::BadHeader, "gate before OPENQASM/qreg header");

        const auto space = line.find_first_of(" \t(");
        const std::string name = line.substr(0, space);
        const std::string rest = line.substr(space);
        if (name == "h") {
            c.append(Gate::h(detail::parse_qubit_operand(rest)));
        } else if (name == "ry" || name == "rz") {
            const auto open = line.find('(');
            const auto close = line.find(')');
            if (open == std::string::npos || close == std::string::npos)
                throw ParseError(ParseError::Kind::BadValue, "rotation gate missing angle");
            const double angle = std::stod(line.substr(open + 1, close - open - 1));
            const std::size_t target = detail::parse_qubit_operand(line.substr(close + 1));
            c.append(name == "ry" ? Gate::ry(target, angle) : Gate::rz(target, angle));
        } else if (name == "cx" || name == "swap") {
            const auto comma = rest.find(',');
            if (comma == std::string::npos)
                throw ParseError(ParseError::Kind::BadValue, "two-qubit gate needs two operands");
            const std::size_t first = detail::parse_qubit_operand(rest.substr(0, comma));
            const std::size_t second = detail::parse_qubit_operand(rest.substr(comma + 1));
            c.append(name == "cx" ? Gate::cnot(first, second) : Gate::swap(first, second));
        } else {
            throw ParseError(ParseError::Kind::BadValue, "unsupported gate '" + name + "'");
        }
    }
    if (!saw_version || !saw_qreg)
        throw ParseError(ParseError::Kind::BadHeader, "missing OPENQASM/qreg header");
    validate_circuit(c);
    return c;
}

} // namespace fable

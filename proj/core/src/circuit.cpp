// SPDX-License-Identifier: Apache-2.0

#include "qhelix/circuit.hpp"

#include "qhelix/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qhelix {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::Ry: return "ry";
    case GateKind::CX: return "cx";
    case GateKind::Measure: return "measure";
    }
    return "?";
}

namespace {

std::size_t arity(GateKind kind) { return kind == GateKind::CX ? 2 : 1; }

} // namespace

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw Error(errc::invalid_argument, "circuit needs at least one qubit");
    }
}

void Circuit::add(Instruction instr) {
    if (instr.qubits.size() != arity(instr.kind)) {
        throw Error(errc::invalid_argument,
                    "gate '" + std::string(gate_name(instr.kind)) + "' expects " +
                        std::to_string(arity(instr.kind)) + " qubit(s), got " +
                        std::to_string(instr.qubits.size()));
    }
    for (int q : instr.qubits) {
        if (q < 0 || q >= n_qubits_) {
            throw Error(errc::invalid_argument,
                        "qubit index " + std::to_string(q) + " out of range for " +
                            std::to_string(n_qubits_) + "-qubit circuit");
        }
    }
    if (instr.qubits.size() == 2 && instr.qubits[0] == instr.qubits[1]) {
        throw Error(errc::invalid_argument, "cx control and target must differ");
    }
    if (instr.kind == GateKind::Ry && !std::isfinite(instr.angle)) {
        throw Error(errc::invalid_argument, "ry angle must be finite");
    }
    instructions_.push_back(std::move(instr));
}

CircuitStats count_ops(const Circuit& circuit) {
    CircuitStats stats;
    for (const auto& instr : circuit.instructions()) {
        ++stats.counts[std::string(gate_name(instr.kind))];
        if (is_unitary(instr.kind)) {
            ++stats.total_unitary_gates;
        }
    }
    stats.depth = depth(circuit);
    return stats;
}

int depth(const Circuit& circuit) {
    std::vector<int> qubit_layer(static_cast<std::size_t>(circuit.n_qubits()), 0);
    int max_layer = 0;
    for (const auto& instr : circuit.instructions()) {
        int layer = 0;
        for (int q : instr.qubits) {
            layer = std::max(layer, qubit_layer[static_cast<std::size_t>(q)]);
        }
        ++layer;
        for (int q : instr.qubits) {
            qubit_layer[static_cast<std::size_t>(q)] = layer;
        }
        max_layer = std::max(max_layer, layer);
    }
    return max_layer;
}

std::string export_qasm(const Circuit& circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.n_qubits() << "];\n";
    out << "creg c[" << circuit.n_qubits() << "];\n";
    for (const auto& instr : circuit.instructions()) {
        switch (instr.kind) {
        case GateKind::Ry: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.15g", instr.angle);
            out << "ry(" << buf << ") q[" << instr.qubits[0] << "];\n";
            break;
        }
        case GateKind::CX:
            out << "cx q[" << instr.qubits[0] << "],q[" << instr.qubits[1] << "];\n";
            break;
        case GateKind::Measure:
            out << "measure q[" << instr.qubits[0] << "] -> c[" << instr.qubits[0] << "];\n";
            break;
        default:
            out << gate_name(instr.kind) << " q[" << instr.qubits[0] << "];\n";
            break;
        }
    }
    return out.str();
}

namespace {

void strip(std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    s = (begin == std::string::npos) ? "" : s.substr(begin, end - begin + 1);
}

int parse_index(const std::string& token, char reg) {
    // expects reg + "[<int>]"
    const auto open = token.find('[');
    const auto close = token.find(']');
    if (open == std::string::npos || close == std::string::npos || token[0] != reg) {
        throw Error(errc::parse, "malformed register reference: " + token);
    }
    return std::stoi(token.substr(open + 1, close - open - 1));
}

} // namespace

Circuit parse_qasm(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n_qubits = -1;
    std::vector<Instruction> pending;
    while (std::getline(in, line)) {
        if (const auto semi = line.find(';'); semi != std::string::npos) {
            line = line.substr(0, semi);
        }
        strip(line);
        if (line.empty() || line.starts_with("OPENQASM") || line.starts_with("include") ||
            line.starts_with("creg")) {
            continue;
        }
        if (line.starts_with("qreg")) {
            n_qubits = parse_index(line.substr(5), 'q');
            continue;
        }
        const auto space = line.find(' ');
        if (space == std::string::npos) {
            throw Error(errc::parse, "malformed qasm line: " + line);
        }
        std::string head = line.substr(0, space);
        std::string args = line.substr(space + 1);
        strip(args);
        if (head == "h") {
            pending.push_back({GateKind::H, {parse_index(args, 'q')}});
        } else if (head == "s") {
            pending.push_back({GateKind::S, {parse_index(args, 'q')}});
        } else if (head == "sdg") {
            pending.push_back({GateKind::Sdg, {parse_index(args, 'q')}});
        } else if (head.starts_with("ry(")) {
            const auto close = head.find(')');
            if (close == std::string::npos) {
                throw Error(errc::parse, "malformed ry: " + line);
            }
            const double angle = std::stod(head.substr(3, close - 3));
            pending.push_back({GateKind::Ry, {parse_index(args, 'q')}, angle});
        } else if (head == "cx") {
            const auto comma = args.find(',');
            if (comma == std::string::npos) {
                throw Error(errc::parse, "malformed cx: " + line);
            }
            std::string lhs = args.substr(0, comma);
            std::string rhs = args.substr(comma + 1);
            strip(lhs);
            strip(rhs);
            pending.push_back({GateKind::CX, {parse_index(lhs, 'q'), parse_index(rhs, 'q')}});
        } else if (head == "measure") {
            const auto arrow = args.find("->");
            std::string lhs = (arrow == std::string::npos) ? args : args.substr(0, arrow);
            strip(lhs);
            pending.push_back({GateKind::Measure, {parse_index(lhs, 'q')}});
        } else {
            throw Error(errc::parse, "unsupported qasm statement: " + line);
        }
    }
    if (n_qubits < 1) {
        throw Error(errc::parse, "missing qreg declaration");
    }
    Circuit circuit(n_qubits);
    for (auto& instr : pending) {
        circuit.add(std::move(instr));
    }
    return circuit;
}

} // namespace qhelix

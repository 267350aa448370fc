// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

namespace qhelix {

enum class GateKind {
    H,
    S,
    Sdg,
    Ry,
    CX,
    Measure,
};

/// Lowercase OpenQASM 2.0 name for a gate kind (h, s, sdg, ry, cx, measure).
std::string_view gate_name(GateKind kind) noexcept;

constexpr bool is_unitary(GateKind kind) noexcept { return kind != GateKind::Measure; }

/// One gate applied to specific qubits. For CX, qubits = [control, target].
/// `angle` is meaningful only for Ry and must be finite.
struct Instruction {
    GateKind kind;
    std::vector<int> qubits;
    double angle = 0.0;

    bool operator==(const Instruction&) const = default;
};

/// Ordered gate-level circuit over a fixed qubit register. Instruction order
/// is the physical time order of application.
class Circuit {
public:
    explicit Circuit(int n_qubits);

    int n_qubits() const noexcept { return n_qubits_; }
    const std::vector<Instruction>& instructions() const noexcept { return instructions_; }
    bool empty() const noexcept { return instructions_.empty(); }

    /// Appends an instruction after validating qubit indices and arity.
    void add(Instruction instr);

    void h(int qubit) { add({GateKind::H, {qubit}}); }
    void s(int qubit) { add({GateKind::S, {qubit}}); }
    void sdg(int qubit) { add({GateKind::Sdg, {qubit}}); }
    void ry(int qubit, double angle) { add({GateKind::Ry, {qubit}, angle}); }
    void cx(int control, int target) { add({GateKind::CX, {control, target}}); }
    void measure(int qubit) { add({GateKind::Measure, {qubit}}); }

    bool operator==(const Circuit&) const = default;

private:
    int n_qubits_;
    std::vector<Instruction> instructions_;
};

struct CircuitStats {
    std::map<std::string, int> counts; // gate name -> count, Measure included
    int total_unitary_gates = 0;       // excludes Measure
    int depth = 0;
};

/// Per-kind gate census. total_unitary_gates excludes measurements; the
/// returned depth includes them (see depth()).
CircuitStats count_ops(const Circuit& circuit);

/// ASAP layering depth: each instruction lands at 1 + the latest layer among
/// its qubits. Measure instructions occupy a layer on their qubit.
int depth(const Circuit& circuit);

/// Serializes to OpenQASM 2.0 text (qelib1.inc gate names). Angles are
/// printed with 15 significant digits.
std::string export_qasm(const Circuit& circuit);

/// Parses OpenQASM 2.0 text produced by export_qasm back into a Circuit.
/// Only the gate subset h, s, sdg, ry, cx, measure is accepted.
Circuit parse_qasm(const std::string& text);

} // namespace qhelix

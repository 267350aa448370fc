// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelix/circuit.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qhelix {

inline constexpr int kMaxQubits = 12;

/// Dense 2^n statevector. Qubit 0 is the least-significant bit of the
/// amplitude index; bitstring renderings put qubit n-1 leftmost.
struct StateVector {
    int n_qubits = 0;
    std::vector<std::complex<double>> amplitudes;
};

struct OutcomeDistribution {
    int n_qubits = 0;
    std::vector<double> probabilities;
};

struct ShotCounts {
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts; // bitstring -> occurrences
};

/// |0...0> on n qubits.
StateVector zero_state(int n);

/// |+>^n: every amplitude 2^(-n/2). Requires 1 <= n <= 12.
StateVector uniform_superposition(int n);

/// Applies one unitary gate; Measure is rejected. Norm is preserved.
StateVector apply_gate(StateVector state, const Instruction& instr);

/// Runs all unitary instructions in order starting from |0...0>. Trailing
/// Measure instructions are ignored for state evolution.
StateVector run(const Circuit& circuit);

/// Born-rule probabilities |amplitude_k|^2.
OutcomeDistribution probabilities(const StateVector& state);

/// Deterministic multinomial sampling: `shots` inverse-CDF draws using
/// std::mt19937_64 seeded with `seed`. Identical inputs give identical counts.
ShotCounts sample(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed);

/// Renders outcome index k as a bitstring, qubit n-1 first.
std::string bitstring(std::uint64_t index, int n_qubits);

} // namespace qhelix

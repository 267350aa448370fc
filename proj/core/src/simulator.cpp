// SPDX-License-Identifier: Apache-2.0

#include "qhelix/simulator.hpp"

#include "qhelix/errors.hpp"

#include <cmath>
#include <random>

namespace qhelix {

namespace {

using Complex = std::complex<double>;

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw Error(errc::invalid_argument,
                    "qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                        std::to_string(n));
    }
}

// In-place single-qubit gate: iterate index pairs differing at bit `qubit`.
void apply_single(std::vector<Complex>& amps, int qubit, Complex u00, Complex u01, Complex u10,
                  Complex u11) {
    const std::uint64_t stride = 1ULL << qubit;
    const std::uint64_t size = amps.size();
    for (std::uint64_t base = 0; base < size; base += 2 * stride) {
        for (std::uint64_t offset = 0; offset < stride; ++offset) {
            const std::uint64_t i0 = base + offset;
            const std::uint64_t i1 = i0 + stride;
            const Complex a0 = amps[i0];
            const Complex a1 = amps[i1];
            amps[i0] = u00 * a0 + u01 * a1;
            amps[i1] = u10 * a0 + u11 * a1;
        }
    }
}

void apply_cx(std::vector<Complex>& amps, int control, int target) {
    const std::uint64_t cmask = 1ULL << control;
    const std::uint64_t tmask = 1ULL << target;
    const std::uint64_t size = amps.size();
    for (std::uint64_t k = 0; k < size; ++k) {
        if ((k & cmask) != 0 && (k & tmask) == 0) {
            std::swap(amps[k], amps[k | tmask]);
        }
    }
}

} // namespace

StateVector zero_state(int n) {
    check_qubit_count(n);
    StateVector state{n, std::vector<Complex>(1ULL << n, Complex{0.0, 0.0})};
    state.amplitudes[0] = Complex{1.0, 0.0};
    return state;
}

StateVector uniform_superposition(int n) {
    check_qubit_count(n);
    const double amp = std::pow(2.0, -0.5 * n);
    return StateVector{n, std::vector<Complex>(1ULL << n, Complex{amp, 0.0})};
}

StateVector apply_gate(StateVector state, const Instruction& instr) {
    constexpr Complex i{0.0, 1.0};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (instr.kind) {
    case GateKind::H:
        apply_single(state.amplitudes, instr.qubits[0], inv_sqrt2, inv_sqrt2, inv_sqrt2,
                     -inv_sqrt2);
        break;
    case GateKind::S:
        apply_single(state.amplitudes, instr.qubits[0], 1.0, 0.0, 0.0, i);
        break;
    case GateKind::Sdg:
        apply_single(state.amplitudes, instr.qubits[0], 1.0, 0.0, 0.0, -i);
        break;
    case GateKind::Ry: {
        const double c = std::cos(instr.angle / 2.0);
        const double s = std::sin(instr.angle / 2.0);
        apply_single(state.amplitudes, instr.qubits[0], c, -s, s, c);
        break;
    }
    case GateKind::CX:
        apply_cx(state.amplitudes, instr.qubits[0], instr.qubits[1]);
        break;
    case GateKind::Measure:
        throw Error(errc::invalid_argument,
                    "apply_gate cannot handle measure; use probabilities/sample");
    }
    return state;
}

StateVector run(const Circuit& circuit) {
    check_qubit_count(circuit.n_qubits());
    StateVector state = zero_state(circuit.n_qubits());
    bool measured = false;
    for (const auto& instr : circuit.instructions()) {
        if (instr.kind == GateKind::Measure) {
            measured = true;
            continue;
        }
        if (measured) {
            throw Error(errc::invalid_argument,
                        "unitary gate after measurement is not supported");
        }
        state = apply_gate(std::move(state), instr);
    }
    return state;
}

OutcomeDistribution probabilities(const StateVector& state) {
    OutcomeDistribution dist{state.n_qubits, {}};
    dist.probabilities.reserve(state.amplitudes.size());
    for (const auto& amp : state.amplitudes) {
        dist.probabilities.push_back(std::norm(amp));
    }
    return dist;
}

ShotCounts sample(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw Error(errc::invalid_argument, "shots must be >= 1");
    }
    std::vector<double> cumulative;
    cumulative.reserve(dist.probabilities.size());
    double total = 0.0;
    for (double p : dist.probabilities) {
        total += p;
        cumulative.push_back(total);
    }
    std::mt19937_64 rng(seed);
    ShotCounts result{shots, {}};
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        // 53-bit uniform in [0, 1); scaled by the actual total to absorb
        // rounding in the cumulative sum.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        std::size_t outcome = cumulative.size() - 1;
        for (std::size_t k = 0; k < cumulative.size(); ++k) {
            if (u < cumulative[k]) {
                outcome = k;
                break;
            }
        }
        ++result.counts[bitstring(outcome, dist.n_qubits)];
    }
    return result;
}

std::string bitstring(std::uint64_t index, int n_qubits) {
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> q) & 1ULL) {
            bits[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
        }
    }
    return bits;
}

} // namespace qhelix

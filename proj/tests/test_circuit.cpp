// SPDX-License-Identifier: Apache-2.0

#include "qhelix/circuit.hpp"
#include "qhelix/errors.hpp"
#include "qhelix/ewl.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qhelix;

namespace {

Circuit example_ewl(int n) {
    StrategyAngles theta;
    theta.theta.assign(static_cast<std::size_t>(n), 0.7);
    return build_ewl_circuit(theta);
}

} // namespace

TEST_CASE("count_ops on the 4-qubit EWL circuit matches the known census") {
    const auto stats = count_ops(example_ewl(4));
    CHECK(stats.counts.at("h") == 4);
    CHECK(stats.counts.at("cx") == 6);
    CHECK(stats.counts.at("s") == 4);
    CHECK(stats.counts.at("ry") == 4);
    CHECK(stats.counts.at("sdg") == 4);
    CHECK(stats.counts.at("measure") == 4);
    CHECK(stats.total_unitary_gates == 22);
    CHECK(stats.depth == 11);
}

TEST_CASE("count_ops on an empty circuit") {
    const Circuit circuit(3);
    const auto stats = count_ops(circuit);
    CHECK(stats.counts.empty());
    CHECK(stats.total_unitary_gates == 0);
    CHECK(stats.depth == 0);
}

TEST_CASE("EWL unitary gate count is 6n-2 for n in [2,8]") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(count_ops(example_ewl(n)).total_unitary_gates == 6 * n - 2);
    }
}

TEST_CASE("depth of a single gate is 1") {
    Circuit circuit(1);
    circuit.h(0);
    CHECK(depth(circuit) == 1);
}

TEST_CASE("EWL depth is 2n+3 for n in [2,8]") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(depth(example_ewl(n)) == 2 * n + 3);
    }
}

TEST_CASE("count totals include measurements and equal instruction count") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Circuit circuit(4);
        const int gates = static_cast<int>(rng() % 25);
        for (int g = 0; g < gates; ++g) {
            const int q = static_cast<int>(rng() % 4);
            switch (rng() % 6) {
            case 0: circuit.h(q); break;
            case 1: circuit.s(q); break;
            case 2: circuit.sdg(q); break;
            case 3: circuit.ry(q, 0.1 * static_cast<double>(rng() % 60)); break;
            case 4: circuit.cx(q, (q + 1) % 4); break;
            default: circuit.measure(q); break;
            }
        }
        const auto stats = count_ops(circuit);
        int total = 0;
        for (const auto& [name, count] : stats.counts) {
            total += count;
        }
        CHECK(total == static_cast<int>(circuit.instructions().size()));
    }
}

TEST_CASE("appending an instruction never decreases depth") {
    Circuit circuit(3);
    int previous = 0;
    std::mt19937_64 rng(11);
    for (int g = 0; g < 40; ++g) {
        const int q = static_cast<int>(rng() % 3);
        if (rng() % 3 == 0) {
            circuit.cx(q, (q + 1) % 3);
        } else {
            circuit.h(q);
        }
        const int current = depth(circuit);
        CHECK(current >= previous);
        previous = current;
    }
}

TEST_CASE("depth is bounded below by the busiest qubit") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Circuit circuit(4);
        std::array<int, 4> touches{};
        for (int g = 0; g < 30; ++g) {
            const int q = static_cast<int>(rng() % 4);
            if (rng() % 4 == 0) {
                const int t = (q + 1) % 4;
                circuit.cx(q, t);
                ++touches[static_cast<std::size_t>(q)];
                ++touches[static_cast<std::size_t>(t)];
            } else {
                circuit.h(q);
                ++touches[static_cast<std::size_t>(q)];
            }
        }
        const int busiest = *std::max_element(touches.begin(), touches.end());
        CHECK(depth(circuit) >= busiest);
    }
}

TEST_CASE("invalid instructions are rejected") {
    Circuit circuit(2);
    CHECK_THROWS_AS(circuit.h(2), Error);
    CHECK_THROWS_AS(circuit.h(-1), Error);
    CHECK_THROWS_AS(circuit.cx(1, 1), Error);
    CHECK_THROWS_AS(circuit.ry(0, std::nan("")), Error);
    CHECK_THROWS_AS(Circuit(0), Error);
}

TEST_CASE("qasm export emits fixed syntax") {
    Circuit circuit(3);
    circuit.h(0);
    circuit.measure(2);
    const std::string qasm = export_qasm(circuit);
    CHECK(qasm.find("OPENQASM 2.0;") != std::string::npos);
    CHECK(qasm.find("qreg q[3];") != std::string::npos);
    CHECK(qasm.find("creg c[3];") != std::string::npos);
    CHECK(qasm.find("h q[0];") != std::string::npos);
    CHECK(qasm.find("measure q[2] -> c[2];") != std::string::npos);
}

TEST_CASE("qasm round-trip reproduces the EWL circuit exactly") {
    StrategyAngles theta{{1.5911977420039416, 1.2108756434088537, 0.2337700106810431,
                          0.8018199556055978}};
    const Circuit original = build_ewl_circuit(theta);
    const std::string qasm = export_qasm(original);

    // 26 instruction lines after the 4 header lines.
    int instruction_lines = -4;
    for (char c : qasm) {
        if (c == '\n') {
            ++instruction_lines;
        }
    }
    CHECK(instruction_lines == 26);

    const Circuit reparsed = parse_qasm(qasm);
    REQUIRE(reparsed.n_qubits() == original.n_qubits());
    REQUIRE(reparsed.instructions().size() == original.instructions().size());
    for (std::size_t i = 0; i < original.instructions().size(); ++i) {
        const auto& a = original.instructions()[i];
        const auto& b = reparsed.instructions()[i];
        CHECK(a.kind == b.kind);
        CHECK(a.qubits == b.qubits);
        CHECK(std::abs(a.angle - b.angle) < 1e-12);
    }
}

TEST_CASE("qasm round-trip on random circuits") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> angle(-6.0, 6.0);
    for (int trial = 0; trial < 25; ++trial) {
        Circuit circuit(4);
        const int gates = 1 + static_cast<int>(rng() % 30);
        for (int g = 0; g < gates; ++g) {
            const int q = static_cast<int>(rng() % 4);
            switch (rng() % 6) {
            case 0: circuit.h(q); break;
            case 1: circuit.s(q); break;
            case 2: circuit.sdg(q); break;
            case 3: circuit.ry(q, angle(rng)); break;
            case 4: circuit.cx(q, (q + 1) % 4); break;
            default: circuit.measure(q); break;
            }
        }
        const Circuit reparsed = parse_qasm(export_qasm(circuit));
        REQUIRE(reparsed.instructions().size() == circuit.instructions().size());
        for (std::size_t i = 0; i < circuit.instructions().size(); ++i) {
            CHECK(circuit.instructions()[i].kind == reparsed.instructions()[i].kind);
            CHECK(circuit.instructions()[i].qubits == reparsed.instructions()[i].qubits);
            CHECK(std::abs(circuit.instructions()[i].angle - reparsed.instructions()[i].angle) <
                  1e-12);
        }
    }
}

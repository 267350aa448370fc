// SPDX-License-Identifier: Apache-2.0
//
// Test-only brute-force oracles, deliberately independent of the fast
// simulator path: every gate is expanded to its full 2^n x 2^n matrix via
// Kronecker products and applied by dense matrix-vector multiplication.

#pragma once

#include "qhelix/circuit.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;
using Vector = std::vector<Complex>;

inline Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<Complex>(dim, Complex{0, 0}));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t ar = a.size(), ac = a[0].size();
    const std::size_t br = b.size(), bc = b[0].size();
    Matrix m(ar * br, std::vector<Complex>(ac * bc));
    for (std::size_t i = 0; i < ar; ++i) {
        for (std::size_t j = 0; j < ac; ++j) {
            for (std::size_t k = 0; k < br; ++k) {
                for (std::size_t l = 0; l < bc; ++l) {
                    m[i * br + k][j * bc + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return m;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size(), m = b[0].size(), inner = b.size();
    Matrix out(n, std::vector<Complex>(m, Complex{0, 0}));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            for (std::size_t j = 0; j < m; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline Vector matvec(const Matrix& a, const Vector& v) {
    Vector out(a.size(), Complex{0, 0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += a[i][j] * v[j];
        }
    }
    return out;
}

inline Matrix single_qubit_matrix(const qhelix::Instruction& instr) {
    const Complex i{0.0, 1.0};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (instr.kind) {
    case qhelix::GateKind::H:
        return {{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}};
    case qhelix::GateKind::S:
        return {{1.0, 0.0}, {0.0, i}};
    case qhelix::GateKind::Sdg:
        return {{1.0, 0.0}, {0.0, -i}};
    case qhelix::GateKind::Ry: {
        const double c = std::cos(instr.angle / 2.0);
        const double s = std::sin(instr.angle / 2.0);
        return {{c, -s}, {s, c}};
    }
    default:
        throw std::logic_error("not a single-qubit gate");
    }
}

// Full 2^n x 2^n unitary for one instruction. Qubit 0 is the least
// significant index bit, so qubit q sits at kron position n-1-q.
inline Matrix full_matrix(const qhelix::Instruction& instr, int n_qubits) {
    if (instr.kind == qhelix::GateKind::CX) {
        const std::uint64_t dim = 1ULL << n_qubits;
        const std::uint64_t cmask = 1ULL << instr.qubits[0];
        const std::uint64_t tmask = 1ULL << instr.qubits[1];
        Matrix m(dim, std::vector<Complex>(dim, Complex{0, 0}));
        for (std::uint64_t col = 0; col < dim; ++col) {
            const std::uint64_t row = (col & cmask) ? (col ^ tmask) : col;
            m[row][col] = 1.0;
        }
        return m;
    }
    const Matrix gate = single_qubit_matrix(instr);
    Matrix m = {{1.0}};
    for (int q = n_qubits - 1; q >= 0; --q) {
        m = kron(m, q == instr.qubits[0] ? gate : identity(2));
    }
    return m;
}

// Runs a circuit by full-matrix products from |0...0>.
inline Vector run_circuit(const qhelix::Circuit& circuit) {
    Vector state(1ULL << circuit.n_qubits(), Complex{0, 0});
    state[0] = 1.0;
    for (const auto& instr : circuit.instructions()) {
        if (instr.kind == qhelix::GateKind::Measure) {
            continue;
        }
        state = matvec(full_matrix(instr, circuit.n_qubits()), state);
    }
    return state;
}

// Dense matrix exponential by scaling-and-squaring Taylor series.
inline Matrix expm(const Matrix& a, int taylor_terms = 24) {
    const std::size_t dim = a.size();
    double max_abs = 0.0;
    for (const auto& row : a) {
        for (const auto& entry : row) {
            max_abs = std::max(max_abs, std::abs(entry));
        }
    }
    int squarings = 0;
    double scale = 1.0;
    while (max_abs * scale > 0.5) {
        scale /= 2.0;
        ++squarings;
    }
    Matrix scaled(dim, std::vector<Complex>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            scaled[i][j] = a[i][j] * scale;
        }
    }
    Matrix result = identity(dim);
    Matrix term = identity(dim);
    for (int k = 1; k <= taylor_terms; ++k) {
        term = matmul(term, scaled);
        for (auto& row : term) {
            for (auto& entry : row) {
                entry /= static_cast<double>(k);
            }
        }
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                result[i][j] += term[i][j];
            }
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = matmul(result, result);
    }
    return result;
}

} // namespace oracle

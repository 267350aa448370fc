// SPDX-License-Identifier: Apache-2.0

#include "qhelix/ewl.hpp"

#include "qhelix/errors.hpp"

#include <cmath>
#include <numeric>

namespace qhelix {

StrategyAngles angles_from_dominance(const DominanceWeights& weights) {
    StrategyAngles angles;
    angles.theta.reserve(kHelixCount);
    for (double p : weights.p) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw Error(errc::invalid_argument,
                        "dominance weight " + std::to_string(p) + " outside [0, 1]");
        }
        angles.theta.push_back(2.0 * std::asin(std::sqrt(p)));
    }
    return angles;
}

Circuit build_ewl_circuit(const StrategyAngles& theta) {
    const int n = static_cast<int>(theta.size());
    if (n < 2) {
        throw Error(errc::invalid_argument,
                    "EWL entangler needs at least 2 qubits, got " + std::to_string(n));
    }
    Circuit circuit(n);
    for (int q = 0; q < n; ++q) {
        circuit.h(q);
    }
    // Entangler J: S layer, then ascending CX chain.
    for (int q = 0; q < n; ++q) {
        circuit.s(q);
    }
    for (int q = 0; q + 1 < n; ++q) {
        circuit.cx(q, q + 1);
    }
    for (int q = 0; q < n; ++q) {
        circuit.ry(q, theta.theta[static_cast<std::size_t>(q)]);
    }
    // Inverse entangler: descending CX chain, then Sdg layer.
    for (int q = n - 2; q >= 0; --q) {
        circuit.cx(q, q + 1);
    }
    for (int q = 0; q < n; ++q) {
        circuit.sdg(q);
    }
    for (int q = 0; q < n; ++q) {
        circuit.measure(q);
    }
    return circuit;
}

OutcomeDistribution play_game(const StrategyAngles& theta) {
    return probabilities(run(build_ewl_circuit(theta)));
}

RecommenderScores marginal_scores(const OutcomeDistribution& dist) {
    RecommenderScores scores;
    scores.q.assign(static_cast<std::size_t>(dist.n_qubits), 0.0);
    for (std::size_t k = 0; k < dist.probabilities.size(); ++k) {
        for (int q = 0; q < dist.n_qubits; ++q) {
            if ((k >> q) & 1U) {
                scores.q[static_cast<std::size_t>(q)] += dist.probabilities[k];
            }
        }
    }
    const double total = std::accumulate(scores.q.begin(), scores.q.end(), 0.0);
    if (total <= 0.0) {
        throw Error(errc::degenerate_scores, "all marginal scores are zero");
    }
    scores.omega.reserve(scores.q.size());
    for (double value : scores.q) {
        scores.omega.push_back(value / total);
    }
    return scores;
}

} // namespace qhelix

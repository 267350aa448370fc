// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelix/circuit.hpp"
#include "qhelix/cordis.hpp"
#include "qhelix/simulator.hpp"

#include <vector>

namespace qhelix {

/// Per-actor Ry rotation angles, radians. Angles derived from dominance
/// weights lie in [0, pi].
struct StrategyAngles {
    std::vector<double> theta;

    std::size_t size() const noexcept { return theta.size(); }
};

/// Post-game marginals q_i = P(qubit i = 1) and their normalization omega.
struct RecommenderScores {
    std::vector<double> q;
    std::vector<double> omega;
};

/// theta_i = 2*arcsin(sqrt(p_i)); sin^2(theta_i/2) round-trips to p_i.
StrategyAngles angles_from_dominance(const DominanceWeights& weights);

/// EWL game circuit over n = theta.size() qubits (n >= 2), in time order:
/// H layer, entangler J (S layer then ascending CX chain), Ry(theta_i),
/// inverse entangler (descending CX chain then Sdg layer), full measurement.
/// For n = 4: 22 unitary gates, depth 11.
Circuit build_ewl_circuit(const StrategyAngles& theta);

/// Builds the circuit and returns the exact pre-measurement outcome
/// distribution.
OutcomeDistribution play_game(const StrategyAngles& theta);

/// Marginals per qubit; omega = q / sum(q). All-zero q is an error.
RecommenderScores marginal_scores(const OutcomeDistribution& dist);

} // namespace qhelix

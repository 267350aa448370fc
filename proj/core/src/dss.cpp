// SPDX-License-Identifier: Apache-2.0

#include "qhelix/dss.hpp"

#include "qhelix/errors.hpp"

#include <cmath>
#include <numeric>

namespace qhelix {

std::string_view mode_name(TrajectoryMode mode) noexcept {
    return mode == TrajectoryMode::Survival ? "survival" : "population";
}

TrajectoryMode parse_mode(std::string_view name) {
    if (name == "survival") {
        return TrajectoryMode::Survival;
    }
    if (name == "population") {
        return TrajectoryMode::Population;
    }
    throw Error(errc::invalid_argument,
                "mode must be 'survival' or 'population', got '" + std::string(name) + "'");
}

DssState uniform_dss_state() {
    DssState state;
    state.amplitudes.fill({0.5, 0.0});
    return state;
}

DssHamiltonian build_hamiltonian(const RecommenderScores& scores, double scale) {
    if (scores.q.size() != kHelixCount) {
        throw Error(errc::invalid_argument,
                    "expected " + std::to_string(kHelixCount) + " scores, got " +
                        std::to_string(scores.q.size()));
    }
    if (!(scale > 0.0)) {
        throw Error(errc::invalid_argument, "scale must be positive");
    }
    const double total = std::accumulate(scores.q.begin(), scores.q.end(), 0.0);
    if (total <= 0.0) {
        throw Error(errc::degenerate_scores, "all scores are zero");
    }
    DssHamiltonian hamiltonian;
    hamiltonian.scale = scale;
    for (std::size_t i = 0; i < kHelixCount; ++i) {
        hamiltonian.omega[i] = scale * scores.q[i] / total;
    }
    return hamiltonian;
}

DssState evolve(const DssHamiltonian& hamiltonian, const DssState& initial, double t) {
    DssState result;
    for (std::size_t i = 0; i < kHelixCount; ++i) {
        const double phase = -hamiltonian.omega[i] * t;
        result.amplitudes[i] =
            initial.amplitudes[i] * std::complex<double>{std::cos(phase), std::sin(phase)};
    }
    return result;
}

Trajectory trajectory(const DssHamiltonian& hamiltonian, const DssState& initial, double t_max,
                      int steps, TrajectoryMode mode) {
    if (steps < 2) {
        throw Error(errc::invalid_argument, "steps must be >= 2");
    }
    if (!(t_max > 0.0)) {
        throw Error(errc::invalid_argument, "t_max must be positive");
    }
    Trajectory result;
    result.mode = mode;
    result.times.reserve(static_cast<std::size_t>(steps));
    result.p_disruptive.reserve(static_cast<std::size_t>(steps));
    const double dt = t_max / (steps - 1);
    for (int step = 0; step < steps; ++step) {
        const double t = dt * step;
        const DssState evolved = evolve(hamiltonian, initial, t);
        double value = 0.0;
        if (mode == TrajectoryMode::Population) {
            value = std::norm(evolved.amplitudes[0]);
        } else {
            std::complex<double> overlap{0.0, 0.0};
            for (std::size_t i = 0; i < kHelixCount; ++i) {
                overlap += std::conj(initial.amplitudes[i]) * evolved.amplitudes[i];
            }
            value = std::norm(overlap);
        }
        result.times.push_back(t);
        result.p_disruptive.push_back(value);
    }
    return result;
}

} // namespace qhelix

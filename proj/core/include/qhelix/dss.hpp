// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelix/ewl.hpp"
#include "qhelix/helix.hpp"

#include <array>
#include <complex>
#include <string_view>
#include <vector>

namespace qhelix {

/// Diagonal 4-level Hamiltonian: omega_i = scale * q_i / sum(q). The
/// normalized frequencies omega_i / scale sum to 1.
struct DssHamiltonian {
    std::array<double, kHelixCount> omega{};
    double scale = 0.0;
};

/// State over the four helix levels (index 0 = Academia), unit norm.
struct DssState {
    std::array<std::complex<double>, kHelixCount> amplitudes{};
};

enum class TrajectoryMode {
    Survival,   // |<psi0|psi(t)>|^2, coherence-sensitive and oscillatory
    Population, // |<0|psi(t)>|^2, constant under a diagonal Hamiltonian
};

std::string_view mode_name(TrajectoryMode mode) noexcept;
TrajectoryMode parse_mode(std::string_view name);

struct Trajectory {
    std::vector<double> times;
    std::vector<double> p_disruptive;
    TrajectoryMode mode = TrajectoryMode::Survival;
};

/// Uniform initial state (1/2, 1/2, 1/2, 1/2).
DssState uniform_dss_state();

DssHamiltonian build_hamiltonian(const RecommenderScores& scores, double scale);

/// Closed-form evolution: amplitude_i(t) = exp(-i*omega_i*t) * amplitude_i(0).
DssState evolve(const DssHamiltonian& hamiltonian, const DssState& initial, double t);

/// Disruptive-capital probability on linspace(0, t_max, steps); steps >= 2.
Trajectory trajectory(const DssHamiltonian& hamiltonian, const DssState& initial, double t_max,
                      int steps, TrajectoryMode mode = TrajectoryMode::Survival);

} // namespace qhelix

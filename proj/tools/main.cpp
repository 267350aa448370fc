// SPDX-License-Identifier: Apache-2.0
//
// qhelix: quadruple-helix funding ingestion, EWL quantum game, and
// capital-trajectory evolution in one pipeline.
//
// Subcommands:
//   weights   - dominance weights and strategy angles from a funding table
//   game      - run the parameterized EWL game circuit
//   evolve    - trajectory from given marginal scores
//   pipeline  - full run, writing all artifacts into an output directory

#include "qhelix/cordis.hpp"
#include "qhelix/dss.hpp"
#include "qhelix/errors.hpp"
#include "qhelix/ewl.hpp"
#include "qhelix/simulator.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw qhelix::Error(qhelix::errc::io, "cannot write '" + path.string() + "'");
    }
    out << text;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text(out_path, text);
    }
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

json actor_map(const std::vector<double>& values) {
    json object = json::object();
    for (auto actor : qhelix::kAllActors) {
        object[std::string(qhelix::actor_name(actor))] =
            values[static_cast<std::size_t>(qhelix::qubit_of(actor))];
    }
    return object;
}

json weights_json(const std::string& project_id, const qhelix::DominanceWeights& weights,
                  const qhelix::StrategyAngles& angles) {
    json doc;
    doc["project_id"] = project_id;
    doc["p"] = actor_map({weights.p.begin(), weights.p.end()});
    doc["theta"] = actor_map(angles.theta);
    return doc;
}

json stats_json(const qhelix::CircuitStats& stats) {
    json doc;
    doc["counts"] = stats.counts;
    doc["total_unitary_gates"] = stats.total_unitary_gates;
    doc["depth"] = stats.depth;
    return doc;
}

std::string trajectory_csv(const qhelix::Trajectory& trajectory) {
    std::string csv = "t,p_disruptive\n";
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
        csv += format_number(trajectory.times[i]);
        csv += ',';
        csv += format_number(trajectory.p_disruptive[i]);
        csv += '\n';
    }
    return csv;
}

std::string distribution_csv(const qhelix::OutcomeDistribution& dist,
                             const qhelix::ShotCounts& counts) {
    std::string csv = "bitstring,probability,counts\n";
    for (std::size_t k = 0; k < dist.probabilities.size(); ++k) {
        const std::string bits = qhelix::bitstring(k, dist.n_qubits);
        const auto it = counts.counts.find(bits);
        csv += bits;
        csv += ',';
        csv += format_number(dist.probabilities[k]);
        csv += ',';
        csv += std::to_string(it == counts.counts.end() ? 0 : it->second);
        csv += '\n';
    }
    return csv;
}

struct PipelineConfig {
    std::string input_path;
    std::string project_id;
    std::uint64_t shots = 8192;
    std::uint64_t seed = 0;
    double scale = 2.0 * std::numbers::pi;
    double t_max = 50.0;
    int steps = 500;
    std::string mode = "survival";
    std::string output_dir;
};

int cmd_weights(const std::string& input, const std::string& project,
                const std::string& out_path) {
    const auto records = qhelix::load_participants(input);
    const auto weights = qhelix::compute_dominance(records, project);
    const auto angles = qhelix::angles_from_dominance(weights);
    emit(weights_json(project, weights, angles).dump(2) + "\n", out_path);
    return 0;
}

int cmd_game(std::vector<double> thetas, std::uint64_t shots, std::uint64_t seed, bool exact,
             const std::string& out_path) {
    const qhelix::StrategyAngles angles{std::move(thetas)};
    const auto circuit = qhelix::build_ewl_circuit(angles);
    const auto dist = qhelix::play_game(angles);
    const auto scores = qhelix::marginal_scores(dist);

    json doc;
    doc["theta"] = angles.theta;
    doc["n_qubits"] = dist.n_qubits;
    doc["distribution"] = dist.probabilities;
    doc["q"] = scores.q;
    doc["omega"] = scores.omega;
    doc["stats"] = stats_json(qhelix::count_ops(circuit));
    if (!exact) {
        const auto counts = qhelix::sample(dist, shots, seed);
        doc["shots"] = shots;
        doc["seed"] = seed;
        doc["counts"] = counts.counts;
    }
    emit(doc.dump(2) + "\n", out_path);
    return 0;
}

int cmd_evolve(const std::vector<double>& q, double scale, double t_max, int steps,
               const std::string& mode, const std::string& out_path) {
    qhelix::RecommenderScores scores;
    scores.q = q;
    const auto hamiltonian = qhelix::build_hamiltonian(scores, scale);
    const auto result = qhelix::trajectory(hamiltonian, qhelix::uniform_dss_state(), t_max, steps,
                                           qhelix::parse_mode(mode));
    emit(trajectory_csv(result), out_path);
    return 0;
}

int cmd_pipeline(const PipelineConfig& config) {
    const fs::path out_dir(config.output_dir);
    fs::create_directories(out_dir);

    const auto records = qhelix::load_participants(config.input_path);
    const auto weights = qhelix::compute_dominance(records, config.project_id);
    const auto angles = qhelix::angles_from_dominance(weights);
    write_text(out_dir / "weights.json",
               weights_json(config.project_id, weights, angles).dump(2) + "\n");
    std::cout << "weights: " << records.size() << " records ingested, project "
              << config.project_id << "\n";

    const auto circuit = qhelix::build_ewl_circuit(angles);
    const auto stats = qhelix::count_ops(circuit);
    write_text(out_dir / "circuit.qasm", qhelix::export_qasm(circuit));
    write_text(out_dir / "stats.json", stats_json(stats).dump(2) + "\n");
    std::cout << "circuit: " << stats.total_unitary_gates << " unitary gates, depth "
              << stats.depth << "\n";

    const auto dist = qhelix::play_game(angles);
    const auto counts = qhelix::sample(dist, config.shots, config.seed);
    write_text(out_dir / "distribution.csv", distribution_csv(dist, counts));
    std::cout << "game: " << dist.probabilities.size() << " outcomes, " << config.shots
              << " shots, seed " << config.seed << "\n";

    const auto scores = qhelix::marginal_scores(dist);
    json scores_doc;
    scores_doc["q"] = actor_map(scores.q);
    scores_doc["omega"] = actor_map(scores.omega);
    write_text(out_dir / "scores.json", scores_doc.dump(2) + "\n");
    std::cout << "scores: q = [" << format_number(scores.q[0]) << ", "
              << format_number(scores.q[1]) << ", " << format_number(scores.q[2]) << ", "
              << format_number(scores.q[3]) << "]\n";

    const auto hamiltonian = qhelix::build_hamiltonian(scores, config.scale);
    const auto result = qhelix::trajectory(hamiltonian, qhelix::uniform_dss_state(), config.t_max,
                                           config.steps, qhelix::parse_mode(config.mode));
    write_text(out_dir / "trajectory.csv", trajectory_csv(result));
    std::cout << "trajectory: " << config.steps << " points over [0, "
              << format_number(config.t_max) << "], mode " << config.mode << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadruple-helix EWL quantum game pipeline"};
    app.require_subcommand(1);

    std::string input;
    std::string project;
    std::string out_path;
    std::vector<double> thetas;
    std::vector<double> q_scores;
    bool exact = false;
    PipelineConfig config;

    auto* weights = app.add_subcommand("weights", "dominance weights and strategy angles");
    weights->add_option("--input", input, "funding table (CSV, comma or semicolon)")->required();
    weights->add_option("--project", project, "project id to analyze")->required();
    weights->add_option("--out", out_path, "output path (default: stdout)");

    auto* game = app.add_subcommand("game", "run the parameterized EWL game");
    game->add_option("--theta", thetas, "strategy angles in radians (n >= 2)")
        ->required()
        ->delimiter(',');
    game->add_option("--shots", config.shots, "measurement shots")->capture_default_str();
    game->add_option("--seed", config.seed, "sampler seed")->capture_default_str();
    game->add_flag("--exact", exact, "skip shot sampling, exact probabilities only");
    game->add_option("--out", out_path, "output path (default: stdout)");

    auto* evolve = app.add_subcommand("evolve", "capital trajectory from marginal scores");
    evolve->add_option("--scores", q_scores, "four marginal scores q_i")
        ->required()
        ->delimiter(',');
    evolve->add_option("--scale", config.scale, "frequency scale")->capture_default_str();
    evolve->add_option("--t-max", config.t_max, "time horizon")->capture_default_str();
    evolve->add_option("--steps", config.steps, "grid points")->capture_default_str();
    evolve->add_option("--mode", config.mode, "survival or population")->capture_default_str();
    evolve->add_option("--out", out_path, "output path (default: stdout)");

    auto* pipeline = app.add_subcommand("pipeline", "full run: ingest -> game -> trajectory");
    pipeline->add_option("--input", config.input_path, "funding table")->required();
    pipeline->add_option("--project", config.project_id, "project id")->required();
    pipeline->add_option("--shots", config.shots, "measurement shots")->capture_default_str();
    pipeline->add_option("--seed", config.seed, "sampler seed")->capture_default_str();
    pipeline->add_option("--scale", config.scale, "frequency scale")->capture_default_str();
    pipeline->add_option("--t-max", config.t_max, "time horizon")->capture_default_str();
    pipeline->add_option("--steps", config.steps, "grid points")->capture_default_str();
    pipeline->add_option("--mode", config.mode, "survival or population")->capture_default_str();
    pipeline->add_option("--output-dir", config.output_dir, "artifact directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (weights->parsed()) {
            return cmd_weights(input, project, out_path);
        }
        if (game->parsed()) {
            return cmd_game(std::move(thetas), config.shots, config.seed, exact, out_path);
        }
        if (evolve->parsed()) {
            return cmd_evolve(q_scores, config.scale, config.t_max, config.steps, config.mode,
                              out_path);
        }
        if (pipeline->parsed()) {
            return cmd_pipeline(config);
        }
    } catch (const qhelix::Error& error) {
        std::cerr << error.what() << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "error: internal: " << error.what() << "\n";
        return 1;
    }
    return 0;
}

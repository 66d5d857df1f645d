// Copyright 2026 The qcpso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcpso/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "qcpso/errors.hpp"
#include "qcpso/fitness.hpp"
#include "qcpso/ga.hpp"
#include "qcpso/harness.hpp"
#include "qcpso/pso.hpp"
#include "qcpso/qasm.hpp"
#include "qcpso/statevector.hpp"
#include "qcpso/text.hpp"

namespace qcpso {

namespace {

/// Flag validation failure; the message starts with the flag name.
struct FlagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void bad_flag(const std::string& flag, const std::string& why)
{
    throw FlagError(flag + ": " + why);
}

/// Raw flag values. Integers are signed so that negative input reaches our
/// own checks instead of wrapping.
struct ProblemFlags {
    long long qubits = 5;
    std::string fitness = "fe2";
    std::string gates = "h,x,y,z,cx,rx,ry,rz";
    long long max_len = 64;
    long long init_min = 5;
    long long init_max = 20;
    long long threads = 1;
    long long particles = 50;
    long long iterations = 30;

    void add_to(CLI::App& app)
    {
        app.add_option("--qubits", qubits, "Number of qubits")->capture_default_str();
        app.add_option("--fitness", fitness, "Fitness evaluation: fe1 or fe2")->capture_default_str();
        app.add_option("--gates", gates, "Comma separated gate set")->capture_default_str();
        app.add_option("--max-len", max_len, "Maximum circuit body length")->capture_default_str();
        app.add_option("--init-min", init_min, "Shortest initial body")->capture_default_str();
        app.add_option("--init-max", init_max, "Longest initial body")->capture_default_str();
        app.add_option("--threads", threads, "Worker threads for fitness evaluation")
            ->capture_default_str();
        app.add_option("--particles", particles, "Particles (PSO) or population size (GA)")
            ->capture_default_str();
        app.add_option("--iterations", iterations, "Iterations (PSO) or generations (GA)")
            ->capture_default_str();
    }

    ProblemConfig build() const
    {
        ProblemConfig problem;
        if (qubits < 1 || qubits > max_qubits) {
            bad_flag("--qubits", "must be in [1, " + std::to_string(max_qubits) + "]");
        }
        problem.num_qubits = std::uint32_t(qubits);
        const auto kind = fitness_from_name(fitness);
        if (!kind) {
            bad_flag("--fitness", "expected fe1 or fe2, got '" + fitness + "'");
        }
        problem.fitness_kind = *kind;
        try {
            problem.gate_set = GateSet::parse(gates);
        } catch (const ConfigError& e) {
            bad_flag("--gates", e.what());
        }
        if (max_len < 1) {
            bad_flag("--max-len", "must be positive");
        }
        problem.max_body_len = std::size_t(max_len);
        if (init_min < 1 || init_min > max_len) {
            bad_flag("--init-min", "must be in [1, --max-len]");
        }
        if (init_max < init_min || init_max > max_len) {
            bad_flag("--init-max", "must be in [--init-min, --max-len]");
        }
        problem.init_len_min = std::size_t(init_min);
        problem.init_len_max = std::size_t(init_max);
        if (threads < 1) {
            bad_flag("--threads", "must be positive");
        }
        problem.threads = unsigned(threads);
        if (particles < 1) {
            bad_flag("--particles", "must be positive");
        }
        if (iterations < 1) {
            bad_flag("--iterations", "must be positive");
        }
        try {
            problem.validate();
        } catch (const ConfigError& e) {
            bad_flag("--gates", e.what());
        }
        return problem;
    }
};

struct PsoFlags {
    double c1 = 1.5;
    double c2 = 4.0;
    std::string schedule = "constant";
    double w1 = 1.0;
    double w2 = 0.3;

    void add_to(CLI::App& app)
    {
        app.add_option("--c1", c1, "Cognitive sample size")->capture_default_str();
        app.add_option("--c2", c2, "Social sample size")->capture_default_str();
        app.add_option("--w-schedule", schedule, "Inertia schedule: constant or tviw")
            ->capture_default_str();
        app.add_option("--w1", w1, "Constant weight, or initial weight for tviw")->capture_default_str();
        app.add_option("--w2", w2, "Final weight for tviw")->capture_default_str();
    }

    SwarmConfig build(const ProblemConfig& problem, const ProblemFlags& shared) const
    {
        SwarmConfig cfg;
        cfg.problem = problem;
        cfg.num_particles = std::size_t(shared.particles);
        cfg.num_iterations = std::size_t(shared.iterations);
        if (!(c1 >= 0.0) || !std::isfinite(c1)) {
            bad_flag("--c1", "must be a non-negative number");
        }
        if (!(c2 >= 0.0) || !std::isfinite(c2)) {
            bad_flag("--c2", "must be a non-negative number");
        }
        if (!(w1 >= 0.0) || !std::isfinite(w1)) {
            bad_flag("--w1", "must be a non-negative number");
        }
        if (!(w2 >= 0.0) || !std::isfinite(w2)) {
            bad_flag("--w2", "must be a non-negative number");
        }
        cfg.c1 = c1;
        cfg.c2 = c2;
        if (schedule == "constant") {
            cfg.weight_schedule = WeightSchedule::constant(w1);
        } else if (schedule == "tviw") {
            cfg.weight_schedule = WeightSchedule::time_varying(w1, w2);
        } else {
            bad_flag("--w-schedule", "expected constant or tviw, got '" + schedule + "'");
        }
        return cfg;
    }
};

struct GaFlags {
    long long tournament = 3;
    double crossover_rate = 0.8;
    double mutation_rate = 0.1;
    long long elitism = 1;

    void add_to(CLI::App& app)
    {
        app.add_option("--tournament", tournament, "GA tournament size")->capture_default_str();
        app.add_option("--crossover-rate", crossover_rate, "GA crossover probability")
            ->capture_default_str();
        app.add_option("--mutation-rate", mutation_rate, "GA per-gene mutation probability")
            ->capture_default_str();
        app.add_option("--elitism", elitism, "GA elite count")->capture_default_str();
    }

    GaConfig build(const ProblemConfig& problem, const ProblemFlags& shared) const
    {
        GaConfig cfg;
        cfg.problem = problem;
        cfg.population = std::size_t(shared.particles);
        cfg.generations = std::size_t(shared.iterations);
        if (tournament < 1) {
            bad_flag("--tournament", "must be at least 1");
        }
        if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
            bad_flag("--crossover-rate", "must be in [0, 1]");
        }
        if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
            bad_flag("--mutation-rate", "must be in [0, 1]");
        }
        if (elitism < 0 || elitism >= shared.particles) {
            bad_flag("--elitism", "must be in [0, --particles)");
        }
        cfg.tournament_size = std::size_t(tournament);
        cfg.crossover_rate = crossover_rate;
        cfg.mutation_rate = mutation_rate;
        cfg.elitism = std::size_t(elitism);
        return cfg;
    }
};

std::uint64_t seed_from(long long seed)
{
    if (seed < 0) {
        bad_flag("--seed", "must be non-negative");
    }
    return std::uint64_t(seed);
}

std::size_t seed_count(long long seeds)
{
    if (seeds < 1) {
        bad_flag("--seeds", "must be positive");
    }
    return std::size_t(seeds);
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string bitstring(std::size_t index, std::uint32_t num_qubits)
{
    std::string bits(num_qubits, '0');
    for (std::uint32_t q = 0; q < num_qubits; ++q) {
        if ((index >> q) & 1U) {
            bits[num_qubits - 1 - q] = '1';
        }
    }
    return bits;
}

} // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quantum circuit synthesis with particle swarm optimization", "qcpso"};
    app.require_subcommand(1);

    ProblemFlags run_problem;
    PsoFlags run_pso_flags;
    GaFlags run_ga_flags;
    std::string run_algo = "pso";
    long long run_seed = 1;
    std::string run_out = "out";
    auto* run_cmd = app.add_subcommand("run", "Execute one optimizer run");
    run_cmd->add_option("--algo", run_algo, "pso or ga")->capture_default_str();
    run_problem.add_to(*run_cmd);
    run_pso_flags.add_to(*run_cmd);
    run_ga_flags.add_to(*run_cmd);
    run_cmd->add_option("--seed", run_seed, "Random seed")->capture_default_str();
    run_cmd->add_option("--out", run_out, "Output directory")->capture_default_str();

    ProblemFlags exp_problem;
    std::string exp_preset = "all";
    long long exp_seeds = 20;
    std::string exp_out = "out";
    auto* exp_cmd = app.add_subcommand("experiment", "Run learning/inertia presets over seeds");
    exp_cmd->add_option("--preset", exp_preset, "balanced, cognitive, social, ciw, tviw or all")
        ->capture_default_str();
    exp_problem.add_to(*exp_cmd);
    exp_cmd->add_option("--seeds", exp_seeds, "Number of seeds (1..N)")->capture_default_str();
    exp_cmd->add_option("--out", exp_out, "Output directory")->capture_default_str();

    ProblemFlags cmp_problem;
    GaFlags cmp_ga_flags;
    std::string cmp_preset = "social";
    long long cmp_seeds = 20;
    std::string cmp_out = "out";
    auto* cmp_cmd = app.add_subcommand("compare", "PSO against GA with matched budgets");
    cmp_cmd->add_option("--preset", cmp_preset, "PSO preset")->capture_default_str();
    cmp_problem.add_to(*cmp_cmd);
    cmp_ga_flags.add_to(*cmp_cmd);
    cmp_cmd->add_option("--seeds", cmp_seeds, "Number of seeds (1..N)")->capture_default_str();
    cmp_cmd->add_option("--out", cmp_out, "Output directory")->capture_default_str();

    std::string sim_in;
    auto* sim_cmd = app.add_subcommand("simulate", "Probabilities and fitness of a circuit");
    sim_cmd->add_option("--in", sim_in, "OpenQASM 2.0 input file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    }

    try {
        if (run_cmd->parsed()) {
            const ProblemConfig problem = run_problem.build();
            RunRecord record;
            if (run_algo == "pso") {
                SwarmConfig cfg = run_pso_flags.build(problem, run_problem);
                cfg.problem.seed = seed_from(run_seed);
                cfg.validate();
                record = run_pso(cfg);
            } else if (run_algo == "ga") {
                GaConfig cfg = run_ga_flags.build(problem, run_problem);
                cfg.problem.seed = seed_from(run_seed);
                cfg.validate();
                record = run_ga(cfg);
            } else {
                bad_flag("--algo", "expected pso or ga, got '" + run_algo + "'");
            }
            write_run(record, run_out);
            out << "best_fitness=" << format_real(record.best_fitness) << '\n';
        } else if (exp_cmd->parsed()) {
            const ProblemConfig problem = exp_problem.build();
            const auto seeds = seed_range(seed_count(exp_seeds));
            SwarmConfig base;
            base.problem = problem;
            base.num_particles = std::size_t(exp_problem.particles);
            base.num_iterations = std::size_t(exp_problem.iterations);

            std::vector<std::string> names;
            if (exp_preset == "all") {
                names = preset_names();
            } else if (std::ranges::find(preset_names(), exp_preset) != preset_names().end()) {
                names.push_back(exp_preset);
            } else {
                bad_flag("--preset", "unknown preset '" + exp_preset + "'");
            }
            for (const auto& name : names) {
                const auto preset = make_preset(name, base, seeds);
                const auto records = run_experiment(preset);
                write_experiment(preset, records, exp_out);
                std::vector<double> finals;
                for (const auto& r : records) {
                    finals.push_back(r.best_fitness);
                }
                out << name << " median_best_fitness=" << format_real(median(finals)) << '\n';
            }
        } else if (cmp_cmd->parsed()) {
            const ProblemConfig problem = cmp_problem.build();
            const auto seeds = seed_range(seed_count(cmp_seeds));
            SwarmConfig base;
            base.problem = problem;
            base.num_particles = std::size_t(cmp_problem.particles);
            base.num_iterations = std::size_t(cmp_problem.iterations);
            if (std::ranges::find(preset_names(), cmp_preset) == preset_names().end()) {
                bad_flag("--preset", "unknown preset '" + cmp_preset + "'");
            }
            const SwarmConfig swarm = make_preset(cmp_preset, base, seeds).swarm;
            const GaConfig ga = cmp_ga_flags.build(problem, cmp_problem);

            const Comparison comparison = run_compare(swarm, ga, seeds);
            write_compare(comparison, cmp_out);

            std::vector<double> pso_final, ga_final, pso_iters, ga_iters;
            for (const auto& row : comparison.rows) {
                pso_final.push_back(row.pso_final);
                ga_final.push_back(row.ga_final);
                pso_iters.push_back(double(row.pso_iters_to_best));
                ga_iters.push_back(double(row.ga_iters_to_best));
            }
            out << "pso median_best_fitness=" << format_real(median(pso_final))
                << " median_iters_to_best=" << format_real(median(pso_iters)) << '\n';
            out << "ga median_best_fitness=" << format_real(median(ga_final))
                << " median_iters_to_best=" << format_real(median(ga_iters)) << '\n';
        } else if (sim_cmd->parsed()) {
            const Circuit circuit = parse_qasm(read_text(sim_in));
            const auto dist = probabilities(circuit);
            // 15 digits: the Hadamard layer alone leaves ~1e-17 of noise.
            for (std::size_t k = 0; k < dist.size(); ++k) {
                out << bitstring(k, circuit.num_qubits()) << ' ' << format_real(dist[k], 15) << '\n';
            }
            out << "fe1=" << format_real(evaluate_fe1(dist), 15) << '\n';
            out << "fe2=" << format_real(evaluate_fe2(dist), 15) << '\n';
        }
    } catch (const FlagError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const QasmError& e) {
        err << "error: " << sim_in << ": " << e.what() << '\n';
        return exit_io_error;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io_error;
    }
    return exit_ok;
}

} // namespace qcpso

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

#include "qcpso/pso.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "qcpso/errors.hpp"
#include "qcpso/parallel.hpp"
#include "qcpso/text.hpp"

namespace qcpso {

double schedule_weight(const WeightSchedule& schedule, std::size_t t, std::size_t t_max)
{
    assert(t_max >= 1 && t <= t_max);
    double w = schedule.w1;
    if (schedule.kind == WeightSchedule::Kind::TimeVarying) {
        const double remaining = double(t_max - t) / double(t_max);
        w = (schedule.w1 - schedule.w2) * remaining + schedule.w2;
    }
    return std::clamp(w, 0.0, 1.0);
}

void SwarmConfig::validate() const
{
    problem.validate();
    if (num_particles == 0) {
        throw ConfigError("num_particles must be positive");
    }
    if (num_iterations == 0) {
        throw ConfigError("num_iterations must be positive");
    }
    if (!(c1 >= 0.0) || !std::isfinite(c1)) {
        throw ConfigError("c1 must be a non-negative number");
    }
    if (!(c2 >= 0.0) || !std::isfinite(c2)) {
        throw ConfigError("c2 must be a non-negative number");
    }
    if (!(weight_schedule.w1 >= 0.0) || !(weight_schedule.w2 >= 0.0) ||
        !std::isfinite(weight_schedule.w1) || !std::isfinite(weight_schedule.w2)) {
        throw ConfigError("inertia weights must be non-negative numbers");
    }
}

std::map<std::string, std::string> SwarmConfig::describe() const
{
    std::map<std::string, std::string> out;
    problem.describe(out);
    out["algorithm"] = "pso";
    out["num_particles"] = std::to_string(num_particles);
    out["num_iterations"] = std::to_string(num_iterations);
    out["c1"] = format_real(c1);
    out["c2"] = format_real(c2);
    out["weight_schedule"] =
        weight_schedule.kind == WeightSchedule::Kind::Constant ? "constant" : "tviw";
    out["w1"] = format_real(weight_schedule.w1);
    out["w2"] = format_real(weight_schedule.w2);
    return out;
}

InstructionList stable_sample(std::span<const Instruction> source, std::size_t count, Rng& rng)
{
    std::size_t needed = std::min(count, source.size());
    if (needed == 0) {
        return {};
    }
    if (needed == source.size()) {
        return {source.begin(), source.end()};
    }
    // Selection sampling: keep element i with probability needed / remaining.
    InstructionList out;
    out.reserve(needed);
    for (std::size_t i = 0; i < source.size() && needed > 0; ++i) {
        if (uniform_index(rng, source.size() - i) < needed) {
            out.push_back(source[i]);
            --needed;
        }
    }
    return out;
}

std::size_t sample_count(double coefficient, std::size_t donor_length)
{
    const double rounded = std::round(coefficient);
    if (!(rounded > 0.0)) {
        return 0;
    }
    if (rounded >= double(donor_length)) {
        return donor_length;
    }
    return static_cast<std::size_t>(rounded);
}

Particle update_particle(const Particle& particle, std::span<const Instruction> gbest, double weight,
                         const SwarmConfig& cfg, Rng& rng)
{
    Particle next;
    const std::size_t inertia_count =
        sample_count(weight * double(particle.velocity.size()), particle.velocity.size());
    next.velocity = stable_sample(particle.velocity, inertia_count, rng);

    const auto cognitive = stable_sample(
        particle.pbest_position, sample_count(cfg.c1, particle.pbest_position.size()), rng);
    next.velocity.insert(next.velocity.end(), cognitive.begin(), cognitive.end());

    const auto social = stable_sample(gbest, sample_count(cfg.c2, gbest.size()), rng);
    next.velocity.insert(next.velocity.end(), social.begin(), social.end());

    // x(t) = x(t-1) ++ V(t), keeping only the newest max_body_len entries.
    const std::size_t cap = cfg.problem.max_body_len;
    const std::size_t total = particle.position.size() + next.velocity.size();
    const std::size_t drop = total > cap ? total - cap : 0;
    next.position.reserve(total - drop);
    if (drop < particle.position.size()) {
        next.position.assign(particle.position.begin() + std::ptrdiff_t(drop), particle.position.end());
        next.position.insert(next.position.end(), next.velocity.begin(), next.velocity.end());
    } else {
        const std::size_t skip = drop - particle.position.size();
        next.position.assign(next.velocity.begin() + std::ptrdiff_t(skip), next.velocity.end());
    }

    next.pbest_position = particle.pbest_position;
    next.pbest_fitness = particle.pbest_fitness;
    next.fitness = particle.fitness;
    return next;
}

namespace {

double score(const SwarmConfig& cfg, const InstructionList& body)
{
    return evaluate_circuit(cfg.problem.fitness_kind, Circuit(cfg.problem.num_qubits, body));
}

void refresh_gbest(Swarm& swarm)
{
    for (const auto& p : swarm.particles) {
        if (p.pbest_fitness > swarm.gbest_fitness) {
            swarm.gbest_fitness = p.pbest_fitness;
            swarm.gbest_position = p.pbest_position;
        }
    }
}

} // namespace

Swarm init_swarm(const SwarmConfig& cfg)
{
    cfg.validate();
    const auto& problem = cfg.problem;

    Swarm swarm;
    swarm.particles.resize(cfg.num_particles);
    detail::parallel_for(cfg.num_particles, problem.threads, [&](std::size_t i) {
        Rng rng = substream(problem.seed, stream_domain::pso_init, i, 0);
        const std::size_t span = problem.init_len_max - problem.init_len_min + 1;
        const std::size_t length = problem.init_len_min + uniform_index(rng, span);

        Particle& p = swarm.particles[i];
        p.position = random_body(problem.num_qubits, problem.gate_set, length, rng);
        p.fitness = score(cfg, p.position);
        p.pbest_position = p.position;
        p.pbest_fitness = p.fitness;
    });

    swarm.gbest_position = swarm.particles.front().pbest_position;
    swarm.gbest_fitness = swarm.particles.front().pbest_fitness;
    refresh_gbest(swarm);
    return swarm;
}

Swarm step(Swarm swarm, const SwarmConfig& cfg)
{
    assert(swarm.iteration < cfg.num_iterations);
    const std::size_t t = swarm.iteration;
    const double weight = schedule_weight(cfg.weight_schedule, t, cfg.t_max());

    // Every particle moves against the same gbest snapshot; gbest is only
    // refreshed once all particles have been evaluated.
    const InstructionList& gbest = swarm.gbest_position;
    detail::parallel_for(swarm.particles.size(), cfg.problem.threads, [&](std::size_t i) {
        Rng rng = substream(cfg.problem.seed, stream_domain::pso_step, t, i);
        Particle next = update_particle(swarm.particles[i], gbest, weight, cfg, rng);
        next.fitness = score(cfg, next.position);
        if (next.fitness > next.pbest_fitness) {
            next.pbest_position = next.position;
            next.pbest_fitness = next.fitness;
        }
        swarm.particles[i] = std::move(next);
    });

    refresh_gbest(swarm);
    swarm.iteration = t + 1;
    swarm.weight = weight;
    return swarm;
}

IterationRow swarm_row(const Swarm& swarm)
{
    std::vector<double> fitnesses;
    fitnesses.reserve(swarm.particles.size());
    for (const auto& p : swarm.particles) {
        fitnesses.push_back(p.fitness);
    }
    const auto stats = iteration_stats(fitnesses);
    return IterationRow{swarm.iteration - 1, stats.worst, stats.avg, stats.best, swarm.gbest_fitness,
                        swarm.weight};
}

RunRecord run_pso(const SwarmConfig& cfg)
{
    Swarm swarm = init_swarm(cfg);

    RunRecord record;
    record.algorithm = "pso";
    record.config = cfg.describe();
    record.rows.reserve(cfg.num_iterations);
    record.particle_fitness.reserve(cfg.num_iterations);

    while (swarm.iteration < cfg.num_iterations) {
        swarm = step(std::move(swarm), cfg);
        record.rows.push_back(swarm_row(swarm));
        auto& column = record.particle_fitness.emplace_back();
        column.reserve(swarm.particles.size());
        for (const auto& p : swarm.particles) {
            column.push_back(p.fitness);
        }
    }

    record.best_circuit = Circuit(cfg.problem.num_qubits, swarm.gbest_position);
    record.best_fitness = swarm.gbest_fitness;
    return record;
}

} // namespace qcpso

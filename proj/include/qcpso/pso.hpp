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

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qcpso/circuit.hpp"
#include "qcpso/run_record.hpp"

namespace qcpso {

/// Inertia weight over the run. Constant uses w1 only; TimeVarying decays
/// linearly from w1 at t = 0 to w2 at t = t_max.
struct WeightSchedule {
    enum class Kind { Constant, TimeVarying };

    Kind kind = Kind::Constant;
    double w1 = 1.0;
    double w2 = 1.0;

    static WeightSchedule constant(double w) { return {Kind::Constant, w, w}; }
    static WeightSchedule time_varying(double w1, double w2) { return {Kind::TimeVarying, w1, w2}; }

    friend bool operator==(const WeightSchedule&, const WeightSchedule&) = default;
};

/// Weight for iteration t of a run whose last iteration is t_max, clamped
/// to [0, 1].
double schedule_weight(const WeightSchedule& schedule, std::size_t t, std::size_t t_max);

struct SwarmConfig {
    ProblemConfig problem;
    std::size_t num_particles = 50;
    std::size_t num_iterations = 30;
    /// Cognitive and social sample sizes, rounded to whole instructions.
    double c1 = 1.5;
    double c2 = 4.0;
    WeightSchedule weight_schedule = WeightSchedule::constant(1.0);

    void validate() const;
    std::map<std::string, std::string> describe() const;

    /// Index of the final iteration as seen by the weight schedule.
    std::size_t t_max() const { return num_iterations > 1 ? num_iterations - 1 : 1; }
};

using InstructionList = std::vector<Instruction>;

struct Particle {
    InstructionList position;
    InstructionList velocity;
    InstructionList pbest_position;
    double pbest_fitness = 0.0;
    /// Fitness of `position`.
    double fitness = 0.0;

    friend bool operator==(const Particle&, const Particle&) = default;
};

struct Swarm {
    std::vector<Particle> particles;
    InstructionList gbest_position;
    double gbest_fitness = 0.0;
    /// Number of completed steps.
    std::size_t iteration = 0;
    /// Weight used by the most recent step.
    double weight = 0.0;

    friend bool operator==(const Swarm&, const Swarm&) = default;
};

/// min(count, |source|) elements chosen uniformly without replacement,
/// returned in their original relative order.
InstructionList stable_sample(std::span<const Instruction> source, std::size_t count, Rng& rng);

/// Sample count for a real-valued coefficient: rounded half away from zero,
/// then clamped to the donor length.
std::size_t sample_count(double coefficient, std::size_t donor_length);

/// One velocity/position move:
///
///     V(t) = sample(V(t-1), round(w_t |V(t-1)|)) ++ sample(pbest, c1) ++ sample(gbest, c2)
///     x(t) = last max_body_len instructions of x(t-1) ++ V(t)
///
/// pbest, pbest_fitness and fitness are returned unchanged.
Particle update_particle(const Particle& particle, std::span<const Instruction> gbest, double weight,
                         const SwarmConfig& cfg, Rng& rng);

/// Random initial bodies, empty velocities, evaluated pbests.
Swarm init_swarm(const SwarmConfig& cfg);

/// Moves every particle once, re-evaluates, and refreshes pbest (on strict
/// improvement) and gbest. Particle i of step t draws from its own stream,
/// so the result does not depend on cfg.problem.threads.
Swarm step(Swarm swarm, const SwarmConfig& cfg);

/// Statistics row describing `swarm` after its latest step.
IterationRow swarm_row(const Swarm& swarm);

RunRecord run_pso(const SwarmConfig& cfg);

} // namespace qcpso

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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qcpso/circuit.hpp"
#include "qcpso/fitness.hpp"

namespace qcpso {

/// Settings shared by every optimizer: what a candidate circuit may contain,
/// how it is scored, and how randomness and work are distributed.
struct ProblemConfig {
    std::uint32_t num_qubits = 5;
    GateSet gate_set = GateSet::all();
    FitnessKind fitness_kind = FitnessKind::FE2;
    std::size_t max_body_len = 64;
    /// Initial bodies have a length drawn uniformly from this closed range.
    std::size_t init_len_min = 5;
    std::size_t init_len_max = 20;
    std::uint64_t seed = 0;
    /// Worker threads for fitness evaluation. Results do not depend on it.
    unsigned threads = 1;

    /// Throws ConfigError on the first violated invariant.
    void validate() const;

    /// Adds this configuration's keys to `out`. `threads` is left out so
    /// that serial and parallel runs describe themselves identically.
    void describe(std::map<std::string, std::string>& out) const;
};

struct IterationRow {
    std::size_t iteration = 0;
    double worst = 0.0;
    double avg = 0.0;
    double best = 0.0;
    /// Best fitness seen by the whole run so far.
    double gbest = 0.0;
    /// Inertia weight used for the iteration; 0 for algorithms without one.
    double weight = 0.0;

    friend bool operator==(const IterationRow&, const IterationRow&) = default;
};

/// Everything one optimizer run produces.
struct RunRecord {
    std::string algorithm;
    std::vector<IterationRow> rows;
    /// particle_fitness[t][i]: fitness of individual i after iteration t.
    std::vector<std::vector<double>> particle_fitness;
    Circuit best_circuit{1};
    double best_fitness = 0.0;
    std::map<std::string, std::string> config;

    /// Index of the first row whose gbest equals the final gbest.
    std::size_t iterations_to_best() const;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct IterationStats {
    double worst;
    double avg;
    double best;
};

/// Minimum, arithmetic mean, and maximum. Throws std::invalid_argument on
/// an empty input.
IterationStats iteration_stats(std::span<const double> fitnesses);

} // namespace qcpso

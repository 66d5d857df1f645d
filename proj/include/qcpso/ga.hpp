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
#include <utility>
#include <vector>

#include "qcpso/circuit.hpp"
#include "qcpso/run_record.hpp"

namespace qcpso {

struct Chromosome {
    std::vector<Instruction> genes;
    double fitness = 0.0;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

struct GaConfig {
    ProblemConfig problem;
    std::size_t population = 50;
    std::size_t generations = 30;
    std::size_t tournament_size = 3;
    double crossover_rate = 0.8;
    /// Per-gene probability of being re-drawn.
    double mutation_rate = 0.1;
    std::size_t elitism = 1;

    void validate() const;
    std::map<std::string, std::string> describe() const;
};

/// Single-point crossover at explicit cut points: the children are
/// a[0, cut_a) ++ b[cut_b, end) and b[0, cut_b) ++ a[cut_a, end), each
/// truncated to `max_len` genes. Offspring fitness is left at zero.
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                               std::size_t cut_a, std::size_t cut_b,
                                               std::size_t max_len);

/// crossover_at with cut points drawn uniformly from [0, |a|] and [0, |b|].
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            std::size_t max_len, Rng& rng);

/// Re-draws each gene with probability `rate` (kind, qubits and angle).
Chromosome mutate(Chromosome c, double rate, std::uint32_t num_qubits, const GateSet& gate_set,
                  Rng& rng);

/// Fittest of `k` uniform draws with replacement; ties keep the earlier draw.
const Chromosome& tournament_select(std::span<const Chromosome> population, std::size_t k, Rng& rng);

RunRecord run_ga(const GaConfig& cfg);

} // namespace qcpso

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

#include "qcpso/ga.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "qcpso/errors.hpp"
#include "qcpso/parallel.hpp"
#include "qcpso/text.hpp"

namespace qcpso {

void GaConfig::validate() const
{
    problem.validate();
    if (population == 0) {
        throw ConfigError("population must be positive");
    }
    if (generations == 0) {
        throw ConfigError("generations must be positive");
    }
    if (tournament_size == 0) {
        throw ConfigError("tournament size must be at least 1");
    }
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
        throw ConfigError("crossover rate must be in [0, 1]");
    }
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
        throw ConfigError("mutation rate must be in [0, 1]");
    }
    if (elitism >= population) {
        throw ConfigError("elitism must be smaller than the population");
    }
}

std::map<std::string, std::string> GaConfig::describe() const
{
    std::map<std::string, std::string> out;
    problem.describe(out);
    out["algorithm"] = "ga";
    out["population"] = std::to_string(population);
    out["generations"] = std::to_string(generations);
    out["tournament_size"] = std::to_string(tournament_size);
    out["crossover"] = "single-point";
    out["crossover_rate"] = format_real(crossover_rate);
    out["mutation"] = "per-gene re-draw";
    out["mutation_rate"] = format_real(mutation_rate);
    out["elitism"] = std::to_string(elitism);
    return out;
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                               std::size_t cut_a, std::size_t cut_b,
                                               std::size_t max_len)
{
    assert(cut_a <= a.genes.size() && cut_b <= b.genes.size());
    auto splice = [max_len](const std::vector<Instruction>& head, std::size_t head_len,
                            const std::vector<Instruction>& tail, std::size_t tail_from) {
        Chromosome child;
        child.genes.assign(head.begin(), head.begin() + std::ptrdiff_t(head_len));
        child.genes.insert(child.genes.end(), tail.begin() + std::ptrdiff_t(tail_from), tail.end());
        if (child.genes.size() > max_len) {
            child.genes.resize(max_len);
        }
        return child;
    };
    return {splice(a.genes, cut_a, b.genes, cut_b), splice(b.genes, cut_b, a.genes, cut_a)};
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            std::size_t max_len, Rng& rng)
{
    const std::size_t cut_a = uniform_index(rng, a.genes.size() + 1);
    const std::size_t cut_b = uniform_index(rng, b.genes.size() + 1);
    return crossover_at(a, b, cut_a, cut_b, max_len);
}

Chromosome mutate(Chromosome c, double rate, std::uint32_t num_qubits, const GateSet& gate_set,
                  Rng& rng)
{
    for (auto& gene : c.genes) {
        if (uniform_unit(rng) < rate) {
            gene = random_instruction(num_qubits, gate_set, rng);
        }
    }
    return c;
}

const Chromosome& tournament_select(std::span<const Chromosome> population, std::size_t k, Rng& rng)
{
    assert(!population.empty() && k >= 1);
    const Chromosome* winner = &population[uniform_index(rng, population.size())];
    for (std::size_t i = 1; i < k; ++i) {
        const Chromosome& challenger = population[uniform_index(rng, population.size())];
        if (challenger.fitness > winner->fitness) {
            winner = &challenger;
        }
    }
    return *winner;
}

namespace {

void evaluate_all(std::vector<Chromosome>& population, const ProblemConfig& problem)
{
    detail::parallel_for(population.size(), problem.threads, [&](std::size_t i) {
        population[i].fitness =
            evaluate_circuit(problem.fitness_kind, Circuit(problem.num_qubits, population[i].genes));
    });
}

/// Indices sorted by descending fitness, lower index first among equals.
std::vector<std::size_t> ranking(const std::vector<Chromosome>& population)
{
    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return population[l].fitness > population[r].fitness;
    });
    return order;
}

} // namespace

RunRecord run_ga(const GaConfig& cfg)
{
    cfg.validate();
    const auto& problem = cfg.problem;

    std::vector<Chromosome> population(cfg.population);
    for (std::size_t i = 0; i < cfg.population; ++i) {
        Rng rng = substream(problem.seed, stream_domain::ga_init, i, 0);
        const std::size_t span = problem.init_len_max - problem.init_len_min + 1;
        const std::size_t length = problem.init_len_min + uniform_index(rng, span);
        population[i].genes = random_body(problem.num_qubits, problem.gate_set, length, rng);
    }
    evaluate_all(population, problem);

    Chromosome best = population[ranking(population).front()];

    RunRecord record;
    record.algorithm = "ga";
    record.config = cfg.describe();

    for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
        Rng rng = substream(problem.seed, stream_domain::ga_breed, gen, 0);
        const auto order = ranking(population);

        std::vector<Chromosome> next;
        next.reserve(cfg.population);
        for (std::size_t e = 0; e < cfg.elitism; ++e) {
            next.push_back(population[order[e]]);
        }
        const std::size_t elites = next.size();

        while (next.size() < cfg.population) {
            const Chromosome& mother = tournament_select(population, cfg.tournament_size, rng);
            const Chromosome& father = tournament_select(population, cfg.tournament_size, rng);
            std::pair<Chromosome, Chromosome> children{mother, father};
            if (uniform_unit(rng) < cfg.crossover_rate) {
                children = crossover(mother, father, problem.max_body_len, rng);
            }
            next.push_back(mutate(std::move(children.first), cfg.mutation_rate, problem.num_qubits,
                                  problem.gate_set, rng));
            if (next.size() < cfg.population) {
                next.push_back(mutate(std::move(children.second), cfg.mutation_rate,
                                      problem.num_qubits, problem.gate_set, rng));
            }
        }

        // Elites keep their known fitness; everyone else is scored afresh.
        std::vector<Chromosome> offspring(std::make_move_iterator(next.begin() + std::ptrdiff_t(elites)),
                                          std::make_move_iterator(next.end()));
        evaluate_all(offspring, problem);
        std::move(offspring.begin(), offspring.end(), next.begin() + std::ptrdiff_t(elites));
        population = std::move(next);

        std::vector<double> fitnesses;
        fitnesses.reserve(population.size());
        for (const auto& c : population) {
            fitnesses.push_back(c.fitness);
        }
        const auto stats = iteration_stats(fitnesses);
        const Chromosome& champion = population[ranking(population).front()];
        if (champion.fitness > best.fitness) {
            best = champion;
        }
        record.rows.push_back(IterationRow{gen, stats.worst, stats.avg, stats.best, best.fitness, 0.0});
        record.particle_fitness.push_back(std::move(fitnesses));
    }

    record.best_circuit = Circuit(problem.num_qubits, best.genes);
    record.best_fitness = best.fitness;
    return record;
}

} // namespace qcpso

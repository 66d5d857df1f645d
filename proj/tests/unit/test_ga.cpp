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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcpso/errors.hpp"
#include "qcpso/ga.hpp"

using namespace qcpso;

namespace {

Instruction gene(double id)
{
    return Instruction::rotation(GateKind::RX, 0, id);
}

Chromosome chromosome(std::initializer_list<double> ids, double fitness = 0.0)
{
    Chromosome c;
    for (double id : ids) {
        c.genes.push_back(gene(id));
    }
    c.fitness = fitness;
    return c;
}

GaConfig small_config(std::uint64_t seed = 1)
{
    GaConfig cfg;
    cfg.population = 16;
    cfg.generations = 8;
    cfg.problem.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("crossover of empty parents")
{
    Rng rng{1};
    const auto [x, y] = crossover(Chromosome{}, Chromosome{}, 64, rng);
    CHECK(x.genes.empty());
    CHECK(y.genes.empty());
}

TEST_CASE("crossover at the front swaps whole bodies")
{
    const auto a = chromosome({0.1, 0.2});
    const auto b = chromosome({1.1, 1.2, 1.3});
    const auto [x, y] = crossover_at(a, b, 0, 0, 64);
    CHECK(x.genes == b.genes);
    CHECK(y.genes == a.genes);
}

TEST_CASE("crossover splices tails")
{
    const auto a = chromosome({0.1, 0.2});
    const auto b = chromosome({1.1, 1.2, 1.3});
    const auto [x, y] = crossover_at(a, b, 1, 2, 64);
    CHECK(x.genes == chromosome({0.1, 1.3}).genes);
    CHECK(y.genes == chromosome({1.1, 1.2, 0.2}).genes);
}

TEST_CASE("crossover truncates to the cap and conserves genes")
{
    const auto a = chromosome({0.1, 0.2, 0.3, 0.4});
    const auto b = chromosome({1.1, 1.2, 1.3, 1.4});
    const auto [x, y] = crossover_at(a, b, 4, 0, 5);
    CHECK(x.genes == chromosome({0.1, 0.2, 0.3, 0.4, 1.1}).genes);
    CHECK(y.genes.empty());

    Rng rng{2};
    for (int i = 0; i < 100; ++i) {
        const auto [p, q] = crossover(a, b, 64, rng);
        CHECK(p.genes.size() + q.genes.size() == 8);
    }
}

TEST_CASE("mutate at the extremes")
{
    Rng rng{3};
    const auto c = chromosome({0.1, 0.2, 0.3, 0.4, 0.5});
    CHECK(mutate(c, 0.0, 5, GateSet::all(), rng) == c);

    const auto all = mutate(c, 1.0, 5, GateSet{GateKind::X}, rng);
    REQUIRE(all.genes.size() == c.genes.size());
    for (const auto& g : all.genes) {
        CHECK(g.kind == GateKind::X);
    }
}

TEST_CASE("mutate replaces about rate of the genes")
{
    Rng rng{4};
    Chromosome c;
    for (int i = 0; i < 10000; ++i) {
        c.genes.push_back(gene(0.5));
    }
    const auto m = mutate(c, 0.1, 5, GateSet{GateKind::H, GateKind::X, GateKind::CX}, rng);
    std::size_t changed = 0;
    for (std::size_t i = 0; i < m.genes.size(); ++i) {
        REQUIRE_NOTHROW(validate(m.genes[i], 5));
        changed += m.genes[i] != c.genes[i];
    }
    CHECK(std::abs(double(changed) / 10000.0 - 0.1) <= 0.01);
}

TEST_CASE("tournament_select")
{
    Rng rng{5};
    SUBCASE("single member")
    {
        const std::vector pop{chromosome({0.1}, 2.0)};
        CHECK(&tournament_select(pop, 3, rng) == &pop[0]);
    }
    SUBCASE("best member is favoured")
    {
        std::vector<Chromosome> pop;
        for (int i = 0; i < 5; ++i) {
            pop.push_back(chromosome({0.1 * i}, double(i)));
        }
        std::vector<int> wins(5);
        for (int t = 0; t < 10000; ++t) {
            ++wins[std::size_t(&tournament_select(pop, 5, rng) - pop.data())];
        }
        for (int i = 0; i < 4; ++i) {
            CHECK(wins[4] > wins[std::size_t(i)]);
        }
        // P(best drawn at least once in 5 draws) = 1 - 0.8^5.
        CHECK(std::abs(wins[4] / 10000.0 - (1.0 - std::pow(0.8, 5))) <= 0.02);
    }
    SUBCASE("equal fitness gives a uniform winner")
    {
        std::vector<Chromosome> pop;
        for (int i = 0; i < 4; ++i) {
            pop.push_back(chromosome({0.1 * i}, 1.0));
        }
        std::vector<int> wins(4);
        for (int t = 0; t < 10000; ++t) {
            ++wins[std::size_t(&tournament_select(pop, 3, rng) - pop.data())];
        }
        for (int w : wins) {
            CHECK(std::abs(w / 10000.0 - 0.25) <= 0.02);
        }
    }
}

TEST_CASE("GaConfig validation")
{
    auto cfg = small_config();
    CHECK_NOTHROW(cfg.validate());
    cfg.elitism = cfg.population;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = small_config();
    cfg.mutation_rate = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = small_config();
    cfg.tournament_size = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("run_ga")
{
    auto cfg = small_config();
    cfg.generations = 1;
    CHECK(run_ga(cfg).rows.size() == 1);

    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        cfg = small_config(seed);
        cfg.problem.fitness_kind = seed % 2 ? FitnessKind::FE1 : FitnessKind::FE2;
        const RunRecord r = run_ga(cfg);
        REQUIRE(r.rows.size() == cfg.generations);
        for (std::size_t g = 0; g < r.rows.size(); ++g) {
            CHECK(r.particle_fitness[g].size() == cfg.population);
            CHECK(r.rows[g].worst <= r.rows[g].avg);
            CHECK(r.rows[g].avg <= r.rows[g].best);
            CHECK(r.rows[g].best <= r.rows[g].gbest);
            if (g > 0) {
                CHECK(r.rows[g].best >= r.rows[g - 1].best);
            }
        }
        CHECK(evaluate_circuit(cfg.problem.fitness_kind, r.best_circuit) == r.best_fitness);
        CHECK(r.best_circuit.body().size() <= cfg.problem.max_body_len);
        CHECK(run_ga(cfg) == r);
        cfg.problem.threads = 3;
        CHECK(run_ga(cfg) == r);
    }
}

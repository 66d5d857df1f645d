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

#include "qcpso/fitness.hpp"

using namespace qcpso;

namespace {

// Second, independently written enumerations.
double brute_fe1(const std::vector<double>& p)
{
    double best = 0.0;
    for (std::size_t state = p.size(); state-- > 0;) {
        best = std::max(best, p[state] * static_cast<double>(state));
    }
    return best;
}

double brute_fe2(const std::vector<double>& p)
{
    double total = 0.0;
    std::size_t state = 0;
    for (double weight : p) {
        total += weight * static_cast<double>(state++);
    }
    return total;
}

std::vector<double> random_distribution(Rng& rng, std::size_t dim)
{
    std::vector<double> p(dim);
    double sum = 0.0;
    for (auto& x : p) {
        x = uniform_unit(rng);
        // Sparse mass now and then.
        if (uniform_unit(rng) < 0.3) {
            x = 0.0;
        }
        sum += x;
    }
    if (sum == 0.0) {
        p[0] = sum = 1.0;
    }
    for (auto& x : p) {
        x /= sum;
    }
    return p;
}

} // namespace

TEST_CASE("uniform 5-qubit distribution")
{
    const auto dist = ProbabilityDistribution::uniform(5);
    CHECK(evaluate_fe1(dist) == doctest::Approx(0.96875).epsilon(1e-12));
    CHECK(evaluate_fe2(dist) == doctest::Approx(15.5).epsilon(1e-12));
}

TEST_CASE("all-ones point mass scores 31 under both evaluators")
{
    const auto dist = ProbabilityDistribution::point_mass(5, 31);
    CHECK(evaluate_fe1(dist) == 31.0);
    CHECK(evaluate_fe2(dist) == 31.0);
}

TEST_CASE("fe1 takes the best weighted state")
{
    const ProbabilityDistribution dist(3, {0, 0, 0.5, 0, 0, 0, 0, 0.5});
    CHECK(evaluate_fe1(dist) == 3.5);
    CHECK(fe1_state(dist) == 7);
}

TEST_CASE("fe1 ties resolve to the larger state")
{
    // 0.5 * 2 == 0.25 * 4
    const ProbabilityDistribution dist(3, {0.25, 0, 0.5, 0, 0.25, 0, 0, 0});
    CHECK(fe1_state(dist) == 4);
    CHECK(evaluate_fe1(dist) == 1.0);
}

TEST_CASE("fe2 of the 2-qubit uniform distribution")
{
    CHECK(evaluate_fe2(ProbabilityDistribution(2, {0.25, 0.25, 0.25, 0.25})) == 1.5);
}

TEST_CASE("point masses score their index")
{
    for (std::size_t k = 0; k < 32; ++k) {
        const auto dist = ProbabilityDistribution::point_mass(5, k);
        CHECK(evaluate_fe1(dist) == double(k));
        CHECK(evaluate_fe2(dist) == double(k));
    }
}

TEST_CASE("evaluators match brute-force enumeration and stay in range")
{
    Rng rng{99};
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = std::uint32_t(1 + uniform_index(rng, 6));
        const auto p = random_distribution(rng, std::size_t{1} << n);
        const ProbabilityDistribution dist(n, p);
        const double top = double((std::size_t{1} << n) - 1);
        CHECK(std::abs(evaluate_fe1(dist) - brute_fe1(p)) < 1e-12);
        CHECK(std::abs(evaluate_fe2(dist) - brute_fe2(p)) < 1e-12);
        CHECK(evaluate_fe1(dist) >= 0.0);
        CHECK(evaluate_fe1(dist) <= top);
        CHECK(evaluate_fe2(dist) >= 0.0);
        CHECK(evaluate_fe2(dist) <= top);
    }
}

TEST_CASE("fe2 is linear in the distribution")
{
    Rng rng{7};
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_distribution(rng, 32);
        const auto q = random_distribution(rng, 32);
        const double alpha = uniform_unit(rng);
        std::vector<double> mix(32);
        for (std::size_t k = 0; k < 32; ++k) {
            mix[k] = alpha * p[k] + (1 - alpha) * q[k];
        }
        const double lhs = evaluate_fe2(ProbabilityDistribution(5, mix));
        const double rhs = alpha * evaluate_fe2(ProbabilityDistribution(5, p)) +
                           (1 - alpha) * evaluate_fe2(ProbabilityDistribution(5, q));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("evaluate_circuit simulates then scores")
{
    CHECK(evaluate_circuit(FitnessKind::FE2, Circuit(5)) == doctest::Approx(15.5).epsilon(1e-12));
    CHECK(evaluate_circuit(FitnessKind::FE1, Circuit(1, {Instruction::single(GateKind::H, 0)})) < 1e-15);
    CHECK(fitness_from_name("fe1") == FitnessKind::FE1);
    CHECK(fitness_from_name("fe3") == std::nullopt);
}

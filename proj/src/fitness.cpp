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

#include "qcpso/fitness.hpp"

#include <algorithm>

namespace qcpso {

std::string_view fitness_name(FitnessKind kind)
{
    return kind == FitnessKind::FE1 ? "fe1" : "fe2";
}

std::optional<FitnessKind> fitness_from_name(std::string_view name)
{
    if (name == "fe1") {
        return FitnessKind::FE1;
    }
    if (name == "fe2") {
        return FitnessKind::FE2;
    }
    return std::nullopt;
}

std::size_t fe1_state(const ProbabilityDistribution& dist)
{
    std::size_t best = 0;
    double best_value = 0.0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
        const double value = dist[k] * double(k);
        if (value >= best_value) {
            best = k;
            best_value = value;
        }
    }
    return best;
}

double evaluate_fe1(const ProbabilityDistribution& dist)
{
    const std::size_t k = fe1_state(dist);
    return std::clamp(dist[k] * double(k), 0.0, double(dist.size() - 1));
}

double evaluate_fe2(const ProbabilityDistribution& dist)
{
    double sum = 0.0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
        sum += dist[k] * double(k);
    }
    // Rounding in the probabilities can push the sum a few ulps past 2^n - 1.
    return std::clamp(sum, 0.0, double(dist.size() - 1));
}

double evaluate(FitnessKind kind, const ProbabilityDistribution& dist)
{
    return kind == FitnessKind::FE1 ? evaluate_fe1(dist) : evaluate_fe2(dist);
}

double evaluate_circuit(FitnessKind kind, const Circuit& circuit)
{
    return evaluate(kind, probabilities(circuit));
}

} // namespace qcpso

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

#include <optional>
#include <string_view>

#include "qcpso/circuit.hpp"
#include "qcpso/statevector.hpp"

namespace qcpso {

/// MaxOne fitness variants. Both score basis state k by its integer value k,
/// so the all-ones state of n qubits is worth 2^n - 1.
enum class FitnessKind {
    FE1, ///< best single state: max_k p_k * k
    FE2, ///< expected state value: sum_k p_k * k
};

std::string_view fitness_name(FitnessKind kind);
std::optional<FitnessKind> fitness_from_name(std::string_view name);

/// max over k of p_k * k. Ties go to the larger k, which only matters to
/// fe1_state; the value is the same either way.
double evaluate_fe1(const ProbabilityDistribution& dist);

/// The state index that evaluate_fe1 scores.
std::size_t fe1_state(const ProbabilityDistribution& dist);

double evaluate_fe2(const ProbabilityDistribution& dist);

double evaluate(FitnessKind kind, const ProbabilityDistribution& dist);

/// Simulates `circuit` and scores it.
double evaluate_circuit(FitnessKind kind, const Circuit& circuit);

} // namespace qcpso

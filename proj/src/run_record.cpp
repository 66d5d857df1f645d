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

#include "qcpso/run_record.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcpso/errors.hpp"

namespace qcpso {

void ProblemConfig::validate() const
{
    if (num_qubits == 0 || num_qubits > max_qubits) {
        throw ConfigError("num_qubits must be in [1, " + std::to_string(max_qubits) + "]");
    }
    check_drawable(num_qubits, gate_set);
    const auto kinds = gate_set.kinds();
    if (std::none_of(kinds.begin(), kinds.end(), can_flip)) {
        throw ConfigError("gate set '" + gate_set.to_string() +
                          "' cannot flip a qubit; include one of x, y, rx, ry");
    }
    if (max_body_len == 0) {
        throw ConfigError("max_body_len must be positive");
    }
    if (init_len_min == 0 || init_len_min > init_len_max || init_len_max > max_body_len) {
        throw ConfigError("initial length range must satisfy 1 <= min <= max <= max_body_len");
    }
    if (threads == 0) {
        throw ConfigError("threads must be positive");
    }
}

void ProblemConfig::describe(std::map<std::string, std::string>& out) const
{
    out["num_qubits"] = std::to_string(num_qubits);
    out["gate_set"] = gate_set.to_string();
    out["fitness"] = std::string(fitness_name(fitness_kind));
    out["max_body_len"] = std::to_string(max_body_len);
    out["init_len_min"] = std::to_string(init_len_min);
    out["init_len_max"] = std::to_string(init_len_max);
    out["seed"] = std::to_string(seed);
}

std::size_t RunRecord::iterations_to_best() const
{
    for (const auto& row : rows) {
        if (row.gbest >= best_fitness) {
            return row.iteration;
        }
    }
    return rows.empty() ? 0 : rows.back().iteration;
}

IterationStats iteration_stats(std::span<const double> fitnesses)
{
    if (fitnesses.empty()) {
        throw std::invalid_argument("iteration_stats: no fitness values");
    }
    const auto [lo, hi] = std::minmax_element(fitnesses.begin(), fitnesses.end());
    double sum = 0.0;
    for (double f : fitnesses) {
        sum += f;
    }
    // The rounded mean of identical values can land one ulp outside them.
    const double avg = std::clamp(sum / double(fitnesses.size()), *lo, *hi);
    return {*lo, avg, *hi};
}

} // namespace qcpso

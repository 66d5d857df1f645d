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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qcpso/ga.hpp"
#include "qcpso/pso.hpp"
#include "qcpso/run_record.hpp"

namespace qcpso {

enum class Algorithm { PSO, GA };

/// A named configuration plus the seeds it is run with.
struct ExperimentPreset {
    std::string name;
    std::string title;
    Algorithm algorithm = Algorithm::PSO;
    SwarmConfig swarm;
    GaConfig ga;
    std::vector<std::uint64_t> seeds;

    void validate() const;
};

/// balanced, cognitive, social, ciw, tviw.
const std::vector<std::string>& preset_names();

/// Builds a PSO preset on top of `base`, replacing c1, c2 and the inertia
/// schedule:
///
///     balanced   c1 = 1.5  c2 = 1.5  w = 1
///     cognitive  c1 = 4.0  c2 = 1.5  w = 1
///     social     c1 = 1.5  c2 = 4.0  w = 1
///     ciw        social learning, w1 = w2 = 1
///     tviw       social learning, w decays 1 -> 0.3
///
/// Throws ConfigError for an unknown name.
ExperimentPreset make_preset(std::string_view name, const SwarmConfig& base,
                             std::vector<std::uint64_t> seeds);

ExperimentPreset make_ga_preset(const GaConfig& cfg, std::vector<std::uint64_t> seeds);

/// Seeds 1..count.
std::vector<std::uint64_t> seed_range(std::size_t count);

/// One record per seed, in seed order.
std::vector<RunRecord> run_experiment(const ExperimentPreset& preset);

/// Writes summary.csv, particles.csv, best_circuit.qasm, config.txt and
/// chart.svg into `dir`, creating it if needed. Throws IoError.
void write_run(const RunRecord& record, const std::filesystem::path& dir);

/// Writes each record under <out>/<preset name>/<seed>/.
void write_experiment(const ExperimentPreset& preset, const std::vector<RunRecord>& records,
                      const std::filesystem::path& out);

std::string summary_csv(const RunRecord& record);
std::string particles_csv(const RunRecord& record);
std::string config_text(const RunRecord& record);
std::string chart_svg(const RunRecord& record);

double median(std::vector<double> values);

struct CompareRow {
    std::uint64_t seed = 0;
    double pso_final = 0.0;
    double ga_final = 0.0;
    std::size_t pso_iters_to_best = 0;
    std::size_t ga_iters_to_best = 0;
};

struct Comparison {
    std::vector<CompareRow> rows;
    std::vector<RunRecord> pso_runs;
    std::vector<RunRecord> ga_runs;
};

/// Runs PSO and GA on every seed with matched budgets: the GA population
/// and generation count are taken from the swarm's particle and iteration
/// counts, and both share `swarm.problem`.
Comparison run_compare(const SwarmConfig& swarm, GaConfig ga, const std::vector<std::uint64_t>& seeds);

/// Header `seed,pso_final,ga_final,pso_iters_to_best,ga_iters_to_best`.
std::string compare_csv(const std::vector<CompareRow>& rows);

/// Writes compare.csv, compare_config.txt and the per-run directories
/// <out>/pso/<seed>/ and <out>/ga/<seed>/.
void write_compare(const Comparison& comparison, const std::filesystem::path& out);

/// Writes `content` to `path` byte for byte. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace qcpso

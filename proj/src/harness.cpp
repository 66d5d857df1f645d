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

#include "qcpso/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "qcpso/errors.hpp"
#include "qcpso/qasm.hpp"
#include "qcpso/text.hpp"

namespace qcpso {

namespace fs = std::filesystem;

void ExperimentPreset::validate() const
{
    if (name.empty()) {
        throw ConfigError("preset needs a name");
    }
    if (seeds.empty()) {
        throw ConfigError("preset '" + name + "' has no seeds");
    }
    if (algorithm == Algorithm::PSO) {
        swarm.validate();
    } else {
        ga.validate();
    }
}

const std::vector<std::string>& preset_names()
{
    static const std::vector<std::string> names = {"balanced", "cognitive", "social", "ciw", "tviw"};
    return names;
}

ExperimentPreset make_preset(std::string_view name, const SwarmConfig& base,
                             std::vector<std::uint64_t> seeds)
{
    ExperimentPreset preset;
    preset.name = std::string(name);
    preset.algorithm = Algorithm::PSO;
    preset.swarm = base;
    preset.seeds = std::move(seeds);

    auto& s = preset.swarm;
    if (name == "balanced") {
        preset.title = "Balanced Learning";
        s.c1 = 1.5;
        s.c2 = 1.5;
        s.weight_schedule = WeightSchedule::constant(1.0);
    } else if (name == "cognitive") {
        preset.title = "Cognitive Learning";
        s.c1 = 4.0;
        s.c2 = 1.5;
        s.weight_schedule = WeightSchedule::constant(1.0);
    } else if (name == "social") {
        preset.title = "Social Learning";
        s.c1 = 1.5;
        s.c2 = 4.0;
        s.weight_schedule = WeightSchedule::constant(1.0);
    } else if (name == "ciw") {
        preset.title = "Predefined-Constant IW";
        s.c1 = 1.5;
        s.c2 = 4.0;
        s.weight_schedule = WeightSchedule::constant(1.0);
    } else if (name == "tviw") {
        preset.title = "Time-Varying IW";
        s.c1 = 1.5;
        s.c2 = 4.0;
        s.weight_schedule = WeightSchedule::time_varying(1.0, 0.3);
    } else {
        throw ConfigError("unknown preset '" + std::string(name) + "'");
    }
    return preset;
}

ExperimentPreset make_ga_preset(const GaConfig& cfg, std::vector<std::uint64_t> seeds)
{
    ExperimentPreset preset;
    preset.name = "ga";
    preset.title = "Genetic Algorithm";
    preset.algorithm = Algorithm::GA;
    preset.ga = cfg;
    preset.seeds = std::move(seeds);
    return preset;
}

std::vector<std::uint64_t> seed_range(std::size_t count)
{
    std::vector<std::uint64_t> seeds(count);
    for (std::size_t i = 0; i < count; ++i) {
        seeds[i] = i + 1;
    }
    return seeds;
}

std::vector<RunRecord> run_experiment(const ExperimentPreset& preset)
{
    preset.validate();
    std::vector<RunRecord> records;
    records.reserve(preset.seeds.size());
    for (std::uint64_t seed : preset.seeds) {
        if (preset.algorithm == Algorithm::PSO) {
            SwarmConfig cfg = preset.swarm;
            cfg.problem.seed = seed;
            records.push_back(run_pso(cfg));
        } else {
            GaConfig cfg = preset.ga;
            cfg.problem.seed = seed;
            records.push_back(run_ga(cfg));
        }
        records.back().config["preset"] = preset.name;
    }
    return records;
}

void write_file(const fs::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(content.data(), std::streamsize(content.size()));
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

namespace {

void make_directory(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
    }
}

std::string svg_number(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

} // namespace

std::string summary_csv(const RunRecord& record)
{
    std::string out = "iteration,worst,avg,best,gbest,weight\n";
    for (const auto& row : record.rows) {
        out += std::to_string(row.iteration) + ',' + format_real(row.worst) + ',' + format_real(row.avg) +
               ',' + format_real(row.best) + ',' + format_real(row.gbest) + ',' +
               format_real(row.weight) + '\n';
    }
    return out;
}

std::string particles_csv(const RunRecord& record)
{
    std::string out = "iteration,particle,fitness\n";
    for (std::size_t t = 0; t < record.particle_fitness.size(); ++t) {
        const auto& column = record.particle_fitness[t];
        for (std::size_t i = 0; i < column.size(); ++i) {
            out += std::to_string(record.rows[t].iteration) + ',' + std::to_string(i) + ',' +
                   format_real(column[i]) + '\n';
        }
    }
    return out;
}

std::string config_text(const RunRecord& record)
{
    auto entries = record.config;
    entries["best_fitness"] = format_real(record.best_fitness);
    std::string out;
    for (const auto& [key, value] : entries) {
        out += key + " = " + value + '\n';
    }
    return out;
}

std::string chart_svg(const RunRecord& record)
{
    constexpr double width = 640.0;
    constexpr double height = 400.0;
    constexpr double margin = 40.0;

    double top = 0.0;
    for (const auto& row : record.rows) {
        top = std::max(top, row.gbest);
    }
    if (top <= 0.0) {
        top = 1.0;
    }
    const std::size_t n = record.rows.size();
    auto x_of = [&](std::size_t i) {
        return margin + (n > 1 ? double(i) / double(n - 1) : 0.5) * (width - 2 * margin);
    };
    auto y_of = [&](double v) { return height - margin - v / top * (height - 2 * margin); };

    struct Series {
        const char* label;
        const char* color;
        double IterationRow::*field;
    };
    const Series series[] = {{"worst", "#d62728", &IterationRow::worst},
                             {"avg", "#ff7f0e", &IterationRow::avg},
                             {"best", "#2ca02c", &IterationRow::best},
                             {"gbest", "#1f77b4", &IterationRow::gbest}};

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
                      "viewBox=\"0 0 640 400\">\n";
    out += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
    out += "<line x1=\"40\" y1=\"360\" x2=\"600\" y2=\"360\" stroke=\"black\"/>\n";
    out += "<line x1=\"40\" y1=\"40\" x2=\"40\" y2=\"360\" stroke=\"black\"/>\n";
    out += "<text x=\"4\" y=\"44\" font-size=\"10\">" + svg_number(top) + "</text>\n";
    out += "<text x=\"30\" y=\"374\" font-size=\"10\">0</text>\n";
    out += "<text x=\"300\" y=\"390\" font-size=\"12\">iteration</text>\n";
    for (std::size_t s = 0; s < std::size(series); ++s) {
        out += "<polyline fill=\"none\" stroke=\"";
        out += series[s].color;
        out += "\" points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += svg_number(x_of(i)) + ',' + svg_number(y_of(record.rows[i].*series[s].field));
        }
        out += "\"/>\n";
        out += "<text x=\"" + svg_number(width - margin - 60) + "\" y=\"" +
               svg_number(margin + 14.0 * double(s)) + "\" font-size=\"11\" fill=\"" + series[s].color +
               "\">" + series[s].label + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_run(const RunRecord& record, const fs::path& dir)
{
    make_directory(dir);
    write_file(dir / "summary.csv", summary_csv(record));
    write_file(dir / "particles.csv", particles_csv(record));
    write_file(dir / "best_circuit.qasm", emit_qasm(record.best_circuit));
    write_file(dir / "config.txt", config_text(record));
    write_file(dir / "chart.svg", chart_svg(record));
}

void write_experiment(const ExperimentPreset& preset, const std::vector<RunRecord>& records,
                      const fs::path& out)
{
    if (records.size() != preset.seeds.size()) {
        throw std::invalid_argument("write_experiment: one record per seed expected");
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        write_run(records[i], out / preset.name / std::to_string(preset.seeds[i]));
    }
}

double median(std::vector<double> values)
{
    if (values.empty()) {
        throw std::invalid_argument("median of an empty sequence");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

Comparison run_compare(const SwarmConfig& swarm, GaConfig ga, const std::vector<std::uint64_t>& seeds)
{
    if (seeds.empty()) {
        throw ConfigError("compare needs at least one seed");
    }
    ga.problem = swarm.problem;
    ga.population = swarm.num_particles;
    ga.generations = swarm.num_iterations;
    swarm.validate();
    ga.validate();

    Comparison result;
    for (std::uint64_t seed : seeds) {
        SwarmConfig pso_cfg = swarm;
        pso_cfg.problem.seed = seed;
        GaConfig ga_cfg = ga;
        ga_cfg.problem.seed = seed;

        RunRecord pso = run_pso(pso_cfg);
        RunRecord gen = run_ga(ga_cfg);
        result.rows.push_back(CompareRow{seed, pso.best_fitness, gen.best_fitness,
                                         pso.iterations_to_best(), gen.iterations_to_best()});
        result.pso_runs.push_back(std::move(pso));
        result.ga_runs.push_back(std::move(gen));
    }
    return result;
}

std::string compare_csv(const std::vector<CompareRow>& rows)
{
    std::string out = "seed,pso_final,ga_final,pso_iters_to_best,ga_iters_to_best\n";
    for (const auto& row : rows) {
        out += std::to_string(row.seed) + ',' + format_real(row.pso_final) + ',' +
               format_real(row.ga_final) + ',' + std::to_string(row.pso_iters_to_best) + ',' +
               std::to_string(row.ga_iters_to_best) + '\n';
    }
    return out;
}

void write_compare(const Comparison& comparison, const fs::path& out)
{
    make_directory(out);
    write_file(out / "compare.csv", compare_csv(comparison.rows));

    std::map<std::string, std::string> meta;
    auto absorb = [&meta](const std::string& prefix, const RunRecord& record) {
        for (const auto& [key, value] : record.config) {
            if (key != "seed") {
                meta[prefix + key] = value;
            }
        }
    };
    if (!comparison.pso_runs.empty()) {
        absorb("pso.", comparison.pso_runs.front());
        absorb("ga.", comparison.ga_runs.front());
    }
    std::vector<double> pso_iters;
    std::vector<double> ga_iters;
    std::string seeds;
    for (const auto& row : comparison.rows) {
        pso_iters.push_back(double(row.pso_iters_to_best));
        ga_iters.push_back(double(row.ga_iters_to_best));
        seeds += (seeds.empty() ? "" : ",") + std::to_string(row.seed);
    }
    meta["seeds"] = seeds;
    if (!comparison.rows.empty()) {
        meta["median_pso_iters_to_best"] = format_real(median(pso_iters));
        meta["median_ga_iters_to_best"] = format_real(median(ga_iters));
    }
    std::string text;
    for (const auto& [key, value] : meta) {
        text += key + " = " + value + '\n';
    }
    write_file(out / "compare_config.txt", text);

    for (std::size_t i = 0; i < comparison.rows.size(); ++i) {
        const std::string seed = std::to_string(comparison.rows[i].seed);
        write_run(comparison.pso_runs[i], out / "pso" / seed);
        write_run(comparison.ga_runs[i], out / "ga" / seed);
    }
}

} // namespace qcpso

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

#include "qcpso/circuit.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "qcpso/errors.hpp"

namespace qcpso {

std::string_view gate_name(GateKind kind)
{
    switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::CX: return "cx";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    }
    return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name)
{
    for (GateKind kind : all_gate_kinds) {
        if (gate_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

GateSet::GateSet(std::initializer_list<GateKind> kinds)
{
    for (GateKind kind : kinds) {
        insert(kind);
    }
}

GateSet GateSet::all()
{
    GateSet set;
    for (GateKind kind : all_gate_kinds) {
        set.insert(kind);
    }
    return set;
}

GateSet GateSet::parse(std::string_view list)
{
    GateSet set;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t end = list.find(',', pos);
        if (end == std::string_view::npos) {
            end = list.size();
        }
        std::string name;
        for (char c : list.substr(pos, end - pos)) {
            if (c != ' ') {
                name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            }
        }
        const auto kind = gate_from_name(name);
        if (!kind) {
            throw ConfigError("unknown gate '" + name + "'");
        }
        set.insert(*kind);
        pos = end + 1;
    }
    if (set.empty()) {
        throw ConfigError("gate set is empty");
    }
    return set;
}

std::vector<GateKind> GateSet::kinds() const
{
    std::vector<GateKind> out;
    for (GateKind kind : all_gate_kinds) {
        if (contains(kind)) {
            out.push_back(kind);
        }
    }
    return out;
}

std::string GateSet::to_string() const
{
    std::string out;
    for (GateKind kind : kinds()) {
        if (!out.empty()) {
            out += ',';
        }
        out += gate_name(kind);
    }
    return out;
}

Instruction Instruction::single(GateKind kind, std::uint32_t target)
{
    return Instruction{kind, {target, 0}, std::nullopt};
}

Instruction Instruction::rotation(GateKind kind, std::uint32_t target, double angle)
{
    return Instruction{kind, {target, 0}, angle};
}

Instruction Instruction::cx(std::uint32_t control, std::uint32_t target)
{
    return Instruction{GateKind::CX, {control, target}, std::nullopt};
}

void validate(const Instruction& instr, std::uint32_t num_qubits)
{
    const std::string name{gate_name(instr.kind)};
    if (instr.qubits[0] >= num_qubits) {
        throw ConfigError(name + ": qubit " + std::to_string(instr.qubits[0]) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
    }
    if (is_two_qubit(instr.kind)) {
        if (instr.qubits[1] >= num_qubits) {
            throw ConfigError(name + ": qubit " + std::to_string(instr.qubits[1]) +
                              " out of range for " + std::to_string(num_qubits) + " qubits");
        }
        if (instr.qubits[0] == instr.qubits[1]) {
            throw ConfigError("cx: control and target must differ");
        }
    } else if (instr.qubits[1] != 0) {
        throw ConfigError(name + ": single-qubit gate with a second operand");
    }
    if (is_parameterized(instr.kind)) {
        if (!instr.angle) {
            throw ConfigError(name + ": missing angle");
        }
        const double a = *instr.angle;
        if (!(a >= 0.0 && a < 2.0 * std::numbers::pi)) {
            throw ConfigError(name + ": angle outside [0, 2pi)");
        }
    } else if (instr.angle) {
        throw ConfigError(name + ": unexpected angle");
    }
}

Circuit::Circuit(std::uint32_t num_qubits, std::vector<Instruction> body)
    : num_qubits_(num_qubits), body_(std::move(body))
{
    if (num_qubits_ == 0) {
        throw ConfigError("circuit needs at least one qubit");
    }
    if (num_qubits_ > max_qubits) {
        throw ConfigError("circuit exceeds " + std::to_string(max_qubits) + " qubits");
    }
    for (const auto& instr : body_) {
        validate(instr, num_qubits_);
    }
}

namespace {

std::vector<GateKind> usable_kinds(std::uint32_t num_qubits, const GateSet& gate_set)
{
    std::vector<GateKind> kinds;
    for (GateKind kind : gate_set.kinds()) {
        if (!is_two_qubit(kind) || num_qubits >= 2) {
            kinds.push_back(kind);
        }
    }
    return kinds;
}

} // namespace

void check_drawable(std::uint32_t num_qubits, const GateSet& gate_set)
{
    if (num_qubits == 0) {
        throw ConfigError("num_qubits must be at least 1");
    }
    if (gate_set.empty()) {
        throw ConfigError("gate set is empty");
    }
    if (usable_kinds(num_qubits, gate_set).empty()) {
        throw ConfigError("cx needs at least two qubits");
    }
}

Instruction random_instruction(std::uint32_t num_qubits, const GateSet& gate_set, Rng& rng)
{
    check_drawable(num_qubits, gate_set);
    const auto kinds = usable_kinds(num_qubits, gate_set);
    const GateKind kind = kinds[uniform_index(rng, kinds.size())];

    if (is_two_qubit(kind)) {
        const auto control = static_cast<std::uint32_t>(uniform_index(rng, num_qubits));
        auto target = static_cast<std::uint32_t>(uniform_index(rng, num_qubits - 1));
        if (target >= control) {
            ++target;
        }
        return Instruction::cx(control, target);
    }

    const auto target = static_cast<std::uint32_t>(uniform_index(rng, num_qubits));
    if (is_parameterized(kind)) {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        double angle = uniform_unit(rng) * two_pi;
        if (angle >= two_pi) {
            angle = std::nextafter(two_pi, 0.0);
        }
        return Instruction::rotation(kind, target, angle);
    }
    return Instruction::single(kind, target);
}

std::vector<Instruction> random_body(std::uint32_t num_qubits, const GateSet& gate_set,
                                     std::size_t length, Rng& rng)
{
    std::vector<Instruction> body;
    body.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        body.push_back(random_instruction(num_qubits, gate_set, rng));
    }
    return body;
}

} // namespace qcpso

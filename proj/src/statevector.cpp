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

#include "qcpso/statevector.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>


namespace qcpso {

Statevector::Statevector(std::uint32_t num_qubits)
    : num_qubits_(num_qubits), amplitudes_(std::size_t{1} << num_qubits)
{
    amplitudes_[0] = 1.0;
}

Statevector::Statevector(std::uint32_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes))
{
    if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("statevector size does not match qubit count");
    }
}

double Statevector::norm_squared() const
{
    double sum = 0.0;
    for (const auto& a : amplitudes_) {
        sum += std::norm(a);
    }
    return sum;
}

void Statevector::apply_single(std::uint32_t target, const Amplitude (&m)[2][2])
{
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t dim = amplitudes_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Amplitude a0 = amplitudes_[i];
            const Amplitude a1 = amplitudes_[i + stride];
            amplitudes_[i] = m[0][0] * a0 + m[0][1] * a1;
            amplitudes_[i + stride] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

void Statevector::apply_cx(std::uint32_t control, std::uint32_t target)
{
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        // Visit each swapped pair once, from its target-bit-clear member.
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amplitudes_[i], amplitudes_[i | tmask]);
        }
    }
}

void Statevector::apply(const Instruction& instr)
{
    assert(instr.qubits[0] < num_qubits_);
    using namespace std::complex_literals;
    const std::uint32_t q = instr.qubits[0];

    switch (instr.kind) {
    case GateKind::H: {
        const double s = std::numbers::sqrt2 / 2.0;
        const Amplitude m[2][2] = {{s, s}, {s, -s}};
        apply_single(q, m);
        break;
    }
    case GateKind::X: {
        const Amplitude m[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
        apply_single(q, m);
        break;
    }
    case GateKind::Y: {
        const Amplitude m[2][2] = {{0.0, -1i}, {1i, 0.0}};
        apply_single(q, m);
        break;
    }
    case GateKind::Z: {
        const Amplitude m[2][2] = {{1.0, 0.0}, {0.0, -1.0}};
        apply_single(q, m);
        break;
    }
    case GateKind::CX:
        assert(instr.qubits[1] < num_qubits_ && instr.qubits[0] != instr.qubits[1]);
        apply_cx(instr.qubits[0], instr.qubits[1]);
        break;
    case GateKind::RX: {
        const double half = instr.angle.value() / 2.0;
        const double c = std::cos(half);
        const double s = std::sin(half);
        const Amplitude m[2][2] = {{c, -1i * s}, {-1i * s, c}};
        apply_single(q, m);
        break;
    }
    case GateKind::RY: {
        const double half = instr.angle.value() / 2.0;
        const double c = std::cos(half);
        const double s = std::sin(half);
        const Amplitude m[2][2] = {{c, -s}, {s, c}};
        apply_single(q, m);
        break;
    }
    case GateKind::RZ: {
        const double half = instr.angle.value() / 2.0;
        const Amplitude m[2][2] = {{std::polar(1.0, -half), 0.0}, {0.0, std::polar(1.0, half)}};
        apply_single(q, m);
        break;
    }
    }
}

Statevector apply_instruction(Statevector state, const Instruction& instr)
{
    state.apply(instr);
    return state;
}

ProbabilityDistribution::ProbabilityDistribution(std::uint32_t num_qubits, std::vector<double> probs)
    : num_qubits_(num_qubits), probs_(std::move(probs))
{
    if (probs_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("distribution size does not match qubit count");
    }
}

ProbabilityDistribution ProbabilityDistribution::uniform(std::uint32_t num_qubits)
{
    const std::size_t dim = std::size_t{1} << num_qubits;
    return ProbabilityDistribution(num_qubits, std::vector<double>(dim, 1.0 / double(dim)));
}

ProbabilityDistribution ProbabilityDistribution::point_mass(std::uint32_t num_qubits, std::size_t index)
{
    std::vector<double> probs(std::size_t{1} << num_qubits, 0.0);
    probs.at(index) = 1.0;
    return ProbabilityDistribution(num_qubits, std::move(probs));
}

Statevector simulate(const Circuit& circuit)
{
    Statevector state(circuit.num_qubits());
    for (std::uint32_t q = 0; q < circuit.num_qubits(); ++q) {
        state.apply(Instruction::single(GateKind::H, q));
    }
    for (const auto& instr : circuit.body()) {
        state.apply(instr);
    }
    return state;
}

ProbabilityDistribution probabilities(const Circuit& circuit)
{
    const Statevector state = simulate(circuit);
    std::vector<double> probs;
    probs.reserve(state.amplitudes().size());
    for (const auto& a : state.amplitudes()) {
        probs.push_back(std::norm(a));
    }
    return ProbabilityDistribution(circuit.num_qubits(), std::move(probs));
}

} // namespace qcpso

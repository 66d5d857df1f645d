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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qcpso/circuit.hpp"

namespace qcpso {

using Amplitude = std::complex<double>;

/// Dense pure state over `num_qubits` qubits. Qubit q is bit q of the basis
/// index, so q[0] is the least significant bit.
class Statevector {
public:
    /// |0...0>.
    explicit Statevector(std::uint32_t num_qubits);

    /// Takes ownership of `amplitudes`; the size must be a power of two.
    Statevector(std::uint32_t num_qubits, std::vector<Amplitude> amplitudes);

    std::uint32_t num_qubits() const { return num_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }

    /// Applies one gate in place. O(2^n).
    void apply(const Instruction& instr);

    double norm_squared() const;

private:
    void apply_single(std::uint32_t target, const Amplitude (&m)[2][2]);
    void apply_cx(std::uint32_t control, std::uint32_t target);

    std::uint32_t num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Value-returning form of Statevector::apply.
Statevector apply_instruction(Statevector state, const Instruction& instr);

/// Basis-state probabilities |a_k|^2, indexed by k.
class ProbabilityDistribution {
public:
    ProbabilityDistribution(std::uint32_t num_qubits, std::vector<double> probs);

    std::uint32_t num_qubits() const { return num_qubits_; }
    std::span<const double> probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t k) const { return probs_[k]; }

    static ProbabilityDistribution uniform(std::uint32_t num_qubits);
    static ProbabilityDistribution point_mass(std::uint32_t num_qubits, std::size_t index);

private:
    std::uint32_t num_qubits_;
    std::vector<double> probs_;
};

/// Final state of |0...0> after the Hadamard layer and the body.
Statevector simulate(const Circuit& circuit);

ProbabilityDistribution probabilities(const Circuit& circuit);

} // namespace qcpso

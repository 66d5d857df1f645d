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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcpso/random.hpp"

namespace qcpso {

enum class GateKind : std::uint8_t { H, X, Y, Z, CX, RX, RY, RZ };

inline constexpr std::array<GateKind, 8> all_gate_kinds = {
    GateKind::H, GateKind::X, GateKind::Y, GateKind::Z,
    GateKind::CX, GateKind::RX, GateKind::RY, GateKind::RZ};

constexpr bool is_two_qubit(GateKind kind) { return kind == GateKind::CX; }

constexpr bool is_parameterized(GateKind kind)
{
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

/// Kinds that can move amplitude from |0> to |1> on their own.
constexpr bool can_flip(GateKind kind)
{
    return kind == GateKind::X || kind == GateKind::Y || kind == GateKind::RX || kind == GateKind::RY;
}

/// Lower-case OpenQASM mnemonic ("h", "cx", "rz", ...).
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

/// Set of gate kinds available to the search. Iteration order is the
/// declaration order of GateKind, which keeps random draws reproducible.
class GateSet {
public:
    GateSet() = default;
    GateSet(std::initializer_list<GateKind> kinds);

    /// H, X, Y, Z, CX, RX, RY, RZ.
    static GateSet all();

    /// Parses a comma separated list such as "h,x,cx". Throws ConfigError.
    static GateSet parse(std::string_view list);

    void insert(GateKind kind) { bits_ |= mask(kind); }
    bool contains(GateKind kind) const { return (bits_ & mask(kind)) != 0; }
    bool empty() const { return bits_ == 0; }
    std::vector<GateKind> kinds() const;

    /// Comma separated mnemonics, e.g. "h,x,cx".
    std::string to_string() const;

    friend bool operator==(const GateSet&, const GateSet&) = default;

private:
    static constexpr std::uint8_t mask(GateKind kind) { return std::uint8_t(1u << unsigned(kind)); }
    std::uint8_t bits_ = 0;
};

/// One gate application. For CX `qubits` holds (control, target); single
/// qubit kinds use only `qubits[0]` and keep `qubits[1] == 0`.
struct Instruction {
    GateKind kind = GateKind::H;
    std::array<std::uint32_t, 2> qubits{};
    std::optional<double> angle;

    static Instruction single(GateKind kind, std::uint32_t target);
    static Instruction rotation(GateKind kind, std::uint32_t target, double angle);
    static Instruction cx(std::uint32_t control, std::uint32_t target);

    std::size_t arity() const { return is_two_qubit(kind) ? 2 : 1; }

    friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// Throws ConfigError when `instr` is malformed or addresses a qubit outside
/// [0, num_qubits).
void validate(const Instruction& instr, std::uint32_t num_qubits);

/// A circuit body. The Hadamard layer on every qubit that precedes the body
/// is not stored; the simulator and the QASM writer add it.
class Circuit {
public:
    /// Throws ConfigError if num_qubits is zero or any instruction is invalid.
    explicit Circuit(std::uint32_t num_qubits, std::vector<Instruction> body = {});

    std::uint32_t num_qubits() const { return num_qubits_; }
    const std::vector<Instruction>& body() const { return body_; }

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    std::uint32_t num_qubits_;
    std::vector<Instruction> body_;
};

/// Largest register the dense simulator accepts.
inline constexpr std::uint32_t max_qubits = 24;

/// Throws ConfigError unless `gate_set` can produce at least one instruction
/// on `num_qubits` qubits.
void check_drawable(std::uint32_t num_qubits, const GateSet& gate_set);

/// Kind uniform over the usable members of `gate_set` (CX is unusable on a
/// single qubit), distinct targets uniform, angle uniform in [0, 2pi).
Instruction random_instruction(std::uint32_t num_qubits, const GateSet& gate_set, Rng& rng);

/// `length` independent draws of random_instruction.
std::vector<Instruction> random_body(std::uint32_t num_qubits, const GateSet& gate_set,
                                     std::size_t length, Rng& rng);

} // namespace qcpso

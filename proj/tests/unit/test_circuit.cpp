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

#include <array>
#include <cmath>
#include <numbers>

#include "qcpso/circuit.hpp"
#include "qcpso/errors.hpp"

using namespace qcpso;

TEST_CASE("random_instruction with a single possibility")
{
    Rng rng{42};
    for (int i = 0; i < 20; ++i) {
        const Instruction instr = random_instruction(1, GateSet{GateKind::X}, rng);
        CHECK(instr == Instruction::single(GateKind::X, 0));
    }
}

TEST_CASE("random_instruction rejects unusable gate sets")
{
    Rng rng{1};
    CHECK_THROWS_AS(random_instruction(1, GateSet{GateKind::CX}, rng), ConfigError);
    CHECK_THROWS_AS(random_instruction(3, GateSet{}, rng), ConfigError);
    CHECK_THROWS_AS(random_instruction(0, GateSet{GateKind::X}, rng), ConfigError);
}

TEST_CASE("random_instruction skips cx on one qubit when other kinds exist")
{
    Rng rng{3};
    for (int i = 0; i < 200; ++i) {
        CHECK(random_instruction(1, GateSet{GateKind::X, GateKind::CX}, rng).kind == GateKind::X);
    }
}

TEST_CASE("random_instruction draws kinds uniformly")
{
    Rng rng{2024};
    std::array<int, 8> counts{};
    constexpr int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        const Instruction instr = random_instruction(5, GateSet::all(), rng);
        REQUIRE_NOTHROW(validate(instr, 5));
        ++counts[std::size_t(instr.kind)];
    }
    double chi2 = 0.0;
    for (int c : counts) {
        CHECK(std::abs(double(c) / draws - 1.0 / 8.0) <= 0.02);
        const double expected = draws / 8.0;
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // 7 degrees of freedom, p = 0.001 critical value.
    CHECK(chi2 < 24.32);
}

TEST_CASE("random_instruction targets and angles")
{
    Rng rng{5};
    std::array<int, 20> pairs{};
    int cx_count = 0;
    for (int i = 0; i < 40000; ++i) {
        const Instruction instr = random_instruction(5, GateSet{GateKind::CX, GateKind::RY}, rng);
        if (instr.kind == GateKind::CX) {
            CHECK(instr.qubits[0] != instr.qubits[1]);
            const auto t = instr.qubits[1] > instr.qubits[0] ? instr.qubits[1] - 1 : instr.qubits[1];
            ++pairs[instr.qubits[0] * 4 + t];
            ++cx_count;
        } else {
            REQUIRE(instr.angle.has_value());
            CHECK(*instr.angle >= 0.0);
            CHECK(*instr.angle < 2.0 * std::numbers::pi);
        }
    }
    for (int c : pairs) {
        CHECK(std::abs(double(c) / cx_count - 1.0 / 20.0) <= 0.01);
    }
}

TEST_CASE("random_instruction is deterministic for a seed")
{
    Rng a{77};
    Rng b{77};
    CHECK(random_body(5, GateSet::all(), 200, a) == random_body(5, GateSet::all(), 200, b));
}

TEST_CASE("validate enforces instruction invariants")
{
    CHECK_NOTHROW(validate(Instruction::cx(0, 1), 2));
    CHECK_THROWS_AS(validate(Instruction::cx(1, 1), 2), ConfigError);
    CHECK_THROWS_AS(validate(Instruction::cx(0, 2), 2), ConfigError);
    CHECK_THROWS_AS(validate(Instruction::single(GateKind::X, 3), 3), ConfigError);
    CHECK_THROWS_AS(validate(Instruction::single(GateKind::RX, 0), 1), ConfigError);
    CHECK_THROWS_AS(validate(Instruction::rotation(GateKind::X, 0, 1.0), 1), ConfigError);
    CHECK_THROWS_AS(validate(Instruction::rotation(GateKind::RZ, 0, 2.0 * std::numbers::pi), 1),
                    ConfigError);
    CHECK_THROWS_AS(validate(Instruction::rotation(GateKind::RZ, 0, -0.1), 1), ConfigError);
    CHECK_THROWS_AS(Circuit(0), ConfigError);
    CHECK_THROWS_AS(Circuit(2, {Instruction::single(GateKind::H, 2)}), ConfigError);
}

TEST_CASE("GateSet parsing")
{
    CHECK(GateSet::parse("h,x,y,z,cx,rx,ry,rz") == GateSet::all());
    CHECK(GateSet::parse("X, CX") == GateSet{GateKind::X, GateKind::CX});
    CHECK(GateSet::parse("cx,h").to_string() == "h,cx");
    CHECK_THROWS_AS(GateSet::parse("cz"), ConfigError);
    CHECK_THROWS_AS(GateSet::parse(""), ConfigError);
}

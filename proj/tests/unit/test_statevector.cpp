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

#include <cmath>
#include <numbers>

#include "qcpso/statevector.hpp"
#include "support/dense_oracle.hpp"

using namespace qcpso;

namespace {

Instruction inverse(const Instruction& instr)
{
    if (!instr.angle) {
        return instr;
    }
    const double back = *instr.angle == 0.0 ? 0.0 : 2.0 * std::numbers::pi - *instr.angle;
    // R(2pi - a) = -R(-a): same state up to a global phase, so compare
    // amplitudes after undoing that phase below.
    return Instruction::rotation(instr.kind, instr.qubits[0], back);
}

} // namespace

TEST_CASE("x flips |0>")
{
    const Statevector s = apply_instruction(Statevector(1), Instruction::single(GateKind::X, 0));
    CHECK(s.amplitudes()[0] == Amplitude(0.0));
    CHECK(s.amplitudes()[1] == Amplitude(1.0));
}

TEST_CASE("h maps |0> to |+>")
{
    const Statevector s = apply_instruction(Statevector(1), Instruction::single(GateKind::H, 0));
    CHECK(std::abs(s.amplitudes()[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s.amplitudes()[1] - 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("cx on |01> gives |11>")
{
    Statevector s(2, {0.0, 1.0, 0.0, 0.0});
    s.apply(Instruction::cx(0, 1));
    CHECK(s.amplitudes()[3] == Amplitude(1.0));

    // Same result from the Kronecker-product oracle.
    const auto m = oracle::full_matrix(Instruction::cx(0, 1), 2);
    const auto v = oracle::apply(m, {0.0, 1.0, 0.0, 0.0});
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(v[k] - s.amplitudes()[k]) < 1e-15);
    }
}

TEST_CASE("cx leaves the control-clear half alone")
{
    Statevector s(2, {0.0, 0.0, 1.0, 0.0}); // |10>: q1 = 1, q0 = 0
    s.apply(Instruction::cx(0, 1));
    CHECK(s.amplitudes()[2] == Amplitude(1.0));
    s.apply(Instruction::cx(1, 0));
    CHECK(s.amplitudes()[3] == Amplitude(1.0));
}

TEST_CASE("probabilities of the bare prefix are uniform")
{
    const auto dist = probabilities(Circuit(5));
    REQUIRE(dist.size() == 32);
    for (double p : dist.probs()) {
        CHECK(std::abs(p - 1.0 / 32.0) < 1e-15);
    }
}

TEST_CASE("h then x on every qubit lands on the all-ones state")
{
    std::vector<Instruction> body;
    for (std::uint32_t q = 0; q < 5; ++q) {
        body.push_back(Instruction::single(GateKind::H, q));
    }
    for (std::uint32_t q = 0; q < 5; ++q) {
        body.push_back(Instruction::single(GateKind::X, q));
    }
    const auto dist = probabilities(Circuit(5, body));
    for (std::size_t k = 0; k < 32; ++k) {
        CHECK(std::abs(dist[k] - (k == 31 ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("rotations match closed forms")
{
    const double theta = 0.7;
    Statevector s(1);
    s.apply(Instruction::rotation(GateKind::RY, 0, theta));
    CHECK(std::abs(s.amplitudes()[0] - std::cos(theta / 2)) < 1e-15);
    CHECK(std::abs(s.amplitudes()[1] - std::sin(theta / 2)) < 1e-15);

    Statevector r(1);
    r.apply(Instruction::rotation(GateKind::RX, 0, theta));
    CHECK(std::abs(r.amplitudes()[1] - Amplitude(0, -std::sin(theta / 2))) < 1e-15);

    Statevector z(1, {0.0, 1.0});
    z.apply(Instruction::rotation(GateKind::RZ, 0, theta));
    CHECK(std::abs(z.amplitudes()[1] - std::polar(1.0, theta / 2)) < 1e-15);
}

TEST_CASE("small random circuits agree with the dense oracle")
{
    Rng rng{31337};
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = std::uint32_t(1 + uniform_index(rng, 3));
        const auto body = random_body(n, GateSet::all(), uniform_index(rng, 6), rng);
        const Statevector fast = simulate(Circuit(n, body));
        const auto slow = oracle::run(n, body);
        for (std::size_t k = 0; k < slow.size(); ++k) {
            REQUIRE(std::abs(fast.amplitudes()[k] - slow[k]) < 1e-9);
        }
    }
}

TEST_CASE("norm is preserved and every gate is undone by its inverse")
{
    Rng rng{8};
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t n = 4;
        Statevector state = simulate(Circuit(n, random_body(n, GateSet::all(), 8, rng)));
        CHECK(std::abs(state.norm_squared() - 1.0) < 1e-9);

        const Instruction instr = random_instruction(n, GateSet::all(), rng);
        Statevector moved = apply_instruction(state, instr);
        CHECK(std::abs(moved.norm_squared() - 1.0) < 1e-9);
        moved.apply(inverse(instr));

        // Rotations by 2pi - a equal the inverse up to a sign.
        const double sign = instr.angle && *instr.angle != 0.0 ? -1.0 : 1.0;
        for (std::size_t k = 0; k < state.amplitudes().size(); ++k) {
            REQUIRE(std::abs(sign * moved.amplitudes()[k] - state.amplitudes()[k]) < 1e-9);
        }
    }
}

TEST_CASE("probabilities sum to one")
{
    Rng rng{12};
    for (int trial = 0; trial < 100; ++trial) {
        const auto dist = probabilities(Circuit(5, random_body(5, GateSet::all(), 30, rng)));
        double sum = 0.0;
        for (double p : dist.probs()) {
            CHECK(p >= 0.0);
            sum += p;
        }
        CHECK(std::abs(sum - 1.0) < 1e-9);
    }
}

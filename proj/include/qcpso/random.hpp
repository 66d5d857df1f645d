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
#include <random>

namespace qcpso {

/// The engine is fixed so that a seed means the same thing everywhere.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). `bound` must be positive.
///
/// The standard distributions are implementation-defined, so runs would not
/// reproduce across standard libraries; these helpers are.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

/// Uniform real in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

/// Independent stream for one (seed, domain, a, b) coordinate. Used to give
/// every particle of every iteration its own generator, which makes results
/// independent of evaluation order and thread count.
Rng substream(std::uint64_t seed, std::uint64_t domain, std::uint64_t a, std::uint64_t b);

namespace stream_domain {
inline constexpr std::uint64_t pso_init = 1;
inline constexpr std::uint64_t pso_step = 2;
inline constexpr std::uint64_t ga_init = 3;
inline constexpr std::uint64_t ga_breed = 4;
} // namespace stream_domain

} // namespace qcpso

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

#include <ostream>
#include <span>
#include <string>

namespace qcpso {

inline constexpr int exit_ok = 0;
inline constexpr int exit_io_error = 1;
inline constexpr int exit_usage_error = 2;

/// Entry point behind the `qcpso` executable. `args` excludes the program
/// name. Results go to `out`, diagnostics to `err`.
///
///     qcpso run        one PSO or GA run
///     qcpso experiment the learning/inertia presets over a seed batch
///     qcpso compare    PSO against GA with matched budgets
///     qcpso simulate   probabilities and fitness of a .qasm file
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace qcpso

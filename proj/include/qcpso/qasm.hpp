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

#include <string>
#include <string_view>

#include "qcpso/circuit.hpp"

namespace qcpso {

/// OpenQASM 2.0 text for `circuit`: header, register, the Hadamard layer on
/// every qubit, then one statement per body instruction. Angles are written
/// with 17 significant digits.
std::string emit_qasm(const Circuit& circuit);

/// Reads the subset written by emit_qasm: version line, optional include,
/// one qreg, and h/x/y/z/cx/rx/ry/rz statements. Angles may be decimal
/// literals, `pi`, or a product/quotient of two such terms, optionally
/// negated; they are reduced into [0, 2pi). A full `h` layer directly after
/// the register declaration is taken to be the implicit prefix and dropped.
///
/// Throws QasmError with the line and column of the first problem.
Circuit parse_qasm(std::string_view text);

} // namespace qcpso

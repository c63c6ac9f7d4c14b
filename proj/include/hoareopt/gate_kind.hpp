// Copyright 2026 The hoareopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hoareopt {

/// Base (uncontrolled) gates. Controlled variants carry their controls in the
/// Instruction, so CNOT is X with one control and Fredkin is Swap with one.
enum class GateKind : std::uint8_t { X, Z, H, S, T, Tdg, Swap };

inline constexpr std::array<GateKind, 7> kAllGates = {GateKind::X, GateKind::Z, GateKind::H, GateKind::S,
                                                      GateKind::T, GateKind::Tdg, GateKind::Swap};

/// Lowercase base mnemonic: x, z, h, s, t, tdg, swap.
std::string_view base_name(GateKind g);
std::optional<GateKind> gate_from_base_name(std::string_view name);
/// Number of target qubits.
int gate_arity(GateKind g);

/// Text-format mnemonic of `g` with `num_controls` controls: x/cx/ccx/mcx,
/// swap/cswap/mcswap, and <g>/mc<g> for the remaining gates.
std::string mnemonic(GateKind g, std::size_t num_controls);

}  // namespace hoareopt

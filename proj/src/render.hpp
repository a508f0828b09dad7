// Copyright 2026 qembed developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once
#include <string>

#include "embedder.hpp"
#include "lattice.hpp"

namespace qembed {

// Draws the lattice with vertical wires as columns and horizontal wires as
// rows; each qubit is the segment of its wire spanning its crossing window.
// Chain qubits are colored by layer (visible blue, hidden green), couplers
// internal to a chain are drawn bold, and couplers carrying logical edges get
// a thin crossing tick.  Integer geometry only, so output is byte-identical
// for identical inputs.  Pass an empty embedding for the bare lattice.
std::string render_svg(const Embedding& e, const HardwareGraph& g);

}  // namespace qembed

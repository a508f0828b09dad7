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
#include <string_view>

#include "embedder.hpp"
#include "ising.hpp"
#include "validator.hpp"

namespace qembed {

/*
Wire formats.  All emitters produce UTF-8 with LF endings, fixed key order,
and are byte-deterministic for identical inputs.

Embedding:
  {"visible": [[id, ...], ...], "hidden": [[id, ...], ...],
   "params": {"M":, "alpha":, "m":, "n":, "C0":}, "provenance": "structured"}

Logical Ising:
  {"V":, "H":, "h": [V+H biases, visible first], "J": [[i, j, weight], ...]}

Physical Ising:
  {"h": {"id": bias, ...}, "J": [[a, b, weight], ...]}  with a < b, sorted

Ground states:
  {"variables": [...], "min_energy":, "states": [[+-1, ...], ...]}

Validation report:
  {"is_valid":, "checks": {name: {"pass":, "offenders": [...]}, ...}}
*/

std::string embedding_to_json(const Embedding& e);
Embedding embedding_from_json(std::string_view text);

std::string report_to_json(const ValidationReport& report);
std::string metrics_to_json(const ChainMetrics& metrics);

std::string logical_ising_to_json(const LogicalIsing& l);
LogicalIsing logical_ising_from_json(std::string_view text);

std::string physical_ising_to_json(const PhysicalIsing& p);
PhysicalIsing physical_ising_from_json(std::string_view text);

std::string ground_states_to_json(const GroundStates& gs);

}  // namespace qembed
